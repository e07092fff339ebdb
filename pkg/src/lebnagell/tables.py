"""Published solution tables shipped with the package, verified on load."""
from __future__ import annotations

import csv
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import List, Optional, Union

from .arith import SUnitExponents
from .elliptic import CUBIC, QUARTIC, decompose
from .equation import Solution, Status, check_solution

TABLE_COLUMNS = ["table", "n", "alpha", "beta", "gamma", "z", "a", "b", "c", "x", "y"]
EXCEPTIONAL_COLUMNS = ["n", "a", "b", "c", "x", "y"]


class TableError(ValueError):
    def __init__(self, message: str, line: int, residual: Optional[int] = None):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.residual = residual


@dataclass(frozen=True)
class TableRow:
    table_id: int
    row: int  # 1-based position within its table
    n: int
    alpha: int
    beta: int
    gamma: int
    z_claimed: int
    a: int
    b: int
    c: int
    x: int
    y: int

    @property
    def solution(self) -> Solution:
        return Solution(self.x, self.y, SUnitExponents(self.a, self.b, self.c), self.n)

    @property
    def anchor(self) -> str:
        return f"Table {self.table_id}, row {self.row}"

    def recomputed(self):
        """(alpha, beta, gamma, z) derived from (a, b, c)."""
        model, z = decompose(self.solution.exp, CUBIC if self.n == 3 else QUARTIC)
        return model.alpha, model.beta, model.gamma, z


def _read(path, columns):
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != columns:
            raise TableError(f"expected header {','.join(columns)}", 1)
        for lineno, rec in enumerate(reader, start=2):
            if not rec:
                continue
            if len(rec) != len(columns):
                raise TableError(f"expected {len(columns)} columns, got {len(rec)}", lineno)
            try:
                yield lineno, [int(v) for v in rec]
            except ValueError:
                raise TableError(f"non-integer field in {rec}", lineno) from None


def _verified(sol: Solution, lineno: int) -> Solution:
    v = check_solution(sol)
    if v.status is Status.EQUATION_FAILS:
        raise TableError(f"{sol} fails the equation", lineno, residual=v.witness)
    if v.status is Status.NOT_COPRIME:
        raise TableError(f"{sol} has gcd(x, y) = {v.witness}", lineno)
    return sol


def default_tables_path() -> Path:
    return Path(str(resources.files("lebnagell") / "data" / "paper_tables.csv"))


def default_exceptional_path() -> Path:
    return Path(str(resources.files("lebnagell") / "data" / "exceptional_solutions.csv"))


def ingest_tables(path: Union[str, Path, None] = None) -> List[TableRow]:
    rows: List[TableRow] = []
    counters = {}
    for lineno, vals in _read(path or default_tables_path(), TABLE_COLUMNS):
        t = vals[0]
        counters[t] = counters.get(t, 0) + 1
        try:
            row = TableRow(t, counters[t], *vals[1:])
            sol = row.solution
        except ValueError as exc:
            raise TableError(str(exc), lineno) from None
        _verified(sol, lineno)
        rows.append(row)
    return rows


def ingest_exceptional(path: Union[str, Path, None] = None) -> List[Solution]:
    """Solutions listed for n = 5, 6, 10."""
    out = []
    for lineno, (n, a, b, c, x, y) in _read(path or default_exceptional_path(), EXCEPTIONAL_COLUMNS):
        out.append(_verified(Solution(x, y, SUnitExponents(a, b, c), n), lineno))
    return out


def solutions_of(rows: List[TableRow], *table_ids: int) -> List[Solution]:
    return [r.solution for r in rows if r.table_id in table_ids]
