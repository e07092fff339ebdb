"""Brute-force enumeration of solutions, used as ground truth.

For each y the search runs over every S-unit C = 2^a 3^b 11^c with
C < y^n and tests whether y^n - C is a square coprime to y. The work is
split over disjoint y ranges and the merged result is sorted, so the
output does not depend on the number of workers.
"""
from __future__ import annotations

import bisect
import logging
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

import numpy as np

from . import _kernels
from .arith import S_PRIMES, SUnitExponents, integer_nth_root
from .equation import Solution

log = logging.getLogger(__name__)

# Moduli for the residue path; the first one is 2^7 * 3^2 * 5.
_RESIDUE_MODULI = (5760, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73)
_CHUNK = 4096


@dataclass(frozen=True)
class SearchConfig:
    n: int
    y_max: int
    primes: Tuple[int, ...] = S_PRIMES
    require_bc_positive: bool = False
    worker_count: int = field(default_factory=lambda: os.cpu_count() or 1)

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("n must be at least 3")
        if self.y_max < 2:
            raise ValueError("y_max must be at least 2")
        if self.worker_count < 1:
            raise ValueError("worker_count must be positive")
        primes = tuple(self.primes)
        if not primes or not set(primes) <= set(S_PRIMES) or list(primes) != sorted(set(primes)):
            raise ValueError(f"primes must be a strictly increasing subset of {S_PRIMES}")
        if self.require_bc_positive and not {3, 11} <= set(primes):
            raise ValueError("require_bc_positive needs both 3 and 11 in primes")
        object.__setattr__(self, "primes", primes)

    @property
    def fast_path_y_max(self) -> int:
        """Largest y with y^n below 2^63 (machine-integer path)."""
        return integer_nth_root(_kernels.INT64_LIMIT, self.n)


class SUnitTable:
    """All exponent triples with C below a bound, sorted by C."""

    def __init__(self, bound: int, primes: Sequence[int] = S_PRIMES, require_bc_positive: bool = False):
        lo = 1 if require_bc_positive else 0
        rows = []
        for c in _exponents(11, lo, bound, 11 in primes):
            C11 = 11**c
            for b in _exponents(3, lo, bound // C11 + 1, 3 in primes):
                C3 = C11 * 3**b
                for a in _exponents(2, 0, bound // C3 + 1, 2 in primes):
                    C = C3 << a
                    if C < bound:
                        rows.append((C, a, b, c))
        rows.sort()
        self.values: List[int] = [r[0] for r in rows]
        self.exponents: List[Tuple[int, int, int]] = [r[1:] for r in rows]

    def __len__(self):
        return len(self.values)

    def count_below(self, bound: int) -> int:
        return bisect.bisect_left(self.values, bound)

    def int64_values(self) -> np.ndarray:
        k = self.count_below(_kernels.INT64_LIMIT + 1)
        return np.array(self.values[:k], dtype=np.int64)

    def residues(self, moduli: Sequence[int]) -> np.ndarray:
        exps = np.array(self.exponents, dtype=np.int64).reshape(-1, 3)
        out = np.ones((len(self), len(moduli)), dtype=np.int64)
        for j, q in enumerate(moduli):
            col = np.ones(len(self), dtype=np.int64)
            for k, p in enumerate(S_PRIMES):
                top = int(exps[:, k].max()) if len(self) else 0
                powers = np.array([pow(p, e, q) for e in range(top + 1)], dtype=np.int64)
                col = col * powers[exps[:, k]] % q
            out[:, j] = col
        return out


def _exponents(p, lo, bound, allowed):
    """Exponents e >= lo with p^e < bound (just 0 when p is excluded)."""
    if not allowed:
        return [0] if lo == 0 else []
    out, e, v = [], lo, p**lo
    while v < bound:
        out.append(e)
        e += 1
        v *= p
    return out


def _residue_tables(moduli):
    width = max(moduli)
    tables = np.zeros((len(moduli), width), dtype=np.bool_)
    for j, q in enumerate(moduli):
        tables[j, :q] = _kernels.square_table(q)
    return tables


def _chunks(lo: int, hi: int, size: int):
    for start in range(lo, hi + 1, size):
        yield np.arange(start, min(start + size, hi + 1), dtype=np.int64)


def _run_parallel(fn, jobs, workers):
    if workers == 1 or len(jobs) <= 1:
        return [fn(j) for j in jobs]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, jobs))


def enumerate_solutions(cfg: SearchConfig) -> List[Solution]:
    """Every coprime solution with 2 <= y <= cfg.y_max, sorted by (y, a, b, c)."""
    n = cfg.n
    table = SUnitTable(cfg.y_max**n, cfg.primes, cfg.require_bc_positive)
    found: List[Tuple[int, int, int]] = []  # (y, triple index, x)

    y_fast = min(cfg.y_max, cfg.fast_path_y_max)
    if y_fast >= 2:
        cs = table.int64_values()
        sq64 = _kernels.square_table(64)
        sq5760 = _kernels.square_table(5760)

        def direct(ys):
            return _kernels.scan_direct(ys, n, cs, sq64, sq5760)

        for out_y, out_t, out_x in _run_parallel(direct, list(_chunks(2, y_fast, _CHUNK)), cfg.worker_count):
            found.extend(zip(out_y, out_t, out_x))

    y_big = max(y_fast, 1) + 1
    if cfg.y_max >= y_big:
        log.debug("big-integer path for y in [%d, %d], n=%d", y_big, cfg.y_max, n)
        moduli = np.array(_RESIDUE_MODULI, dtype=np.int64)
        residues = table.residues(_RESIDUE_MODULI)
        tables = _residue_tables(_RESIDUE_MODULI)

        def by_residue(ys):
            ks = np.array([table.count_below(int(y) ** n) for y in ys], dtype=np.int64)
            out_y, out_t = _kernels.scan_residues(ys, ks, n, residues, moduli, tables)
            hits = []
            for y, t in zip(out_y, out_t):
                N = y**n - table.values[t]
                x = math.isqrt(N)
                if x * x == N and math.gcd(x, y) == 1:
                    hits.append((y, t, x))
            return hits

        size = max(1, min(_CHUNK, (cfg.y_max - y_big) // (4 * cfg.worker_count) + 1))
        for hits in _run_parallel(by_residue, list(_chunks(y_big, cfg.y_max, size)), cfg.worker_count):
            found.extend(hits)

    sols = [Solution(int(x), int(y), SUnitExponents(*table.exponents[t]), n) for y, t, x in found]
    sols.sort(key=Solution.sort_key)
    return sols


def smooth_exponents(n_max: int) -> List[int]:
    return [n for n in range(3, n_max + 1) if _is_23_smooth(n)]


def _is_23_smooth(n: int) -> bool:
    for p in (2, 3):
        while n % p == 0:
            n //= p
    return n == 1


def smooth_exponent_scan(n_max: int, y_max: int, worker_count: int = None) -> Dict[int, int]:
    """Solution counts for every {2,3}-smooth exponent 3 <= n <= n_max."""
    if n_max < 3:
        raise ValueError("n_max must be at least 3")
    workers = worker_count or os.cpu_count() or 1
    return {
        n: len(enumerate_solutions(SearchConfig(n, y_max, worker_count=workers)))
        for n in smooth_exponents(n_max)
    }


class CertificationError(ValueError):
    pass


@dataclass
class TableReport:
    missing: List[Solution]  # claimed but not found
    extra: List[Solution]  # found but not claimed
    duplicates: List[Solution]  # repeated in the claimed list

    @property
    def confirmed(self) -> bool:
        return not (self.missing or self.extra or self.duplicates)


def verify_table(claimed: Sequence[Solution], found: Sequence[Solution], y_max: int) -> TableReport:
    """Compare a claimed solution list with an oracle run up to ``y_max``."""
    ns = {s.n for s in claimed} | {s.n for s in found}
    if len(ns) > 1:
        raise ValueError(f"mixed exponents {sorted(ns)}")
    if claimed and max(s.y for s in claimed) > y_max:
        raise CertificationError(
            f"oracle bound y_max={y_max} does not cover claimed y={max(s.y for s in claimed)}"
        )
    seen, dups = set(), []
    for s in claimed:
        if s in seen:
            dups.append(s)
        seen.add(s)
    found_set = set(found)
    return TableReport(
        missing=sorted(seen - found_set, key=Solution.sort_key),
        extra=sorted(found_set - seen, key=Solution.sort_key),
        duplicates=dups,
    )


__all__ = [
    "SearchConfig",
    "SUnitTable",
    "enumerate_solutions",
    "smooth_exponents",
    "smooth_exponent_scan",
    "verify_table",
    "TableReport",
    "CertificationError",
]
