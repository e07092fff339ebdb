"""Commands behind the CLI, each producing a RunReport."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional

from . import lucas
from .arith import SUnitExponents, is_prime
from .elliptic import CUBIC, QUARTIC, curve_family, decompose, solution_to_point
from .equation import Solution, check_solution, mod8_admissible
from .oracle import SearchConfig, enumerate_solutions, smooth_exponent_scan, smooth_exponents, verify_table
from .tables import TableRow, ingest_exceptional, ingest_tables, solutions_of

OK = "ok"
PAPER_TYPO = "paper-typo"
DISCREPANCY = "discrepancy"

EXIT_OK, EXIT_DISCREPANCY, EXIT_USAGE = 0, 1, 2

FULL_BOUNDS = {3: 10**6, "other": 10**3, "scan": 2000}
QUICK_BOUNDS = {3: 10**4, "other": 10**3, "scan": 300}


@dataclass
class Finding:
    severity: str
    anchor: str
    message: str
    witness: Dict[str, Any] = field(default_factory=dict)


@dataclass
class RunReport:
    command: str
    config: Dict[str, Any]
    solutions: List[Solution] = field(default_factory=list)
    findings: List[Finding] = field(default_factory=list)
    details: Dict[str, Any] = field(default_factory=dict)

    def add(self, severity, anchor, message, **witness):
        self.findings.append(Finding(severity, anchor, message, witness))

    @property
    def exit_status(self) -> int:
        return EXIT_DISCREPANCY if any(f.severity == DISCREPANCY for f in self.findings) else EXIT_OK

    def to_dict(self) -> dict:
        return _jsonable(
            {
                "command": self.command,
                "config": self.config,
                "solutions": [_solution_dict(s) for s in self.solutions],
                "findings": [vars(f) for f in self.findings],
                "details": self.details,
                "exit_status": self.exit_status,
            }
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def summary(self) -> str:
        lines = [f"{self.command}: {len(self.solutions)} solution(s), exit {self.exit_status}"]
        for f in self.findings:
            lines.append(f"  [{f.severity}] {f.anchor}: {f.message}")
        return "\n".join(lines)


def _solution_dict(s: Solution) -> dict:
    x, y, a, b, c, n = s.as_tuple()
    return {"x": x, "y": y, "a": a, "b": b, "c": c, "n": n}


def _jsonable(obj):
    """Integers become decimal strings so no consumer loses precision."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, Solution):
        return _solution_dict(obj)
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def _mod8_check(report: RunReport, sols, anchor):
    bad = [s for s in sols if not mod8_admissible(s.exp, "even" if s.x % 2 == 0 else "odd")]
    for s in bad:
        report.add(DISCREPANCY, anchor, "a = 0 with x odd", solution=_solution_dict(s))
    return not bad


def _compare(report: RunReport, label: str, claimed, found, y_max, anchors: Dict[Solution, str]):
    rep = verify_table(claimed, found, y_max)
    for s in rep.missing:
        report.add(DISCREPANCY, anchors.get(s, label), "listed but not found by the search", solution=s)
    for s in rep.extra:
        report.add(DISCREPANCY, label, "found by the search but not listed", solution=s)
    for s in rep.duplicates:
        report.add(DISCREPANCY, anchors.get(s, label), "listed twice", solution=s)
    if rep.confirmed:
        report.add(OK, label, f"{len(claimed)} listed solution(s) match the search up to y={y_max}")
    return rep


def cmd_verify_tables(quick: bool = False, workers: Optional[int] = None, tables_path=None) -> RunReport:
    bounds = QUICK_BOUNDS if quick else FULL_BOUNDS
    report = RunReport("verify-tables", {"quick": quick, "bounds": {str(k): v for k, v in bounds.items()}})
    rows = ingest_tables(tables_path)
    report.add(OK, "Tables 1-6", f"{len(rows)} rows satisfy the equation with gcd(x, y) = 1")
    _z_column(report, rows)
    _subset_tables(report, rows)

    anchors = {}
    for r in rows:
        anchors.setdefault(r.solution, r.anchor)
    kw = {} if workers is None else {"worker_count": workers}

    y3 = bounds[3]
    claimed3 = [s for s in solutions_of(rows, 1, 2) if s.y <= y3]
    found3 = enumerate_solutions(SearchConfig(3, y3, **kw))
    _compare(report, "Tables 1+2 (n=3)", claimed3, found3, y3, anchors)
    found = list(found3)

    y_other = bounds["other"]
    found4 = enumerate_solutions(SearchConfig(4, y_other, **kw))
    _compare(report, "Table 3 (n=4)", solutions_of(rows, 3), found4, y_other, anchors)
    found += found4

    exceptional = ingest_exceptional()
    for n in (5, 6, 10):
        fn = enumerate_solutions(SearchConfig(n, y_other, **kw))
        listed = [s for s in exceptional if s.n == n]
        anchors.update({s: f"Theorem, n={n}" for s in listed})
        _compare(report, f"Theorem, n={n}", listed, fn, y_other, anchors)
        found += fn

    n_max, y_scan = 16, bounds["scan"]
    counts = smooth_exponent_scan(n_max, y_scan, workers)
    report.details["smooth_scan"] = {"n_max": n_max, "y_max": y_scan, "counts": counts}
    stray = {n: k for n, k in counts.items() if k and n not in (3, 4, 6)}
    if stray:
        report.add(DISCREPANCY, "smooth exponents", "solutions for n outside {3, 4, 6}", counts=stray)
    else:
        report.add(OK, "smooth exponents", f"{{2,3}}-smooth n <= {n_max} with solutions: "
                   + ", ".join(str(n) for n, k in counts.items() if k))

    for p in (5, 7, 11, 13):
        fp = enumerate_solutions(SearchConfig(p, y_other, require_bc_positive=True, **kw))
        if fp:
            report.add(DISCREPANCY, f"prime n={p}, bc>0", "solutions found", solutions=fp)
        else:
            report.add(OK, f"prime n={p}, bc>0", f"no solutions up to y={y_other}")
        found += fp

    if _mod8_check(report, found, "mod 8 parity"):
        report.add(OK, "mod 8 parity", f"a = 0 implies x even for all {len(found)} solutions found")
    report.solutions = found
    return report


def _z_column(report: RunReport, rows: List[TableRow]):
    for r in rows:
        al, be, ga, z = r.recomputed()
        if (al, be, ga) != (r.alpha, r.beta, r.gamma):
            report.add(PAPER_TYPO, r.anchor, "model exponents disagree with (a, b, c)",
                       claimed=[r.alpha, r.beta, r.gamma], recomputed=[al, be, ga])
        if z != r.z_claimed:
            report.add(PAPER_TYPO, r.anchor, "z column disagrees with (a, b, c)",
                       claimed=r.z_claimed, recomputed=z)


def _subset_tables(report: RunReport, rows: List[TableRow]):
    for sub, master in (((4, 5), (1, 2)), ((6,), (3,))):
        want = {s for s in solutions_of(rows, *master) if s.b > 0 and s.c > 0}
        have = set(solutions_of(rows, *sub))
        label = ("Tables " if len(sub) > 1 else "Table ") + "+".join(map(str, sub))
        if want == have:
            report.add(OK, label, f"equal to the bc > 0 rows of Table{'s' if len(master) > 1 else ''} {'+'.join(map(str, master))}")
        else:
            report.add(DISCREPANCY, label, "not the bc > 0 subset",
                       missing=sorted(want - have, key=Solution.sort_key),
                       extra=sorted(have - want, key=Solution.sort_key))


def cmd_enumerate(n: int, y_max: int, require_bc_positive: bool = False, workers: Optional[int] = None) -> RunReport:
    cfg = SearchConfig(n, y_max, require_bc_positive=require_bc_positive,
                       **({} if workers is None else {"worker_count": workers}))
    report = RunReport("enumerate", {"n": n, "y_max": y_max, "require_bc_positive": require_bc_positive})
    report.solutions = enumerate_solutions(cfg)
    report.add(OK, f"n={n}", f"{len(report.solutions)} solution(s) with y <= {y_max}")
    _mod8_check(report, report.solutions, f"n={n}")
    return report


def cmd_smooth_scan(n_max: int, y_max: int, workers: Optional[int] = None) -> RunReport:
    report = RunReport("smooth-scan", {"n_max": n_max, "y_max": y_max})
    counts = smooth_exponent_scan(n_max, y_max, workers)
    report.details["counts"] = counts
    for n in smooth_exponents(n_max):
        report.add(OK, f"n={n}", f"{counts[n]} solution(s)")
    return report


def cmd_reduce(n: int, a: int, b: int, c: int, x: Optional[int] = None, y: Optional[int] = None,
               tables_path=None) -> RunReport:
    if n not in (3, 4):
        raise ValueError("reduce applies to n = 3 or n = 4")
    exp = SUnitExponents(a, b, c)
    model, z = decompose(exp, CUBIC if n == 3 else QUARTIC)
    report = RunReport("reduce", {"n": n, "a": a, "b": b, "c": c, "x": x, "y": y})
    report.details.update(
        model={"kind": model.kind, "alpha": model.alpha, "beta": model.beta, "gamma": model.gamma,
               "A": model.A, "equation": str(model)},
        z=z,
        family_size=len(curve_family(model.kind)),
    )
    if x is not None and y is not None:
        sols = [Solution(x, y, exp, n)]
    else:
        sols = [r.solution for r in ingest_tables(tables_path) if r.n == n and r.solution.exp == exp]
        sols = list(dict.fromkeys(sols))
    points = []
    for s in sols:
        v = check_solution(s)
        if not v:
            report.add(DISCREPANCY, str(s), f"not a solution: {v.status.value}", witness=v.witness)
            continue
        _, pt = solution_to_point(s)
        points.append({"solution": s, "U": pt.U, "V": pt.V, "z": pt.z})
        report.solutions.append(s)
    report.details["points"] = points
    report.add(OK, "model", f"{model} with z = {z}")
    return report


def cmd_lucas(d: int, box: int = 1000) -> RunReport:
    report = RunReport("lucas", {"d": d, "box": box})
    res = lucas.case_analysis_p5(d, box)
    report.details["fields"] = [
        {"d": f.d, "class_number": f.class_number, "unit_group_order": f.unit_group_order,
         "half_coordinates": f.allows_half_coordinates}
        for f in lucas.FIELDS.values()
    ]
    report.details["gate"] = {p: list(lucas.primitive_divisor_gate(p)) for p in range(5, 32) if is_prime(p)}
    report.details["branches"] = [
        {"branch": b.label(), "admissible_mod8": b.admissible, "curve_k": b.curve,
         "hits": [list(h) for h in hits]}
        for b, hits in res.branches.items()
    ]
    report.details["curve_points"] = [
        {"case": cp.case, "k": cp.k, "u": cp.u, "v": cp.v, "U": cp.U, "V": V} for cp, V in res.curve_points
    ]
    report.details["candidates"] = [
        {"case": c.case, "u": c.u, "v": c.v, "solution": c.solution, "verdict": c.verdict.value}
        for c in res.candidates
    ]
    for b in res.eliminated():
        if res.hits(b):
            report.add(DISCREPANCY, b.label(), "branch excluded mod 8 has hits", hits=res.hits(b))
    for s in res.solutions():
        verdict = next(c.verdict for c in res.candidates if c.solution == s)
        sev = DISCREPANCY if verdict is lucas.Verdict.ACCEPTED else OK
        report.add(sev, f"d={d}, p=5", f"candidate {s}: {verdict.value}", solution=s)
        report.solutions.append(s)
    if not res.candidates:
        report.add(OK, f"d={d}, p=5", "no candidates")
    return report
