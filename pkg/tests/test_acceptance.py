"""Acceptance criteria, one or more tests each, tagged with @criterion(k).

The conftest prints a PASS/FAIL line per criterion after the run."""
import random
import time

import pytest

from lebnagell.elliptic import CUBIC, QUARTIC, curve_family, point_to_solution, solution_to_point
from lebnagell.equation import Solution, check_solution
from lebnagell.arith import legendre_symbol
from lebnagell.lucas import (
    FIELD_DS,
    FIELDS,
    QuadraticInteger,
    Verdict,
    case_analysis_p5,
    class_number_by_forms,
    lucas_l5_quartic,
    lucas_term,
    lucas_term_direct,
)
from lebnagell.oracle import SearchConfig, enumerate_solutions, smooth_exponent_scan, verify_table
from lebnagell.tables import ingest_exceptional, ingest_tables, solutions_of

criterion = pytest.mark.criterion


@pytest.fixture(scope="module")
def rows():
    return ingest_tables()


@pytest.fixture(scope="module")
def cubes():
    return enumerate_solutions(SearchConfig(3, 10**6))


@pytest.fixture(scope="module")
def runs():
    """The oracle runs of criteria 3 and 5, keyed by label."""
    out = {}
    for n in (4, 5, 6, 10):
        out[f"n={n}"] = enumerate_solutions(SearchConfig(n, 10**3))
    for p in (5, 7, 11, 13):
        out[f"bc>0 p={p}"] = enumerate_solutions(SearchConfig(p, 10**3, require_bc_positive=True))
    return out


@criterion(1)
def test_table_verification():
    t0 = time.perf_counter()
    rows = ingest_tables()
    bad = [r.anchor for r in rows if not check_solution(r.solution)]
    elapsed = time.perf_counter() - t0
    assert len(rows) == 116 and not bad
    assert Solution.of(912668635, 940897, 3, 8, 2, 3) in solutions_of(rows, 2)
    assert elapsed < 1.0


@criterion(2)
@pytest.mark.slow
def test_oracle_n3_matches_tables(cubes, rows):
    rep = verify_table(solutions_of(rows, 1, 2), cubes, 10**6)
    assert rep.missing == [] and rep.duplicates == []
    assert rep.extra == [], f"solutions absent from the tables: {[str(s) for s in rep.extra]}"


@criterion(3)
def test_oracle_other_exponents(runs, rows):
    assert set(runs["n=4"]) == set(solutions_of(rows, 3)) and len(runs["n=4"]) == 18
    assert runs["n=5"] == [Solution.of(1, 3, 1, 0, 2, 5), Solution.of(241, 9, 3, 0, 2, 5)]
    assert set(runs["n=6"]) == {Solution.of(5, 3, 6, 0, 1, 6), Solution.of(37, 5, 4, 4, 1, 6),
                                Solution.of(117, 5, 4, 0, 2, 6)}
    assert runs["n=10"] == [Solution.of(241, 3, 3, 0, 2, 10)]
    listed = ingest_exceptional()
    for n in (5, 6, 10):
        assert set(runs[f"n={n}"]) == {s for s in listed if s.n == n}


@criterion(4)
def test_smooth_exponents():
    counts = smooth_exponent_scan(16, 2000)
    assert all(counts[n] == 0 for n in (8, 9, 12, 16))
    assert counts[3] > 0 and counts[4] > 0 and counts[6] > 0


@criterion(5)
def test_no_bc_positive_prime_solutions(runs):
    for p in (5, 7, 11, 13):
        assert runs[f"bc>0 p={p}"] == []


@criterion(6)
def test_reduction_round_trip(rows):
    sub = [r for r in rows if r.table_id in (1, 2, 3)]
    assert len(sub) == 72
    for r in sub:
        m, p = solution_to_point(r.solution)
        k = 6 if r.n == 3 else 4
        assert (m.alpha, m.beta, m.gamma) == (r.a % k, r.b % k, r.c % k)
        assert point_to_solution(m, p, r.n) == r.solution
    assert len(curve_family(CUBIC)) == 216 and len(curve_family(QUARTIC)) == 64


def _random_eta(rng, d):
    while True:
        half = FIELDS[d].allows_half_coordinates and rng.random() < 0.5
        tu = rng.randrange(-100, 101) * 2 + half
        tv = rng.randrange(-100, 101) * 2 + half
        if tv:
            return QuadraticInteger(FIELDS[d], tu, tv)


@criterion(7)
def test_lucas_identities():
    rng = random.Random(2024)
    for i in range(200):
        eta = _random_eta(rng, FIELD_DS[i % 8])
        for m in range(31):
            assert lucas_term(eta, m) == lucas_term_direct(eta, m)
    assert lucas_term(QuadraticInteger(FIELDS[11], 1, 1), 5) == 1
    for d in (2, 6):
        for _ in range(100):
            eta = _random_eta(rng, d)
            assert lucas_l5_quartic(d, eta.u, eta.v) == lucas_term(eta, 5)


@criterion(8)
def test_gate_conditions():
    split = [d for d in FIELD_DS if d % 11 and legendre_symbol(-d, 11) == 1]
    assert split == [2, 6]
    assert tuple(class_number_by_forms(FIELDS[d].discriminant) for d in FIELD_DS) == (1, 1, 1, 2, 1, 2, 4, 8)
    assert tuple(FIELDS[d].unit_group_order for d in FIELD_DS) == (4, 2, 6, 2, 2, 2, 2, 2)


@criterion(9)
def test_case_analysis_replay():
    r2, r6 = case_analysis_p5(2, 50), case_analysis_p5(6, 50)
    assert r2.solutions() == [Solution.of(1, 3, 1, 0, 2, 5), Solution.of(241, 9, 3, 0, 2, 5)]
    assert r2.solutions(Verdict.REJECTED_B_ZERO) == r2.solutions()
    assert r6.solutions() == [Solution.of(837, 15, 1, 5, 2, 5)]
    assert r6.solutions(Verdict.REJECTED_COPRIMALITY) == r6.solutions()
    for r in (r2, r6):
        assert r.eliminated() and all(r.hits(b) == [] for b in r.eliminated())
    alpha_positive = [b for b in r2.branches if b.case == 2 and dict(b.shape)[2] == "positive"]
    assert alpha_positive and all(r2.hits(b) == [] for b in alpha_positive)


@criterion(10)
@pytest.mark.slow
def test_mod8_parity(cubes, runs):
    checked = 0
    for sols in [cubes, *runs.values()]:
        for s in sols:
            if s.a == 0:
                assert s.x % 2 == 0, str(s)
                checked += 1
    assert checked > 0
