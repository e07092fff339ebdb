import math

import pytest

from lebnagell.arith import SUnitExponents, factor_as_s_unit
from lebnagell.equation import Solution


def brute_force(n, y_max, primes=(2, 3, 11), require_bc_positive=False):
    """Independent oracle: loop over x and factor y^n - x^2 directly."""
    out = []
    for y in range(2, y_max + 1):
        Y = y**n
        for x in range(1, math.isqrt(Y - 1) + 1):
            if math.gcd(x, y) != 1:
                continue
            exps = factor_as_s_unit(Y - x * x, primes)
            if exps is None:
                continue
            full = dict(zip(primes, exps))
            a, b, c = full.get(2, 0), full.get(3, 0), full.get(11, 0)
            if require_bc_positive and not (b and c):
                continue
            out.append(Solution(x, y, SUnitExponents(a, b, c), n))
    return sorted(out, key=Solution.sort_key)


@pytest.fixture(scope="session")
def oracle():
    return brute_force


# One PASS/FAIL line per acceptance criterion, printed at the end of the run.
_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(k): acceptance criterion number k")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.skipped:
        return
    if rep.when == "call" or rep.failed:
        k = mark.args[0]
        _criteria[k] = _criteria.get(k, True) and rep.passed


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_criteria):
        terminalreporter.write_line(f"CRITERION {k}: {'PASS' if _criteria[k] else 'FAIL'}")
