"""Solver and verifier for x^2 + 2^a 3^b 11^c = y^n with gcd(x, y) = 1, n >= 3."""
from .arith import SUnitExponents, s_unit_value
from .equation import Solution, check_solution, canonical_exponents, descend_solution
from .oracle import SearchConfig, enumerate_solutions

__all__ = [
    "SUnitExponents",
    "s_unit_value",
    "Solution",
    "check_solution",
    "canonical_exponents",
    "descend_solution",
    "SearchConfig",
    "enumerate_solutions",
]
__version__ = "0.1.0"
