"""Solutions of x^2 + 2^a 3^b 11^c = y^n and the reductions on n."""
from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from math import gcd
from typing import Optional, Set

from .arith import SUnitExponents, is_prime, prime_factors, s_unit_value


@dataclass(frozen=True)
class Solution:
    x: int
    y: int
    exp: SUnitExponents
    n: int

    def __post_init__(self):
        if self.x < 0:
            raise ValueError("x must be nonnegative")
        if self.y < 2:
            raise ValueError("y must be at least 2")
        if self.n < 3:
            raise ValueError("n must be at least 3")

    @classmethod
    def of(cls, x: int, y: int, a: int, b: int, c: int, n: int) -> "Solution":
        return cls(x, y, SUnitExponents(a, b, c), n)

    @property
    def a(self) -> int:
        return self.exp.a

    @property
    def b(self) -> int:
        return self.exp.b

    @property
    def c(self) -> int:
        return self.exp.c

    @property
    def C(self) -> int:
        return s_unit_value(self.exp)

    def as_tuple(self):
        """(x, y, a, b, c, n)"""
        return (self.x, self.y, self.exp.a, self.exp.b, self.exp.c, self.n)

    def sort_key(self):
        return (self.y, self.exp.a, self.exp.b, self.exp.c, self.x, self.n)

    def __str__(self):
        x, y, a, b, c, n = self.as_tuple()
        return f"({x}, {y}, {a}, {b}, {c}; n={n})"


class Status(enum.Enum):
    VALID = "valid"
    EQUATION_FAILS = "equation-fails"
    NOT_COPRIME = "not-coprime"


@dataclass(frozen=True)
class Verdict:
    status: Status
    # y^n - x^2 - C for EQUATION_FAILS, gcd(x, y) for NOT_COPRIME
    witness: Optional[int] = None

    def __bool__(self):
        return self.status is Status.VALID


def check_solution(s: Solution) -> Verdict:
    residual = s.y**s.n - s.x * s.x - s_unit_value(s.exp)
    if residual:
        return Verdict(Status.EQUATION_FAILS, residual)
    g = gcd(s.x, s.y)
    if g != 1:
        return Verdict(Status.NOT_COPRIME, g)
    return Verdict(Status.VALID)


def canonical_exponents(n: int) -> Set[int]:
    """Divisors of n that are 4 or an odd prime."""
    if n < 3:
        raise ValueError("n must be at least 3")
    out = {p for p in prime_factors(n) if p != 2}
    if n % 4 == 0:
        out.add(4)
    return out


def descend_solution(s: Solution, d: int) -> Solution:
    """Replace (y, n) by (y^(n/d), d) for d in canonical_exponents(n)."""
    if d not in canonical_exponents(s.n):
        raise ValueError(f"{d} is not a canonical exponent of n={s.n}")
    return replace(s, y=s.y ** (s.n // d), n=d)


def mod8_admissible(exp: SUnitExponents, x_parity: str) -> bool:
    """For n >= 3, a = 0 forces x even: 3^b 11^c is 1 or 3 mod 8, so an odd x
    would make y^n = 2 or 4 mod 8, impossible for even y."""
    if x_parity not in ("even", "odd"):
        raise ValueError("x_parity must be 'even' or 'odd'")
    return not (exp.a == 0 and x_parity == "odd")


def is_odd_prime(p: int) -> bool:
    return p > 2 and is_prime(p)
