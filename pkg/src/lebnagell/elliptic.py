"""Cubic and quartic models of the equation for n = 3 and n = 4.

Pulling sixth powers out of C = 2^a 3^b 11^c gives C = A z^6 with
A = 2^alpha 3^beta 11^gamma, 0 <= alpha, beta, gamma <= 5, and a solution
becomes the point (U, V) = (y/z^2, x/z^3) on V^2 = U^3 - A.
For n = 4, C = A z^4 with exponents <= 3 and (U, V) = (x/z^2, y/z) lies on
U^2 + A = V^4.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .arith import S_PRIMES, SUnitExponents, factor_as_s_unit, integer_sqrt_exact, s_units_up_to
from .equation import Solution, Status, check_solution

CUBIC = "cubic"
QUARTIC = "quartic"

_PERIOD = {CUBIC: 6, QUARTIC: 4}


def _kind_for(n: int) -> str:
    if n == 3:
        return CUBIC
    if n == 4:
        return QUARTIC
    raise ValueError(f"no elliptic model for n={n}")


@dataclass(frozen=True)
class CurveModel:
    kind: str
    alpha: int
    beta: int
    gamma: int

    def __post_init__(self):
        if self.kind not in _PERIOD:
            raise ValueError(f"unknown model kind {self.kind!r}")
        k = _PERIOD[self.kind]
        if not all(0 <= e < k for e in (self.alpha, self.beta, self.gamma)):
            raise ValueError(f"{self.kind} exponents must lie in 0..{k - 1}")

    @property
    def A(self) -> int:
        return 2**self.alpha * 3**self.beta * 11**self.gamma

    def contains(self, U: Fraction, V: Fraction) -> bool:
        if self.kind == CUBIC:
            return V * V == U**3 - self.A
        return U * U + self.A == V**4

    def __str__(self):
        if self.kind == CUBIC:
            return f"V^2 = U^3 - {self.A}"
        return f"U^2 + {self.A} = V^4"


@dataclass(frozen=True)
class SPoint:
    U: Fraction
    V: Fraction
    z: int


def decompose(exp: SUnitExponents, kind: str) -> Tuple[CurveModel, int]:
    k = _PERIOD[kind]
    model = CurveModel(kind, exp.a % k, exp.b % k, exp.c % k)
    z = 2 ** (exp.a // k) * 3 ** (exp.b // k) * 11 ** (exp.c // k)
    return model, z


def curve_family(kind: str) -> List[CurveModel]:
    r = range(_PERIOD[kind])
    return [CurveModel(kind, a, b, c) for a, b, c in itertools.product(r, r, r)]


def solution_to_point(s: Solution) -> Tuple[CurveModel, SPoint]:
    kind = _kind_for(s.n)
    model, z = decompose(s.exp, kind)
    if kind == CUBIC:
        pt = SPoint(Fraction(s.y, z * z), Fraction(s.x, z**3), z)
    else:
        pt = SPoint(Fraction(s.x, z * z), Fraction(s.y, z), z)
    if not model.contains(pt.U, pt.V):
        raise ValueError(f"{s} does not satisfy the equation")
    return model, pt


def point_to_solution(m: CurveModel, p: SPoint, n: int) -> Optional[Solution]:
    """Lift a point back to (x, y, a, b, c, n); None if the lift is not an
    integral, positive, coprime solution."""
    if _kind_for(n) != m.kind:
        raise ValueError(f"n={n} does not match a {m.kind} model")
    if not m.contains(p.U, p.V):
        raise ValueError("point is not on the model")
    zexp = factor_as_s_unit(p.z, S_PRIMES)
    if zexp is None:
        return None
    if m.kind == CUBIC:
        y, x = p.U * p.z**2, abs(p.V) * p.z**3
    else:
        x, y = abs(p.U) * p.z**2, abs(p.V) * p.z
    if x.denominator != 1 or y.denominator != 1 or y < 2:
        return None
    k = _PERIOD[m.kind]
    exp = SUnitExponents(m.alpha + k * zexp[0], m.beta + k * zexp[1], m.gamma + k * zexp[2])
    s = Solution(int(x), int(y), exp, n)
    return s if check_solution(s).status is Status.VALID else None


def bounded_point_search(m: CurveModel, z_max: int, num_max: int) -> List[SPoint]:
    """Points of ``m`` whose scaled numerator is at most ``num_max`` for some
    S-unit scale z <= z_max. Each point is reported once, with its smallest z,
    and with both signs of the square-root coordinate."""
    if z_max < 1 or num_max < 1:
        raise ValueError("bounds must be positive")
    A = m.A
    seen = {}
    for z in s_units_up_to(z_max):
        if m.kind == CUBIC:
            # (X/z^2)^3 - A = (Y/z^3)^2  <=>  X^3 - A z^6 = Y^2
            Az = A * z**6
            for X in range(1, num_max + 1):
                Y = integer_sqrt_exact(X**3 - Az)
                if Y is not None:
                    _record(seen, Fraction(X, z * z), Fraction(Y, z**3), z, cubic=True)
        else:
            # (X/z^2)^2 + A = (Y/z)^4  <=>  Y^4 - A z^4 = X^2
            Az = A * z**4
            for Y in range(1, num_max + 1):
                X = integer_sqrt_exact(Y**4 - Az)
                if X is not None:
                    _record(seen, Fraction(X, z * z), Fraction(Y, z), z, cubic=False)
    pts = [seen[k] for k in sorted(seen)]
    assert all(m.contains(p.U, p.V) for p in pts)
    return pts


def _record(seen, U, V, z, cubic):
    # the coordinate that enters squared is V on the cubic, U on the quartic
    for sign in (1, -1):
        pt = SPoint(U, sign * V, z) if cubic else SPoint(sign * U, V, z)
        key = (pt.U, pt.V)
        if key not in seen or seen[key].z > z:
            seen[key] = pt
        if (V if cubic else U) == 0:
            break


__all__ = [
    "CUBIC",
    "QUARTIC",
    "CurveModel",
    "SPoint",
    "decompose",
    "curve_family",
    "solution_to_point",
    "point_to_solution",
    "bounded_point_search",
]
