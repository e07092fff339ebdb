"""Imaginary quadratic integers, Lucas sequences and the prime exponent case.

For a prime p >= 5 and bc > 0 write C = d z^2 with d squarefree in
{1, 2, 3, 6, 11, 22, 33, 66}. Then x + z sqrt(-d) = eta^p for some integer
eta = u + v sqrt(-d) of Q(sqrt(-d)), and z / v = L_p(eta), the p-th term of
the Lucas sequence of (eta, conj(eta)). Since every prime of L_p lies in
{2, 3, 11}, 11 must be a primitive divisor, which forces p = 5 and
d in {2, 6}. ``case_analysis_p5`` then searches the remaining (u, v).
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import gcd, isqrt
from typing import Dict, List, Optional, Sequence, Tuple

from .arith import (
    S_PRIMES,
    SUnitExponents,
    factor_as_s_unit,
    integer_sqrt_exact,
    is_prime,
    legendre_symbol,
    prime_factors,
    s_units_up_to,
)
from .equation import Solution, Status, check_solution

FIELD_DS: Tuple[int, ...] = (1, 2, 3, 6, 11, 22, 33, 66)


# --- fields and their integers ------------------------------------------------


def fundamental_discriminant(d: int) -> int:
    """Discriminant of Q(sqrt(-d)) for squarefree d > 0."""
    return -d if d % 4 == 3 else -4 * d


@dataclass(frozen=True)
class QuadField:
    d: int

    def __post_init__(self):
        if self.d not in FIELD_DS:
            raise ValueError(f"d={self.d} is not one of {FIELD_DS}")

    @property
    def allows_half_coordinates(self) -> bool:
        # the ring of integers is Z[(1 + sqrt(-d))/2] iff -d = 1 mod 4
        return fundamental_discriminant(self.d) % 4 == 1

    @property
    def discriminant(self) -> int:
        return fundamental_discriminant(self.d)

    @cached_property
    def class_number(self) -> int:
        return class_number_by_forms(self.discriminant)

    @property
    def unit_group_order(self) -> int:
        return {1: 4, 3: 6}.get(self.d, 2)


FIELDS: Dict[int, QuadField] = {d: QuadField(d) for d in FIELD_DS}


@dataclass(frozen=True)
class QuadraticInteger:
    """(twice_u + twice_v * sqrt(-d)) / 2 in the ring of integers of ``field``."""

    field: QuadField
    twice_u: int
    twice_v: int

    def __post_init__(self):
        if (self.twice_u - self.twice_v) % 2:
            raise ValueError("2u and 2v must have the same parity")
        if self.twice_u % 2 and not self.field.allows_half_coordinates:
            raise ValueError(f"half coordinates are not integral for d={self.field.d}")

    @classmethod
    def of(cls, d: int, u, v) -> "QuadraticInteger":
        """Build u + v sqrt(-d); u and v may be ints or half-integer Fractions."""
        tu, tv = Fraction(u) * 2, Fraction(v) * 2
        if tu.denominator != 1 or tv.denominator != 1:
            raise ValueError("coordinates must be integers or halves")
        return cls(FIELDS[d], int(tu), int(tv))

    @property
    def d(self) -> int:
        return self.field.d

    @property
    def u(self) -> Fraction:
        return Fraction(self.twice_u, 2)

    @property
    def v(self) -> Fraction:
        return Fraction(self.twice_v, 2)

    def _check(self, other):
        if not isinstance(other, QuadraticInteger):
            return NotImplemented
        if other.field != self.field:
            raise ValueError(f"mixed fields d={self.d} and d={other.d}")
        return other

    def __add__(self, other):
        other = self._check(other)
        return QuadraticInteger(self.field, self.twice_u + other.twice_u, self.twice_v + other.twice_v)

    def __neg__(self):
        return QuadraticInteger(self.field, -self.twice_u, -self.twice_v)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __mul__(self, other):
        other = self._check(other)
        d = self.d
        tu = self.twice_u * other.twice_u - d * self.twice_v * other.twice_v
        tv = self.twice_u * other.twice_v + self.twice_v * other.twice_u
        return QuadraticInteger(self.field, tu // 2, tv // 2)

    def __pow__(self, m: int):
        if m < 0:
            raise ValueError("negative powers are not integral")
        result = QuadraticInteger(self.field, 2, 0)
        base = self
        while m:
            if m & 1:
                result = result * base
            base = base * base
            m >>= 1
        return result

    def conjugate(self) -> "QuadraticInteger":
        return QuadraticInteger(self.field, self.twice_u, -self.twice_v)

    def norm(self) -> int:
        return (self.twice_u**2 + self.d * self.twice_v**2) // 4

    def trace(self) -> int:
        return self.twice_u

    def __str__(self):
        sign = "-" if self.twice_v < 0 else "+"
        if self.twice_u % 2 == 0 and self.twice_v % 2 == 0:
            return f"{self.twice_u // 2} {sign} {abs(self.twice_v) // 2}*sqrt(-{self.d})"
        return f"({self.twice_u} {sign} {abs(self.twice_v)}*sqrt(-{self.d}))/2"


def is_degenerate(eta: QuadraticInteger) -> bool:
    """True when eta / conj(eta) is a root of unity (or eta is real)."""
    P, Q = eta.trace(), eta.norm()
    return Q == 0 or eta.twice_v == 0 or P * P in (0, Q, 2 * Q, 3 * Q, 4 * Q)


# --- Lucas sequences ----------------------------------------------------------


def lucas_term(eta: QuadraticInteger, m: int) -> int:
    """L_m = (eta^m - conj(eta)^m) / (eta - conj(eta)) by the integer recurrence."""
    if eta.twice_v == 0:
        raise ValueError("eta is real; the Lucas sequence is undefined")
    if m < 0:
        raise ValueError("m must be nonnegative")
    P, Q = eta.trace(), eta.norm()
    prev, cur = 0, 1
    if m == 0:
        return 0
    for _ in range(m - 1):
        prev, cur = cur, P * cur - Q * prev
    return cur


def lucas_term_direct(eta: QuadraticInteger, m: int) -> int:
    """The same term from the power quotient, computed in the ring."""
    diff = eta ** m - eta.conjugate() ** m
    # both numerator and eta - conj(eta) are purely imaginary
    assert diff.twice_u == 0
    q, r = divmod(diff.twice_v, (eta - eta.conjugate()).twice_v)
    if r:
        raise ArithmeticError("non-integral Lucas quotient")
    return q


def lucas_l5_quartic(d: int, u, v):
    """L_5 of u + v sqrt(-d) in closed form: 5u^4 - 10 d u^2 v^2 + d^2 v^4."""
    u, v = Fraction(u), Fraction(v)
    val = 5 * u**4 - 10 * d * u**2 * v**2 + d * d * v**4
    return int(val) if val.denominator == 1 else val


def d_from_parities(exp: SUnitExponents) -> Tuple[QuadField, Tuple[int, int, int], int]:
    """Split C = d z^2; returns (field, (alpha1, beta1, gamma1), z)."""
    d = 2 ** (exp.a % 2) * 3 ** (exp.b % 2) * 11 ** (exp.c % 2)
    halves = (exp.a // 2, exp.b // 2, exp.c // 2)
    z = 2 ** halves[0] * 3 ** halves[1] * 11 ** halves[2]
    return FIELDS[d], halves, z


class LiftError(ValueError):
    def __init__(self, message: str, witness: Optional[int] = None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class Lift:
    eta: QuadraticInteger
    p: int
    x: int
    z: int
    y: int
    solution: Solution


def lift_eta_power(eta: QuadraticInteger, p: int) -> Lift:
    """Read off (x, z, y) from x + z sqrt(-d) = eta^p and build the candidate
    solution with C = d z^2. Coprimality is left to the caller."""
    if p < 3 or not is_prime(p):
        raise ValueError(f"p={p} is not an odd prime")
    tu, tv = eta.twice_u, eta.twice_v
    g = gcd(tu // 2, tv // 2) if tu % 2 == 0 else gcd(tu, tv)
    if g != 1:
        raise ValueError(f"{eta} is not primitive")
    power = eta**p
    if power.twice_u % 2 or power.twice_v % 2:
        raise LiftError(f"{eta}^{p} has half-integral coordinates")
    x, z = abs(power.twice_u // 2), abs(power.twice_v // 2)
    # the imaginary part is v * L_p
    assert 2 * z == abs(tv * lucas_term(eta, p))
    y = eta.norm()
    if z == 0 or y < 2:
        raise LiftError(f"{eta}^{p} gives a degenerate lift")
    exps = factor_as_s_unit(eta.d * z * z, S_PRIMES)
    if exps is None:
        witness = next(q for q in prime_factors(z) if q not in S_PRIMES)
        raise LiftError(f"z={z} is not an S-unit", witness)
    return Lift(eta, p, x, z, y, Solution(x, y, SUnitExponents(*exps), p))


# --- primitive divisors -------------------------------------------------------


class ConsistencyError(AssertionError):
    """A primitive divisor violated q = (-d/q) mod m."""


@dataclass(frozen=True)
class Primitivity:
    primitive: bool
    reason: str = ""


def primitive_prime_test(q: int, eta: QuadraticInteger, m: int) -> Primitivity:
    """Is the odd prime q a primitive divisor of L_m(eta)?

    A prime of the discriminant (eta - conj(eta))^2 = -d (2v)^2 is never
    primitive; that is checked before requiring q | L_m.
    """
    if q < 3 or not is_prime(q):
        raise ValueError(f"q={q} is not an odd prime")
    if m < 2:
        raise ValueError("m must be at least 2")
    if is_degenerate(eta):
        raise ValueError(f"{eta} gives a degenerate Lucas sequence")
    disc = -eta.d * eta.twice_v**2
    if disc % q == 0:
        return Primitivity(False, f"divides discriminant {disc}")
    P, Q = eta.trace(), eta.norm()
    prev, cur = 0, 1
    for k in range(1, m):
        if cur % q == 0:
            return Primitivity(False, f"divides L_{k}")
        prev, cur = cur, P * cur - Q * prev
    if cur % q:
        raise ValueError(f"{q} does not divide L_{m}")
    eps = legendre_symbol(-eta.d, q)
    if (q - eps) % m:
        raise ConsistencyError(f"primitive {q} of L_{m} is not {eps} mod {m}")
    return Primitivity(True)


def primitive_divisors(eta: QuadraticInteger, m: int) -> List[int]:
    """All odd primitive prime divisors of L_m(eta)."""
    L = lucas_term(eta, m)
    if L == 0:
        return []
    return [q for q in prime_factors(L) if q > 2 and primitive_prime_test(q, eta, m).primitive]


# Lucas pairs without a primitive divisor at index p >= 5 whose roots lie in
# one of the eight fields above (up to sign and conjugation).
_DEFECTIVE = {(11, 5): ((1, 1),)}


def defective_lookup(field: QuadField, p: int) -> List[QuadraticInteger]:
    if p < 5 or not is_prime(p):
        raise ValueError("p must be a prime >= 5")
    out = []
    for tu, tv in _DEFECTIVE.get((field.d, p), ()):
        eta = QuadraticInteger(field, tu, tv)
        for e in (eta, eta.conjugate()):
            L = lucas_term(e, p)
            assert abs(L) == 1 or primitive_divisors(e, p) == []
            out.append(e)
    return out


def primitive_divisor_gate(p: int, q: int = 11) -> Tuple[int, ...]:
    """Fields d that survive the congruence test when q must be a primitive
    divisor of L_p: needs q = +-1 mod p and (-d/q) equal to that sign."""
    if p < 5 or not is_prime(p):
        raise ValueError("p must be a prime >= 5")
    if q % p == 1:
        sign = 1
    elif q % p == p - 1:
        sign = -1
    else:
        return ()
    return tuple(d for d in FIELD_DS if d % q and legendre_symbol(-d, q) == sign)


# --- class numbers ------------------------------------------------------------


def reduced_forms(disc: int) -> List[Tuple[int, int, int]]:
    """Reduced primitive positive definite forms (a, b, c) with b^2 - 4ac = disc."""
    if disc >= 0 or disc % 4 not in (0, 1):
        raise ValueError(f"invalid negative discriminant {disc}")
    forms = []
    a_max = isqrt(-disc // 3)
    for a in range(1, a_max + 1):
        for b in range(-a + 1, a + 1):
            num = b * b - disc
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a or (c == a and b < 0):
                continue
            if gcd(gcd(a, abs(b)), c) == 1:
                forms.append((a, b, c))
    return forms


def class_number_by_forms(disc: int) -> int:
    return len(reduced_forms(disc))


# --- the p = 5 case analysis --------------------------------------------------


class Verdict(enum.Enum):
    ACCEPTED = "accepted"
    REJECTED_B_ZERO = "rejected-b-zero"
    REJECTED_C_ZERO = "rejected-c-zero"
    REJECTED_COPRIMALITY = "rejected-coprimality"


# primes allowed in v; case 3 needs both with positive exponent
_CASES = {
    1: ("v = +-2^alpha1", (2,)),
    2: ("v = +-3^beta1", (3,)),
    3: ("v = +-2^alpha1 3^beta1", (2, 3)),
}


@dataclass(frozen=True)
class Branch:
    """Sign and exponent shape of L_5 = +-(S-unit) within one case.

    ``shape`` maps each prime of the right-hand side to 'even', 'odd'
    (odd primes) or 'zero', 'positive' (the prime 2).
    """

    case: int
    sign: int
    shape: Tuple[Tuple[int, str], ...]

    @property
    def residue_mod8(self) -> Optional[int]:
        """L_5 mod 8 implied by the shape, None when it is even."""
        r = self.sign % 8
        for p, s in self.shape:
            if p == 2:
                if s == "positive":
                    return None
            elif s == "odd":
                r = r * p % 8
        return r

    @property
    def admissible(self) -> bool:
        return self.residue_mod8 == 5

    @property
    def curve(self) -> Optional[int]:
        """k with -k W^2 = L_5, W an integer, for an admissible branch."""
        k = 1
        for p, s in self.shape:
            if s == "odd":
                k *= p
        return k if self.sign < 0 else None

    def matches(self, exps: Sequence[int], sign: int) -> bool:
        if sign != self.sign:
            return False
        for (p, s), e in zip(self.shape, exps):
            want = {"even": e % 2 == 0, "odd": e % 2 == 1, "zero": e == 0, "positive": e > 0}[s]
            if not want:
                return False
        return True

    def label(self) -> str:
        bits = [f"{p}:{s}" for p, s in self.shape]
        return f"case {self.case}, sign {'+' if self.sign > 0 else '-'}, " + ", ".join(bits)


@dataclass(frozen=True)
class CurvePoint:
    case: int
    k: int  # the curve -k V^2 = 5U^4 - 10 d U^2 + d^2
    u: int
    v: int

    @property
    def U(self) -> Fraction:
        return Fraction(self.u, self.v)


@dataclass(frozen=True)
class Candidate:
    case: int
    u: int
    v: int
    branch: Branch
    lift: Lift
    verdict: Verdict

    @property
    def solution(self) -> Solution:
        return self.lift.solution


@dataclass
class P5Report:
    d: int
    box: int
    branches: Dict[Branch, List[Tuple[int, int]]] = field(default_factory=dict)
    curve_points: List[Tuple[CurvePoint, Fraction]] = field(default_factory=list)
    candidates: List[Candidate] = field(default_factory=list)

    def solutions(self, verdict: Optional[Verdict] = None) -> List[Solution]:
        seen = []
        for c in self.candidates:
            if (verdict is None or c.verdict is verdict) and c.solution not in seen:
                seen.append(c.solution)
        return seen

    def eliminated(self) -> List[Branch]:
        return [b for b in self.branches if not b.admissible]

    def hits(self, branch: Branch) -> List[Tuple[int, int]]:
        return self.branches[branch]

    def points_on(self, k: int, case: Optional[int] = None) -> set:
        """{(U, V)} with U, V >= 0 found on the curve -k V^2 = ..."""
        return {(cp.U, V) for cp, V in self.curve_points if cp.k == k and (case is None or cp.case == case)}


def _rhs_primes(case: int) -> Tuple[int, ...]:
    v_primes = _CASES[case][1]
    return tuple(p for p in S_PRIMES if p not in v_primes) if case != 3 else (11,)


def case_branches(case: int) -> List[Branch]:
    shapes = []
    for p in _rhs_primes(case):
        shapes.append([(p, "zero"), (p, "positive")] if p == 2 else [(p, "even"), (p, "odd")])
    return [Branch(case, sign, tuple(combo)) for sign in (1, -1) for combo in itertools.product(*shapes)]


def _case_vs(case: int, box: int) -> List[int]:
    primes = _CASES[case][1]
    vs = s_units_up_to(box, primes)
    if case == 3:
        vs = [v for v in vs if v % 6 == 0]
    return vs


def classify(s: Solution) -> Verdict:
    verdict = check_solution(s)
    if verdict.status is Status.EQUATION_FAILS:
        raise ConsistencyError(f"lifted tuple {s} fails the equation")
    if verdict.status is Status.NOT_COPRIME:
        return Verdict.REJECTED_COPRIMALITY
    if s.b == 0:
        return Verdict.REJECTED_B_ZERO
    if s.c == 0:
        return Verdict.REJECTED_C_ZERO
    return Verdict.ACCEPTED


def case_analysis_p5(d: int, box: int = 50) -> P5Report:
    """Search u odd, v of each case's shape, 1 <= u, v <= box, gcd(u, v) = 1,
    for L_5(u + v sqrt(-d)) = +-(S-unit over the remaining primes).

    Branches whose sign/exponent shape is not 5 mod 8 are eliminated a priori,
    but their hits are still collected so the elimination can be checked.
    Signs of u and v are dropped: L_5 depends on u^2 and v^2 only.
    """
    if d not in (2, 6):
        raise ValueError("the p = 5 analysis applies to d = 2 and d = 6")
    if box < 1:
        raise ValueError("box must be positive")
    report = P5Report(d, box)
    for case in _CASES:
        branches = case_branches(case)
        for b in branches:
            report.branches[b] = []
        rhs = _rhs_primes(case)
        curves = {b.curve for b in branches if b.admissible}
        for v in _case_vs(case, box):
            for u in range(1, box + 1, 2):
                if gcd(u, v) != 1:
                    continue
                L = lucas_l5_quartic(d, u, v)
                for k in curves:
                    if L % k == 0:
                        W = integer_sqrt_exact(-L // k)
                        if W:
                            report.curve_points.append((CurvePoint(case, k, u, v), Fraction(W, v * v)))
                exps = factor_as_s_unit(abs(L), rhs)
                if exps is None:
                    continue
                sign = 1 if L > 0 else -1
                for b in branches:
                    if not b.matches(exps, sign):
                        continue
                    report.branches[b].append((u, v))
                    if not b.admissible:
                        continue
                    lift = lift_eta_power(QuadraticInteger.of(d, u, v), 5)
                    report.candidates.append(Candidate(case, u, v, b, lift, classify(lift.solution)))
    return report
