"""Exact integer and S-unit arithmetic.

Everything here works on Python ints, so there is no precision limit. The
hot loops of the search live in ``_kernels``; this module is the reference
layer they are checked against.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

S_PRIMES: Tuple[int, int, int] = (2, 3, 11)

# Squares modulo 5760 = 2^7 * 3^2 * 5; rejects ~91% of non-squares.
SQUARE_MODULUS = 5760
_SQUARES_5760 = bytearray(SQUARE_MODULUS)
for _r in range(SQUARE_MODULUS):
    _SQUARES_5760[_r * _r % SQUARE_MODULUS] = 1
del _r

_LEGENDRE_PRIMALITY_LIMIT = 10**6
_FACTOR_LIMIT = 1 << 64


class UnfactoredResidue(ArithmeticError):
    """Raised when a cofactor is too large to factor within budget."""

    def __init__(self, residue: int):
        super().__init__(f"unfactored residue {residue}")
        self.residue = residue


@dataclass(frozen=True, order=True)
class SUnitExponents:
    """Exponents (a, b, c) of C = 2^a * 3^b * 11^c."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if min(self.a, self.b, self.c) < 0:
            raise ValueError(f"negative exponent in {self!r}")

    @property
    def value(self) -> int:
        return s_unit_value(self)

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.a, self.b, self.c)


def s_unit_value(e: SUnitExponents) -> int:
    return (1 << e.a) * 3**e.b * 11**e.c


def factor_as_s_unit(m: int, primes: Sequence[int] = S_PRIMES) -> Optional[Tuple[int, ...]]:
    """Exponent vector of ``m`` over ``primes``, or None if another prime divides it."""
    if m < 1:
        raise ValueError("m must be positive")
    if not primes or any(p >= q for p, q in zip(primes, primes[1:])):
        raise ValueError("primes must be non-empty and strictly increasing")
    exps = []
    for p in primes:
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        exps.append(e)
    if m != 1:
        return None
    return tuple(exps)


def is_square_residue(m: int) -> bool:
    """Cheap necessary condition for ``m >= 0`` to be a perfect square."""
    return bool(_SQUARES_5760[m % SQUARE_MODULUS])


def integer_sqrt_exact(m: int) -> Optional[int]:
    if m < 0:
        return None
    if not _SQUARES_5760[m % SQUARE_MODULUS]:
        return None
    r = math.isqrt(m)
    return r if r * r == m else None


def integer_nth_root(m: int, n: int) -> int:
    """floor(m ** (1/n)) for m >= 0, n >= 1, exact."""
    if m < 0 or n < 1:
        raise ValueError("need m >= 0 and n >= 1")
    if m < 2 or n == 1:
        return m
    if n == 2:
        return math.isqrt(m)
    # Newton from an upper bound; decreases monotonically to the floor.
    r = 1 << (-(-m.bit_length() // n))
    while True:
        s = ((n - 1) * r + m // r ** (n - 1)) // n
        if s >= r:
            return r
        r = s


def nth_root_exact(m: int, n: int) -> Optional[int]:
    if m < 1:
        raise ValueError("m must be positive")
    if n < 2:
        raise ValueError("n must be at least 2")
    r = integer_nth_root(m, n)
    return r if r**n == m else None


# Deterministic Miller-Rabin bases for n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    """Deterministic for n < 3.3 * 10**24, probabilistic-strong beyond."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def legendre_symbol(a: int, q: int) -> int:
    """Legendre symbol (a/q) by Euler's criterion."""
    if q < 3 or q % 2 == 0:
        raise ValueError(f"q={q} is not an odd prime")
    if q <= _LEGENDRE_PRIMALITY_LIMIT and not is_prime(q):
        raise ValueError(f"q={q} is not prime")
    a %= q
    if a == 0:
        return 0
    return 1 if pow(a, (q - 1) // 2, q) == 1 else -1


def _pollard_brent(n: int, rng: random.Random) -> int:
    if n % 2 == 0:
        return 2
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def prime_factors(k: int) -> list:
    """Sorted distinct prime factors of |k|; |k| must be at most 2^64
    after removing the primes 2, 3 and 11."""
    k = abs(k)
    if k == 0:
        raise ValueError("0 has no prime factorisation")
    found = set()
    for p in S_PRIMES:
        if k % p == 0:
            found.add(p)
            while k % p == 0:
                k //= p
    if k > _FACTOR_LIMIT:
        raise UnfactoredResidue(k)
    for p in (5, 7, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47):
        if k % p == 0:
            found.add(p)
            while k % p == 0:
                k //= p
    rng = random.Random(k)
    stack = [k] if k > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            found.add(m)
            continue
        f = _pollard_brent(m, rng)
        stack.extend((f, m // f))
    return sorted(found)


def largest_prime_factor(k: int) -> int:
    """P(k): largest prime factor of k, with P(+-1) = 1."""
    if k == 0:
        raise ValueError("P(0) is undefined")
    fs = prime_factors(k)
    return fs[-1] if fs else 1


def s_units_up_to(bound: int, primes: Sequence[int] = S_PRIMES) -> list:
    """All positive integers <= bound whose prime factors lie in ``primes``, sorted."""
    out = [1]
    for p in primes:
        grown = []
        for m in out:
            while m <= bound:
                grown.append(m)
                m *= p
        out = grown
    return sorted(out)
