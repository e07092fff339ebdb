"""numba kernels for the exhaustive search.

Two paths:

* ``scan_direct`` forms y^n - C in int64 and is only called when every y^n
  in the range is below 2^63.
* ``scan_residues`` never forms y^n; it tests y^n - C against square tables
  for a list of moduli and emits survivors for an exact big-int check.
"""
import math

import numpy as np
from numba import njit

INT64_LIMIT = (1 << 63) - 1
_ISQRT_MAX = 3037000499  # floor(sqrt(2^63 - 1))


def square_table(q: int) -> np.ndarray:
    t = np.zeros(q, dtype=np.bool_)
    t[(np.arange(q, dtype=np.int64) ** 2) % q] = True
    return t


@njit(cache=True, nogil=True)
def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


@njit(cache=True, nogil=True)
def _isqrt(n):
    r = np.int64(math.sqrt(n))
    if r > _ISQRT_MAX:
        r = _ISQRT_MAX
    while r * r > n:
        r -= 1
    while r < _ISQRT_MAX and (r + 1) * (r + 1) <= n:
        r += 1
    return r


@njit(cache=True, nogil=True)
def scan_direct(ys, n, cs, sq64, sq5760):
    """Solutions (y, index into cs, x) with y in ``ys`` and cs sorted ascending."""
    out_y = []
    out_t = []
    out_x = []
    T = cs.shape[0]
    for i in range(ys.shape[0]):
        y = ys[i]
        Y = np.int64(1)
        for _ in range(n):
            Y *= y
        t = 0
        while t < T and cs[t] < Y:
            N = Y - cs[t]
            if sq64[N & 63] and sq5760[N % 5760]:
                r = _isqrt(N)
                if r * r == N and _gcd(r, y) == 1:
                    out_y.append(y)
                    out_t.append(t)
                    out_x.append(r)
            t += 1
    return out_y, out_t, out_x


@njit(cache=True, nogil=True)
def scan_residues(ys, ks, n, residues, moduli, tables):
    """Pairs (y, t) with y^n - C_t a square modulo every modulus.

    ``residues[t, j]`` is C_t mod moduli[j]; ``ks[i]`` is the number of C
    values below ys[i]^n; ``tables[j, r]`` flags squares mod moduli[j].
    """
    out_y = []
    out_t = []
    M = moduli.shape[0]
    yres = np.empty(M, dtype=np.int64)
    for i in range(ys.shape[0]):
        y = ys[i]
        for j in range(M):
            q = moduli[j]
            acc = np.int64(1)
            base = y % q
            e = n
            while e:
                if e & 1:
                    acc = acc * base % q
                base = base * base % q
                e >>= 1
            yres[j] = acc
        for t in range(ks[i]):
            ok = True
            for j in range(M):
                q = moduli[j]
                r = yres[j] - residues[t, j]
                if r < 0:
                    r += q
                if not tables[j, r]:
                    ok = False
                    break
            if ok:
                out_y.append(y)
                out_t.append(t)
    return out_y, out_t
