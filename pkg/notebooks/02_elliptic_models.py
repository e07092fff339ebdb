# %% [markdown]
# # Cubic and quartic models
#
# Writing C = A z^6 with A sixth-power free turns x^2 + C = y^3 into a point
# (U, V) = (y/z^2, x/z^3) on V^2 = U^3 - A.  For n = 4 the same idea with
# fourth powers gives U^2 + A = V^4.

# %%
from fractions import Fraction

from lebnagell.arith import SUnitExponents
from lebnagell.elliptic import (CUBIC, QUARTIC, CurveModel, bounded_point_search, curve_family, decompose,
                                point_to_solution, solution_to_point)
from lebnagell.equation import Solution
from lebnagell.tables import ingest_tables

# %%
print(len(curve_family(CUBIC)), "cubic models,", len(curve_family(QUARTIC)), "quartic models")
m, z = decompose(SUnitExponents(6, 0, 1), CUBIC)
print(m, "z =", z)

# %% [markdown]
# ## From a solution to a point and back

# %%
s = Solution.of(5, 9, 6, 0, 1, 3)
m, p = solution_to_point(s)
print(s, "->", m, p)
print("back:", point_to_solution(m, p, 3))

# %% [markdown]
# Every n = 3 and n = 4 table row survives the round trip.

# %%
rows = [r for r in ingest_tables() if r.table_id in (1, 2, 3)]
ok = all(point_to_solution(*solution_to_point(r.solution)[:2], r.n) == r.solution for r in rows)
print(len(rows), "rows, round trip ok:", ok)

# %% [markdown]
# ## Searching one model directly
# Points on V^2 = U^3 - 11 with S-unit denominators up to z = 10.

# %%
model = CurveModel(CUBIC, 0, 0, 1)
for pt in bounded_point_search(model, 10, 10**4):
    if pt.V >= 0:
        print(f"U={pt.U}, V={pt.V}, z={pt.z} ->", point_to_solution(model, pt, 3))

# %% [markdown]
# A non-reduced scale gives no solution: the lift shares a factor.

# %%
from lebnagell.elliptic import SPoint

print(point_to_solution(model, SPoint(Fraction(9, 4), Fraction(5, 8), 4), 3))
