# %% [markdown]
# # Exhaustive search for x^2 + 2^a 3^b 11^c = y^n
#
# For a fixed exponent n the search walks y up to a bound and, for every
# S-unit C = 2^a 3^b 11^c below y^n, asks whether y^n - C is a square.
# Small y^n go through an int64 kernel; larger ones through a residue
# filter whose survivors are checked exactly.

# %%
from lebnagell.oracle import SearchConfig, enumerate_solutions, smooth_exponent_scan
from lebnagell.tables import ingest_exceptional, ingest_tables, solutions_of

# %% [markdown]
# ## Cubes
# Up to y = 10^4 the search should agree with the published n = 3 rows in range.

# %%
found = enumerate_solutions(SearchConfig(3, 10**4))
listed = {s for s in solutions_of(ingest_tables(), 1, 2) if s.y <= 10**4}
print(len(found), "solutions with y <= 10^4")
print("agree with the tables:", set(found) == listed)
for s in found[:8]:
    print(" ", s)

# %% [markdown]
# ## Higher exponents
# n = 5, 6 and 10 have a handful of sporadic solutions; n = 7 has none.

# %%
exceptional = ingest_exceptional()
for n in (5, 6, 7, 10):
    sols = enumerate_solutions(SearchConfig(n, 1000))
    print(f"n={n}:", [str(s) for s in sols], "listed:", sum(s.n == n for s in exceptional))

# %% [markdown]
# ## Restricting the primes
# With only {2, 11} the n = 5 family is the same, since both solutions have b = 0.

# %%
print([str(s) for s in enumerate_solutions(SearchConfig(5, 100, primes=(2, 11)))])

# %% [markdown]
# ## {2,3}-smooth exponents
# Only n = 3, 4 and 6 carry solutions.

# %%
print(smooth_exponent_scan(16, 300))
