# %% [markdown]
# # Prime exponents and Lucas sequences
#
# For odd prime p, x + z sqrt(-d) = eta^p in one of eight imaginary quadratic
# fields.  Comparing imaginary parts gives z = v L_p(eta), so every prime
# dividing L_p is either 2, 3, 11 or absent.  Primitive divisors then force
# p = 5 and d in {2, 6}.

# %%
from lebnagell.arith import legendre_symbol
from lebnagell.lucas import (FIELD_DS, FIELDS, QuadraticInteger, case_analysis_p5, defective_lookup,
                             lucas_l5_quartic, lucas_term, primitive_divisor_gate, primitive_prime_test)

# %% [markdown]
# ## The eight fields

# %%
for d in FIELD_DS:
    f = FIELDS[d]
    print(f"d={d:2d} disc={f.discriminant:5d} h={f.class_number} units={f.unit_group_order}"
          f" (-d/11)={legendre_symbol(-d, 11) if d % 11 else 0}")

# %% [markdown]
# ## Lucas terms

# %%
eta = QuadraticInteger.of(2, 1, 1)
print([lucas_term(eta, m) for m in range(10)])
print("L_5 closed form:", lucas_l5_quartic(2, 1, 1), lucas_l5_quartic(2, 1, 2))
print(primitive_prime_test(11, eta, 5))

# %% [markdown]
# The one pair without a primitive divisor at p = 5 in these fields:

# %%
for e in defective_lookup(FIELDS[11], 5):
    print(e, "L_5 =", lucas_term(e, 5))

# %% [markdown]
# ## Which fields survive for each prime

# %%
for p in (5, 7, 11, 13):
    print(p, primitive_divisor_gate(p))

# %% [markdown]
# ## Case analysis at p = 5
# Candidates are lifted and classified; branches that fail mod 8 are still
# searched and come back empty.

# %%
for d in (2, 6):
    rep = case_analysis_p5(d, 50)
    for c in rep.candidates:
        print(f"d={d} case {c.case} (u,v)=({c.u},{c.v}) -> {c.lift.solution} [{c.verdict.value}]")
    print("  points on the quartics:", sorted(rep.points_on(11)))
    print("  eliminated branches with hits:", [b.label() for b in rep.eliminated() if rep.hits(b)])
