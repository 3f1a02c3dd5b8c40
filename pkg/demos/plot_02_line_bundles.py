"""
Line bundles and Bott's theorem
===============================

Evaluate Bott's theorem on characters of a parabolic subgroup and print the
cohomology table.
"""

# %%
# On the projective line every line bundle has cohomology in at most one
# degree.
from bottkit import Weight, bott_cohomology, build_diagram, line_bundle_table

p1 = build_diagram("A1")
for lam, res in line_bundle_table(p1, set(), -5, 5):
    print(f"O({lam.as_ints()[0]:>2}):  {res}")

# %%
# The full flag manifold of C^3.  Each character either has no cohomology at
# all or lives in the degree given by the index of its shifted weight.
a2 = build_diagram("A2")
for lam, res in line_bundle_table(a2, set(), -3, 1):
    if not res.all_zero and res.degree > 0:
        print(lam.as_ints(), res)

# %%
# Irreducible modules of the Levi factor are allowed too; only the Levi
# coordinates have to be non-negative.
print(bott_cohomology(a2, {0}, Weight.of(1, -4)))
