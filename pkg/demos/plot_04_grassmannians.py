"""
Invariants of Grassmannians
===========================

Compute d(P) and ell(P) for every Grassmannian Gr(n, k) with small n and use
them for the rigidity test.
"""

# %%
from bottkit import analyze_parabolic, build_diagram, d_P, ell_P, rigidity_check

for n in range(3, 8):
    d = build_diagram([("A", n - 1)])
    row = []
    for k in range(1, n):
        pd = analyze_parabolic(d, set(range(n - 1)) - {k - 1})
        row.append(f"k={k}: d={d_P(pd)} l={ell_P(pd)}")
    print(f"n={n}  " + "  ".join(row))

# %%
# Bundles built from a representation of dimension below d(P) are rigid.
pd = analyze_parabolic(build_diagram("A4"), {0, 2, 3})
for dim in range(1, 7):
    print(dim, "rigid" if rigidity_check(pd, dim) else "no guarantee")

# %%
# The parabolic data also records the Levi components and their types.
for c in pd.components:
    print(sorted(i + 1 for i in c.nodes), c.type)
