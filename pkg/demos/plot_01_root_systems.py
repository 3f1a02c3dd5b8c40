"""
Root systems from Cartan matrices
=================================

Build a few Dynkin diagrams, list their positive roots and look at the
invariant scalar product.
"""

# %%
# A diagram is a product of simple types.  Roots are integer vectors in the
# simple-root basis; long roots have squared length 2.
from bottkit import Weight, build_diagram, dominantize, index, inner

g2 = build_diagram("G2")
print(g2.cartan)
for r in g2.positive_roots:
    print(f"{str(r):>12}  height {r.height}  |r|^2 = {inner(g2, r, r)}")

# %%
# The number of positive roots grows quickly with the rank.
for name in ["A4", "B4", "C4", "D4", "F4", "E6", "E7", "E8"]:
    print(name, len(build_diagram(name).positive_roots))

# %%
# Weights live in fundamental coordinates.  Reflecting at negative
# coordinates walks a regular weight into the dominant chamber; the number of
# steps is its index.
a3 = build_diagram("A3")
lam = Weight.of(-3, 2, -1)
dom, steps = dominantize(a3, lam)
print(lam, "->", dom, "in", steps, "reflections; index", index(a3, lam))
print("norm preserved:", inner(a3, lam, lam) == inner(a3, dom, dom))
