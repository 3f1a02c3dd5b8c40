"""
Significant roots and the vanishing range
=========================================

Count significant (A, B)-roots, inspect their witnesses and compare the
resulting vanishing range with the actual cohomology degree.
"""

# %%
from bottkit import ABConfig, Weight, bott_cohomology, build_diagram, significant_roots, theorem_main_range

b2 = build_diagram("B2")
for a, b in [({0}, {1}), ({1}, {0})]:
    cfg = ABConfig(a, b)
    print(cfg)
    for w in significant_roots(b2, b, cfg):
        print(f"   {str(w.root):>10}  via {str(w.sigma_root):>8}  [{w.fastpath or 'search'}]")

# %%
# Every weight that is negative on A and orthogonal to B has no cohomology
# below the number of significant roots.
sigma = {1}
cfg = ABConfig({0}, {1})
for m in range(-6, 0):
    lam = Weight.of(m, 0)
    q = theorem_main_range(b2, sigma, lam, cfg)
    print(lam, "vanishes below", q, "| actual:", bott_cohomology(b2, sigma, lam))
