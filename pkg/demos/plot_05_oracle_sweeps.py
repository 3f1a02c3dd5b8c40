"""
Brute-force sweeps
==================

Check the significant-root bound on whole boxes of weights with the numpy
sweep, and cross-check the root closure against reflection orbits.
"""

# %%
from bottkit.oracle import SweepSpec, index_bound_sweep, min_dim_scan, roots_by_reflections
from bottkit.rootsys import build_diagram
from bottkit.vanishing import ABConfig

for name, sigma, a, b in [("A3", {1, 2}, {0}, {1, 2}), ("B3", {1}, {0, 2}, {1}), ("G2", {0}, {1}, {0})]:
    rep = index_bound_sweep(SweepSpec(build_diagram(name), frozenset(sigma), ABConfig(a, b)))
    print(f"{name}: bound {rep.bound}, {rep.checked} weights, {rep.regular} regular, "
          f"min index {rep.min_index}, violations {len(rep.violations)}")

# %%
for name in ["F4", "E6", "E7"]:
    d = build_diagram(name)
    print(name, roots_by_reflections(d) == frozenset(d.positive_roots))

# %%
# Smallest nontrivial representations, found by scanning Weyl dimensions.
for t in [("B", 2), ("B", 3), ("G", 2), ("F", 4), ("E", 6)]:
    dim, witness = min_dim_scan(t)
    print(f"{t[0]}{t[1]}: {dim} at {witness}")
