"""Acceptance suite: nine exact checks, each with a wall-clock budget.

Run with pytest (a summary section lists one PASS/FAIL line per criterion) or
directly with ``python3 tests/test_acceptance.py``.
"""

import itertools
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import ACCEPTANCE_LINES, ab_configurations, all_subsets  # noqa: E402

from bottkit.bott import line_bundle_table, weyl_dimension  # noqa: E402
from bottkit.errors import NotSimplyLacedConfig  # noqa: E402
from bottkit.oracle import SweepSpec, index_bound_sweep, min_dim_scan, roots_by_reflections  # noqa: E402
from bottkit.parabolic import analyze_parabolic, d_P, ell_P, min_nontrivial_dim  # noqa: E402
from bottkit.rootsys import (  # noqa: E402
    Weight,
    build_diagram,
    diagrams_up_to_rank,
    find_root_chain,
    index,
    is_singular,
    simple_types,
)
from bottkit.vanishing import ABConfig, ell_AB, ell_simply_laced, significance, ab_roots  # noqa: E402


def record(number, title, ok, elapsed, limit, detail=""):
    within = elapsed < limit
    status = "PASS" if ok and within else "FAIL"
    line = f"[{status}] {number}. {title}: {detail} ({elapsed:.1f}s, budget {limit:.0f}s)"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line
    assert within, line


# 1 -------------------------------------------------------------------------------------------------

def test_1_grassmannian_reproduction():
    t0 = time.perf_counter()
    bad = []
    cases = 0
    for n in range(2, 10):
        d = build_diagram([("A", n - 1)])
        for k in range(1, n):
            alpha = k - 1
            pd = analyze_parabolic(d, set(range(n - 1)) - {alpha})
            edge = k in (1, n - 1)
            want = (n - 1, n - 1) if edge else (n, min(k, n - k))
            got = (d_P(pd), ell_P(pd))
            if got != want:
                bad.append((n, k, got, want))
            left, right = frozenset(range(alpha)), frozenset(range(alpha + 1, n - 1))
            if left and ell_AB(d, pd.sigma, ABConfig({alpha}, left)) != k:
                bad.append((n, k, "C1"))
            if right and ell_AB(d, pd.sigma, ABConfig({alpha}, right)) != n - k:
                bad.append((n, k, "C2"))
            cases += 1
    record(1, "Grassmannian d(P), ell(P), ell({a},C_i)", not bad, time.perf_counter() - t0, 10,
           f"{cases} cases, {len(bad)} mismatches {bad[:3]}")


# 2 -------------------------------------------------------------------------------------------------

def test_2_length_formula_agreement():
    t0 = time.perf_counter()
    checked = mismatches = 0
    for d in diagrams_up_to_rank(6, simply_laced=True):
        for _, cfg in ab_configurations(d.rank, require_a=False):
            try:
                value = ell_simply_laced(d, None, cfg)
            except NotSimplyLacedConfig:
                continue
            checked += 1
            mismatches += value != ell_AB(d, None, cfg)
    record(2, "ell_AB = simply-laced count, rank <= 6", mismatches == 0, time.perf_counter() - t0, 300,
           f"{checked} configurations, {mismatches} mismatches")


# 3 -------------------------------------------------------------------------------------------------

def test_3_significant_root_sweep():
    t0 = time.perf_counter()
    configs = weights = violations = 0
    for d in diagrams_up_to_rank(4):
        for sigma, cfg in ab_configurations(d.rank):
            bounds = [(-4, -2) if i in cfg.a else (-4, 4) for i in range(d.rank)]
            rep = index_bound_sweep(SweepSpec(d, sigma, cfg, bounds=bounds, cap=10 ** 7), strict=False)
            assert rep.mode == "exhaustive"
            configs += 1
            weights += rep.checked
            violations += len(rep.violations)
    record(3, "index bound over significant roots, rank <= 4", violations == 0,
           time.perf_counter() - t0, 1800, f"{configs} configurations, {weights} weights, {violations} violations")


# 4 -------------------------------------------------------------------------------------------------

def test_4_projective_line():
    t0 = time.perf_counter()
    rows = line_bundle_table(build_diagram("A1"), set(), -5, 5)
    bad = []
    for lam, res in rows:
        m = lam.as_ints()[0]
        if m >= 0:
            want = (0, m + 1)
        elif m == -1:
            want = (None, None)
        else:
            want = (1, -m - 1)
        if (res.degree, res.dimension) != want:
            bad.append(m)
    record(4, "line bundles on P^1 over [-5..5]", not bad and len(rows) == 11,
           time.perf_counter() - t0, 60, f"{len(rows)} degrees, mismatches at {bad}")


# 5 -------------------------------------------------------------------------------------------------

def test_5_root_oracle_equality():
    t0 = time.perf_counter()
    bad = []
    types = list(simple_types(8))
    for letter, rank in types:
        d = build_diagram([(letter, rank)])
        orbit = roots_by_reflections(d)
        if orbit != frozenset(d.positive_roots):
            bad.append(f"{letter}{rank} roots")
        top = max(orbit, key=lambda r: r.height)
        adjoint = weyl_dimension(d, d.root_to_weight(top))
        if 2 * len(d.positive_roots) != adjoint - rank:
            bad.append(f"{letter}{rank} count")
    record(5, "closure roots = reflection orbit, rank <= 8", not bad, time.perf_counter() - t0, 60,
           f"{len(types)} simple types, failures {bad}")


# 6 -------------------------------------------------------------------------------------------------

def classical_min_dim(letter, rank):
    if letter == "A":
        return rank + 1
    if letter == "B":
        return 4 if rank == 2 else 2 * rank + 1
    if letter in "CD":
        return 2 * rank
    return {("G", 2): 7, ("F", 4): 26, ("E", 6): 27, ("E", 7): 56, ("E", 8): 248}[(letter, rank)]


def test_6_minimal_dimensions():
    t0 = time.perf_counter()
    bad = []
    types = list(simple_types(8))
    for letter, rank in types:
        dim, _ = min_dim_scan((letter, rank), cap=2)
        if dim != classical_min_dim(letter, rank) or min_nontrivial_dim((letter, rank)) != dim:
            bad.append(f"{letter}{rank}:{dim}")
    record(6, "minimal nontrivial dimensions by scan", not bad, time.perf_counter() - t0, 60,
           f"{len(types)} simple types, failures {bad}")


# 7 -------------------------------------------------------------------------------------------------

def test_7_adjacent_b_and_d_ell_threshold():
    t0 = time.perf_counter()
    diagrams = list(diagrams_up_to_rank(8))
    n_sigma = n_b = 0
    bad = []
    for d in diagrams:
        for sigma in all_subsets(range(d.rank)):
            if len(sigma) == d.rank:
                continue
            pd = analyze_parabolic(d, sigma)
            n_sigma += 1
            if (d_P(pd) > 1) != (ell_P(pd) > 1):
                bad.append((d.name, sigma))
        for alpha in range(d.rank):
            rest = [i for i in range(d.rank) if i != alpha]
            for b in all_subsets(rest):
                if not d.neighbors[alpha] & set(b):
                    continue
                n_b += 1
                if ell_AB(d, None, ABConfig({alpha}, b)) < 2:
                    bad.append((d.name, alpha, b))
    record(7, "ell({a},B) >= 2 and d(P)>1 iff ell(P)>1, rank <= 8", not bad, time.perf_counter() - t0, 600,
           f"{len(diagrams)} diagrams, {n_sigma} sigmas, {n_b} (alpha, B) pairs, failures {bad[:3]}")


# 8 -------------------------------------------------------------------------------------------------

def test_8_root_chains():
    t0 = time.perf_counter()
    pairs = 0
    bad = []
    for letter, rank in simple_types(6):
        d = build_diagram([(letter, rank)])
        roots = d.positive_roots
        for lo, hi in itertools.product(roots, repeat=2):
            if not lo.leq(hi):
                continue
            pairs += 1
            chain = find_root_chain(d, lo, hi)
            allowed = (hi - lo).support
            ok = chain[0] == lo and chain[-1] == hi
            for a, b in zip(chain, chain[1:]):
                step = b - a
                ok = ok and d.is_positive_root(b) and step.height == 1 and step.sign == 1 \
                    and step.support <= allowed
            if not ok:
                bad.append((d.name, lo, hi))
    record(8, "root chains between comparable roots, rank <= 6", not bad, time.perf_counter() - t0, 600,
           f"{pairs} pairs, failures {bad[:3]}")


# 9 -------------------------------------------------------------------------------------------------

def test_9_scale_invariance():
    t0 = time.perf_counter()
    rng = random.Random(20261017)
    names = ["B2", "G2", "B3", "C3", "F4", "A2xB2", "G2xA1", "B2xG2", "C4", "A3xB2"]
    factors = [Fraction(1, 2), Fraction(2), Fraction(3)]
    bad = []
    for _ in range(100):
        d = build_diagram(rng.choice(names))
        e = d.rescaled(rng.randrange(len(d.components)), rng.choice(factors))
        labels = [rng.randrange(4) for _ in range(d.rank)]
        if 1 not in labels:
            labels[rng.randrange(d.rank)] = 1
        cfg = ABConfig({i for i, l in enumerate(labels) if l == 1}, {i for i, l in enumerate(labels) if l == 3})
        if ell_AB(d, None, cfg) != ell_AB(e, None, cfg):
            bad.append((d.name, cfg, "ell"))
        for r in ab_roots(d, None, cfg):
            if (significance(d, r, cfg) is None) != (significance(e, r, cfg) is None):
                bad.append((d.name, cfg, str(r)))
        for _ in range(10):
            lam = Weight(tuple(rng.randint(-5, 5) for _ in range(d.rank)))
            if is_singular(d, lam) != is_singular(e, lam):
                bad.append((d.name, lam, "singular"))
            elif not is_singular(d, lam) and index(d, lam) != index(e, lam):
                bad.append((d.name, lam, "index"))
    record(9, "per-component rescaling by 1/2, 2, 3", not bad, time.perf_counter() - t0, 600,
           f"100 configurations, failures {bad[:3]}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
