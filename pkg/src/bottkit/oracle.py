"""Brute-force cross-checks for the main computations.

These deliberately avoid the code paths they check:

* :func:`roots_by_reflections` builds the root system as the Weyl orbit of the
  simple roots using only the Gram matrix, not the Cartan-matrix string
  closure used by :func:`bottkit.rootsys.positive_roots`.
* :func:`index_bound_sweep` evaluates pairings on whole weight boxes with
  integer numpy arrays over the reflection-orbit roots, independently of
  :func:`bottkit.rootsys.index`.
"""

from __future__ import annotations

import itertools
import time
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .bott import weyl_dimension
from .errors import OracleViolation
from .rootsys import DynkinDiagram, Root, Weight, build_diagram
from .vanishing import ABConfig, significant_roots

__all__ = [
    "roots_by_reflections",
    "min_dim_scan",
    "SweepSpec",
    "SweepReport",
    "index_bound_sweep",
]


def roots_by_reflections(diagram: DynkinDiagram) -> frozenset[Root]:
    """Positive roots as the Weyl orbit of the simple roots, cut to the positive cone."""
    rank = diagram.rank
    gram = diagram.gram

    def reflect(v: tuple[int, ...], i: int) -> tuple[int, ...]:
        pairing = sum((v[j] * gram[j][i] for j in range(rank) if v[j]), Fraction(0))
        k = 2 * pairing / gram[i][i]
        assert k.denominator == 1
        out = list(v)
        out[i] -= int(k)
        return tuple(out)

    start = [tuple(int(i == j) for j in range(rank)) for i in range(rank)]
    seen = set(start)
    queue = deque(start)
    while queue:
        v = queue.popleft()
        for i in range(rank):
            w = reflect(v, i)
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return frozenset(Root(v) for v in seen if all(c >= 0 for c in v))


def min_dim_scan(t, cap: int = 2) -> tuple[int, Weight]:
    """Smallest Weyl dimension over nonzero dominant weights with coordinates <= cap.

    ``t`` is ``(letter, rank)`` or anything with ``letter`` and ``rank``
    attributes.  The dimension grows strictly in every coordinate, so any cap
    >= 1 already gives the global minimum.  Ties go to the lexicographically
    first weight.
    """
    letter, rank = (t.letter, t.rank) if hasattr(t, "letter") else t
    if cap < 1:
        raise ValueError("cap must be at least 1")
    d = build_diagram([(letter, rank)])
    best = None
    for coords in itertools.product(range(cap + 1), repeat=rank):
        if not any(coords):
            continue
        w = Weight(coords)
        dim = weyl_dimension(d, w)
        if best is None or dim < best[0]:
            best = (dim, w)
    return best


@dataclass(frozen=True)
class SweepSpec:
    """A box of weights on which to test the significant-root index bound.

    ``bounds`` is either one ``(lo, hi)`` pair for every coordinate or a
    sequence of pairs.  Boxes with more than ``cap`` points satisfying the
    (A, B) sign condition are sampled (``samples`` points, seeded by ``seed``).
    """

    diagram: DynkinDiagram
    sigma: frozenset[int]
    cfg: ABConfig
    bounds: tuple = (-4, 4)
    seed: int = 0
    cap: int = 250_000
    samples: int = 20_000

    def coordinate_ranges(self) -> list[range]:
        rank = self.diagram.rank
        b = self.bounds
        if len(b) == 2 and all(isinstance(x, int) for x in b):
            b = [b] * rank
        if len(b) != rank:
            raise ValueError(f"need {rank} coordinate bounds, got {len(b)}")
        out = []
        for i, (lo, hi) in enumerate(b):
            if lo > hi:
                raise ValueError(f"empty bound {lo}..{hi} for coordinate {i}")
            if i in self.cfg.a:
                out.append(range(lo, min(hi, -1) + 1))
            elif i in self.cfg.b:
                out.append(range(0, 1) if lo <= 0 <= hi else range(0))
            else:
                out.append(range(lo, hi + 1))
        return out


@dataclass
class SweepReport:
    diagram: str
    sigma: list[int]
    a: list[int]
    b: list[int]
    bound: int
    mode: str
    seed: int
    checked: int = 0
    regular: int = 0
    singular: int = 0
    min_index: int | None = None
    violations: list[dict] = field(default_factory=list)
    runtime: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations


def _pairing_matrix(diagram: DynkinDiagram, roots: Sequence[Root]) -> np.ndarray:
    h = np.array(diagram.int_half_norms, dtype=np.int64)
    r = np.array([x.coeffs for x in roots], dtype=np.int64).reshape(len(roots), diagram.rank)
    return (r * h).T


def index_bound_sweep(spec: SweepSpec, strict: bool = True) -> SweepReport:
    """Check that ``L + rho`` pairs negatively with every significant root and
    has index at least ``ell(A, B)``, for every regular ``L + rho`` in the box
    with ``L`` negative on A and zero on B.

    Raises :class:`OracleViolation` on the first counterexample when ``strict``;
    otherwise violations are listed in the report.
    """
    t0 = time.perf_counter()
    d, cfg = spec.diagram, spec.cfg
    cfg.validate(d, spec.sigma)
    witnesses = significant_roots(d, spec.sigma, cfg)
    bound = len(witnesses)
    ranges = spec.coordinate_ranges()
    total = 1
    for r in ranges:
        total *= len(r)
    mode = "exhaustive" if total <= spec.cap else "sampled"
    report = SweepReport(d.name, sorted(spec.sigma), sorted(cfg.a), sorted(cfg.b),
                         bound, mode, spec.seed)
    if not cfg.a or total == 0:
        report.runtime = time.perf_counter() - t0
        return report

    if mode == "exhaustive":
        grid = np.array(list(itertools.product(*ranges)), dtype=np.int64).reshape(-1, d.rank)
    else:
        rng = np.random.default_rng(spec.seed)
        cols = [rng.integers(r.start, r.stop, size=spec.samples) for r in ranges]
        grid = np.unique(np.stack(cols, axis=1), axis=0)

    roots = sorted(roots_by_reflections(d), key=lambda r: (r.height, r.coeffs))
    col = {r: k for k, r in enumerate(roots)}
    sig_cols = np.array([col[w.root] for w in witnesses], dtype=np.int64)
    pair = (grid + 1) @ _pairing_matrix(d, roots)
    singular = (pair == 0).any(axis=1)
    regular = ~singular
    idx = (pair < 0).sum(axis=1)
    report.checked = int(len(grid))
    report.singular = int(singular.sum())
    report.regular = int(regular.sum())
    if report.regular:
        report.min_index = int(idx[regular].min())

    bad_rows = np.nonzero(regular & ((idx < bound) | (pair[:, sig_cols] >= 0).any(axis=1)))[0]
    for row in bad_rows:
        lam = [int(x) for x in grid[row]]
        offending = [roots[c] for c in sig_cols if pair[row, c] >= 0]
        entry = {"weight": lam, "index": int(idx[row]),
                 "roots": [list(r.coeffs) for r in offending]}
        report.violations.append(entry)
        if strict:
            raise OracleViolation(
                f"{d.name} {cfg}: weight {lam} has index {int(idx[row])} < {bound} "
                f"or nonnegative pairing with {[str(r) for r in offending]}",
                weight=Weight(lam), root=offending[0] if offending else None)
    report.runtime = time.perf_counter() - t0
    return report
