"""Vanishing ranges from significant (A, B)-roots.

Fix ``A`` outside ``sigma`` and ``B`` inside it.  An (A, B)-root is a positive
root supported on ``A | B`` with some positive coefficient on ``A``.  It is
*significant* when some (A, B)-root ``s <= delta`` satisfies

    sum_{a in A} c_a(s) |a|^2  >=  sum_{b in B} c_b(s) |b|^2

and every simple root in the support of ``delta - s`` has one common squared
length, at most ``|s|^2``.  If ``L`` is negative on ``A`` and orthogonal to
``B`` and ``L + rho`` is regular, ``L + rho`` pairs negatively with every
significant root, so the index of ``L + rho`` (the only possibly nonzero
cohomology degree) is at least ``ell(A, B)``, the number of significant roots.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import TYPE_CHECKING, Iterable, Sequence

from .bott import check_highest_weight, check_sigma
from .errors import (
    ConditionABViolated,
    ConsistencyError,
    InvalidConfig,
    NotABRoot,
    NotSimplyLacedConfig,
    SigmaIsFull,
)
from .rootsys import DynkinDiagram, Root, Weight, inner

if TYPE_CHECKING:
    from .parabolic import ParabolicData

__all__ = [
    "ABConfig",
    "SignificanceWitness",
    "is_ab_root",
    "ab_roots",
    "witness_is_valid",
    "significance",
    "significant_roots",
    "ell_AB",
    "prune_B",
    "ell_simply_laced",
    "theorem_main_range",
    "semisimple_vanishing",
    "VanishingRange",
    "theorem_H1_range",
    "rigidity_check",
]


@dataclass(frozen=True)
class ABConfig:
    a: frozenset[int]
    b: frozenset[int]

    def __init__(self, a: Iterable[int] = (), b: Iterable[int] = ()):
        object.__setattr__(self, "a", frozenset(a))
        object.__setattr__(self, "b", frozenset(b))

    @property
    def nodes(self) -> frozenset[int]:
        return self.a | self.b

    def validate(self, diagram: DynkinDiagram, sigma: Iterable[int] | None = None) -> "ABConfig":
        for i in self.nodes:
            if not 0 <= i < diagram.rank:
                raise InvalidConfig(f"index {i} outside 0..{diagram.rank - 1}")
        if self.a & self.b:
            raise InvalidConfig("A and B must be disjoint")
        if sigma is not None:
            sigma = frozenset(sigma)
            if self.a & sigma:
                raise InvalidConfig(f"A meets Sigma at {sorted(self.a & sigma)}")
            if not self.b <= sigma:
                raise InvalidConfig(f"B leaves Sigma at {sorted(self.b - sigma)}")
        return self

    def __str__(self) -> str:
        return f"A={sorted(self.a)} B={sorted(self.b)}"


@dataclass(frozen=True)
class SignificanceWitness:
    """A significant root together with the root ``sigma_root`` certifying it.

    ``fastpath`` names the sufficient condition that produced the witness
    ("case1", "case2", "case3"), or is None if it came from exhaustive search.
    """

    root: Root
    sigma_root: Root
    fastpath: str | None = None


def is_ab_root(diagram: DynkinDiagram, cfg: ABConfig, r: Root) -> bool:
    supp = r.support
    return diagram.is_positive_root(r) and supp <= cfg.nodes and bool(supp & cfg.a)


def ab_roots(diagram: DynkinDiagram, sigma: Iterable[int] | None, cfg: ABConfig) -> list[Root]:
    """All (A, B)-roots, in the diagram's positive-root order."""
    cfg.validate(diagram, sigma)
    return list(_ab_roots(diagram, cfg))


@lru_cache(maxsize=None)
def _ab_roots(diagram: DynkinDiagram, cfg: ABConfig) -> tuple[Root, ...]:
    if not cfg.a:
        return ()
    return tuple(r for r in diagram.positive_roots if is_ab_root(diagram, cfg, r))


def witness_is_valid(diagram: DynkinDiagram, cfg: ABConfig, delta: Root, s: Root) -> bool:
    """Check the full definition of significance for the pair ``(delta, s)``."""
    if not (is_ab_root(diagram, cfg, delta) and is_ab_root(diagram, cfg, s)):
        return False
    if not s.leq(delta):
        return False
    norms = diagram.norms
    lhs = sum((s.coeffs[i] * norms[i] for i in cfg.a), Fraction(0))
    rhs = sum((s.coeffs[i] * norms[i] for i in cfg.b), Fraction(0))
    if lhs < rhs:
        return False
    diff = (delta - s).support
    if not diff:
        return True
    lengths = {norms[i] for i in diff}
    return len(lengths) == 1 and lengths.pop() <= inner(diagram, s, s)


def _fast_witness(diagram: DynkinDiagram, cfg: ABConfig, delta: Root) -> SignificanceWitness | None:
    norms = diagram.norms
    supp = sorted(delta.support)
    in_a = [i for i in supp if i in cfg.a]
    if len({norms[i] for i in supp}) == 1:
        return SignificanceWitness(delta, diagram.simple_root(in_a[0]), "case1")
    for a0 in in_a:
        others = [i for i in supp if i != a0]
        if all(norms[a0] > norms[i] for i in others) and delta.coeffs[a0] == 1:
            return SignificanceWitness(delta, diagram.simple_root(a0), "case2")
        if all(norms[a0] < norms[i] for i in others):
            for beta in others:
                c = -diagram.cartan[a0][beta]
                if c and delta.coeffs[a0] == c:
                    s = diagram.simple_root(beta) + diagram.simple_root(a0).scaled(c)
                    return SignificanceWitness(delta, s, "case3")
    return None


def significance(diagram: DynkinDiagram, delta: Root, cfg: ABConfig) -> SignificanceWitness | None:
    """A witness that ``delta`` is significant, or None if it is not.

    The three cheap sufficient conditions are tried first; every witness they
    produce is re-checked against the full definition.  Otherwise all (A, B)-roots
    below ``delta`` are searched in height order.
    """
    if not is_ab_root(diagram, cfg, delta):
        raise NotABRoot(f"{delta} is not an (A,B)-root for {cfg}")
    w = _fast_witness(diagram, cfg, delta)
    if w is not None:
        if not witness_is_valid(diagram, cfg, delta, w.sigma_root):
            raise ConsistencyError(f"{w.fastpath} produced an invalid witness for {delta}")
        return w
    for s in _ab_roots(diagram, cfg):
        if s.leq(delta) and witness_is_valid(diagram, cfg, delta, s):
            return SignificanceWitness(delta, s, None)
    return None


def significant_roots(diagram: DynkinDiagram, sigma: Iterable[int] | None,
                      cfg: ABConfig) -> list[SignificanceWitness]:
    """Witnesses for every significant (A, B)-root, in positive-root order."""
    cfg.validate(diagram, sigma)
    return list(_significant(diagram, cfg))


@lru_cache(maxsize=None)
def _significant(diagram: DynkinDiagram, cfg: ABConfig) -> tuple[SignificanceWitness, ...]:
    out = []
    for r in _ab_roots(diagram, cfg):
        w = significance(diagram, r, cfg)
        if w is not None:
            out.append(w)
    return tuple(out)


def ell_AB(diagram: DynkinDiagram, sigma: Iterable[int] | None, cfg: ABConfig) -> int:
    """Number of significant (A, B)-roots."""
    cfg.validate(diagram, sigma)
    return len(_significant(diagram, cfg))


def prune_B(diagram: DynkinDiagram, cfg: ABConfig) -> ABConfig:
    """Drop from B the connected components of ``A | B`` that miss A."""
    keep = set()
    for comp in diagram.connected_components(cfg.nodes):
        if comp & cfg.a:
            keep |= comp & cfg.b
    return ABConfig(cfg.a, keep)


def ell_simply_laced(diagram: DynkinDiagram, sigma: Iterable[int] | None, cfg: ABConfig) -> int:
    """Root-count formula for ``ell(A, B)`` when ``A | B'`` has only simple edges.

    Equals ``|positive roots on A | B'| - |positive roots on B'|``.
    """
    cfg.validate(diagram, sigma)
    pruned = prune_B(diagram, cfg)
    nodes = pruned.nodes
    for (i, j), m in diagram.edges.items():
        if m > 1 and i in nodes and j in nodes:
            raise NotSimplyLacedConfig(f"multiple edge a{i + 1}-a{j + 1} inside A|B'")
    big = sum(1 for r in diagram.positive_roots if r.support <= nodes)
    small = sum(1 for r in diagram.positive_roots if r.support <= pruned.b)
    return big - small


def _check_ab_condition(lam: Weight, cfg: ABConfig) -> None:
    for i in sorted(cfg.a):
        if lam.fcoords[i] >= 0:
            raise ConditionABViolated(f"(L, a{i + 1}) must be negative", index=i)
    for i in sorted(cfg.b):
        if lam.fcoords[i] != 0:
            raise ConditionABViolated(f"(L, a{i + 1}) must vanish", index=i)


def theorem_main_range(diagram: DynkinDiagram, sigma: Iterable[int], lam: Weight,
                       cfg: ABConfig) -> int:
    """``q_max`` such that ``H^q = 0`` for ``0 <= q < q_max``.

    ``lam`` is the highest weight of an irreducible P-module; it must be
    negative on A and orthogonal to B.
    """
    sigma = check_sigma(diagram, sigma)
    cfg.validate(diagram, sigma)
    check_highest_weight(diagram, sigma, lam)
    _check_ab_condition(lam, cfg)
    return len(_significant(diagram, cfg))


def semisimple_vanishing(diagram: DynkinDiagram, sigma: Iterable[int],
                         weights: Sequence[Weight]) -> int | None:
    """Vanishing bound for a P-module given by the highest weights of its
    irreducible composition factors.

    Returns ``q_max`` with ``H^q = 0`` for ``0 < q < q_max``, or None when every
    weight is dominant (then ``H^q = 0`` for all ``q > 0``).
    """
    sigma = check_sigma(diagram, sigma)
    for lam in weights:
        check_highest_weight(diagram, sigma, lam)
    cfg_b = semisimple_B(diagram, sigma, weights)
    best = None
    for lam in weights:
        a = frozenset(i for i in range(diagram.rank) if i not in sigma and lam.fcoords[i] < 0)
        if not a:
            continue
        value = len(_significant(diagram, ABConfig(a, cfg_b)))
        best = value if best is None else min(best, value)
    return best


def semisimple_B(diagram: DynkinDiagram, sigma: frozenset[int],
                 weights: Sequence[Weight]) -> frozenset[int]:
    """Union of the components of ``sigma`` on which every weight vanishes."""
    b = set()
    for comp in diagram.connected_components(sigma):
        if all(lam.fcoords[i] == 0 for lam in weights for i in comp):
            b |= comp
    return frozenset(b)


@dataclass(frozen=True)
class VanishingRange:
    """Open interval ``lo < q < hi`` of degrees with vanishing cohomology."""

    lo: int
    hi: int

    def __contains__(self, q: int) -> bool:
        return self.lo < q < self.hi


def theorem_H1_range(pd: "ParabolicData", generating_dim: int) -> VanishingRange | None:
    """Vanishing range for bundles built by natural operations from a
    representation of dimension ``generating_dim``; None if no guarantee."""
    from .parabolic import d_P, ell_P

    if generating_dim < 1:
        raise ValueError("generating_dim must be positive")
    dp = d_P(pd)
    if generating_dim >= dp:
        return None
    return VanishingRange(0, ell_P(pd))


def rigidity_check(pd: "ParabolicData", generating_dim: int) -> bool:
    """True if every bundle obtained by natural operations from a representation
    of dimension ``generating_dim`` is guaranteed rigid (``H^1(End) = 0``)."""
    from .parabolic import d_P

    if not pd.outside:
        raise SigmaIsFull("Sigma is all of Pi; G/P is a point")
    dp = d_P(pd)
    return generating_dim < dp and dp > 1
