"""Parabolic subgroups given by a subset ``sigma`` of the simple roots.

``sigma`` is the Dynkin diagram of the semisimple part of the Levi factor.
For a simple root ``alpha`` outside ``sigma``, let ``C_1..C_n`` be the
components of ``sigma`` joined to ``alpha`` by an edge and ``d_i`` the least
dimension of a nontrivial representation of the simple algebra of ``C_i``:

* ``d(alpha) = d_1 + ... + d_n`` and ``ell(alpha) = min_i ell({alpha}, C_i)``,
  both 1 when no component is adjacent;
* ``d(P)`` and ``ell(P)`` are the minima of these over ``alpha`` outside sigma.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .bott import check_sigma
from .errors import AlphaInSigma, ConsistencyError, SigmaIsFull
from .rootsys import DynkinDiagram, Root, standard_cartan
from .vanishing import ABConfig, ell_AB

__all__ = [
    "SimpleTypeId",
    "Component",
    "ParabolicData",
    "identify_subdiagram",
    "analyze_parabolic",
    "min_nontrivial_dim",
    "d_alpha",
    "ell_alpha",
    "d_P",
    "ell_P",
    "triviality_guarantee",
]


@dataclass(frozen=True)
class SimpleTypeId:
    """Isomorphism type of a connected subdiagram.

    ``order`` lists the subdiagram's simple-root indices in the Bourbaki order
    of ``letter``/``rank``; it records which way round the subdiagram sits.
    B2 and C2 are both reported as B2.
    """

    letter: str
    rank: int
    order: tuple[int, ...] = ()

    @property
    def name(self) -> str:
        return f"{self.letter}{self.rank}"

    def __str__(self) -> str:
        return self.name


def _chain_from(start: int, nodes: set[int], nb) -> list[int]:
    out, prev, cur = [start], None, start
    while True:
        nxt = [w for w in nb[cur] if w in nodes and w != prev]
        if not nxt:
            return out
        prev, cur = cur, nxt[0]
        out.append(cur)


def identify_subdiagram(diagram: DynkinDiagram, nodes: Iterable[int]) -> SimpleTypeId:
    """Type of the connected subdiagram on ``nodes``."""
    nodes = set(nodes)
    if not nodes or not diagram.is_connected(nodes):
        raise ValueError("subdiagram must be nonempty and connected")
    nb = {v: [w for w in diagram.neighbors[v] if w in nodes] for v in nodes}
    for v in nb:
        nb[v].sort()
    n = len(nodes)
    norms = diagram.norms
    mult = {e: m for e, m in diagram.edges.items() if e[0] in nodes and e[1] in nodes}
    leaves = sorted(v for v in nodes if len(nb[v]) <= 1)

    if n == 1:
        tid = SimpleTypeId("A", 1, tuple(nodes))
    elif 3 in mult.values():
        u, v = sorted(nodes, key=lambda i: norms[i])
        tid = SimpleTypeId("G", 2, (u, v))
    elif 2 in mult.values():
        (u, v), = [e for e, m in mult.items() if m == 2]
        if n == 2:
            long_, short = (u, v) if norms[u] > norms[v] else (v, u)
            tid = SimpleTypeId("B", 2, (long_, short))
        elif len(nb[u]) == 2 and len(nb[v]) == 2:
            end = next(x for x in leaves if norms[x] == max(norms[i] for i in nodes))
            tid = SimpleTypeId("F", 4, tuple(_chain_from(end, nodes, nb)))
        else:
            tip = u if len(nb[u]) == 1 else v
            far = next(x for x in leaves if x != tip)
            chain = tuple(_chain_from(far, nodes, nb))
            letter = "B" if norms[tip] < norms[far] else "C"
            tid = SimpleTypeId(letter, n, chain)
    else:
        branch = [v for v in nodes if len(nb[v]) == 3]
        if not branch:
            tid = SimpleTypeId("A", n, tuple(_chain_from(leaves[0], nodes, nb)))
        else:
            b = branch[0]
            arms = []
            for w in nb[b]:
                arm = [w]
                prev, cur = b, w
                while True:
                    nxt = [x for x in nb[cur] if x != prev]
                    if not nxt:
                        break
                    prev, cur = cur, nxt[0]
                    arm.append(cur)
                arms.append(arm)
            arms.sort(key=len)
            lens = tuple(len(a) for a in arms)
            if lens[0] == lens[1] == 1:
                long_arm = arms[2]
                order = tuple(long_arm[::-1]) + (b, arms[0][0], arms[1][0])
                tid = SimpleTypeId("D", n, order)
            elif lens[:2] == (1, 2) and lens[2] in (2, 3, 4):
                short, mid, long_arm = arms
                order = (mid[1], short[0], mid[0], b) + tuple(long_arm)
                tid = SimpleTypeId("E", n, order)
            else:
                raise ConsistencyError(f"unrecognised branched subdiagram {sorted(nodes)}")

    expected = standard_cartan(tid.letter, tid.rank)
    got = [[diagram.cartan[i][j] for j in tid.order] for i in tid.order]
    if got != expected:
        raise ConsistencyError(f"subdiagram {sorted(nodes)} misidentified as {tid.name}")
    return tid


@lru_cache(maxsize=None)
def _min_dim(letter: str, rank: int) -> int:
    from .oracle import min_dim_scan

    return min_dim_scan((letter, rank), cap=2)[0]


def min_nontrivial_dim(t: SimpleTypeId | tuple[str, int]) -> int:
    """Least dimension of a nontrivial irreducible representation of a simple type.

    Computed by a Weyl-dimension scan and cached per type.
    """
    letter, rank = (t.letter, t.rank) if isinstance(t, SimpleTypeId) else t
    return _min_dim(letter, rank)


@dataclass(frozen=True)
class Component:
    nodes: frozenset[int]
    type: SimpleTypeId


@dataclass(frozen=True)
class ParabolicData:
    """Combinatorial data of the parabolic subgroup attached to ``sigma``."""

    diagram: DynkinDiagram
    sigma: frozenset[int]
    components: tuple[Component, ...]
    adjacency: dict  # alpha -> tuple of indices into components
    levi_roots: tuple[Root, ...]
    nilradical_roots: tuple[Root, ...]

    @property
    def outside(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.diagram.rank) if i not in self.sigma)

    def adjacent_components(self, alpha: int) -> tuple[Component, ...]:
        return tuple(self.components[k] for k in self.adjacency[alpha])

    @property
    def dimension(self) -> int:
        """Complex dimension of G/P."""
        return len(self.nilradical_roots)


def analyze_parabolic(diagram: DynkinDiagram, sigma: Iterable[int]) -> ParabolicData:
    sigma = check_sigma(diagram, sigma)
    comps = tuple(Component(c, identify_subdiagram(diagram, c))
                  for c in diagram.connected_components(sigma))
    adjacency = {}
    for alpha in range(diagram.rank):
        if alpha in sigma:
            continue
        adjacency[alpha] = tuple(k for k, c in enumerate(comps)
                                 if diagram.neighbors[alpha] & c.nodes)
    spanned = [r for r in diagram.positive_roots if r.support <= sigma]
    levi = tuple(spanned) + tuple(-r for r in spanned)
    nil = tuple(-r for r in diagram.positive_roots if not r.support <= sigma)
    return ParabolicData(diagram, sigma, comps, adjacency, levi, nil)


def _check_alpha(pd: ParabolicData, alpha: int) -> None:
    if alpha in pd.sigma:
        raise AlphaInSigma(f"a{alpha + 1} lies in Sigma")
    if alpha not in pd.adjacency:
        raise IndexError(alpha)


def d_alpha(pd: ParabolicData, alpha: int) -> int:
    _check_alpha(pd, alpha)
    comps = pd.adjacent_components(alpha)
    if not comps:
        return 1
    return sum(min_nontrivial_dim(c.type) for c in comps)


def ell_alpha(pd: ParabolicData, alpha: int) -> int:
    _check_alpha(pd, alpha)
    comps = pd.adjacent_components(alpha)
    if not comps:
        return 1
    return min(ell_AB(pd.diagram, pd.sigma, ABConfig({alpha}, c.nodes)) for c in comps)


def _require_outside(pd: ParabolicData) -> None:
    if not pd.outside:
        raise SigmaIsFull("Sigma is all of Pi; G/P is a point")


def d_P(pd: ParabolicData) -> int:
    _require_outside(pd)
    return min(d_alpha(pd, a) for a in pd.outside)


def ell_P(pd: ParabolicData) -> int:
    _require_outside(pd)
    return min(ell_alpha(pd, a) for a in pd.outside)


def triviality_guarantee(dims: Iterable[int], repdim: int) -> bool:
    """True if every representation of dimension ``repdim`` of a sum of simple
    algebras with minimal nontrivial dimensions ``dims`` kills one summand."""
    dims = list(dims)
    if not dims:
        raise ValueError("dims must be nonempty")
    return repdim < sum(dims)
