"""Root systems of semisimple Lie algebras in exact arithmetic.

Conventions
-----------
* Simple roots are labelled as in Bourbaki within each simple component, and
  components are concatenated in the order they were given.
* ``cartan[i][j] = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)``, i.e. the
  pairing of the coroot of ``alpha_i`` with ``alpha_j``.
* Within each simple component the long roots have squared length 2.  Short
  roots then have squared length 1 (B, C, F) or 2/3 (G2).
* Roots are integer vectors in the simple-root basis; weights are rational
  vectors in the fundamental-weight basis, ``lambda_i = 2 (L, alpha_i) /
  (alpha_i, alpha_i)``.  A weight is integral iff these are integers.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Iterable, Iterator, Sequence, Union

from .errors import (
    ConsistencyError,
    DimensionMismatch,
    InvalidType,
    NotComparable,
    ParseError,
    SingularShiftedWeight,
    SingularWeight,
)

__all__ = [
    "Root",
    "Weight",
    "DynkinDiagram",
    "build_diagram",
    "parse_type_string",
    "standard_cartan",
    "simple_types",
    "diagrams_up_to_rank",
    "positive_roots",
    "inner",
    "singular_witness",
    "is_singular",
    "index",
    "dominantize",
    "I_of",
    "find_root_chain",
]


@dataclass(frozen=True, order=True)
class Root:
    """An element of the root lattice, stored by its simple-root coefficients."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @classmethod
    def simple(cls, i: int, rank: int) -> "Root":
        return cls(tuple(1 if j == i else 0 for j in range(rank)))

    @property
    def rank(self) -> int:
        return len(self.coeffs)

    @property
    def sign(self) -> int:
        """+1 for positive roots, -1 for negative ones, 0 for the zero vector."""
        if any(c > 0 for c in self.coeffs):
            return 1
        if any(c < 0 for c in self.coeffs):
            return -1
        return 0

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, c in enumerate(self.coeffs) if c)

    def leq(self, other: "Root") -> bool:
        """Coordinatewise comparison ``self <= other``."""
        _check_len(self.coeffs, other.coeffs)
        return all(a <= b for a, b in zip(self.coeffs, other.coeffs))

    def __add__(self, other: "Root") -> "Root":
        _check_len(self.coeffs, other.coeffs)
        return Root(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Root") -> "Root":
        _check_len(self.coeffs, other.coeffs)
        return Root(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Root":
        return Root(tuple(-a for a in self.coeffs))

    def scaled(self, k: int) -> "Root":
        return Root(tuple(k * a for a in self.coeffs))

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            name = f"a{i + 1}"
            if c == 1:
                terms.append(name)
            elif c == -1:
                terms.append(f"-{name}")
            else:
                terms.append(f"{c}{name}")
        return " + ".join(terms).replace("+ -", "- ") or "0"


@dataclass(frozen=True)
class Weight:
    """A weight given by its fundamental coordinates."""

    fcoords: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "fcoords", tuple(Fraction(x) for x in self.fcoords))

    @classmethod
    def of(cls, *coords) -> "Weight":
        return cls(tuple(coords))

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        return cls((0,) * rank)

    @classmethod
    def rho(cls, rank: int) -> "Weight":
        """Half the sum of the positive roots; all fundamental coordinates are 1."""
        return cls((1,) * rank)

    @property
    def rank(self) -> int:
        return len(self.fcoords)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.fcoords)

    def is_dominant(self) -> bool:
        return all(x >= 0 for x in self.fcoords)

    def __add__(self, other: "Weight") -> "Weight":
        _check_len(self.fcoords, other.fcoords)
        return Weight(tuple(a + b for a, b in zip(self.fcoords, other.fcoords)))

    def __sub__(self, other: "Weight") -> "Weight":
        _check_len(self.fcoords, other.fcoords)
        return Weight(tuple(a - b for a, b in zip(self.fcoords, other.fcoords)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.fcoords))

    def as_ints(self) -> tuple[int, ...]:
        if not self.is_integral():
            raise ValueError(f"weight {self} is not integral")
        return tuple(int(x) for x in self.fcoords)

    def __str__(self) -> str:
        return "(" + ", ".join(str(x) for x in self.fcoords) + ")"


def _check_len(a: Sequence, b: Sequence) -> None:
    if len(a) != len(b):
        raise DimensionMismatch(f"length {len(a)} vs {len(b)}")


# -- Cartan matrices -----------------------------------------------------------

_RANK_OK = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 4,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


def _edges_of_type(letter: str, n: int) -> list[tuple[int, int]]:
    if letter == "D":
        return [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    if letter == "E":
        return [(0, 2)] + [(i, i + 1) for i in range(2, n - 1)] + [(1, 3)]
    return [(i, i + 1) for i in range(n - 1)]


def standard_cartan(letter: str, n: int) -> list[list[int]]:
    """Cartan matrix of a simple type, Bourbaki labelling, 0-based rows."""
    letter = letter.upper()
    if letter not in _RANK_OK or not _RANK_OK[letter](n):
        raise InvalidType(f"no simple type {letter}{n}")
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in _edges_of_type(letter, n):
        a[i][j] = a[j][i] = -1
    if letter == "B":
        a[n - 1][n - 2] = -2
    elif letter == "C":
        a[n - 2][n - 1] = -2
    elif letter == "F":
        a[2][1] = -2
    elif letter == "G":
        a[0][1] = -3
    return a


def _component_norms(cartan: list[list[int]]) -> list[Fraction]:
    """Squared lengths of the simple roots of a connected diagram, long = 2."""
    n = len(cartan)
    norms: list[Fraction | None] = [None] * n
    norms[0] = Fraction(1)
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for j in range(n):
            if j != i and cartan[i][j] and norms[j] is None:
                # (a_i, a_j) = a_ij |a_i|^2 / 2 = a_ji |a_j|^2 / 2
                norms[j] = norms[i] * cartan[i][j] / cartan[j][i]
                queue.append(j)
    if any(x is None for x in norms):
        raise ConsistencyError("component diagram is disconnected")
    top = max(norms)
    return [2 * x / top for x in norms]


def _invert(matrix: list[list[int]]) -> tuple[tuple[Fraction, ...], ...]:
    n = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


# -- the diagram -----------------------------------------------------------------

@dataclass(frozen=True)
class DynkinDiagram:
    """A semisimple type: ordered simple components plus derived data.

    Build instances with :func:`build_diagram`.  ``gram`` is the matrix of the
    invariant form on simple roots; :meth:`rescaled` produces a copy with one
    component's form multiplied by a positive rational (the Cartan matrix and
    therefore the root system are unchanged).
    """

    components: tuple[tuple[str, int], ...]
    cartan: tuple[tuple[int, ...], ...]
    gram: tuple[tuple[Fraction, ...], ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def name(self) -> str:
        return "x".join(f"{t}{n}" for t, n in self.components) or "0"

    def __str__(self) -> str:
        return self.name

    @cached_property
    def offsets(self) -> tuple[int, ...]:
        out, k = [], 0
        for _, n in self.components:
            out.append(k)
            k += n
        return tuple(out)

    def component_of(self, i: int) -> int:
        """Index of the simple component containing simple root ``i``."""
        for c, (off, (_, n)) in enumerate(zip(self.offsets, self.components)):
            if off <= i < off + n:
                return c
        raise IndexError(i)

    def component_indices(self, c: int) -> range:
        off = self.offsets[c]
        return range(off, off + self.components[c][1])

    @cached_property
    def norms(self) -> tuple[Fraction, ...]:
        """Squared lengths ``(alpha_i, alpha_i)`` of the simple roots."""
        return tuple(self.gram[i][i] for i in range(self.rank))

    @cached_property
    def half_norms(self) -> tuple[Fraction, ...]:
        return tuple(x / 2 for x in self.norms)

    @cached_property
    def int_half_norms(self) -> tuple[int, ...]:
        """``half_norms`` times their common denominator (same ratios, all integers)."""
        den = 1
        for h in self.half_norms:
            den = den * h.denominator // gcd(den, h.denominator)
        return tuple(int(h * den) for h in self.half_norms)

    @cached_property
    def edges(self) -> dict[tuple[int, int], int]:
        """``{(i, j): multiplicity}`` for ``i < j`` joined in the diagram."""
        out = {}
        for i in range(self.rank):
            for j in range(i + 1, self.rank):
                if self.cartan[i][j]:
                    out[(i, j)] = self.cartan[i][j] * self.cartan[j][i]
        return out

    @cached_property
    def neighbors(self) -> tuple[frozenset[int], ...]:
        nb: list[set[int]] = [set() for _ in range(self.rank)]
        for i, j in self.edges:
            nb[i].add(j)
            nb[j].add(i)
        return tuple(frozenset(s) for s in nb)

    def connected_components(self, nodes: Iterable[int]) -> list[frozenset[int]]:
        """Connected components of the induced subgraph, ordered by least element."""
        left = set(nodes)
        out = []
        while left:
            start = min(left)
            seen = {start}
            stack = [start]
            while stack:
                v = stack.pop()
                for w in self.neighbors[v]:
                    if w in left and w not in seen:
                        seen.add(w)
                        stack.append(w)
            left -= seen
            out.append(frozenset(seen))
        return out

    def is_connected(self, nodes: Iterable[int]) -> bool:
        return len(self.connected_components(nodes)) == 1

    @cached_property
    def inverse_cartan(self) -> tuple[tuple[Fraction, ...], ...]:
        return _invert([list(r) for r in self.cartan])

    @cached_property
    def positive_roots(self) -> tuple[Root, ...]:
        return _closure_roots(self)

    @cached_property
    def root_set(self) -> frozenset[Root]:
        return frozenset(self.positive_roots)

    def is_positive_root(self, r: Root) -> bool:
        return r in self.root_set

    @property
    def rho(self) -> Weight:
        return Weight.rho(self.rank)

    def simple_root(self, i: int) -> Root:
        return Root.simple(i, self.rank)

    def root_to_weight(self, r: Root) -> Weight:
        """Fundamental coordinates of a root-lattice element."""
        return Weight(tuple(sum(self.cartan[i][j] * r.coeffs[j] for j in range(self.rank))
                            for i in range(self.rank)))

    def weight_to_rootcoords(self, w: Weight) -> tuple[Fraction, ...]:
        inv = self.inverse_cartan
        return tuple(sum(inv[i][j] * w.fcoords[j] for j in range(self.rank))
                     for i in range(self.rank))

    def coroot_pairing(self, r: Root, i: int) -> int:
        """``2 (r, alpha_i) / (alpha_i, alpha_i)``."""
        return sum(self.cartan[i][j] * c for j, c in enumerate(r.coeffs))

    def highest_root(self, component: int = 0) -> Root:
        idx = set(self.component_indices(component))
        roots = [r for r in self.positive_roots if r.support <= idx]
        return max(roots, key=lambda r: r.height)

    def rescaled(self, component: int, factor) -> "DynkinDiagram":
        """Copy with the form on one simple component multiplied by ``factor``."""
        factor = Fraction(factor)
        if factor <= 0:
            raise ValueError("scale factor must be positive")
        idx = set(self.component_indices(component))
        gram = tuple(tuple(g * factor if (i in idx and j in idx) else g
                           for j, g in enumerate(row))
                     for i, row in enumerate(self.gram))
        return DynkinDiagram(self.components, self.cartan, gram)


def build_diagram(spec: Iterable[tuple[str, int]] | str) -> DynkinDiagram:
    """Assemble a Dynkin diagram from ``[(letter, rank), ...]`` or a type string."""
    if isinstance(spec, str):
        spec = parse_type_string(spec)
    comps = tuple((t.upper(), int(n)) for t, n in spec)
    if not comps:
        raise InvalidType("a diagram needs at least one simple component")
    rank = sum(n for _, n in comps)
    cartan = [[0] * rank for _ in range(rank)]
    gram = [[Fraction(0)] * rank for _ in range(rank)]
    off = 0
    for t, n in comps:
        block = standard_cartan(t, n)
        norms = _component_norms(block)
        for i in range(n):
            for j in range(n):
                cartan[off + i][off + j] = block[i][j]
                gram[off + i][off + j] = block[i][j] * norms[i] / 2
        off += n
    return DynkinDiagram(comps, tuple(map(tuple, cartan)), tuple(map(tuple, gram)))


_TYPE_RE = re.compile(r"\s*([A-Ga-g])\s*(\d+)\s*")


def parse_type_string(text: str) -> list[tuple[str, int]]:
    """Parse ``"A4"``, ``"A2xB2"`` or ``"A1 x A1"`` into ``[(letter, rank), ...]``."""
    out = []
    pos = 0
    if not text.strip():
        raise ParseError("empty diagram type", text, 0)
    while True:
        m = _TYPE_RE.match(text, pos)
        if not m:
            raise ParseError("expected a type letter A-G followed by a rank", text, pos)
        letter, n = m.group(1).upper(), int(m.group(2))
        if not _RANK_OK[letter](n):
            raise ParseError(f"no simple type {letter}{n}", text, m.start(1))
        out.append((letter, n))
        pos = m.end()
        if pos == len(text):
            return out
        if text[pos] not in "xX*":
            raise ParseError("expected 'x' between components", text, pos)
        pos += 1


def simple_types(max_rank: int, min_rank: int = 1,
                 simply_laced: bool = False) -> Iterator[tuple[str, int]]:
    """All simple types up to isomorphism with rank in range (C2 is listed as B2)."""
    for n in range(min_rank, max_rank + 1):
        for t in "ABCDEFG":
            if simply_laced and t in "BCFG":
                continue
            if t == "C" and n == 2:
                continue
            if _RANK_OK[t](n):
                yield (t, n)


def diagrams_up_to_rank(max_rank: int, simply_laced: bool = False) -> Iterator[DynkinDiagram]:
    """Every semisimple diagram (product of simple types) of total rank <= max_rank."""
    types = list(simple_types(max_rank, simply_laced=simply_laced))

    def rec(start: int, remaining: int, acc: list):
        if acc:
            yield list(acc)
        for k in range(start, len(types)):
            t = types[k]
            if t[1] <= remaining:
                acc.append(t)
                yield from rec(k, remaining - t[1], acc)
                acc.pop()

    for combo in rec(0, max_rank, []):
        yield build_diagram(combo)


# -- positive roots by string closure -------------------------------------------

def _closure_roots(d: DynkinDiagram) -> tuple[Root, ...]:
    rank = d.rank
    simple = [d.simple_root(i) for i in range(rank)]
    found = set(simple)
    layer = list(simple)
    while layer:
        nxt = set()
        for r in layer:
            for i in range(rank):
                # alpha_i-string through r: r - p a_i, ..., r + q a_i with p - q = <r, a_i^v>
                p = 0
                down = r - simple[i]
                while down in found:
                    p += 1
                    down = down - simple[i]
                q = p - d.coroot_pairing(r, i)
                if q > 0:
                    up = r + simple[i]
                    if up not in found:
                        nxt.add(up)
        found |= nxt
        layer = sorted(nxt)
    return tuple(sorted(found, key=lambda r: (r.height, r.coeffs)))


def positive_roots(diagram: DynkinDiagram) -> tuple[Root, ...]:
    """Positive roots ordered by height, then lexicographically."""
    return diagram.positive_roots


# -- the invariant form and Weyl-group computations ------------------------------

RootOrWeight = Union[Root, Weight]


def inner(diagram: DynkinDiagram, x: RootOrWeight, y: RootOrWeight) -> Fraction:
    """Exact value of the invariant scalar product."""
    for v in (x, y):
        if v.rank != diagram.rank:
            raise DimensionMismatch(f"vector of length {v.rank} on a rank {diagram.rank} diagram")
    if isinstance(x, Weight) and isinstance(y, Root):
        x, y = y, x
    if isinstance(x, Root) and isinstance(y, Root):
        g = diagram.gram
        return sum((Fraction(a) * g[i][j] * b
                    for i, a in enumerate(x.coeffs) if a
                    for j, b in enumerate(y.coeffs) if b), Fraction(0))
    if isinstance(x, Weight):
        x = diagram.weight_to_rootcoords(x)
    else:
        x = x.coeffs
    # (sum c_i a_i, w) = sum c_i w_i |a_i|^2 / 2
    return sum((Fraction(c) * w * h for c, w, h in zip(x, y.fcoords, diagram.half_norms)),
               Fraction(0))


def _pairing(diagram: DynkinDiagram, w: Weight, r: Root) -> Fraction:
    return sum((c * x * h for c, x, h in zip(r.coeffs, w.fcoords, diagram.half_norms) if c),
               Fraction(0))


def singular_witness(diagram: DynkinDiagram, w: Weight) -> Root | None:
    """First positive root orthogonal to ``w``, or None if ``w`` is regular."""
    if w.rank != diagram.rank:
        raise DimensionMismatch(f"weight of length {w.rank} on a rank {diagram.rank} diagram")
    for r in diagram.positive_roots:
        if _pairing(diagram, w, r) == 0:
            return r
    return None


def is_singular(diagram: DynkinDiagram, w: Weight) -> bool:
    return singular_witness(diagram, w) is not None


def index(diagram: DynkinDiagram, w: Weight) -> int:
    """Number of positive roots pairing negatively with a regular weight."""
    if w.rank != diagram.rank:
        raise DimensionMismatch(f"weight of length {w.rank} on a rank {diagram.rank} diagram")
    count = 0
    for r in diagram.positive_roots:
        v = _pairing(diagram, w, r)
        if v == 0:
            raise SingularWeight(f"{w} is orthogonal to {r}", witness=r)
        if v < 0:
            count += 1
    return count


def reflect(diagram: DynkinDiagram, w: Weight, i: int) -> Weight:
    """Simple reflection ``s_i`` in fundamental coordinates."""
    li = w.fcoords[i]
    return Weight(tuple(x - li * diagram.cartan[j][i] for j, x in enumerate(w.fcoords)))


def dominantize(diagram: DynkinDiagram, w: Weight) -> tuple[Weight, int]:
    """Dominant element of the Weyl orbit of a regular weight, and the number of
    simple reflections used (always reflecting at the lowest negative coordinate)."""
    witness = singular_witness(diagram, w)
    if witness is not None:
        raise SingularWeight(f"{w} is orthogonal to {witness}", witness=witness)
    limit = len(diagram.positive_roots)
    steps = 0
    while True:
        neg = next((i for i, x in enumerate(w.fcoords) if x < 0), None)
        if neg is None:
            return w, steps
        w = reflect(diagram, w, neg)
        steps += 1
        if steps > limit:
            raise ConsistencyError("dominantize exceeded the number of positive roots")


def I_of(diagram: DynkinDiagram, lam: Weight) -> Weight:
    """``w(lam + rho) - rho`` for the Weyl element making it dominant."""
    shifted = lam + diagram.rho
    witness = singular_witness(diagram, shifted)
    if witness is not None:
        raise SingularShiftedWeight(f"{lam} + rho is orthogonal to {witness}", witness=witness)
    dom, _ = dominantize(diagram, shifted)
    return dom - diagram.rho


def find_root_chain(diagram: DynkinDiagram, lower: Root, upper: Root) -> list[Root]:
    """Chain of positive roots from ``lower`` to ``upper`` whose consecutive
    differences are simple roots lying in the support of ``upper - lower``."""
    if not (diagram.is_positive_root(lower) and diagram.is_positive_root(upper)):
        raise NotComparable("both ends must be positive roots")
    if not lower.leq(upper):
        raise NotComparable(f"{lower} is not below {upper}")
    bottom, top = [lower], [upper]
    lo, hi = lower, upper
    while lo != hi:
        diff = hi - lo
        step = None
        for i in sorted(diff.support):
            a = diagram.simple_root(i)
            if inner(diagram, diff, a) <= 0:
                continue
            if hi - a != lo and diagram.is_positive_root(hi - a):
                hi = hi - a
                top.append(hi)
                step = i
                break
            if diagram.is_positive_root(lo + a):
                lo = lo + a
                if lo != hi:
                    bottom.append(lo)
                step = i
                break
        if step is None:
            raise ConsistencyError(f"no chain step from {lo} to {hi}")
    return bottom + top[::-1][1:] if bottom[-1] == top[-1] else bottom + top[::-1]
