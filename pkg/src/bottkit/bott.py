"""Bott's theorem for irreducible homogeneous bundles on G/P.

For an irreducible representation of P with highest weight ``L`` the whole
cohomology either vanishes (``L + rho`` singular) or is concentrated in the
single degree ``index(L + rho)``, where it is the irreducible G-module with
highest weight ``I(L)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import (
    ConsistencyError,
    DimensionMismatch,
    IndexOutOfRange,
    NonIntegralWeight,
    NotDominant,
    NotSigmaDominant,
)
from .rootsys import DynkinDiagram, Weight, dominantize, singular_witness

__all__ = [
    "CohomologyResult",
    "bott_cohomology",
    "weyl_dimension",
    "line_bundle_table",
    "check_sigma",
    "check_highest_weight",
    "dim_flag_manifold",
]


@dataclass(frozen=True)
class CohomologyResult:
    """``degree is None`` means all cohomology vanishes."""

    degree: int | None = None
    highest_weight: Weight | None = None
    dimension: int | None = None

    @property
    def all_zero(self) -> bool:
        return self.degree is None

    @property
    def kind(self) -> str:
        return "AllZero" if self.all_zero else "Concentrated"

    def h(self, q: int) -> int:
        """Dimension of the degree-``q`` cohomology."""
        return self.dimension if q == self.degree else 0

    def __str__(self) -> str:
        if self.all_zero:
            return "AllZero"
        return f"H^{self.degree} = V{self.highest_weight} (dim {self.dimension})"


ALL_ZERO = CohomologyResult()


def check_sigma(diagram: DynkinDiagram, sigma: Iterable[int]) -> frozenset[int]:
    sigma = frozenset(sigma)
    bad = [i for i in sigma if not 0 <= i < diagram.rank]
    if bad:
        raise IndexOutOfRange(f"simple root index {bad[0]} outside 0..{diagram.rank - 1}")
    return sigma


def check_highest_weight(diagram: DynkinDiagram, sigma: frozenset[int], lam: Weight) -> None:
    if lam.rank != diagram.rank:
        raise DimensionMismatch(f"weight of length {lam.rank} on a rank {diagram.rank} diagram")
    if not lam.is_integral():
        raise NonIntegralWeight(f"{lam} has non-integral fundamental coordinates")
    for i in sorted(sigma):
        if lam.fcoords[i] < 0:
            raise NotSigmaDominant(
                f"coordinate {i} of {lam} is negative but alpha_{i + 1} lies in Sigma", index=i)


def dim_flag_manifold(diagram: DynkinDiagram, sigma: Iterable[int]) -> int:
    """Number of positive roots not spanned by ``sigma``."""
    sigma = frozenset(sigma)
    return sum(1 for r in diagram.positive_roots if not r.support <= sigma)


def weyl_dimension(diagram: DynkinDiagram, lam: Weight) -> int:
    """Dimension of the irreducible G-module with dominant highest weight ``lam``."""
    if lam.rank != diagram.rank:
        raise DimensionMismatch(f"weight of length {lam.rank} on a rank {diagram.rank} diagram")
    if not lam.is_dominant():
        raise NotDominant(f"{lam} is not dominant")
    h = diagram.int_half_norms
    x = [int(v) + 1 for v in lam.fcoords] if lam.is_integral() else [v + 1 for v in lam.fcoords]
    num, den = 1, 1
    for r in diagram.positive_roots:
        # (lam + rho, r) / (rho, r), both expanded over the simple roots
        num *= sum(c * xi * hi for c, xi, hi in zip(r.coeffs, x, h) if c)
        den *= sum(c * hi for c, hi in zip(r.coeffs, h) if c)
    value = Fraction(num) / den
    if value.denominator != 1:
        raise ConsistencyError(f"Weyl dimension of {lam} is not an integer: {value}")
    return int(value)


def bott_cohomology(diagram: DynkinDiagram, sigma: Iterable[int], lam: Weight) -> CohomologyResult:
    """Cohomology of the homogeneous bundle of the irreducible P-module with highest weight ``lam``."""
    sigma = check_sigma(diagram, sigma)
    check_highest_weight(diagram, sigma, lam)
    shifted = lam + diagram.rho
    if singular_witness(diagram, shifted) is not None:
        return ALL_ZERO
    dom, degree = dominantize(diagram, shifted)
    cap = dim_flag_manifold(diagram, sigma)
    if degree > cap:
        raise ConsistencyError(f"degree {degree} exceeds dim G/P = {cap}")
    top = dom - diagram.rho
    return CohomologyResult(degree, top, weyl_dimension(diagram, top))


def line_bundle_table(diagram: DynkinDiagram, sigma: Iterable[int],
                      lo: int, hi: int) -> list[tuple[Weight, CohomologyResult]]:
    """Bott's theorem on every character of P with coordinates in ``[lo, hi]``.

    Characters vanish on the ``sigma`` coordinates; the remaining coordinates
    run over the box in lexicographic order.
    """
    sigma = check_sigma(diagram, sigma)
    free = [i for i in range(diagram.rank) if i not in sigma]
    out = []
    for values in itertools.product(range(lo, hi + 1), repeat=len(free)):
        coords = [0] * diagram.rank
        for i, v in zip(free, values):
            coords[i] = v
        lam = Weight(tuple(coords))
        out.append((lam, bott_cohomology(diagram, sigma, lam)))
    return out
