import itertools
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bottkit.bott import ALL_ZERO, CohomologyResult, bott_cohomology, line_bundle_table, weyl_dimension
from bottkit.errors import (
    DimensionMismatch,
    IndexOutOfRange,
    NonIntegralWeight,
    NotDominant,
    NotSigmaDominant,
)
from bottkit.rootsys import Weight, build_diagram, index, inner, is_singular
from fractions import Fraction


def fundamental(rank, k, m=1):
    coords = [0] * rank
    coords[k] = m
    return Weight(tuple(coords))


# -- bott_cohomology examples ---------------------------------------------------------

def test_p1_examples(diagram):
    a1 = diagram("A1")
    assert bott_cohomology(a1, set(), Weight.of(-1)) == ALL_ZERO
    assert bott_cohomology(a1, set(), Weight.of(0)) == CohomologyResult(0, Weight.of(0), 1)
    assert bott_cohomology(a1, set(), Weight.of(-2)) == CohomologyResult(1, Weight.of(0), 1)


def test_result_accessors():
    r = CohomologyResult(1, Weight.of(1), 2)
    assert r.kind == "Concentrated" and not r.all_zero
    assert (r.h(0), r.h(1), r.h(2)) == (0, 2, 0)
    assert ALL_ZERO.kind == "AllZero" and ALL_ZERO.h(0) == 0
    assert str(ALL_ZERO) == "AllZero"


def test_a2_regression_fixture(diagram):
    # (1, -3) + rho = (2, -2) pairs to zero with a1 + a2, so the shifted weight is singular
    d = diagram("A2")
    assert bott_cohomology(d, {0}, Weight.of(1, -3)) == ALL_ZERO


def test_a2_concentrated_fixture(diagram):
    d = diagram("A2")
    # (1, -4) + rho = (2, -3) -> s2 -> (-1, 3) -> s1 -> (1, 2); index 2
    res = bott_cohomology(d, {0}, Weight.of(1, -4))
    assert res == CohomologyResult(2, Weight.of(0, 1), 3)


def test_trivial_bundle_everywhere():
    for name in ["A4", "B3", "G2", "D4", "A1xC3"]:
        d = build_diagram(name)
        for sigma in [set(), {0}, set(range(d.rank))]:
            assert bott_cohomology(d, sigma, Weight.zero(d.rank)) == CohomologyResult(0, Weight.zero(d.rank), 1)


def test_errors(diagram):
    a2 = diagram("A2")
    with pytest.raises(NotSigmaDominant) as exc:
        bott_cohomology(a2, {1}, Weight.of(0, -1))
    assert exc.value.index == 1
    with pytest.raises(NonIntegralWeight):
        bott_cohomology(a2, set(), Weight.of(Fraction(1, 2), 0))
    with pytest.raises(DimensionMismatch):
        bott_cohomology(a2, set(), Weight.of(1))
    with pytest.raises(IndexOutOfRange):
        bott_cohomology(a2, {2}, Weight.of(0, 0))


# -- weyl_dimension -------------------------------------------------------------------

def test_weyl_dimension_rank_one():
    a1 = build_diagram("A1")
    for m in range(20):
        assert weyl_dimension(a1, Weight.of(m)) == m + 1


def test_weyl_dimension_a2_closed_form():
    d = build_diagram("A2")
    for a, b in itertools.product(range(6), repeat=2):
        assert weyl_dimension(d, Weight.of(a, b)) == (a + 1) * (b + 1) * (a + b + 2) // 2


@pytest.mark.parametrize("n", range(1, 8))
def test_weyl_dimension_exterior_powers(n):
    d = build_diagram([("A", n)])
    for k in range(n):
        assert weyl_dimension(d, fundamental(n, k)) == comb(n + 1, k + 1)


@pytest.mark.parametrize("n", range(2, 7))
def test_weyl_dimension_classical_vectors(n):
    assert weyl_dimension(build_diagram([("B", n)]), fundamental(n, 0)) == 2 * n + 1
    assert weyl_dimension(build_diagram([("C", n)]), fundamental(n, 0)) == 2 * n
    # spin representation of so(2n+1)
    assert weyl_dimension(build_diagram([("B", n)]), fundamental(n, n - 1)) == 2 ** n


def test_weyl_dimension_exceptional_fundamentals():
    g2 = build_diagram("G2")
    assert sorted(weyl_dimension(g2, fundamental(2, k)) for k in range(2)) == [7, 14]
    f4 = build_diagram("F4")
    assert sorted(weyl_dimension(f4, fundamental(4, k)) for k in range(4)) == [26, 52, 273, 1274]
    e8 = build_diagram("E8")
    assert min(weyl_dimension(e8, fundamental(8, k)) for k in range(8)) == 248


def test_weyl_dimension_adjoint_counts_roots():
    for name in ["A3", "B4", "C3", "D5", "G2", "F4", "E6", "E7", "E8"]:
        d = build_diagram(name)
        top = d.root_to_weight(d.highest_root())
        assert weyl_dimension(d, top) == d.rank + 2 * len(d.positive_roots)


def test_weyl_dimension_big_integers():
    d = build_diagram("E8")
    value = weyl_dimension(d, Weight(tuple([30] * 8)))
    assert value > 2 ** 64
    assert value == 31 ** 120


def test_weyl_dimension_rejects_non_dominant():
    with pytest.raises(NotDominant):
        weyl_dimension(build_diagram("A2"), Weight.of(-1, 0))


# -- line bundle tables -----------------------------------------------------------------

def test_p1_table():
    rows = line_bundle_table(build_diagram("A1"), set(), -3, 1)
    assert [lam.as_ints() for lam, _ in rows] == [(-3,), (-2,), (-1,), (0,), (1,)]
    assert [r.degree for _, r in rows] == [1, 1, None, 0, 0]
    assert [r.dimension for _, r in rows] == [2, 1, None, 1, 2]


def test_table_keeps_sigma_coordinates_zero():
    rows = line_bundle_table(build_diagram("A3"), {1}, -2, 2)
    assert len(rows) == 25
    assert all(lam.fcoords[1] == 0 for lam, _ in rows)
    assert [lam.as_ints() for lam, _ in rows] == sorted(lam.as_ints() for lam, _ in rows)


# -- properties ---------------------------------------------------------------------------

BOX_TYPES = ["A1", "A2", "B2", "G2", "A3", "B3", "C3", "A1xA1", "A1xB2"]


@pytest.mark.parametrize("name", BOX_TYPES)
def test_index_zero_iff_dominant_on_box(name):
    d = build_diagram(name)
    for coords in itertools.product(range(-4, 5), repeat=d.rank):
        lam = Weight(coords)
        shifted = lam + d.rho
        if is_singular(d, shifted):
            continue
        assert (index(d, shifted) == 0) == lam.is_dominant()
        if lam.is_dominant():
            res = bott_cohomology(d, set(), lam)
            assert res.degree == 0 and res.highest_weight == lam


@settings(max_examples=300, deadline=None)
@given(name=st.sampled_from(BOX_TYPES + ["D4", "F4"]),
       coords=st.lists(st.integers(-7, 7), min_size=4, max_size=4),
       sigma_bits=st.integers(0, 15))
def test_bott_result_properties(name, coords, sigma_bits):
    d = build_diagram(name)
    sigma = {i for i in range(d.rank) if sigma_bits >> i & 1}
    lam = Weight(tuple(abs(c) if i in sigma else c for i, c in enumerate(coords[: d.rank])))
    res = bott_cohomology(d, sigma, lam)
    shifted = lam + d.rho
    assert res.all_zero == is_singular(d, shifted)
    if res.all_zero:
        assert (res.degree, res.highest_weight, res.dimension) == (None, None, None)
        return
    top = res.highest_weight
    assert top.is_dominant()
    assert res.dimension == weyl_dimension(d, top) >= 1
    assert inner(d, top + d.rho, top + d.rho) == inner(d, shifted, shifted)
    assert res.degree == index(d, shifted)
    assert res.degree <= sum(1 for r in d.positive_roots if not r.support <= sigma)


def test_package_doctest():
    import doctest

    import bottkit

    assert doctest.testmod(bottkit).failed == 0
