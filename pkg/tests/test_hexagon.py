from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from onethird.errors import DegenerateHexagon, OutOfRange
from onethird.hexagon import (
    FamilyOffsets,
    HexagonSpec,
    RhombusPos,
    in_theorem_domain,
    instantiate,
    on_symmetry_axis,
    symmetric_complement,
)


@pytest.mark.parametrize("offsets,n,hexagon,pos", [
    ((1, 1, 1, 1, 1), 1, (3, 3, 3), (3, 3)),
    ((2, 1, 0, 3, -1), 1, (4, 3, 2), (5, 1)),
    ((0, 0, 0, 0, 0), 1, (2, 2, 2), (2, 2)),
])
def test_instantiate(offsets, n, hexagon, pos):
    h, p = instantiate(FamilyOffsets(*offsets), n)
    assert h == HexagonSpec(*hexagon)
    assert p == RhombusPos(*pos)


def test_instantiate_degenerate():
    with pytest.raises(DegenerateHexagon):
        instantiate(FamilyOffsets(-2, 0, 0, 0, 0), 1)
    with pytest.raises(DegenerateHexagon):
        HexagonSpec(0, 1, 1)


@given(st.tuples(*[st.integers(-3, 3)] * 5), st.integers(2, 30), st.integers(2, 30))
def test_instantiate_injective(offs, n1, n2):
    f = FamilyOffsets(*offs)
    if n1 != n2:
        assert instantiate(f, n1) != instantiate(f, n2)


def test_formula_domain():
    assert in_theorem_domain(HexagonSpec(3, 3, 3), RhombusPos(3, 3))
    assert not in_theorem_domain(HexagonSpec(3, 3, 3), RhombusPos(0, 0))
    assert in_theorem_domain(HexagonSpec(4, 3, 2), RhombusPos(5, 1))
    assert in_theorem_domain(HexagonSpec(4, 3, 2), RhombusPos(6, 5))
    assert not in_theorem_domain(HexagonSpec(4, 3, 2), RhombusPos(7, 1))
    assert not in_theorem_domain(HexagonSpec(4, 3, 2), RhombusPos(1, 6))


@given(st.integers(1, 6), st.integers(1, 6), st.integers(1, 6), st.integers(-3, 12), st.integers(-3, 12))
def test_formula_domain_reflected_x(a, b, c, x, y):
    h = HexagonSpec(a, b, c)
    mirrored = RhombusPos(a + b - 1 - x, y)
    assert in_theorem_domain(h, RhombusPos(x, y)) == in_theorem_domain(h, mirrored)


@pytest.mark.parametrize("p,q", [(1, 0), (Fraction(1, 3), Fraction(1, 3)), (Fraction(3, 10), Fraction(7, 20))])
def test_symmetric_complement(p, q):
    assert symmetric_complement(p) == q


@given(st.fractions(min_value=0, max_value=1, max_denominator=1000))
def test_symmetric_complement_sums_to_one(p):
    assert p + 2 * symmetric_complement(p) == 1


def test_symmetric_complement_range():
    with pytest.raises(OutOfRange):
        symmetric_complement(Fraction(-1, 5))
    with pytest.raises(OutOfRange):
        symmetric_complement(Fraction(6, 5))


def test_symmetry_axis():
    assert on_symmetry_axis(HexagonSpec(4, 4, 5), RhombusPos(4, 4))
    assert not on_symmetry_axis(HexagonSpec(3, 3, 3), RhombusPos(3, 3))
    assert not on_symmetry_axis(HexagonSpec(4, 3, 5), RhombusPos(4, 4))


def test_text_forms():
    assert HexagonSpec.parse("4,3,2") == HexagonSpec(4, 3, 2)
    assert str(RhombusPos.parse(" 5, -1")) == "5,-1"
    assert FamilyOffsets.parse("2,1,0,3,-1").as_tuple() == (2, 1, 0, 3, -1)
    with pytest.raises(ValueError):
        HexagonSpec.parse("1,2")
    with pytest.raises(ValueError):
        RhombusPos.parse("1,x")


def test_normalize_c():
    f = FamilyOffsets(4, 3, 5, 3, 2)
    g, k = f.normalize_c()
    assert g == FamilyOffsets(0, -1, 1, -1, -2) and k == -2
    assert g.shifted(-k) == f
    # same instances under reindexing
    assert instantiate(g, 5) == instantiate(f, 3)
