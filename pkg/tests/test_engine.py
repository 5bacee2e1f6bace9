from fractions import Fraction
from itertools import permutations, product

import pytest

from conftest import brute_partitions, brute_prob
from onethird.catalog import lookup
from onethird.engine import (
    check_recurrence_332,
    conjecture_prob,
    contains_prob,
    g_value,
    r_factor,
    recurrence_rhs_332,
    single_sum_B,
    total_tilings,
)
from onethird.errors import DomainError, PoleError
from onethird.exact import Polynomial, RationalFunction, binomial
from onethird.hexagon import FamilyOffsets, HexagonSpec, RhombusPos, instantiate

n = Polynomial.n()
F00100 = RationalFunction(-2 * (6 * n + 1), 3 * (3 * n + 1))


@pytest.mark.parametrize("abc", [(1, 1, 1), (2, 2, 2), (1, 2, 3), (2, 2, 3), (2, 3, 2), (1, 1, 4)])
def test_total_tilings_brute_force(abc):
    assert total_tilings(HexagonSpec(*abc)) == len(brute_partitions(*abc))


def test_total_tilings_values():
    assert total_tilings(HexagonSpec(1, 1, 1)) == 2
    assert total_tilings(HexagonSpec(2, 2, 2)) == 20
    assert total_tilings(HexagonSpec(1, 2, 3)) == 10
    assert total_tilings(HexagonSpec(3, 3, 3)) == 980


def test_total_tilings_symmetric():
    for abc in product(range(1, 5), repeat=3):
        values = {total_tilings(HexagonSpec(*p)) for p in permutations(abc)}
        assert len(values) == 1


def test_contains_prob_examples():
    assert contains_prob(HexagonSpec(3, 3, 3), RhombusPos(3, 3)) == Fraction(13, 35)
    assert contains_prob(HexagonSpec(3, 3, 3), RhombusPos(3, 3)) - Fraction(1, 3) == Fraction(4, 105)
    assert contains_prob(HexagonSpec(4, 3, 2), RhombusPos(5, 1)) == 0
    assert contains_prob(HexagonSpec(2, 2, 2), RhombusPos(2, 2)) == Fraction(3, 10)


def test_contains_prob_small_exhaustive():
    for a, b, c in product(range(1, 3), repeat=3):
        for x, y in product(range(0, a + b), range(1, a + c)):
            assert contains_prob(HexagonSpec(a, b, c), RhombusPos(x, y)) == brute_prob(a, b, c, x, y)


def test_contains_prob_domain():
    with pytest.raises(DomainError):
        contains_prob(HexagonSpec(2, 2, 2), RhombusPos(0, 0))
    with pytest.raises(DomainError):
        contains_prob(HexagonSpec(2, 2, 2), RhombusPos(4, 1))
    # x = 0 is admitted and evaluates to 0
    h = HexagonSpec(3, 2, 2)
    assert all(contains_prob(h, RhombusPos(0, y)) == 0 for y in range(1, 5))


def test_contains_prob_in_unit_interval():
    for a, b, c in product(range(1, 5), repeat=3):
        h = HexagonSpec(a, b, c)
        for x, y in product(range(0, a + b), range(1, a + c)):
            assert 0 <= contains_prob(h, RhombusPos(x, y)) <= 1


def test_r_factor():
    assert r_factor(1) == Fraction(4, 35)
    assert r_factor(2) == Fraction(9, 143)
    assert r_factor(3) == Fraction(2000, 46189)
    assert r_factor(3) / 3 == Fraction(2000, 138567)


def test_r_factor_matches_abstract_form():
    # C(6n+2,3n+1) = C(6n,3n) (6n+1)(6n+2) / (3n+1)^2
    for k in range(1, 15):
        alt = Fraction(binomial(2 * k, k) ** 3, binomial(6 * k, 3 * k))
        assert r_factor(k) == alt * Fraction((3 * k + 1) ** 2, (6 * k + 1) * (6 * k + 2))


def test_g_value():
    assert g_value(FamilyOffsets(1, 1, 1, 1, 1), 1) == Fraction(1, 3)
    assert g_value(FamilyOffsets(2, 1, 0, 3, -1), 1) == Fraction(-35, 12)
    assert g_value(FamilyOffsets(2, 1, 0, 3, -1), 2) == Fraction(43, 54)


def test_conjecture_prob():
    f0 = RationalFunction(-(6 * n + 1), 6 * (3 * n + 1))
    assert conjecture_prob(f0, 1) == Fraction(3, 10)
    assert conjecture_prob(f0, 1) == contains_prob(HexagonSpec(2, 2, 2), RhombusPos(2, 2))
    assert all(conjecture_prob(RationalFunction.constant(0), k) == Fraction(1, 3) for k in range(1, 6))
    assert conjecture_prob(RationalFunction.constant(Fraction(-2, 3)), 1) == Fraction(9, 35)
    with pytest.raises(PoleError):
        conjecture_prob(RationalFunction(Polynomial((1,)), n - 2), 2)


def test_single_sum_values():
    assert single_sum_B(1) == Fraction(1, 5)
    assert single_sum_B(1) == brute_prob(2, 2, 3, 2, 2)
    assert single_sum_B(2) == Fraction(767, 3003)
    assert single_sum_B(2) == Fraction(1, 3) - Fraction(26, 21) * Fraction(9, 143)


@pytest.mark.parametrize("k", range(1, 7))
def test_single_sum_matches_triple_sum(k):
    assert single_sum_B(k) == contains_prob(*instantiate(FamilyOffsets(0, 0, 1, 0, 0), k))


def test_recurrence_rhs():
    assert recurrence_rhs_332(1) == Fraction(64, 1155)
    assert recurrence_rhs_332(1) == single_sum_B(2) - single_sum_B(1)
    assert recurrence_rhs_332(2) == single_sum_B(3) - single_sum_B(2)
    assert all(recurrence_rhs_332(k) > 0 for k in range(1, 20))


def test_check_recurrence():
    rep = check_recurrence_332(2, F00100)
    assert [r.n for r in rep.rows] == [1] and rep.passed
    rep = check_recurrence_332(10)
    assert len(rep.rows) == 9 and rep.passed
    assert rep.initial_sum == rep.initial_conj == Fraction(1, 5)
    assert check_recurrence_332(1).rows == []


def test_check_recurrence_reports_failure():
    wrong = RationalFunction(-(6 * n + 1), 6 * (3 * n + 1))
    rep = check_recurrence_332(4, wrong)
    assert not rep.passed
    assert all(r.sum_ok for r in rep.rows)
    assert not rep.initial_agrees


def test_catalog_formula_used_by_default():
    assert lookup(FamilyOffsets(0, 0, 1, 0, 0)).f == F00100


def _reflected_binomial(m, k):
    # the other common convention: nonzero for negative integers k <= m < 0
    if m < 0 and k < 0:
        return (-1) ** (m - k) * binomial(-k - 1, m - k) if k <= m else 0
    return binomial(m, k)


def test_binomial_convention_matters(monkeypatch):
    # Both-negative arguments do occur in the domain; only the falling-factorial
    # rule (zero for k < 0) agrees with brute force there.
    import onethird.engine as engine

    cases = [(1, 1, 1, 0, 1), (2, 2, 2, 0, 2), (3, 1, 1, 3, 1), (3, 2, 2, 4, 1)]
    for a, b, c, x, y in cases:
        assert contains_prob(HexagonSpec(a, b, c), RhombusPos(x, y)) == brute_prob(a, b, c, x, y)
    monkeypatch.setattr(engine, "binomial", _reflected_binomial)
    for a, b, c, x, y in cases:
        assert contains_prob(HexagonSpec(a, b, c), RhombusPos(x, y)) != brute_prob(a, b, c, x, y)
