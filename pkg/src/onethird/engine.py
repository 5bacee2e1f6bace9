"""Closed formulas: MacMahon's tiling count, the triple-sum containment
probability, the 1/3 normalisation, and the balanced single sum for the
family (0,0,1,0,0) together with its first-order recurrence.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError
from .exact import RationalFunction, binomial, eval_ratfunc, factorial, pochhammer
from .hexagon import FamilyOffsets, HexagonSpec, RhombusPos, in_theorem_domain, instantiate

ONE_THIRD = Fraction(1, 3)


@dataclass(frozen=True)
class ProbabilityReport:
    hexagon: HexagonSpec
    position: RhombusPos
    probability: Fraction


def total_tilings(hex: HexagonSpec) -> int:
    """Number of rhombus tilings of H(a,b,c) (plane partitions in an a x b x c box)."""
    num = den = 1
    for i in range(1, hex.a + 1):
        for j in range(1, hex.b + 1):
            for k in range(1, hex.c + 1):
                num *= i + j + k - 1
                den *= i + j + k - 2
    q, r = divmod(num, den)
    assert r == 0, f"MacMahon product for {hex} is not an integer"
    return q


def contains_prob(hex: HexagonSpec, pos: RhombusPos) -> Fraction:
    """Probability that a uniformly random tiling of ``hex`` contains the
    horizontal rhombus with bottom-most vertex ``pos``.

    Raises DomainError unless ``0 <= x <= a+b-1`` and ``1 <= y <= a+c-1``.
    """
    if not in_theorem_domain(hex, pos):
        raise DomainError(f"position ({pos}) outside the valid range for hexagon {hex}")
    a, b, c = hex.a, hex.b, hex.c
    x, y = pos.x, pos.y

    # factors that depend on a single summation index
    by_i = {
        i: binomial(c + i + x - y - 2, x - 1) * Fraction(pochhammer(c + 1, i - 1), factorial(i - 1))
        for i in range(1, a + 1)
    }
    by_s = {
        s: binomial(b + s - x + y - 1, b + s - x - 1)
        * Fraction(pochhammer(b + 1, s - 1), pochhammer(b + c + 1, s - 1))
        for s in range(1, a + 1)
    }

    total = Fraction(0)
    for i in range(1, a + 1):
        fi = by_i[i]
        if fi == 0:
            continue
        # 1/(j-i)! vanishes for j < i
        for j in range(i, a + 1):
            fij = fi * Fraction(pochhammer(b + c + i, j - i), factorial(j - i))
            for s in range(1, j + 1):
                fs = by_s[s]
                if fs == 0:
                    continue
                term = binomial(j - 1, s - 1) * fij * fs
                total += -term if (i + s) % 2 else term

    p = Fraction(factorial(c), pochhammer(b + 1, c)) * total
    if not 0 <= p <= 1:
        raise AssertionError(f"probability {p} for {hex} at ({pos}) not in [0, 1]")
    return p


def probability_report(hex: HexagonSpec, pos: RhombusPos) -> ProbabilityReport:
    return ProbabilityReport(hex, pos, contains_prob(hex, pos))


def r_factor(n: int) -> Fraction:
    """``C(2n,n)^3 / C(6n+2,3n+1)``, the factor multiplying f(n)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return Fraction(binomial(2 * n, n) ** 3, binomial(6 * n + 2, 3 * n + 1))


def g_value(offsets: FamilyOffsets, n: int) -> Fraction:
    """``(p(n) - 1/3) / r_factor(n)`` for the family instance at ``n``."""
    hex, pos = instantiate(offsets, n)
    return (contains_prob(hex, pos) - ONE_THIRD) / r_factor(n)


def conjecture_prob(f: RationalFunction, n: int) -> Fraction:
    return ONE_THIRD + eval_ratfunc(f, n) * r_factor(n)


def single_sum_B(n: int) -> Fraction:
    """Single-sum expression for the probability in H(2n,2n,2n+1) at (2n,2n)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    pre = (
        Fraction(2 * n * factorial(2 * n + 1), pochhammer(2 * n + 1, 4 * n))
        * binomial(2 * n, n)
        * binomial(3 * n, n)
        * 2 ** (2 * n - 2)
    )
    half = Fraction(1, 2)
    total = Fraction(0)
    for k in range(n):
        m = n - k - 1
        total += (
            pochhammer(n + Fraction(3, 2), k)
            * pochhammer(2 * n + 1, k)
            * pochhammer(n + k + 2, m)
            * pochhammer(2 * n + k + 2, m)
            * pochhammer(half, m)
            / factorial(m)
        )
    return pre * total


def recurrence_rhs_332(n: int) -> Fraction:
    """Closed form of ``single_sum_B(n+1) - single_sum_B(n)``."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    num = (36 * n**3 + 60 * n**2 + 29 * n + 3) * factorial(3 * n - 1) ** 2 * factorial(2 * n) ** 3
    den = (
        2
        * n**2
        * (n + 1) ** 2
        * (6 * n + 1)
        * (6 * n + 5)
        * factorial(n - 1) ** 3
        * factorial(6 * n - 1)
        * factorial(n) ** 3
    )
    return Fraction(num, den)


@dataclass(frozen=True)
class RecurrenceRow:
    n: int
    rhs: Fraction
    sum_step: Fraction
    conj_step: Fraction

    @property
    def sum_ok(self) -> bool:
        return self.sum_step == self.rhs

    @property
    def conj_ok(self) -> bool:
        return self.conj_step == self.rhs


@dataclass
class RecurrenceReport:
    rows: list[RecurrenceRow] = field(default_factory=list)
    initial_sum: Fraction = Fraction(0)
    initial_conj: Fraction = Fraction(0)

    @property
    def initial_agrees(self) -> bool:
        return self.initial_sum == self.initial_conj

    @property
    def passed(self) -> bool:
        return self.initial_agrees and all(r.sum_ok and r.conj_ok for r in self.rows)


def check_recurrence_332(n_max: int, f: RationalFunction | None = None) -> RecurrenceReport:
    """Check the single-sum recurrence for n in [1, n_max-1].

    Both the single sum and ``1/3 + f(n) r_factor(n)`` are tested against the
    closed-form right-hand side; ``f`` defaults to the catalogued formula for
    the family (0,0,1,0,0). Failures are recorded, never raised.
    """
    if f is None:
        from .catalog import lookup

        f = lookup(FamilyOffsets(0, 0, 1, 0, 0)).f
    report = RecurrenceReport(initial_sum=single_sum_B(1), initial_conj=conjecture_prob(f, 1))
    if n_max < 2:
        return report
    sums = {1: report.initial_sum}
    conj = {1: report.initial_conj}
    for n in range(1, n_max):
        sums[n + 1] = single_sum_B(n + 1)
        conj[n + 1] = conjecture_prob(f, n + 1)
        report.rows.append(
            RecurrenceRow(
                n=n,
                rhs=recurrence_rhs_332(n),
                sum_step=sums[n + 1] - sums[n],
                conj_step=conj[n + 1] - conj[n],
            )
        )
    return report
