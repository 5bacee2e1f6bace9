"""Guess a rational function from exact sequence values.

For each degree split (deg P, deg Q) the unknown coefficients solve the
homogeneous linear system ``P(n_k) - v_k Q(n_k) = 0``. The last ``surplus``
points are held out of the system and only used to confirm a candidate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .engine import g_value
from .errors import DegenerateSystem, NoFit
from .exact import Polynomial, RationalFunction, eval_poly, solve_nullspace
from .hexagon import FamilyOffsets

DEFAULT_SURPLUS = 3


@dataclass(frozen=True)
class SequencePoint:
    n: int
    value: Fraction


@dataclass(frozen=True)
class GuessResult:
    f: RationalFunction
    valid_from: int
    dropped: int
    surplus_confirmed: int


def _as_points(points: Iterable) -> list[SequencePoint]:
    out = []
    for p in points:
        if not isinstance(p, SequencePoint):
            n, v = p
            p = SequencePoint(int(n), Fraction(v))
        out.append(p)
    for prev, cur in zip(out, out[1:]):
        if cur.n <= prev.n:
            raise ValueError("sequence points must have strictly increasing n")
    return out


def _reproduces(f: RationalFunction, points: Sequence[SequencePoint]) -> bool:
    for p in points:
        d = eval_poly(f.denominator, p.n)
        if d == 0 or eval_poly(f.numerator, p.n) / d != p.value:
            return False
    return True


def _fit(points, fit_count, dn, dd):
    """Candidates of shape (dn, dd) fitting the first ``fit_count`` points.

    Yields ``(f, pole_hit)`` where ``pole_hit`` flags a raw Q vanishing at a
    sample point.
    """
    rows = []
    for p in points[:fit_count]:
        powers = [Fraction(1)]
        for _ in range(max(dn, dd)):
            powers.append(powers[-1] * p.n)
        rows.append(powers[: dn + 1] + [-p.value * t for t in powers[: dd + 1]])
    for vec in solve_nullspace(rows):
        P = Polynomial(tuple(vec[: dn + 1]))
        Q = Polynomial(tuple(vec[dn + 1 :]))
        if Q.is_zero():
            continue
        pole_hit = any(eval_poly(Q, p.n) == 0 for p in points)
        yield RationalFunction(P, Q), pole_hit


def guess_rational(
    points: Iterable,
    max_total_degree: int | None = None,
    surplus: int = DEFAULT_SURPLUS,
) -> GuessResult:
    """Lowest-degree rational function through ``points``.

    Total degree is searched in ascending order, numerator degree ascending
    within each total. ``max_total_degree`` defaults to the largest value the
    number of points supports. Raises NoFit if nothing within budget fits.
    """
    pts = _as_points(points)
    if surplus < 0:
        raise ValueError("surplus must be nonnegative")
    if max_total_degree is None:
        max_total_degree = len(pts) - 2 - surplus
    if max_total_degree < 0 or len(pts) < max_total_degree + 2 + surplus:
        raise ValueError(
            f"{len(pts)} points are too few for total degree {max_total_degree} with surplus {surplus}"
        )
    fit_count = len(pts) - surplus
    saw_pole = False
    for d in range(max_total_degree + 1):
        for dn in range(d + 1):
            for f, pole_hit in _fit(pts, fit_count, dn, d - dn):
                if _reproduces(f, pts):
                    return GuessResult(f, valid_from=pts[0].n, dropped=0, surplus_confirmed=surplus)
                saw_pole = saw_pole or pole_hit
    if saw_pole:
        raise DegenerateSystem("every candidate denominator vanishes at a sample point")
    raise NoFit(f"no rational function of total degree <= {max_total_degree} fits {len(pts)} points")


def family_points(offsets: FamilyOffsets, n_from: int, n_to: int) -> list[SequencePoint]:
    return [SequencePoint(n, g_value(offsets, n)) for n in range(n_from, n_to + 1)]


def guess_family(
    offsets: FamilyOffsets,
    n_from: int = 1,
    n_to: int = 15,
    max_drop: int = 2,
    max_total_degree: int | None = None,
    surplus: int = DEFAULT_SURPLUS,
) -> GuessResult:
    """Guess f for a family, discarding up to ``max_drop`` leading terms that
    do not fit the pattern of the rest."""
    pts = family_points(offsets, n_from, n_to)
    for drop in range(max_drop + 1):
        kept = pts[drop:]
        budget = len(kept) - 2 - surplus
        if max_total_degree is not None:
            budget = min(budget, max_total_degree)
        if budget < 0:
            break
        try:
            res = guess_rational(kept, budget, surplus)
        except NoFit:
            continue
        return GuessResult(res.f, res.valid_from, drop, res.surplus_confirmed)
    raise NoFit(f"no rational fit for family {offsets} on n={n_from}..{n_to} after dropping up to {max_drop}")
