"""Brute-force ground truth for containment probabilities.

Tilings of H(a,b,c) are handled as plane partitions: a x b arrays of heights
in [0, c], weakly decreasing along rows and columns. The top face of the
stack at cell (i, j) (1-based) with height h is a horizontal rhombus whose
bottom-most vertex has oblique coordinates ``(j + a - i, h + a - i)``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Callable

from .engine import total_tilings
from .errors import LimitExceeded
from .hexagon import HexagonSpec, RhombusPos

DEFAULT_LIMIT = 10**7


@dataclass(frozen=True)
class PlanePartition:
    """Row-major heights; ``heights[i-1][j-1]`` is the stack at cell (i, j)."""

    heights: tuple[tuple[int, ...], ...]

    def is_valid(self, hex: HexagonSpec) -> bool:
        h = self.heights
        if len(h) != hex.a or any(len(row) != hex.b for row in h):
            return False
        for i in range(hex.a):
            for j in range(hex.b):
                v = h[i][j]
                if not 0 <= v <= hex.c:
                    return False
                if j and v > h[i][j - 1]:
                    return False
                if i and v > h[i - 1][j]:
                    return False
        return True


@dataclass(frozen=True)
class OracleReport:
    total: int
    containing: int

    @property
    def probability(self) -> Fraction:
        return Fraction(self.containing, self.total)


@lru_cache(maxsize=None)
def _decreasing_rows(length: int, top: int) -> tuple[tuple[int, ...], ...]:
    return tuple(
        tuple(sorted(r, reverse=True)) for r in combinations_with_replacement(range(top + 1), length)
    )


@lru_cache(maxsize=None)
def _dominated(length: int, top: int) -> dict[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    rows = _decreasing_rows(length, top)
    return {r: tuple(s for s in rows if all(u <= v for u, v in zip(s, r))) for r in rows}


def _check_limit(hex: HexagonSpec, limit: int) -> int:
    total = total_tilings(hex)
    if total > limit:
        raise LimitExceeded(f"hexagon {hex} has {total} tilings, limit is {limit}")
    return total


def enumerate_plane_partitions(
    hex: HexagonSpec,
    visitor: Callable[[PlanePartition], None],
    limit: int = DEFAULT_LIMIT,
) -> int:
    """Call ``visitor`` once for every plane partition in the a x b x c box.

    Rows are generated top to bottom, each dominated entrywise by the one
    above. Returns the number visited, which is checked against MacMahon.
    """
    expected = _check_limit(hex, limit)
    rows = _decreasing_rows(hex.b, hex.c)
    below = _dominated(hex.b, hex.c)
    a = hex.a
    stack: list[tuple[int, ...]] = []
    count = 0

    def rec(candidates):
        nonlocal count
        depth = len(stack)
        for r in candidates:
            stack.append(r)
            if depth + 1 == a:
                visitor(PlanePartition(tuple(stack)))
                count += 1
            else:
                rec(below[r])
            stack.pop()

    rec(rows)
    assert count == expected, f"enumerated {count} partitions for {hex}, expected {expected}"
    return count


def contains(pp: PlanePartition, hex: HexagonSpec, pos: RhombusPos) -> bool:
    """Whether the tiling encoded by ``pp`` has a horizontal rhombus at ``pos``."""
    a, b = hex.a, hex.b
    for i in range(1, a + 1):
        j = pos.x - a + i
        if 1 <= j <= b and pp.heights[i - 1][j - 1] == pos.y - a + i:
            return True
    return False


def oracle_prob(hex: HexagonSpec, pos: RhombusPos, limit: int = DEFAULT_LIMIT) -> OracleReport:
    hits = 0

    def visit(pp):
        nonlocal hits
        if contains(pp, hex, pos):
            hits += 1

    total = enumerate_plane_partitions(hex, visit, limit)
    return OracleReport(total, hits)


def containing_counts(hex: HexagonSpec, limit: int = DEFAULT_LIMIT) -> tuple[int, Counter]:
    """Containment counts for every horizontal-rhombus position in one pass.

    Returns ``(total, counts)`` with ``counts[(x, y)]`` the number of tilings
    containing the rhombus at ``(x, y)``. Asserts that no tiling places two
    cells on the same position.
    """
    a = hex.a
    counts: Counter = Counter()

    def visit(pp):
        seen = set()
        for i, row in enumerate(pp.heights, start=1):
            for j, h in enumerate(row, start=1):
                key = (j + a - i, h + a - i)
                assert key not in seen, f"two cells of {pp} map to {key}"
                seen.add(key)
                counts[key] += 1

    total = enumerate_plane_partitions(hex, visit, limit)
    return total, counts


def triangle_cover_counts(hex: HexagonSpec, limit: int = DEFAULT_LIMIT) -> tuple[int, dict[str, Counter]]:
    """For each unit triangle {(X,Y), (X,Y+1), (X+1,Y+1)}, count the tilings
    covering it by each of the three rhombus orientations.

    Keys are ``(X, Y)``. ``"horizontal"`` is the top face of a stack, keyed by
    its bottom-most vertex as elsewhere; ``"row_wall"`` and ``"col_wall"`` are
    the side faces normal to the row and column directions of the plane
    partition. Every tiling covers each triangle exactly once.
    """
    a, b, c = hex.a, hex.b, hex.c
    counts = {"horizontal": Counter(), "row_wall": Counter(), "col_wall": Counter()}
    hor, roww, colw = counts["horizontal"], counts["row_wall"], counts["col_wall"]

    def visit(pp):
        h = pp.heights
        for i in range(1, a + 1):
            for j in range(1, b + 1):
                hor[(j + a - i, h[i - 1][j - 1] + a - i)] += 1
        for w in range(1, c + 1):
            # face between the last row with height >= w and the next one
            for v in range(1, b + 1):
                u = sum(1 for i in range(a) if h[i][v - 1] >= w)
                roww[(v - 1 - u + a, w - 1 - u + a)] += 1
            for u in range(1, a + 1):
                v = sum(1 for j in range(b) if h[u - 1][j] >= w)
                colw[(v - u + a, w - 1 - u + a)] += 1

    total = enumerate_plane_partitions(hex, visit, limit)
    return total, counts


def _count_with_pin(hex: HexagonSpec, pin: tuple[int, int, int] | None) -> int:
    # DP over columns j = 1..b; a state is a column, weakly decreasing in i.
    a, b, c = hex.a, hex.b, hex.c
    states = _decreasing_rows(a, c)
    below = _dominated(a, c)
    if pin is not None:
        pi, pj, ph = pin

    def allowed(col, j):
        return pin is None or j != pj or col[pi - 1] == ph

    ways = {s: 1 for s in states if allowed(s, 1)}
    for j in range(2, b + 1):
        nxt: dict[tuple[int, ...], int] = {}
        for s, w in ways.items():
            for t in below[s]:
                if allowed(t, j):
                    nxt[t] = nxt.get(t, 0) + w
        ways = nxt
    return sum(ways.values())


def dp_count_tilings(hex: HexagonSpec) -> int:
    return _count_with_pin(hex, None)


def dp_count_containing(hex: HexagonSpec, pos: RhombusPos) -> int:
    """Number of tilings containing the rhombus at ``pos``, without enumeration.

    Sums, over cells (i, j) on the diagonal ``j - i = x - a``, the count of
    plane partitions with that cell pinned to height ``y - a + i``. The pinned
    events are disjoint since heights cannot increase along a diagonal.
    """
    a, b, c = hex.a, hex.b, hex.c
    total = 0
    for i in range(1, a + 1):
        j = pos.x - a + i
        h = pos.y - a + i
        if 1 <= j <= b and 0 <= h <= c:
            total += _count_with_pin(hex, (i, j, h))
    return total
