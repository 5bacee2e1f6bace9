"""Hexagons, horizontal-rhombus positions and the five-offset families.

Positions use the oblique coordinate system whose origin is a vertex where
the sides of lengths ``b`` and ``c`` meet, with axes along those sides. A
horizontal rhombus is identified by the coordinates of its bottom-most
vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateHexagon, OutOfRange


def _parse_ints(text: str, count: int, what: str) -> tuple[int, ...]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != count:
        raise ValueError(f"{what} needs {count} comma-separated integers, got {text!r}")
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"{what} needs integers, got {text!r}") from None


@dataclass(frozen=True)
class HexagonSpec:
    """Hexagon with side lengths a, b, c, a, b, c."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if min(self.a, self.b, self.c) < 1:
            raise DegenerateHexagon(f"hexagon sides must be >= 1, got {self.a},{self.b},{self.c}")

    @classmethod
    def parse(cls, text: str) -> HexagonSpec:
        return cls(*_parse_ints(text, 3, "hexagon"))

    def __str__(self) -> str:
        return f"{self.a},{self.b},{self.c}"


@dataclass(frozen=True)
class RhombusPos:
    x: int
    y: int

    @classmethod
    def parse(cls, text: str) -> RhombusPos:
        return cls(*_parse_ints(text, 2, "position"))

    def __str__(self) -> str:
        return f"{self.x},{self.y}"


@dataclass(frozen=True)
class FamilyOffsets:
    """Offsets (a, b, c, x, y): hexagon 2n+a, 2n+b, 2n+c and rhombus (2n+x, 2n+y)."""

    da: int
    db: int
    dc: int
    dx: int
    dy: int

    @classmethod
    def parse(cls, text: str) -> FamilyOffsets:
        return cls(*_parse_ints(text, 5, "family"))

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return (self.da, self.db, self.dc, self.dx, self.dy)

    def shifted(self, k: int) -> FamilyOffsets:
        """The same family reindexed by ``n -> n + k``."""
        return FamilyOffsets(*(v + 2 * k for v in self.as_tuple()))

    def normalize_c(self) -> tuple[FamilyOffsets, int]:
        """Shift ``n`` so that the c-offset is 0 or 1.

        Returns the shifted offsets and the shift ``k`` such that
        ``self.shifted(k)`` is the result.
        """
        k = -(self.dc // 2)
        return self.shifted(k), k

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.as_tuple())


def instantiate(offsets: FamilyOffsets, n: int) -> tuple[HexagonSpec, RhombusPos]:
    sides = (2 * n + offsets.da, 2 * n + offsets.db, 2 * n + offsets.dc)
    if min(sides) < 1:
        raise DegenerateHexagon(f"family {offsets} at n={n} gives sides {sides}")
    return HexagonSpec(*sides), RhombusPos(2 * n + offsets.dx, 2 * n + offsets.dy)


def in_theorem_domain(hex: HexagonSpec, pos: RhombusPos) -> bool:
    """Whether the triple-sum probability formula applies at ``pos``."""
    return 0 <= pos.x <= hex.a + hex.b - 1 and 1 <= pos.y <= hex.a + hex.c - 1


def on_symmetry_axis(hex: HexagonSpec, pos: RhombusPos) -> bool:
    """Whether the horizontal rhombus at ``pos`` lies on the mirror line of
    H(a,a,c) that runs along its long diagonal."""
    return hex.a == hex.b and 2 * pos.y - pos.x == hex.c - 1


def symmetric_complement(p: Fraction) -> Fraction:
    """Probability of each of the two mirror rhombi that share a triangle with
    a horizontal rhombus of probability ``p`` on the symmetry axis of H(a,a,c).

    The three rhombi through that triangle are mutually exclusive and one is
    always present, so ``p + 2q = 1``.
    """
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise OutOfRange(f"probability {p} not in [0, 1]")
    return (1 - p) / 2
