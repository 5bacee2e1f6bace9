"""Known and conjectured closed forms of f for specific offset families, and
the parameter families for which a single-sum expression is available.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable

from .engine import g_value
from .exact import Polynomial, RationalFunction, eval_ratfunc, format_rational, solve_nullspace
from .hexagon import FamilyOffsets


class Status(str, Enum):
    PROVED = "proved"
    CONJECTURAL = "conjectural"


@dataclass(frozen=True)
class CaseLabel:
    family: str
    parameters: tuple[tuple[str, int], ...]

    def __str__(self) -> str:
        vals = [v for _, v in self.parameters]
        if len(vals) > 1 and len(set(vals)) == 1:
            body = "=".join(k for k, _ in self.parameters) + f"={vals[0]}"
        else:
            body = ", ".join(f"{k}={v}" for k, v in self.parameters)
        return f"({self.family}), {body}"


@dataclass(frozen=True)
class CatalogEntry:
    offsets: FamilyOffsets
    f: RationalFunction
    valid_from: int
    status: Status
    provenance: CaseLabel | None = None

    def to_json(self) -> dict:
        num, den = self.f.integer_form()
        return {
            "offsets": list(self.offsets.as_tuple()),
            "f_num": [format_rational(c) for c in num.coeffs] or ["0"],
            "f_den": [format_rational(c) for c in den.coeffs],
            "valid_from": self.valid_from,
            "status": self.status.value,
            "provenance": str(self.provenance) if self.provenance else None,
        }


# ---------------------------------------------------------------------------
# single-sum case templates

# Each template maps parameter values to an offset 5-tuple; the functions are
# affine, which classify_single_sum relies on.
Template = Callable[..., tuple[int, int, int, int, int]]

_AB = ("a'", "b'")
_AX = ("a'", "x'")
_A = ("a'",)

CASES: dict[str, tuple[tuple[str, ...], list[Template]]] = {
    "A": (_AB, [lambda a, b: (2*a + 1, 2*b + 1, 0, a + b + 1, a)]),
    "B": (_AB, [lambda a, b: (2*a, 2*b, 1, a + b, a)]),
    "C": (_AB, [
        lambda a, b: (2*a + 1, 2*b + 1, 1, a + b + 1, a + 1),
        lambda a, b: (2*a + 1, 2*b + 1, 1, a + b + 1, a),
    ]),
    "D": (_AB, [
        lambda a, b: (2*a, 2*b, 0, a + b, a),
        lambda a, b: (2*a, 2*b, 0, a + b, a - 1),
    ]),
    "E": (_AX, [lambda a, x: (a, a, 0, 2*x + 1, x)]),
    "F": (_AX, [lambda a, x: (a, a, 1, 2*x, x - 1)]),
    "G": (_A, [
        lambda a: (2*a, 2*a, 1, 2*a, a + 1),
        lambda a: (2*a, 2*a, 1, 2*a, a - 1),
    ]),
    "H": (_A, [
        lambda a: (2*a + 1, 2*a + 1, 0, 2*a + 1, a + 1),
        lambda a: (2*a + 1, 2*a + 1, 0, 2*a + 1, a - 1),
    ]),
    "I": (_A, [
        lambda a: (2*a, 2*a, 0, 2*a, a + 1),
        lambda a: (2*a, 2*a, 0, 2*a, a - 2),
    ]),
    "J": (_A, [
        lambda a: (2*a + 1, 2*a + 1, 1, 2*a + 1, a + 2),
        lambda a: (2*a + 1, 2*a + 1, 1, 2*a + 1, a - 1),
    ]),
    "C'": (_A, [
        lambda a: (2*a, 0, 0, a + 1, a),
        lambda a: (2*a, 0, 0, a, a),
        lambda a: (2*a, 0, 0, a, a - 1),
        lambda a: (2*a, 0, 0, a - 1, a - 1),
        lambda a: (0, 2*a, 0, a + 1, 0),
        lambda a: (0, 2*a, 0, a, -1),
        lambda a: (0, 2*a, 0, a, 0),
        lambda a: (0, 2*a, 0, a - 1, -1),
    ]),
    "D'": (_A, [
        lambda a: (2*a + 1, 1, 1, a + 2, a + 1),
        lambda a: (2*a + 1, 1, 1, a + 1, a + 1),
        lambda a: (2*a + 1, 1, 1, a + 1, a),
        lambda a: (2*a + 1, 1, 1, a, a),
        lambda a: (1, 2*a + 1, 1, a + 2, 1),
        lambda a: (1, 2*a + 1, 1, a + 1, 0),
        lambda a: (1, 2*a + 1, 1, a + 1, 1),
        lambda a: (1, 2*a + 1, 1, a, 0),
    ]),
    "E'": (_AX, [
        lambda a, x: (2*a, 0, 0, a + x, a - x),
        lambda a, x: (2*a, 0, 0, a + x, a - x - 1),
        lambda a, x: (2*a + 1, 0, 0, a + x, a - x),
        lambda a, x: (2*a + 1, 0, 0, a + x, a - x + 1),
        lambda a, x: (0, 2*a, 0, a + x, 2*x - 1),
        lambda a, x: (0, 2*a, 0, a + x, 2*x),
        lambda a, x: (0, 2*a + 1, 0, a + x, 2*x - 2),
        lambda a, x: (0, 2*a + 1, 0, a + x, 2*x - 1),
    ]),
    "F'": (_AX, [
        lambda a, x: (2*a, 1, 1, a + x, a - x + 1),
        lambda a, x: (2*a, 1, 1, a + x, a - x),
        lambda a, x: (2*a + 1, 1, 1, a + x, a - x + 2),
        lambda a, x: (2*a + 1, 1, 1, a + x, a - x + 1),
        lambda a, x: (1, 2*a, 1, a + x, 2*x - 1),
        lambda a, x: (1, 2*a, 1, a + x, 2*x),
        lambda a, x: (1, 2*a + 1, 1, a + x, 2*x - 2),
        lambda a, x: (1, 2*a + 1, 1, a + x, 2*x - 1),
    ]),
    "G'": (_A, [
        lambda a: (2*a + 1, 0, 0, a + 2, a + 2),
        lambda a: (2*a + 1, 0, 0, a + 1, a + 2),
        lambda a: (2*a + 1, 0, 0, a, a),
        lambda a: (2*a + 1, 0, 0, a - 1, a),
        lambda a: (0, 2*a + 1, 0, a + 2, 0),
        lambda a: (0, 2*a + 1, 0, a + 1, -1),
        lambda a: (0, 2*a + 1, 0, a, 0),
        lambda a: (0, 2*a + 1, 0, a - 1, -1),
    ]),
    "H'": (_A, [
        lambda a: (2*a, 1, 1, a + 2, a + 2),
        lambda a: (2*a, 1, 1, a + 1, a + 2),
        lambda a: (2*a, 1, 1, a, a),
        lambda a: (2*a, 1, 1, a - 1, a),
        lambda a: (1, 2*a, 1, a + 2, 1),
        lambda a: (1, 2*a, 1, a + 1, 0),
        lambda a: (1, 2*a, 1, a, 1),
        lambda a: (1, 2*a, 1, a - 1, 0),
    ]),
    "I'": (_A, [
        lambda a: (2*a, 0, 0, a + 2, a + 1),
        lambda a: (2*a, 0, 0, a + 1, a + 1),
        lambda a: (2*a, 0, 0, a - 1, a),
        lambda a: (2*a, 0, 0, a - 2, a),
        lambda a: (0, 2*a, 0, a + 2, 0),
        lambda a: (0, 2*a, 0, a + 1, -1),
        lambda a: (0, 2*a, 0, a - 1, 0),
        lambda a: (0, 2*a, 0, a - 2, -1),
    ]),
    "J'": (_A, [
        lambda a: (2*a + 1, 1, 1, a + 3, a + 2),
        lambda a: (2*a + 1, 1, 1, a + 2, a + 2),
        lambda a: (2*a + 1, 1, 1, a, a - 1),
        lambda a: (2*a + 1, 1, 1, a - 1, a - 1),
        lambda a: (1, 2*a + 1, 1, a + 3, 1),
        lambda a: (1, 2*a + 1, 1, a + 2, 0),
        lambda a: (1, 2*a + 1, 1, a, 1),
        lambda a: (1, 2*a + 1, 1, a - 1, 0),
    ]),
}


def _solve_template(template: Template, nparams: int, target: tuple[int, ...]) -> tuple[int, ...] | None:
    base = template(*([0] * nparams))
    cols = []
    for k in range(nparams):
        e = [0] * nparams
        e[k] = 1
        cols.append([u - v for u, v in zip(template(*e), base)])
    # kernel vectors (p, t) of [A | base - target] with t = 1 give A p = target - base
    rows = [[cols[k][r] for k in range(nparams)] + [base[r] - target[r]] for r in range(5)]
    for vec in solve_nullspace(rows):
        if vec[-1] == 0:
            continue
        params = [v / vec[-1] for v in vec[:-1]]
        if all(p.denominator == 1 for p in params):
            sol = tuple(int(p) for p in params)
            if template(*sol) == target:
                return sol
    return None


def classify_single_sum(offsets: FamilyOffsets) -> list[CaseLabel]:
    """All single-sum cases whose templates produce exactly ``offsets``.

    Templates are matched literally: the caller normalises c into {0, 1}.
    """
    target = offsets.as_tuple()
    found: list[CaseLabel] = []
    for family, (names, templates) in CASES.items():
        for t in templates:
            sol = _solve_template(t, len(names), target)
            if sol is None:
                continue
            label = CaseLabel(family, tuple(zip(names, sol)))
            if label not in found:
                found.append(label)
    return found


def template_offsets(label: CaseLabel) -> list[tuple[int, ...]]:
    """Offsets produced by each template of ``label.family`` at its parameters."""
    _, templates = CASES[label.family]
    values = [v for _, v in label.parameters]
    return [t(*values) for t in templates]


# ---------------------------------------------------------------------------
# the proved single-sum instances: (offsets, case, parameters as printed)

SINGLE_SUM_TABLE: list[tuple[tuple[int, ...], str, dict[str, int]]] = [
    ((-1, -1, 0, -1, -1), "A", {"a'": -1, "b'": -1}),
    ((2, 2, 1, 2, 1), "B", {"a'": 1, "b'": 1}),
    ((2, 1, 1, 2, 1), "F'", {"a'": 1, "x'": 1}),
    ((2, 1, 1, 1, 1), "F'", {"a'": 1, "x'": 0}),
    ((1, 2, 1, 2, 1), "F'", {"a'": 1, "x'": 1}),
    ((1, 2, 1, 1, 0), "F'", {"a'": 1, "x'": 0}),
    ((-1, 0, 0, 0, -1), "E'", {"a'": -1, "x'": 1}),
    ((-1, 0, 0, -1, -1), "E'", {"a'": -1, "x'": 0}),
    ((0, -1, 0, 0, 0), "E'", {"a'": -1, "x'": 1}),
    ((0, -1, 0, -1, -1), "E'", {"a'": -1, "x'": 0}),
    ((1, 1, 1, 1, 1), "C", {"a'": 0, "b'": 0}),
    ((1, 1, 0, 1, -1), "H", {"a'": 0, "b'": 0}),
    ((1, 1, 0, 1, 1), "H", {"a'": 0, "b'": 0}),
    ((1, 1, 1, 0, -1), "F", {"a'": 1, "x'": 0}),
    ((1, 1, 1, 0, 1), "J'", {"a'": 0}),
    ((1, 1, 1, 1, 0), "C", {"a'": 0, "b'": 0}),
    ((0, 2, 0, 1, 0), "E'", {"a'": 1, "x'": 0}),
    ((2, 0, 0, 0, 1), "I'", {"a'": 1}),
    ((2, 0, 0, 1, 0), "E'", {"a'": 1, "x'": 0}),
    ((2, 0, 0, 1, 1), "E'", {"a'": 1, "x'": 0}),
    ((2, 0, 0, 2, 0), "E'", {"a'": 1, "x'": 1}),
    ((0, 2, 1, 1, 0), "B", {"a'": 0, "b'": 1}),
    ((1, 1, 0, 1, 0), "A", {"a'": 0, "b'": 0}),
    ((0, 0, 0, 0, 0), "D", {"a'": 0, "b'": 0}),
    ((0, 0, 1, 0, 0), "B", {"a'": 0, "b'": 0}),
    ((3, 3, 0, 3, 1), "A", {"a'": 1, "b'": 1}),
]


def single_sum_label(offsets: tuple[int, ...]) -> CaseLabel | None:
    """Table row for ``offsets`` as a CaseLabel over the family's own parameters.

    The printed rows for case (H) also list a b' that the template does not
    have; it is dropped here.
    """
    for offs, family, params in SINGLE_SUM_TABLE:
        if offs == offsets:
            names = CASES[family][0]
            return CaseLabel(family, tuple((k, params[k]) for k in names))
    return None


# ---------------------------------------------------------------------------
# built-in formulas

n = Polynomial.n()


def _rf(num, den=1) -> RationalFunction:
    return RationalFunction(Polynomial._coerce(num), Polynomial._coerce(den))


ZERO = _rf(0)
THIRD = _rf(Fraction(1, 3))
MINUS_TWO_THIRDS = _rf(Fraction(-2, 3))
FOUR_THIRDS = _rf(Fraction(4, 3))

_P, _C = Status.PROVED, Status.CONJECTURAL

_FORMULAS: list[tuple[list[tuple[int, ...]], RationalFunction, int, Status]] = [
    ([(-1, -1, 0, -1, -1), (2, 2, 1, 2, 1)], ZERO, 1, _P),
    (
        [
            (2, 1, 1, 2, 1), (2, 1, 1, 1, 1), (1, 2, 1, 2, 1), (1, 2, 1, 1, 0),
            (-1, 0, 0, 0, -1), (-1, 0, 0, -1, -1), (0, -1, 0, 0, 0), (0, -1, 0, -1, -1),
        ],
        ZERO, 1, _P,
    ),
    (
        [
            (1, 1, 1, 1, 1), (1, 1, 0, 1, -1), (1, 1, 0, 1, 1), (1, 1, 1, 0, -1),
            (1, 1, 1, 0, 1), (1, 1, 1, 1, 0), (0, 2, 0, 1, 0), (2, 0, 0, 0, 1),
            (2, 0, 0, 1, 0), (2, 0, 0, 1, 1), (2, 0, 0, 2, 0),
        ],
        THIRD, 1, _P,
    ),
    ([(1, 1, 0, 0, -1), (1, 1, 0, 0, 0), (2, 0, 1, 1, 0)], THIRD, 1, _C),
    ([(0, 2, 1, 1, 0)], MINUS_TWO_THIRDS, 1, _P),
    ([(1, 1, 1, 0, 0)], MINUS_TWO_THIRDS, 1, _C),
    ([(1, 1, 0, 1, 0)], FOUR_THIRDS, 1, _P),
    ([(4, 3, 1, 3, 2), (4, 3, 1, 4, 2)], FOUR_THIRDS, 1, _C),
    ([(0, 0, 0, 0, 0)], _rf(-(6*n + 1), 6 * (3*n + 1)), 1, _P),
    ([(0, 0, 1, 0, 0)], _rf(-2 * (6*n + 1), 3 * (3*n + 1)), 1, _P),
    (
        [(3, 3, 0, 3, 1)],
        _rf(2 * (2*n + 1) * (3*n + 2) * (4*n + 5), 3 * (n + 1) ** 2 * (6*n + 5)),
        1, _P,
    ),
    (
        [(2, 1, 0, 3, -1)],
        _rf(4 * n**3 + 18 * n**2 + 12 * n + 1, 6 * (n + 1) ** 2 * (2*n - 1)),
        2, _C,
    ),
    (
        [(5, 1, 0, 3, 2)],
        _rf(
            (3*n + 2) * (16 * n**3 + 54 * n**2 + 57 * n + 20),
            3 * (n + 1) ** 2 * (n + 2) * (6*n + 5),
        ),
        1, _C,
    ),
    (
        [(-1, 5, 0, 2, -1)],
        _rf((3*n + 2) * (2 * n**2 + 4 * n + 1), 3 * (n + 1) ** 2 * (n + 2)),
        1, _C,
    ),
    (
        [(10, 3, 0, 1, 4)],
        _rf(
            (2*n + 1) * (2*n + 3) * (3*n + 2) * (3*n + 4) * (3*n + 5)
            * (
                176 * n**9 + 3080 * n**8 + 21692 * n**7 + 74546 * n**6 + 102578 * n**5
                - 73279 * n**4 - 362598 * n**3 - 283977 * n**2 + 24762 * n + 55440
            ),
            6 * (n + 1) ** 2 * (n + 2) ** 2 * (n + 3) ** 2 * (n + 4) ** 2 * (n + 5)
            * (2*n - 3) * (2*n - 1) * (6*n + 5) * (6*n + 7) * (6*n + 11),
        ),
        2, _C,
    ),
]

del n


def builtin_entries() -> list[CatalogEntry]:
    entries = []
    for families, f, valid_from, status in _FORMULAS:
        for offs in families:
            entries.append(
                CatalogEntry(FamilyOffsets(*offs), f, valid_from, status, single_sum_label(offs))
            )
    return entries


def lookup(offsets: FamilyOffsets) -> CatalogEntry:
    for e in builtin_entries():
        if e.offsets == offsets:
            return e
    raise KeyError(f"no catalog entry for family {offsets}")


def export_json(entries: list[CatalogEntry] | None = None) -> str:
    if entries is None:
        entries = builtin_entries()
    return json.dumps([e.to_json() for e in entries], indent=2)


@dataclass(frozen=True)
class VerifyRow:
    n: int
    expected: Fraction
    actual: Fraction

    @property
    def ok(self) -> bool:
        return self.expected == self.actual


@dataclass(frozen=True)
class VerifyReport:
    entry: CatalogEntry
    rows: tuple[VerifyRow, ...]

    @property
    def passed(self) -> bool:
        return all(r.ok for r in self.rows)


def verify_entry(entry: CatalogEntry, n_span: int = 5) -> VerifyReport:
    """Compare the triple-sum g-values with the entry's f on ``n_span`` points
    starting at ``valid_from``."""
    rows = []
    for k in range(entry.valid_from, entry.valid_from + n_span):
        rows.append(VerifyRow(k, eval_ratfunc(entry.f, k), g_value(entry.offsets, k)))
    return VerifyReport(entry, tuple(rows))
