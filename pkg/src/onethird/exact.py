"""Exact arithmetic: combinatorial primitives, polynomials, rational functions
and nullspaces over the rationals.

Rationals are plain :class:`fractions.Fraction` objects, which are already
kept in lowest terms with a positive denominator.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import PoleError

Number = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^\s*(-?\d+)(?:/(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` into a Fraction.

    Only integers and integer quotients are accepted; decimal and exponent
    forms that ``Fraction`` would otherwise take are rejected.
    """
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(q: Number) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def binomial(m: int, k: int) -> int:
    """Binomial coefficient with the falling-factorial convention.

    Returns 0 for ``k < 0`` and ``m(m-1)...(m-k+1)/k!`` otherwise, so negative
    ``m`` is allowed: ``binomial(-1, 2) == 1``.
    """
    if k < 0:
        return 0
    if m >= 0:
        return math.comb(m, k)
    # C(m, k) = (-1)^k C(k - m - 1, k) for m < 0
    r = math.comb(k - m - 1, k)
    return -r if k % 2 else r


def factorial(m: int) -> int:
    if m < 0:
        raise ValueError(f"factorial of negative integer {m}")
    return math.factorial(m)


def pochhammer(q: Number, k: int) -> Fraction | int:
    """Rising factorial ``q (q+1) ... (q+k-1)``; the empty product is 1."""
    if k < 0:
        raise ValueError(f"pochhammer length must be nonnegative, got {k}")
    if isinstance(q, int):
        if q > 0:
            # fast path: (q)_k = (q+k-1)! / (q-1)!
            return math.perm(q + k - 1, k)
        r = 1
        for t in range(k):
            r *= q + t
        return r
    r = Fraction(1)
    for t in range(k):
        r *= q + t
    return r


def _frac_tuple(coeffs: Iterable[Number]) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class Polynomial:
    """Univariate polynomial in ``n`` with rational coefficients.

    ``coeffs[k]`` is the coefficient of ``n**k``; trailing zeros are stripped
    at construction so the zero polynomial is the empty tuple.
    """

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _frac_tuple(self.coeffs))

    @classmethod
    def n(cls) -> Polynomial:
        return cls((0, 1))

    @classmethod
    def constant(cls, c: Number) -> Polynomial:
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __call__(self, n: Number) -> Fraction:
        return eval_poly(self, n)

    @staticmethod
    def _coerce(other) -> Polynomial:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Polynomial(tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)))

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x == 0:
                continue
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return Polynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Polynomial:
        if e < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial((1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c: Number) -> Polynomial:
        return Polynomial(tuple(x * c for x in self.coeffs))

    def divmod(self, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = other.degree
        lead = other.leading
        quot = [Fraction(0)] * max(len(rem) - dd, 0)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k] / lead
            if c == 0:
                continue
            quot[k - dd] = c
            for i, y in enumerate(other.coeffs):
                rem[k - dd + i] -= c * y
        return Polynomial(tuple(quot)), Polynomial(tuple(rem[:dd] if dd > 0 else ()))

    def monic(self) -> Polynomial:
        if self.is_zero():
            return self
        return self.scale(1 / self.leading)

    def content(self) -> Fraction:
        """Positive rational ``c`` such that ``self / c`` has coprime integer coefficients."""
        if self.is_zero():
            return Fraction(0)
        den = math.lcm(*(c.denominator for c in self.coeffs))
        g = math.gcd(*(int(c * den) for c in self.coeffs))
        return Fraction(g, den)

    def primitive(self) -> Polynomial:
        """Integer-coefficient associate with coprime coefficients and positive leading term."""
        if self.is_zero():
            return self
        p = self.scale(1 / self.content())
        return -p if p.leading < 0 else p

    def int_coeffs(self) -> list[int]:
        if any(c.denominator != 1 for c in self.coeffs):
            raise ValueError("polynomial has non-integer coefficients")
        return [c.numerator for c in self.coeffs]

    def __str__(self) -> str:
        return format_poly(self)


def poly_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic gcd by the Euclidean algorithm; primitive parts keep sizes down."""
    a, b = p.primitive(), q.primitive()
    while not b.is_zero():
        _, r = a.divmod(b)
        a, b = b, r.primitive()
    return a.monic()


def eval_poly(p: Polynomial, n: Number) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * n + c
    return acc


def format_poly(p: Polynomial, var: str = "n") -> str:
    if p.is_zero():
        return "0"
    terms = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = format_rational(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{format_rational(mag)}*{mono}"
        terms.append((sign, body))
    first_sign, first_body = terms[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


@dataclass(frozen=True)
class RationalFunction:
    """Quotient of two polynomials kept in canonical form.

    Canonical means: common factors cancelled and the denominator monic, so
    equal rational functions have identical coefficient tuples.
    """

    numerator: Polynomial
    denominator: Polynomial = Polynomial((1,))

    def __post_init__(self):
        num, den = self.numerator, self.denominator
        if not isinstance(num, Polynomial):
            num = Polynomial._coerce(num)
        if not isinstance(den, Polynomial):
            den = Polynomial._coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            num, den = Polynomial(), Polynomial((1,))
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, _ = num.divmod(g)
                den, _ = den.divmod(g)
            lead = den.leading
            num, den = num.scale(1 / lead), den.scale(1 / lead)
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)

    @classmethod
    def constant(cls, c: Number) -> RationalFunction:
        return cls(Polynomial((c,)))

    @classmethod
    def from_int_coeffs(cls, num: Sequence[int | str], den: Sequence[int | str]) -> RationalFunction:
        return cls(
            Polynomial(tuple(parse_rational(c) if isinstance(c, str) else c for c in num)),
            Polynomial(tuple(parse_rational(c) if isinstance(c, str) else c for c in den)),
        )

    @property
    def total_degree(self) -> int:
        return max(self.numerator.degree, 0) + self.denominator.degree

    def __call__(self, n: Number) -> Fraction:
        return eval_ratfunc(self, n)

    def integer_form(self) -> tuple[Polynomial, Polynomial]:
        """Numerator and denominator scaled to coprime integer coefficients.

        The denominator's leading coefficient is positive. This is the form
        used for display and JSON export.
        """
        den_c = self.denominator.content()
        num_c = self.numerator.content() if self.numerator else Fraction(1)
        num = self.numerator.scale(1 / num_c)
        den = self.denominator.scale(1 / den_c)
        # num_c/den_c = u/v in lowest terms
        ratio = num_c / den_c
        return num.scale(ratio.numerator), den.scale(ratio.denominator)

    def __str__(self) -> str:
        if self.denominator.degree == 0:
            return format_poly(self.numerator)
        num, den = self.integer_form()
        return f"({format_poly(num)})/({format_poly(den)})"


def eval_ratfunc(f: RationalFunction, n: Number) -> Fraction:
    d = eval_poly(f.denominator, n)
    if d == 0:
        raise PoleError(f"denominator of {f} vanishes at n={n}")
    return eval_poly(f.numerator, n) / d


def solve_nullspace(matrix: Sequence[Sequence[Number]]) -> list[list[Fraction]]:
    """Basis of the right nullspace of ``matrix`` by exact Gauss-Jordan elimination.

    Returns an empty list iff only the zero vector is in the kernel. Each basis
    vector has a 1 in its free coordinate and zeros in the other free ones.
    """
    rows = [[Fraction(v) for v in row] for row in matrix]
    if not rows:
        return []
    ncols = len(rows[0])
    if any(len(r) != ncols for r in rows):
        raise ValueError("matrix is not rectangular")

    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break

    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][fc]
        basis.append(v)
    return basis
