"""Dense univariate polynomials over the rationals."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction | int


def _strip(coeffs: list[Fraction]) -> list[Fraction]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


class PolyQ:
    """Polynomial in one variable with exact rational coefficients.

    Coefficients are stored low degree first; the zero polynomial has an
    empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Rational | str] = ()):
        self.coeffs: tuple[Fraction, ...] = tuple(
            _strip([Fraction(c) for c in coeffs])
        )

    @classmethod
    def monomial(cls, degree: int, coeff: Rational = 1) -> PolyQ:
        return cls([0] * degree + [coeff])

    @classmethod
    def constant(cls, c: Rational) -> PolyQ:
        return cls([c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = PolyQ([other])
        if not isinstance(other, PolyQ):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"PolyQ({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        return format_poly(self)

    def __neg__(self) -> PolyQ:
        return PolyQ(-c for c in self.coeffs)

    def __add__(self, other) -> PolyQ:
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return PolyQ(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __sub__(self, other) -> PolyQ:
        return self + (-_coerce(other))

    def __rsub__(self, other) -> PolyQ:
        return _coerce(other) - self

    def __mul__(self, other) -> PolyQ:
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return PolyQ()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return PolyQ(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> PolyQ:
        if k < 0:
            raise ValueError("negative exponent")
        result, base = PolyQ([1]), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divmod(self, other: PolyQ) -> tuple[PolyQ, PolyQ]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lc = other.leading()
        if len(rem) - 1 < dq:
            return PolyQ(), PolyQ(rem)
        quot = [Fraction(0)] * (len(rem) - dq)
        for k in range(len(rem) - 1 - dq, -1, -1):
            c = rem[k + dq] / lc
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return PolyQ(quot), PolyQ(rem[:dq])

    def __floordiv__(self, other: PolyQ) -> PolyQ:
        return self.divmod(other)[0]

    def __mod__(self, other: PolyQ) -> PolyQ:
        return self.divmod(other)[1]

    def derivative(self) -> PolyQ:
        return PolyQ(i * c for i, c in enumerate(self.coeffs) if i)

    def monic(self) -> PolyQ:
        if self.is_zero():
            return self
        lc = self.leading()
        return PolyQ(c / lc for c in self.coeffs)

    def scale(self, c: Rational) -> PolyQ:
        return PolyQ(c * x for x in self.coeffs)


def _coerce(x) -> PolyQ:
    if isinstance(x, PolyQ):
        return x
    return PolyQ([x])


def poly_gcd(a: PolyQ, b: PolyQ) -> PolyQ:
    """Monic greatest common divisor (Euclid over the rationals)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def square_free_part(p: PolyQ) -> PolyQ:
    if p.degree <= 0:
        return p
    return (p // poly_gcd(p, p.derivative())).monic()


def from_factored(terms: Sequence[tuple[Rational, int, int]]) -> PolyQ:
    """Build ``sum c * (1-z)**e * z**f`` from ``(c, e, f)`` triples."""
    one_minus_z = PolyQ([1, -1])
    total = PolyQ()
    for c, e, f in terms:
        total = total + (one_minus_z**e * PolyQ.monomial(f)).scale(Fraction(c))
    return total


def format_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(p: PolyQ, var: str = "z") -> str:
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for i, c in enumerate(p.coeffs):
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if i == 0:
            body = format_rational(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{format_rational(mag)}*{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out
