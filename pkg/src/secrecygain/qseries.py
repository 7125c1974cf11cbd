"""Exact truncated q-expansions (nome q = e^(pi i tau)) and basis fitting.

Every lattice theta series of a unimodular lattice is a polynomial in a few
classical expansions. This module builds those expansions over the
rationals and solves the triangular systems that recover the polynomial
coefficients from vector counts.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce
from math import lcm
from typing import Iterable, Sequence


class SeriesMismatchError(ValueError):
    """Surplus coefficients disagree with the fitted expansion."""


class InsufficientDataError(ValueError):
    """Too few theta coefficients to determine the basis coefficients."""


@dataclass(frozen=True)
class QSeries:
    """Power series sum c_k q^k known exactly for k < order."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs)

    @property
    def valuation(self) -> int:
        """Index of the first nonzero coefficient (``order`` if none is known)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return self.order

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def truncate(self, order: int) -> QSeries:
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return QSeries(self.coeffs[:order])

    def scale(self, c) -> QSeries:
        c = Fraction(c)
        return QSeries(c * x for x in self.coeffs)

    def __add__(self, other: QSeries) -> QSeries:
        n = min(self.order, other.order)
        return QSeries(a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n]))

    def __sub__(self, other: QSeries) -> QSeries:
        n = min(self.order, other.order)
        return QSeries(a - b for a, b in zip(self.coeffs[:n], other.coeffs[:n]))

    def __neg__(self) -> QSeries:
        return self.scale(-1)

    def __mul__(self, other: QSeries) -> QSeries:
        if not isinstance(other, QSeries):
            return self.scale(other)
        # a zero prefix of one factor extends how far the product is known
        order = min(self.order + other.valuation, other.order + self.valuation)
        return QSeries(_convolve(self.coeffs, other.coeffs, order))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> QSeries:
        if k < 0:
            raise ValueError("negative exponent")
        if k == 0:
            return QSeries([1] + [0] * (self.order - 1))
        result = None
        base = self
        while k:
            if k & 1:
                result = base if result is None else result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def as_ints(self) -> list[int]:
        if not self.is_integral():
            raise ValueError("series has non-integer coefficients")
        return [int(c) for c in self.coeffs]


def _convolve(a: Sequence[Fraction], b: Sequence[Fraction], order: int) -> list[Fraction]:
    # integer convolution after clearing denominators
    da = reduce(lcm, (c.denominator for c in a), 1)
    db = reduce(lcm, (c.denominator for c in b), 1)
    ia = [int(c * da) for c in a[:order]]
    ib = [int(c * db) for c in b[:order]]
    out = [0] * order
    for i, x in enumerate(ia):
        if not x:
            continue
        for j in range(min(len(ib), order - i)):
            y = ib[j]
            if y:
                out[i + j] += x * y
    den = da * db
    return [Fraction(v, den) for v in out]


def series_arith(op: str, *operands) -> QSeries:
    """Dispatch ``add``, ``sub``, ``mul``, ``pow`` or ``scale`` on series operands."""
    if op == "add":
        return reduce(lambda s, t: s + t, operands)
    if op == "sub":
        a, b = operands
        return a - b
    if op == "mul":
        return reduce(lambda s, t: s * t, operands)
    if op == "pow":
        a, k = operands
        return a**k
    if op == "scale":
        a, c = operands
        return a.scale(c)
    raise ValueError(f"unknown series operation {op!r}")


def _product_series(order: int, factor) -> QSeries:
    """prod_{n>=1} factor(n) where factor returns (exponent, sign, power) triples."""
    acc = [0] * order
    acc[0] = 1
    n = 1
    while True:
        triples = factor(n)
        if all(e >= order for e, _, _ in triples):
            break
        for e, sign, power in triples:
            if e >= order:
                continue
            for _ in range(power):
                # multiply by (1 + sign * q^e)
                for i in range(order - 1, e - 1, -1):
                    acc[i] += sign * acc[i - e]
        n += 1
    return QSeries(acc)


def _theta3_product(order):
    return _product_series(order, lambda n: [(2 * n, -1, 1), (2 * n - 1, 1, 2)])


def _theta4_product(order):
    return _product_series(order, lambda n: [(2 * n, -1, 1), (2 * n - 1, -1, 2)])


def _theta2_pow4(order):
    # theta2 = 2 q^(1/4) prod (1-q^(2n)) (1+q^(2n))^2, so theta2^4 = 16 q P^4
    if order <= 1:
        return QSeries([0] * order)
    p = _product_series(order - 1, lambda n: [(2 * n, -1, 1), (2 * n, 1, 2)])
    p4 = (p**4).scale(16)
    return QSeries([0] + list(p4.coeffs))


SYMBOLS = ("theta3", "theta2_pow4", "theta4", "E4", "Delta", "Delta8")


@lru_cache(maxsize=256)
def base_series(symbol: str, order: int) -> QSeries:
    """Exact expansion of a named modular form to ``order`` terms.

    ``theta2_pow4`` stands in for theta2, whose q^(1/4) prefactor keeps it
    off integer exponents.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    if symbol == "theta3":
        return _theta3_product(order)
    if symbol == "theta4":
        return _theta4_product(order)
    if symbol == "theta2_pow4":
        return _theta2_pow4(order)
    if symbol == "E4":
        t2 = base_series("theta2_pow4", order) ** 2
        t3 = base_series("theta3", order) ** 8
        t4 = base_series("theta4", order) ** 8
        return (t2 + t3 + t4).scale(Fraction(1, 2)).truncate(order)
    if symbol == "Delta":
        t2 = base_series("theta2_pow4", order) ** 2
        t3 = base_series("theta3", order) ** 8
        t4 = base_series("theta4", order) ** 8
        return (t2 * t3 * t4).scale(Fraction(1, 256)).truncate(order)
    if symbol == "Delta8":
        t2 = base_series("theta2_pow4", order)
        t4 = base_series("theta4", order) ** 4
        return (t2 * t4).scale(Fraction(1, 16)).truncate(order)
    raise ValueError(f"unknown series symbol {symbol!r}")


@dataclass(frozen=True)
class BasisCoeffsGeneral:
    """Theta = sum_{r=0}^{mu} a_r theta3^(n-8r) Delta8^r with n = 8 mu + nu."""

    n: int
    a: tuple[Fraction, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("dimension must be positive")
        object.__setattr__(self, "a", tuple(Fraction(x) for x in self.a))
        if len(self.a) != self.mu + 1:
            raise ValueError(f"need {self.mu + 1} coefficients a_0..a_mu, got {len(self.a)}")

    @property
    def mu(self) -> int:
        return self.n // 8

    @property
    def nu(self) -> int:
        return self.n % 8

    def expand(self, order: int) -> QSeries:
        return _expand_general(self.n, self.a, order)


@dataclass(frozen=True)
class BasisCoeffsEven:
    """Theta = E4^(3m+k) + sum_j b_j E4^(3(m-j)+k) Delta^j with n = 24 m + 8 k.

    ``shortest_count`` is filled in by :func:`extremal_b_coeffs` with the
    number of vectors of the minimal norm 2m + 2.
    """

    n: int
    b: tuple[Fraction, ...]
    shortest_count: int | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 8 or self.n % 8:
            raise ValueError(f"even unimodular dimension must be a positive multiple of 8, got {self.n}")
        object.__setattr__(self, "b", tuple(Fraction(x) for x in self.b))
        if len(self.b) != self.m:
            raise ValueError(f"need {self.m} coefficients b_1..b_m, got {len(self.b)}")

    @property
    def m(self) -> int:
        return self.n // 24

    @property
    def k(self) -> int:
        return (self.n % 24) // 8

    def expand(self, order: int) -> QSeries:
        return _expand_even(self.n, self.b, order)


def _general_terms(n: int, order: int) -> list[QSeries]:
    t3 = base_series("theta3", order)
    d8 = base_series("Delta8", order)
    mu = n // 8
    terms = []
    d8_pow = QSeries([1] + [0] * (order - 1))
    for r in range(mu + 1):
        terms.append((t3 ** (n - 8 * r) * d8_pow).truncate(order))
        d8_pow = (d8_pow * d8).truncate(order)
    return terms


def _even_terms(n: int, order: int) -> list[QSeries]:
    e4 = base_series("E4", order)
    delta = base_series("Delta", order)
    m, k = n // 24, (n % 24) // 8
    terms = []
    delta_pow = QSeries([1] + [0] * (order - 1))
    for j in range(m + 1):
        terms.append((e4 ** (3 * (m - j) + k) * delta_pow).truncate(order))
        delta_pow = (delta_pow * delta).truncate(order)
    return terms


def _combine(terms: Sequence[QSeries], weights: Sequence[Fraction], order: int) -> QSeries:
    total = [Fraction(0)] * order
    for w, t in zip(weights, terms):
        if w:
            for i in range(order):
                total[i] += w * t.coeffs[i]
    return QSeries(total)


def _expand_general(n, a, order):
    return _combine(_general_terms(n, order), a, order)


def _expand_even(n, b, order):
    return _combine(_even_terms(n, order), (Fraction(1),) + tuple(b), order)


def default_order(n: int) -> int:
    return 2 * (n // 8 + 1) + 4


def _check_surplus(counts: Sequence[int], fitted: QSeries, start: int):
    for k in range(start, len(counts)):
        if fitted[k] != counts[k]:
            raise SeriesMismatchError(
                f"coefficient of q^{k} is {counts[k]} but the fitted expansion gives {fitted[k]}"
            )


def _counts_of(theta) -> list[int]:
    return list(getattr(theta, "counts", theta))


def fit_a_basis(theta, n: int) -> BasisCoeffsGeneral:
    """Solve for a_0..a_mu from N_0..N_mu; any further counts are cross-checked."""
    counts = _counts_of(theta)
    mu = n // 8
    if n < 1:
        raise ValueError("dimension must be positive")
    if len(counts) < mu + 1:
        raise InsufficientDataError(f"need N_0..N_{mu} ({mu + 1} counts), got {len(counts)}")
    order = len(counts)
    terms = _general_terms(n, order)
    a: list[Fraction] = []
    # term r starts at q^r with coefficient 1
    for r in range(mu + 1):
        partial = sum((a[s] * terms[s][r] for s in range(r)), Fraction(0))
        a.append(Fraction(counts[r]) - partial)
    fitted = _combine(terms, a, order)
    _check_surplus(counts, fitted, mu + 1)
    return BasisCoeffsGeneral(n, tuple(a))


def fit_b_basis(theta, n: int) -> BasisCoeffsEven:
    """Solve for b_1..b_m from N_0, N_2, ..., N_2m; remaining counts are cross-checked."""
    counts = _counts_of(theta)
    if n < 8 or n % 8:
        raise ValueError(f"even unimodular dimension must be a positive multiple of 8, got {n}")
    odd = [k for k in range(1, len(counts), 2) if counts[k]]
    if odd:
        raise ValueError(f"even lattice expected but N_{odd[0]} = {counts[odd[0]]}")
    m = n // 24
    if len(counts) < 2 * m + 1:
        raise InsufficientDataError(f"need N_0..N_{2 * m} ({2 * m + 1} counts), got {len(counts)}")
    if counts[0] != 1:
        raise SeriesMismatchError(f"N_0 must be 1, got {counts[0]}")
    order = len(counts)
    terms = _even_terms(n, order)
    b: list[Fraction] = []
    # Delta^j starts at q^(2j) with coefficient 1
    for j in range(1, m + 1):
        partial = terms[0][2 * j] + sum(
            (b[i - 1] * terms[i][2 * j] for i in range(1, j)), Fraction(0)
        )
        b.append(Fraction(counts[2 * j]) - partial)
    fitted = _combine(terms, [Fraction(1)] + b, order)
    _check_surplus(counts, fitted, 1)
    return BasisCoeffsEven(n, tuple(b))


def extremal_b_coeffs(n: int) -> BasisCoeffsEven:
    """Coefficients making N_2 = ... = N_2m = 0, i.e. minimal norm 2m + 2."""
    if n < 8 or n % 8:
        raise ValueError(f"dimension must be a positive multiple of 8, got {n}")
    m = n // 24
    order = 2 * m + 3
    zeros = [1] + [0] * (2 * m)
    c = fit_b_basis(zeros, n)
    series = c.expand(order)
    return BasisCoeffsEven(n, c.b, shortest_count=int(series[2 * m + 2]))
