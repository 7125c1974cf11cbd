"""Secrecy denominators D(z) and the secrecy function Xi(y) = 1 / D(z(y)).

Here z = theta2^4 theta4^4 / theta3^8, so Theta_{Z^n} / Theta_L = 1 / D(z)
for every unimodular lattice L.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import theta_numeric as tn
from .poly import PolyQ, from_factored
from .qseries import BasisCoeffsEven, BasisCoeffsGeneral, base_series, fit_a_basis

QUARTER = Fraction(1, 4)


class InvalidProfileError(ValueError):
    """D cannot be the denominator of a positive theta quotient."""


class InsufficientCutError(ValueError):
    def __init__(self, required_cut: int, available: int):
        self.required_cut = required_cut
        super().__init__(
            f"theta series known to q^{available} but q^{required_cut} is needed for the requested precision"
        )


@dataclass(frozen=True)
class SecrecyProfile:
    n: int
    D: PolyQ
    gain_at_one: Fraction
    provenance: str  # "from_ar", "from_bj" or "extremal"


def denom_from_ar(c: BasisCoeffsGeneral) -> PolyQ:
    return PolyQ(a / 16**r for r, a in enumerate(c.a))


def denom_from_bj(c: BasisCoeffsEven) -> PolyQ:
    m, k = c.m, c.k
    terms = [(1, 3 * m + k, 0)]
    terms += [(b / 256**j, 3 * (m - j) + k, 2 * j) for j, b in enumerate(c.b, 1)]
    return from_factored(terms)


def gain_at_one(D: PolyQ) -> Fraction:
    """1 / D(1/4), the value of Xi at y = 1."""
    value = D(QUARTER)
    if value <= 0:
        raise InvalidProfileError(f"D(1/4) = {value} is not positive")
    return 1 / value


def make_profile(n: int, D: PolyQ, provenance: str) -> SecrecyProfile:
    return SecrecyProfile(n, D, gain_at_one(D), provenance)


# D has large coefficients in high dimension; z is always taken to 30 digits.
_Z_PRECISION = 1e-30


def xi_poly(D: PolyQ, y: float, precision: float = 1e-12) -> float:
    tn.EvalRequest(y, precision)
    z = tn.z_mp(y, min(precision, _Z_PRECISION))
    return float(1 / D(z))


def _series_value(coeffs, q):
    total = 0
    for c in reversed(coeffs):
        total = total * q + tn._mp.mpf(c.numerator) / c.denominator
    return total


def _majorant(a, n, y_outer, eps):
    # |[q^k] theta3^(n-8r) Delta8^r| <= [q^k] theta3^(n-4r) theta2^(4r) / 16^r
    t2 = tn.theta_mp(tn.ThetaKind.THETA2, y_outer, eps)
    t3 = tn.theta_mp(tn.ThetaKind.THETA3, y_outer, eps)
    total = 0
    for r, ar in enumerate(a):
        if ar:
            total += abs(tn._mp.mpf(ar.numerator) / ar.denominator) * t3 ** (n - 4 * r) * t2 ** (4 * r) / 16**r
    return total * (1 + tn._mp.mpf(10) ** -20)


def _required_order(y, n, a, rel_tol):
    """Smallest K with both theta tails beyond q^K below rel_tol times the head."""
    mp = tn._mp
    y = mp.mpf(y)
    # Sum_{k>K} M_k q^k <= (q/q')^(K+1) M(q') for any q' in (q, 1); take q' = sqrt(q).
    y_outer = y / 2
    ratio_log = -mp.pi * y / 2
    t3_outer = tn.theta_mp(tn.ThetaKind.THETA3, y_outer, 1e-30)
    bound_num = t3_outer**n
    bound_den = _majorant(a, n, y_outer, 1e-30)
    # heads are at least their constant terms (N_0 = 1 and Theta_Z^n >= 1)
    worst = max(bound_num, bound_den)
    k = mp.ceil((mp.log(rel_tol) - mp.log(worst)) / ratio_log)
    return max(int(k), 1), y_outer


def xi_direct(theta, n: int, y: float, precision: float = 1e-12, extend: bool = True) -> float:
    """Theta_{Z^n}(yi) / Theta_L(yi) by summing both q-series term by term.

    Tails are bounded by comparison with the series at a larger nome, where
    the lattice series is dominated through its fitted theta3/Delta8
    expansion. With ``extend`` (the default) missing coefficients are taken
    from that fitted expansion; otherwise a short input raises
    :class:`InsufficientCutError`.
    """
    tn.EvalRequest(y, precision)
    counts = list(getattr(theta, "counts", theta))
    fit = fit_a_basis(counts, n)
    mp = tn._mp
    q = mp.exp(-mp.pi * mp.mpf(y))

    # Theta_L(yi) >= 1 (N_0 = 1, counts non-negative), so Xi <= theta3(yi)^n.
    xi_bound = tn.theta_mp(tn.ThetaKind.THETA3, y, 1e-30) ** n
    rel_tol = mp.mpf(precision) / (8 * (xi_bound + 1))
    order, _ = _required_order(y, n, fit.a, rel_tol)
    if order + 1 > len(counts):
        if not extend:
            raise InsufficientCutError(order, len(counts) - 1)
        den_coeffs = fit.expand(order + 1).coeffs
    else:
        den_coeffs = [Fraction(c) for c in counts[: order + 1]]
    num_coeffs = (base_series("theta3", order + 1) ** n).coeffs
    return float(_series_value(num_coeffs, q) / _series_value(den_coeffs, q))


def profile_curve(D: PolyQ, ys, precision: float = 1e-12) -> list[tuple[float, float, float]]:
    """(y, z, Xi) rows for plotting."""
    rows = []
    for y in ys:
        z = tn.z_mp(y, min(precision, _Z_PRECISION))
        rows.append((float(y), float(z), float(1 / D(z))))
    return rows


def log_grid(y0: float, y1: float, steps: int) -> list[float]:
    """``steps`` points from y0 to y1 equally spaced in log y (so 1/y maps onto the grid when y0 y1 = 1)."""
    if steps < 1:
        raise ValueError("steps must be positive")
    if steps == 1:
        return [y0]
    lo, hi = math.log(y0), math.log(y1)
    return [math.exp(lo + (hi - lo) * i / (steps - 1)) for i in range(steps)]
