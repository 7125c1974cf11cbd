"""Floating evaluation of the theta constants on the imaginary axis.

Two independent routes are provided: the lattice sums over n in Z and the
Jacobi triple products. Both run in a private mpmath context at 50 decimal
digits, so callers can share them across threads.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from mpmath.ctx_mp import MPContext

_mp = MPContext()
_mp.dps = 50

MIN_PRECISION = 1e-40
# Below this y the nome is close to 1; map through y -> 1/y first.
_TRANSFORM_BELOW = 0.1


class DomainError(ValueError):
    """Raised for a non-positive argument or precision."""


class ThetaKind(enum.Enum):
    THETA2 = 2
    THETA3 = 3
    THETA4 = 4


# y -> 1/y swaps theta2 and theta4 and fixes theta3.
_DUAL = {
    ThetaKind.THETA2: ThetaKind.THETA4,
    ThetaKind.THETA3: ThetaKind.THETA3,
    ThetaKind.THETA4: ThetaKind.THETA2,
}


@dataclass(frozen=True)
class EvalRequest:
    y: float
    precision: float = 1e-12

    def __post_init__(self):
        if not self.y > 0:
            raise DomainError(f"y must be positive, got {self.y!r}")
        if not self.precision > 0:
            raise DomainError(f"precision must be positive, got {self.precision!r}")


def _check(y, precision):
    EvalRequest(y, precision)
    return _mp.mpf(y), _mp.mpf(max(precision, MIN_PRECISION))


def _series_mp(kind: ThetaKind, y, eps):
    q = _mp.exp(-_mp.pi * y)
    one_minus_q = 1 - q
    if kind is ThetaKind.THETA2:
        # 2 * sum_{n>=0} q^((n+1/2)^2)
        total = _mp.mpf(0)
        n = 0
        while True:
            total += 2 * q ** ((n + _mp.mpf(0.5)) ** 2)
            n += 1
            if 2 * q ** ((n + _mp.mpf(0.5)) ** 2) / one_minus_q < eps / 2:
                return total
    sign = -1 if kind is ThetaKind.THETA4 else 1
    total = _mp.mpf(1)
    n = 1
    while True:
        total += 2 * sign**n * q ** (n * n)
        n += 1
        if 2 * q ** (n * n) / one_minus_q < eps / 2:
            return total


def _product_mp(kind: ThetaKind, y, eps):
    q = _mp.exp(-_mp.pi * y)
    if kind is ThetaKind.THETA2:
        value = 2 * q ** _mp.mpf(0.25)
    else:
        value = _mp.mpf(1)
    n = 1
    while True:
        q2n = q ** (2 * n)
        q2n1 = q ** (2 * n - 1)
        if kind is ThetaKind.THETA2:
            value *= (1 - q2n) * (1 + q2n) ** 2
        elif kind is ThetaKind.THETA3:
            value *= (1 - q2n) * (1 + q2n1) ** 2
        else:
            value *= (1 - q2n) * (1 - q2n1) ** 2
        # |log| of all remaining factors is below 4 q^(2n+1) / (1-q)^2.
        tail = 4 * q ** (2 * n + 1) / (1 - q) ** 2
        if tail < 0.5 and 2 * tail * value * 2 < eps / 2:
            return value
        n += 1


def _evaluate(kind, y, eps, route):
    if y < _TRANSFORM_BELOW:
        # theta_k(yi) = theta_dual(i/y) / sqrt(y)
        root = _mp.sqrt(y)
        return route(_DUAL[kind], 1 / y, eps * root) / root
    return route(kind, y, eps)


def theta_mp(kind: ThetaKind, y, precision: float = 1e-12):
    """Series value as an mpmath number (for internal high-precision use)."""
    y, eps = _check(y, precision)
    return _evaluate(kind, y, eps, _series_mp)


def theta_product_mp(kind: ThetaKind, y, precision: float = 1e-12):
    y, eps = _check(y, precision)
    return _evaluate(kind, y, eps, _product_mp)


def eval_theta(kind: ThetaKind, req: EvalRequest) -> float:
    """Value of theta_kind(yi) from its lattice sum.

    The sum is cut once the geometric bound on the remaining terms drops
    below ``req.precision / 2``.
    """
    return float(theta_mp(kind, req.y, req.precision))


def eval_theta_product(kind: ThetaKind, req: EvalRequest) -> float:
    """Value of theta_kind(yi) from its triple product representation."""
    return float(theta_product_mp(kind, req.y, req.precision))


def z_mp(y, precision: float = 1e-12):
    y, eps = _check(y, precision)
    t2 = _evaluate(ThetaKind.THETA2, y, eps, _series_mp)
    t3 = _evaluate(ThetaKind.THETA3, y, eps, _series_mp)
    t4 = _evaluate(ThetaKind.THETA4, y, eps, _series_mp)
    return (t2 * t4) ** 4 / t3**8


def z_of_y(y: float, precision: float = 1e-12) -> float:
    """theta2^4 theta4^4 / theta3^8 at tau = yi; lies in (0, 1/4]."""
    return float(z_mp(y, precision))


def eta_ratio_mp(y, precision: float = 1e-12):
    """theta2 theta4 / theta3^2 as 2 (g^(1/24) prod (1 + (-g)^n))^6, g = e^(-pi y)."""
    y, eps = _check(y, precision)
    if y < 1:
        # the ratio is invariant under y -> 1/y; keep g small
        y = 1 / y
    g = _mp.exp(-_mp.pi * y)
    prod = _mp.mpf(1)
    n = 1
    while True:
        prod *= 1 + (-g) ** n
        n += 1
        if g**n / (1 - g) < eps / 100:
            break
    return 2 * (g ** (_mp.mpf(1) / 24) * prod) ** 6


def z_of_y_eta(y: float, precision: float = 1e-12) -> float:
    """Cross-check of :func:`z_of_y` through the single-product identity."""
    return float(eta_ratio_mp(y, precision) ** 4)


@dataclass(frozen=True)
class IdentityResiduals:
    theta2_to_theta4: float
    theta3_to_theta3: float
    theta4_to_theta2: float
    jacobi: float

    @property
    def max(self) -> float:
        return max(
            self.theta2_to_theta4, self.theta3_to_theta3, self.theta4_to_theta2, self.jacobi
        )


def transform_residuals(y: float, precision: float = 1e-12) -> IdentityResiduals:
    y_mp, eps = _check(y, precision)
    inv = 1 / y_mp
    root = _mp.sqrt(y_mp)
    # evaluate both sides directly, without the internal y -> 1/y mapping
    eps = min(eps, _mp.mpf(1e-25))
    direct = {k: _series_mp(k, y_mp, eps) for k in ThetaKind}
    dual = {k: _series_mp(k, inv, eps) for k in ThetaKind}
    t2, t3, t4 = (direct[k] for k in ThetaKind)
    return IdentityResiduals(
        theta2_to_theta4=float(abs(dual[ThetaKind.THETA2] - root * t4)),
        theta3_to_theta3=float(abs(dual[ThetaKind.THETA3] - root * t3)),
        theta4_to_theta2=float(abs(dual[ThetaKind.THETA4] - root * t2)),
        jacobi=float(abs(t2**4 + t4**4 - t3**4) / t3**4),
    )


def check_transform_identities(y: float, precision: float = 1e-12) -> float:
    """Largest residual among the three y -> 1/y identities and Jacobi's identity.

    The Jacobi residual is relative to theta3^4; the others are absolute.
    """
    return transform_residuals(y, precision).max
