"""Certified decision of whether D attains its minimum on [0, 1/4] at z = 1/4.

All reasoning is exact: Sturm sequences over the rationals, bisection with
rational endpoints and sign probes at rational points.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .poly import PolyQ, format_poly, format_rational, square_free_part
from .secrecy import QUARTER, InvalidProfileError


class Status(enum.Enum):
    CONFIRMED_STRICT = "ConfirmedStrict"
    CONFIRMED_WITH_TIES = "ConfirmedWithTies"
    REFUTED = "Refuted"


@dataclass(frozen=True)
class IsolatingInterval:
    lo: Fraction
    hi: Fraction

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi


@dataclass(frozen=True)
class Witness:
    """An exact point where D is at most D(1/4), with the interval it came from.

    ``kind`` is ``minimum`` (an isolated critical point of D), ``tie`` (a root
    of D - D(1/4) where the sign does not change), ``limit`` (z = 0, only
    reached as y -> infinity) or ``probe`` (a sign probe inside a region where
    D < D(1/4)).
    """

    interval: IsolatingInterval
    probe: Fraction
    value: Fraction
    kind: str


@dataclass(frozen=True)
class Verdict:
    status: Status
    witnesses: tuple[Witness, ...]
    gain: Fraction
    certificate: str = field(repr=False)


def sturm_sequence(p: PolyQ) -> list[PolyQ]:
    f = square_free_part(p)
    seq = [f, f.derivative()]
    while not seq[-1].is_zero():
        seq.append(-(seq[-2] % seq[-1]))
    return seq[:-1]


def _variations(seq: list[PolyQ], x: Fraction) -> int:
    signs = [s for s in (p(x) for p in seq) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def _check_interval(p: PolyQ, lo, hi):
    if p.is_zero():
        raise ValueError("zero polynomial")
    if not lo < hi:
        raise ValueError(f"empty interval ({lo}, {hi})")
    if p(lo) == 0 or p(hi) == 0:
        raise ValueError(f"polynomial vanishes at an endpoint of ({lo}, {hi}]")


def sturm_count(p: PolyQ, lo, hi) -> int:
    """Number of distinct real roots of ``p`` in (lo, hi]."""
    lo, hi = Fraction(lo), Fraction(hi)
    _check_interval(p, lo, hi)
    seq = sturm_sequence(p)
    return _variations(seq, lo) - _variations(seq, hi)


def _split_point(p: PolyQ, lo: Fraction, hi: Fraction) -> Fraction:
    # a point strictly inside (lo, hi) that is not a root of p
    num, den = 1, 2
    while True:
        x = lo + (hi - lo) * num / den
        if p(x) != 0:
            return x
        num, den = 2 * num + 1, 4 * den


def isolate_roots(p: PolyQ, lo, hi, width) -> list[IsolatingInterval]:
    """Disjoint intervals of width <= ``width``, one per root of ``p`` in (lo, hi)."""
    lo, hi, width = Fraction(lo), Fraction(hi), Fraction(width)
    _check_interval(p, lo, hi)
    if width <= 0:
        raise ValueError("width must be positive")
    seq = sturm_sequence(p)
    out: list[IsolatingInterval] = []
    stack = [(lo, hi, _variations(seq, lo), _variations(seq, hi))]
    while stack:
        a, b, va, vb = stack.pop()
        count = va - vb
        if count == 0:
            continue
        if count == 1 and b - a <= width:
            out.append(IsolatingInterval(a, b))
            continue
        c = _split_point(p, a, b)
        vc = _variations(seq, c)
        stack.append((c, b, vc, vb))
        stack.append((a, c, va, vc))
    return sorted(out, key=lambda iv: iv.lo)


def refine(p: PolyQ, iv: IsolatingInterval, width) -> IsolatingInterval:
    """Shrink an isolating interval of ``p`` below ``width``."""
    width = Fraction(width)
    seq = sturm_sequence(p)
    a, b = iv.lo, iv.hi
    va = _variations(seq, a)
    while b - a > width:
        c = _split_point(p, a, b)
        vc = _variations(seq, c)
        if va - vc:
            b = c
        else:
            a, va = c, vc
    return IsolatingInterval(a, b)


def _pull_inside(p: PolyQ, iv: IsolatingInterval, lo, hi) -> IsolatingInterval:
    # refine until the interval sits strictly inside (lo, hi)
    while iv.lo <= lo or iv.hi >= hi:
        iv = refine(p, iv, iv.width / 2)
    return iv


def _root_multiplicity(p: PolyQ, r: Fraction) -> tuple[int, PolyQ]:
    k = 0
    lin = PolyQ([-r, 1])
    while not p.is_zero() and p(r) == 0:
        p = p // lin
        k += 1
    return k, p


def _sign(x) -> str:
    return "+" if x > 0 else "-" if x < 0 else "0"


_WIDTH = Fraction(1, 10**8)


def _interior_minimum(D: PolyQ, lo: Fraction, hi: Fraction, width: Fraction):
    """Best rational probe at an isolated critical point of D inside (lo, hi)."""
    dD = D.derivative()
    if dD.is_zero():
        return None
    a, b = lo, hi
    while dD(a) == 0:
        a = a + (b - a) / 2**20
    while dD(b) == 0:
        b = b - (b - a) / 2**20
    best = None
    for iv in isolate_roots(dD, a, b, width):
        p = iv.mid
        v = D(p)
        if best is None or v < best[2]:
            best = (iv, p, v)
    return best


def verify_min_at_quarter(D: PolyQ, width=_WIDTH) -> Verdict:
    """Decide whether D(z) >= D(1/4) on [0, 1/4] with equality only at 1/4."""
    width = Fraction(width)
    lines = [f"polynomial: {format_poly(D)}"]
    d_quarter = D(QUARTER)
    if d_quarter <= 0:
        raise InvalidProfileError(f"D(1/4) = {d_quarter} is not positive")
    d_zero = D(Fraction(0))
    # A zero of D below 1/4 cannot come from a lattice; it is reported, and
    # the sign analysis below then refutes, since D(1/4) > 0.
    zero_free = d_zero > 0 and sturm_count(D, 0, QUARTER) == 0
    gain = 1 / d_quarter
    lines += [
        f"d_at_quarter: {format_rational(d_quarter)}",
        f"gain: {format_rational(gain)}",
        f"d_zero_free_on_closed_interval: {'yes' if zero_free else 'no'}",
    ]

    G = D - d_quarter
    if G.is_zero():
        lines += ["g_identically_zero: yes", f"status: {Status.CONFIRMED_WITH_TIES.value}"]
        return Verdict(Status.CONFIRMED_WITH_TIES, (), gain, "\n".join(lines) + "\n")

    mult_quarter, H = _root_multiplicity(G, QUARTER)
    mult_zero, H = _root_multiplicity(H, Fraction(0))
    lines.append(f"multiplicity_at_quarter: {mult_quarter}")
    lines.append(f"multiplicity_at_zero: {mult_zero}")

    roots = isolate_roots(H, 0, QUARTER, width) if H.degree > 0 else []
    roots = [_pull_inside(H, iv, Fraction(0), QUARTER) for iv in roots]
    lines.append(f"interior_roots: {len(roots)}")

    # regions of constant sign between consecutive roots; probe at an interval endpoint
    if roots:
        probes = [roots[0].lo] + [iv.hi for iv in roots]
        bounds = [Fraction(0)] + [x for iv in roots for x in (iv.lo, iv.hi)] + [QUARTER]
    else:
        probes = [QUARTER / 2]
        bounds = [Fraction(0), QUARTER]
    signs = [G(p) for p in probes]
    for i, (p, s) in enumerate(zip(probes, signs)):
        lines.append(f"region_{i}_probe: {format_rational(p)} sign {_sign(s)}")

    witnesses: list[Witness] = []
    negative = [i for i, s in enumerate(signs) if s < 0]
    for i in negative:
        lo, hi = bounds[2 * i], bounds[2 * i + 1]
        # search for the minimum across the neighbouring root intervals too
        span_lo = bounds[2 * i - 1] if i > 0 else Fraction(0)
        span_hi = bounds[2 * i + 2] if 2 * i + 2 < len(bounds) - 1 else QUARTER
        best = _interior_minimum(D, span_lo, span_hi, width)
        if best is not None and best[2] < d_quarter:
            iv, p, v = best
            witnesses.append(Witness(iv, p, v, "minimum"))
        else:
            p = probes[i]
            witnesses.append(Witness(IsolatingInterval(lo, hi), p, D(p), "probe"))
        if i == 0 and d_zero < d_quarter:
            witnesses.append(
                Witness(IsolatingInterval(Fraction(0), bounds[1]), Fraction(0), d_zero, "limit")
            )

    if not negative:
        for iv in roots:
            witnesses.append(Witness(iv, iv.mid, D(iv.mid), "tie"))
        if mult_zero:
            witnesses.append(
                Witness(IsolatingInterval(Fraction(0), bounds[1]), Fraction(0), d_zero, "limit")
            )

    if negative:
        status = Status.REFUTED
    elif witnesses:
        status = Status.CONFIRMED_WITH_TIES
    else:
        status = Status.CONFIRMED_STRICT

    for w in witnesses:
        lines.append(
            f"witness: {w.kind} [{format_rational(w.interval.lo)}, {format_rational(w.interval.hi)}]"
            f" probe {format_rational(w.probe)} d {format_rational(w.value)}"
        )
    lines.append(f"status: {status.value}")
    return Verdict(status, tuple(witnesses), gain, "\n".join(lines) + "\n")
