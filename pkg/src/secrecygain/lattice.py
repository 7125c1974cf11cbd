"""Integral Gram matrices: unimodularity checks and exact vector counts."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

DEFAULT_BUDGET = 10**9


class LatticeError(ValueError):
    """The Gram matrix does not describe a positive-definite unimodular lattice."""


class EnumerationBudgetError(RuntimeError):
    """Enumeration would exceed (or did exceed) the candidate budget."""


@dataclass(frozen=True)
class GramMatrix:
    entries: tuple[tuple[int, ...], ...]

    def __init__(self, entries: Sequence[Sequence[int]]):
        rows = []
        for row in entries:
            r = []
            for x in row:
                if isinstance(x, float) and not x.is_integer():
                    raise LatticeError(f"Gram entries must be integers, got {x!r}")
                if int(x) != x:
                    raise LatticeError(f"Gram entries must be integers, got {x!r}")
                r.append(int(x))
            rows.append(tuple(r))
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise LatticeError("Gram matrix must be square and non-empty")
        object.__setattr__(self, "entries", tuple(rows))

    @property
    def n(self) -> int:
        return len(self.entries)

    def norm(self, x: Sequence[int]) -> int:
        g = self.entries
        return sum(x[i] * g[i][j] * x[j] for i in range(self.n) for j in range(self.n))


@dataclass(frozen=True)
class ThetaCoefficients:
    """N_0..N_cut, where N_k counts the lattice vectors of squared norm k."""

    counts: tuple[int, ...]

    def __init__(self, counts: Sequence[int]):
        counts = tuple(int(c) for c in counts)
        if not counts or counts[0] != 1:
            raise ValueError("N_0 must be 1")
        for k, c in enumerate(counts[1:], 1):
            if c < 0 or c % 2:
                raise ValueError(f"N_{k} = {c} must be a non-negative even integer")
        object.__setattr__(self, "counts", counts)

    @property
    def cut(self) -> int:
        return len(self.counts) - 1

    def __len__(self) -> int:
        return len(self.counts)

    def __getitem__(self, k):
        return self.counts[k]

    def is_even(self) -> bool:
        return not any(self.counts[1::2])


def _ldl(g: GramMatrix) -> tuple[list[Fraction], list[list[Fraction]]]:
    """Exact G = L D L^T; raises unless every pivot is positive."""
    n = g.n
    a = [[Fraction(x) for x in row] for row in g.entries]
    d: list[Fraction] = []
    lower = [[Fraction(0)] * n for _ in range(n)]
    for j in range(n):
        s = a[j][j] - sum(lower[j][k] ** 2 * d[k] for k in range(j))
        if s <= 0:
            raise LatticeError(f"Gram matrix is not positive definite (leading minor {j + 1})")
        d.append(s)
        lower[j][j] = Fraction(1)
        for i in range(j + 1, n):
            lower[i][j] = (a[i][j] - sum(lower[i][k] * lower[j][k] * d[k] for k in range(j))) / s
    return d, lower


def validate_unimodular(g: GramMatrix) -> str:
    """Return ``"even"`` or ``"odd"`` for a valid unimodular Gram matrix."""
    e = g.entries
    n = g.n
    for i in range(n):
        for j in range(i + 1, n):
            if e[i][j] != e[j][i]:
                raise LatticeError(f"Gram matrix is not symmetric at ({i}, {j})")
    d, _ = _ldl(g)
    det = math.prod(d)
    if det != 1:
        raise LatticeError(f"determinant is {det}, expected 1")
    even = all(e[i][i] % 2 == 0 for i in range(n))
    if even and n % 8:
        raise LatticeError(f"even unimodular lattice in dimension {n} (not divisible by 8)")
    return "even" if even else "odd"


def estimate_candidates(n: int, max_norm: int) -> float:
    """Gaussian-heuristic count of lattice points in the ball of squared radius max_norm."""
    log_vol = (n / 2) * math.log(math.pi * max_norm) - math.lgamma(n / 2 + 1)
    return math.exp(min(log_vol, 700.0))


def enumerate_counts(
    g: GramMatrix, max_norm: int, budget: int = DEFAULT_BUDGET
) -> ThetaCoefficients:
    """Count vectors of each squared norm 0..max_norm by Fincke-Pohst enumeration.

    Only vectors whose last nonzero coordinate is positive are visited; each
    stands for the pair +x, -x.
    """
    if max_norm < 1:
        raise ValueError("max_norm must be at least 1")
    validate_unimodular(g)
    n = g.n
    est = estimate_candidates(n, max_norm)
    if est > budget:
        raise EnumerationBudgetError(
            f"about {est:.3g} lattice points of norm <= {max_norm} in dimension {n}; budget is {budget}"
        )
    d, lower = _ldl(g)
    # Q(x) = sum_i d_i (x_i + sum_{j>i} L_ji x_j)^2
    counts = [0] * (max_norm + 1)
    x = [0] * n
    bound = Fraction(max_norm)
    visited = 0

    def search(i: int, remaining: Fraction, all_zero: bool) -> None:
        nonlocal visited
        visited += 1
        if visited > 4 * budget:
            raise EnumerationBudgetError(f"enumeration visited more than {4 * budget} nodes")
        center = -sum((lower[j][i] * x[j] for j in range(i + 1, n)), Fraction(0))
        di = d[i]

        def cost(v: int) -> Fraction:
            return di * (v - center) ** 2

        start = math.floor(center + Fraction(1, 2))
        if all_zero:
            # sign normalisation: coordinate i must be >= 0
            start = max(start, 0)
        if cost(start) > remaining:
            return
        for direction in (1, -1):
            v = start if direction == 1 else start - 1
            while True:
                if all_zero and v < 0:
                    break
                c = cost(v)
                if c > remaining:
                    break
                x[i] = v
                rest = remaining - c
                if i == 0:
                    if not (all_zero and v == 0):
                        counts[int(bound - rest)] += 2
                else:
                    search(i - 1, rest, all_zero and v == 0)
                v += direction
        x[i] = 0

    search(n - 1, bound, True)
    counts[0] = 1
    return ThetaCoefficients(counts)
