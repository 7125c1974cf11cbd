import random

import pytest
from hypothesis import given, settings, strategies as st

from secrecygain.lattice import (
    EnumerationBudgetError,
    GramMatrix,
    LatticeError,
    ThetaCoefficients,
    enumerate_counts,
    validate_unimodular,
)
from secrecygain.qseries import base_series, fit_a_basis

from .conftest import box_radius, naive_counts


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def random_unimodular(n, rng, steps=6):
    u = identity(n)
    for _ in range(steps):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i == j:
            continue
        c = rng.choice([-1, 1])
        for row in u:
            row[i] += c * row[j]
    if rng.random() < 0.5:
        for row in u:
            row[0] = -row[0]
    return u


def transform(g, u):
    n = len(g)
    return [
        [sum(u[k][i] * g[k][l] * u[l][j] for k in range(n) for l in range(n)) for j in range(n)]
        for i in range(n)
    ]


def test_parity():
    assert validate_unimodular(GramMatrix(identity(8))) == "odd"


def test_e8_even(e8_gram):
    assert validate_unimodular(GramMatrix(e8_gram)) == "even"


@pytest.mark.parametrize(
    "gram",
    [
        [[2, 0], [0, 1]],  # det 2
        [[1, 1], [0, 1]],  # not symmetric
        [[1, 2], [2, 1]],  # indefinite
        [[2, 1], [1, 2]],  # det 3
    ],
)
def test_validation_errors(gram):
    with pytest.raises(LatticeError):
        validate_unimodular(GramMatrix(gram))


def test_odd_form_in_reduced_disguise():
    assert validate_unimodular(GramMatrix([[2, 1], [1, 1]])) == "odd"


def test_non_integer_entries_rejected():
    with pytest.raises(LatticeError):
        GramMatrix([[1.5]])


def test_small_counts():
    assert enumerate_counts(GramMatrix([[1]]), 4).counts == (1, 2, 0, 0, 2)
    assert enumerate_counts(GramMatrix(identity(2)), 2).counts == (1, 4, 4)


def test_e8_counts_against_box(e8_gram):
    counts = enumerate_counts(GramMatrix(e8_gram), 2).counts
    assert counts == (1, 0, 240)
    radius = box_radius(e8_gram, 2)
    assert naive_counts(e8_gram, 2, radius) == [1, 0, 240]


def test_theta_coefficients_invariants():
    with pytest.raises(ValueError):
        ThetaCoefficients([2, 0])
    with pytest.raises(ValueError):
        ThetaCoefficients([1, 3])
    t = ThetaCoefficients([1, 0, 240])
    assert t.cut == 2 and t.is_even()


def test_budget_guard():
    with pytest.raises(EnumerationBudgetError):
        enumerate_counts(GramMatrix(identity(24)), 20)
    with pytest.raises(EnumerationBudgetError):
        enumerate_counts(GramMatrix(identity(8)), 4, budget=10)


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=1, max_value=8), st.integers(min_value=0, max_value=10**6))
def test_change_of_basis_invariance(n, seed):
    rng = random.Random(seed)
    g = identity(n)
    h = transform(g, random_unimodular(n, rng))
    max_norm = 3 if n > 5 else 4
    assert enumerate_counts(GramMatrix(h), max_norm) == enumerate_counts(GramMatrix(g), max_norm)


def test_e8_change_of_basis(e8_gram):
    rng = random.Random(7)
    h = transform(e8_gram, random_unimodular(8, rng))
    assert validate_unimodular(GramMatrix(h)) == "even"
    assert enumerate_counts(GramMatrix(h), 4).counts == (1, 0, 240, 0, 2160)


@pytest.mark.parametrize("seed", range(8))
def test_pruned_matches_naive(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 6)
    h = transform(identity(n), random_unimodular(n, rng, steps=3))
    max_norm = rng.randint(1, 6 if n <= 4 else 4)
    radius = box_radius(h, max_norm)
    assert list(enumerate_counts(GramMatrix(h), max_norm).counts) == naive_counts(h, max_norm, radius)


@pytest.mark.parametrize("n", [3, 5, 7])
def test_counts_fit_round_trip(n):
    counts = enumerate_counts(GramMatrix(identity(n)), n // 8 + 5)
    assert list(counts.counts) == (base_series("theta3", len(counts)) ** n).as_ints()
    assert fit_a_basis(counts, n).expand(len(counts)).as_ints() == list(counts.counts)
