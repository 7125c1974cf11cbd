from fractions import Fraction

import pytest

from secrecygain.catalog import E8_GRAM


@pytest.fixture
def e8_gram():
    return [list(r) for r in E8_GRAM]


def naive_counts(gram, max_norm, radius):
    """Vector counts by scanning the coefficient box |x_i| <= radius[i]."""
    import itertools

    import numpy as np

    n = len(gram)
    g = np.array(gram, dtype=np.int64)
    counts = [0] * (max_norm + 1)
    # vectorise over the last coordinates, loop over the first two
    head = [range(-radius[i], radius[i] + 1) for i in range(min(2, n))]
    tail_axes = [np.arange(-radius[i], radius[i] + 1) for i in range(len(head), n)]
    if tail_axes:
        mesh = np.stack(np.meshgrid(*tail_axes, indexing="ij"), -1).reshape(-1, n - len(head))
    else:
        mesh = np.zeros((1, 0), dtype=np.int64)
    for prefix in itertools.product(*head):
        x = np.hstack([np.tile(np.array(prefix, dtype=np.int64), (len(mesh), 1)), mesh])
        norms = np.einsum("ij,jk,ik->i", x, g, x)
        vals, freq = np.unique(norms[norms <= max_norm], return_counts=True)
        for v, f in zip(vals, freq):
            counts[int(v)] += int(f)
    return counts


def box_radius(gram, max_norm):
    """|x_i| <= sqrt(max_norm * (G^-1)_ii) bounds every vector of norm <= max_norm."""
    import math

    import sympy

    inv = sympy.Matrix(gram).inv()
    return [math.isqrt(int(sympy.floor(max_norm * inv[i, i]))) for i in range(len(gram))]


def frac_list(xs):
    return [Fraction(x) for x in xs]


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    results = test_acceptance.RESULTS
    if results:
        terminalreporter.section("acceptance criteria")
        for number in sorted(results):
            terminalreporter.write_line(results[number])
