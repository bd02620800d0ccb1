import math
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from swld.correlation import (CorrelationModel, central_window, conditional_entropy,
                              error_pattern, pmf_binomial, sample_block, tail_radius)
from swld.gf import get_field

# chi-square critical value for 254 degrees of freedom at the 0.001 level
CHI2_CRIT_254_P999 = 335.0


@pytest.mark.parametrize("n,p,eps,want", [
    (1000, 0.2, 1e-4, 248),
    (1000, 0.2, 1e-5, 256),
    (255, 0.3, 1e-4, 105),
    (1023, 0.2, 1e-4, 254),
    (255, 0.41, 1e-3, 129),
    (1023, 0.21, 1e-3, 256),
])
def test_tail_radius_design_points(n, p, eps, want):
    assert tail_radius(n, p, eps) == want


def tail_exact(n: int, p: float, T: int) -> Fraction:
    fp = Fraction(p)
    return sum(
        Fraction(math.comb(n, i)) * fp ** i * (1 - fp) ** (n - i)
        for i in range(T + 1, n + 1)
    )


@pytest.mark.parametrize("n", [12, 33, 64])
@pytest.mark.parametrize("p", [0.1, 0.25, 0.5, 0.8])
@pytest.mark.parametrize("eps", [1e-1, 1e-3, 1e-5])
def test_strict_tail_radius_minimal_vs_rational_oracle(n, p, eps):
    t = tail_radius(n, p, eps, margin_trials=0)
    feps = Fraction(eps)
    assert tail_exact(n, p, t) < feps
    if t > 0:
        assert tail_exact(n, p, t - 1) >= feps


def test_margin_convention_vs_strict():
    # the default adds one virtual trial; it can exceed the strict radius
    # only on hairline cases, and never undershoots it
    for n, p, eps in ((255, 0.3, 1e-4), (1023, 0.2, 1e-4), (1000, 0.2, 1e-4)):
        strict = tail_radius(n, p, eps, margin_trials=0)
        assert strict <= tail_radius(n, p, eps) <= strict + 1
    assert tail_radius(255, 0.3, 1e-4, margin_trials=0) == 104
    assert tail_radius(1023, 0.2, 1e-4, margin_trials=0) == 253


def test_tail_radius_monotonicity_grid():
    for n in (64, 255):
        for p in (0.1, 0.2, 0.3):
            for eps_hi, eps_lo in ((1e-2, 1e-3), (1e-3, 1e-4)):
                assert tail_radius(n, p, eps_lo) >= tail_radius(n, p, eps_hi)
            assert tail_radius(n, p + 0.05, 1e-3) >= tail_radius(n, p, 1e-3)
        assert tail_radius(2 * n, 0.2, 1e-3) >= tail_radius(n, 0.2, 1e-3)


def test_tail_radius_degenerate_p():
    assert tail_radius(100, 0.0, 1e-4) == 0
    assert tail_radius(100, 1.0, 1e-4) == 100


def test_conditional_entropy_examples():
    assert conditional_entropy(0.0, 256) == 0.0
    assert conditional_entropy(0.5, 2) == pytest.approx(1.0)
    assert conditional_entropy(1 - 1 / 256, 256) == pytest.approx(1.0)
    assert conditional_entropy(1 - 1 / 2, 2) == pytest.approx(1.0)


def test_conditional_entropy_concavity_grid():
    q = 256
    hi = 1 - 1 / q
    grid = [hi * i / 20 for i in range(21)]
    for a, b in zip(grid, grid[2:]):
        mid = (a + b) / 2
        assert conditional_entropy(mid, q) >= (
            conditional_entropy(a, q) + conditional_entropy(b, q)
        ) / 2 - 1e-12


@given(st.floats(min_value=1e-6, max_value=0.49), st.floats(min_value=1e-6, max_value=0.2))
def test_central_window_contains_mode(p, eps):
    lo, hi = central_window(255, p, eps)
    assert lo <= int(255 * p) <= hi


def test_central_window_covers_mass_and_is_tight():
    for n, p, eps in ((255, 0.34, 1e-3), (1023, 0.2, 1e-3), (255, 0.05, 1e-4)):
        lo, hi = central_window(n, p, eps)
        pmf = pmf_binomial(n, p)
        assert pmf[lo : hi + 1].sum() > 1 - eps
        assert pmf[:lo].sum() < eps / 2
        assert pmf[hi + 1 :].sum() < eps / 2
        # each bound is extremal for its half budget
        assert pmf[: lo + 1].sum() >= eps / 2
        assert pmf[hi:].sum() >= eps / 2


def test_central_window_zero_p():
    assert central_window(255, 0.0, 1e-3) == (0, 0)


def test_wide_reference_window_is_valid():
    # a much wider window than the equal-split one still satisfies the
    # coverage predicate, which is the contract the planner relies on
    pmf = pmf_binomial(255, 0.34)
    assert pmf[3:172].sum() > 1 - 1e-3


def test_sampling_zero_noise():
    model = CorrelationModel(get_field(8), 0.0, seed=1)
    x = sample_block(255, 256, random.Random(2))
    y, e = model.sample(x)
    assert e == 0 and (y == x).all()


def test_sampling_deterministic():
    model = CorrelationModel(get_field(8), 0.3, seed=99)
    x = sample_block(255, 256, random.Random(3))
    y1, e1 = model.sample(x)
    y2, e2 = model.sample(x)
    assert e1 == e2 and (y1 == y2).all()


def test_sampling_statistics_and_uniformity():
    n = 100_000
    model = CorrelationModel(get_field(8), 0.3, seed=7)
    x = np.zeros(n, dtype=np.int32)
    y, e = model.sample(x)
    sigma = math.sqrt(n * 0.3 * 0.7)
    assert abs(e - n * 0.3) <= 3 * sigma
    values = y[y != 0]
    counts = np.bincount(values, minlength=256)[1:]
    expected = len(values) / 255
    chi2 = float(((counts - expected) ** 2 / expected).sum())
    assert chi2 < CHI2_CRIT_254_P999


def test_error_pattern_weight():
    rng = random.Random(4)
    for w in (0, 1, 7, 100):
        e = error_pattern(255, w, 256, rng)
        assert int(np.count_nonzero(e)) == w


def test_model_rejects_bad_p():
    with pytest.raises(ValueError):
        CorrelationModel(get_field(8), 1.0, seed=0)
    with pytest.raises(ValueError):
        CorrelationModel(get_field(2), 0.76, seed=0)
