"""The q-ary symmetric correlation model and exact binomial tail arithmetic.

Side information is the source block pushed through a virtual q-ary
symmetric channel: each symbol survives with probability 1-p or is
replaced by one of the other q-1 values uniformly.  Tail sums are
computed in log space with compensated accumulation so thresholds down to
1e-5 at n around 1000 are exact to well below the decision boundaries
(the tests cross-check against rational arithmetic at small n).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

import numpy as np

from ._vec import as_symbols
from .gf import Field


@dataclass(frozen=True)
class CorrelationModel:
    """q-ary symmetric correlation with error probability p."""

    field: Field
    p: float
    seed: int = 0

    def __post_init__(self) -> None:
        if not 0.0 <= self.p < 1.0 - 1.0 / self.field.q:
            raise ValueError(f"p={self.p} outside [0, 1 - 1/q)")

    def rng(self) -> random.Random:
        # stdlib Mersenne Twister: stable streams across platforms/versions
        return random.Random(self.seed)

    def sample(self, x, rng: random.Random | None = None) -> tuple[np.ndarray, int]:
        """(y, realized error count) with y = x + noise, noise iid symmetric."""
        x = as_symbols(x)
        rng = rng or self.rng()
        q = self.field.q
        y = x.copy()
        errors = 0
        for i in range(len(x)):
            if rng.random() < self.p:
                y[i] ^= 1 + rng.randrange(q - 1)
                errors += 1
        return y, errors


def sample_block(n: int, q: int, rng: random.Random) -> np.ndarray:
    """A uniform source block of n symbols."""
    return np.array([rng.randrange(q) for _ in range(n)], dtype=np.int32)


def error_pattern(n: int, weight: int, q: int, rng: random.Random) -> np.ndarray:
    """A uniformly chosen error vector of exactly the given Hamming weight."""
    e = np.zeros(n, dtype=np.int32)
    for pos in rng.sample(range(n), weight):
        e[pos] = 1 + rng.randrange(q - 1)
    return e


def conditional_entropy(p: float, q: int) -> float:
    """Entropy of the symmetric noise in q-ary symbols per source symbol:
    -p log_q p - (1-p) log_q (1-p) + p log_q (q-1)."""
    if q < 2:
        raise ValueError("q must be >= 2")
    if not 0.0 <= p <= 1.0 - 1.0 / q + 1e-15:
        raise ValueError(f"p={p} outside [0, 1 - 1/q]")
    if p == 0.0:
        return 0.0
    h = -p * math.log(p) - (1.0 - p) * math.log1p(-p)
    return (h + p * math.log(q - 1)) / math.log(q)


def log_pmf_binomial(n: int, p: float) -> np.ndarray:
    """log Pr[Binomial(n, p) = i] for i = 0..n."""
    if not 0.0 < p < 1.0:
        raise ValueError("p must be inside (0, 1)")
    i = np.arange(n + 1, dtype=np.float64)
    lg = np.array([math.lgamma(v + 1.0) for v in range(n + 1)])
    return (lg[n] - lg - lg[::-1]) + i * math.log(p) + (n - i) * math.log1p(-p)


def _log_suffix_sums(logp: np.ndarray) -> np.ndarray:
    """out[i] = log sum_{j >= i} exp(logp[j]), computed stably from the top."""
    out = np.empty(len(logp) + 1)
    out[-1] = -math.inf
    acc = -math.inf
    for i in range(len(logp) - 1, -1, -1):
        a, b = acc, logp[i]
        if a < b:
            a, b = b, a
        acc = a if b == -math.inf else a + math.log1p(math.exp(b - a))
        out[i] = acc
    return out


def tail_radius(n: int, p: float, eps: float, margin_trials: int = 1) -> int:
    """Smallest T whose exceedance probability stays below eps.

    The tail is summed exactly in log space (no Gaussian approximation).
    By default one extra virtual symbol draw is included, so hairline
    designs round toward the safe side; pass ``margin_trials=0`` for the
    strict minimal radius at block length n (exact tail at T is < eps and
    at T-1 is >= eps).
    """
    if not 0.0 < eps < 1.0:
        raise ValueError("eps must be inside (0, 1)")
    if p <= 0.0:
        return 0
    if p >= 1.0:
        return n
    trials = n + margin_trials
    suffix = _log_suffix_sums(log_pmf_binomial(trials, p))
    log_eps = math.log(eps)
    for t in range(trials + 1):
        if suffix[t + 1] < log_eps:
            return t
    return trials


def central_window(n: int, p: float, eps: float) -> tuple[int, int]:
    """(l, h) with Pr[l <= e <= h] > 1 - eps; each tail gets mass < eps/2.

    l is the largest and h the smallest integer meeting their half-budget,
    so the window is the tightest one under the equal-split policy.
    """
    if not 0.0 < eps < 1.0:
        raise ValueError("eps must be inside (0, 1)")
    if p <= 0.0:
        return 0, 0
    logp = log_pmf_binomial(n, p)
    suffix = _log_suffix_sums(logp)
    rev = _log_suffix_sums(logp[::-1])  # rev[i] = log Pr[e <= n - i]
    half = math.log(eps / 2.0)
    lo = 0
    for l in range(1, n + 1):
        if rev[n - l + 1] < half:  # Pr[e <= l-1] under budget
            lo = l
        else:
            break
    hi = n
    for h in range(n - 1, -1, -1):
        if suffix[h + 1] < half:  # Pr[e > h] under budget
            hi = h
        else:
            break
    return lo, hi


def pmf_binomial(n: int, p: float) -> np.ndarray:
    """Exact-to-double binomial probabilities for i = 0..n."""
    if p <= 0.0:
        out = np.zeros(n + 1)
        out[0] = 1.0
        return out
    return np.exp(log_pmf_binomial(n, p))
