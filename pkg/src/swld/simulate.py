"""Seeded end-to-end trials for the coder and the feedback session.

Every trial derives its own RNG from (seed, index), so results are
reproducible regardless of worker count or scheduling; aggregation is by
index.  Trials can run in a process pool (the work is CPU-bound numpy
and compiled kernels).
"""

from __future__ import annotations

import os
import random
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .codec import DecodeStatus, decode, encode, feedback_run
from .correlation import CorrelationModel, error_pattern, sample_block
from .crc import get_crc
from .gf import get_field
from .listdecode import GsConfig
from .planner import FeedbackSchedule
from .rs import get_rs_code


@dataclass(frozen=True)
class TrialSpec:
    """One batch of coder trials at a fixed code and error-weight range."""

    m: int
    k: int
    crc_id: int
    multiplicity: int
    trials: int
    seed: int
    weight_lo: int
    weight_hi: int  # inclusive; error weights drawn uniformly in range

    @property
    def n(self) -> int:
        return (1 << self.m) - 1


@dataclass
class TrialStats:
    counts: Counter
    exact_recoveries: int
    wrong_recoveries: int
    mean_seconds: float
    max_seconds: float

    def total(self) -> int:
        return sum(self.counts.values())


def _trial_rng(seed: int, index: int) -> random.Random:
    return random.Random(f"{seed}:{index}")


def _one_trial(args: tuple[TrialSpec, int]) -> tuple[str, bool, bool, float]:
    spec, index = args
    rng = _trial_rng(spec.seed, index)
    code = get_rs_code(spec.m, spec.k)
    crc_spec = get_crc(spec.crc_id)
    cfg = GsConfig(multiplicity=spec.multiplicity)
    q = 1 << spec.m
    x = sample_block(spec.n, q, rng)
    weight = rng.randint(spec.weight_lo, spec.weight_hi)
    y = x ^ error_pattern(spec.n, weight, q, rng)
    pkt = encode(x, code, crc_spec)
    t0 = time.perf_counter()
    outcome = decode(pkt, y, cfg)
    elapsed = time.perf_counter() - t0
    exact = bool(outcome.ok and np.array_equal(outcome.recovered, x))
    wrong = bool(outcome.ok and not exact)
    return outcome.status.value, exact, wrong, elapsed


def run_trials(spec: TrialSpec, workers: int | None = None) -> TrialStats:
    tasks = [(spec, i) for i in range(spec.trials)]
    results = _map_tasks(_one_trial, tasks, workers)
    counts: Counter = Counter()
    exact = wrong = 0
    times = []
    for status, is_exact, is_wrong, elapsed in results:
        counts[status] += 1
        exact += is_exact
        wrong += is_wrong
        times.append(elapsed)
    return TrialStats(counts, exact, wrong,
                      sum(times) / len(times) if times else 0.0,
                      max(times, default=0.0))


@dataclass(frozen=True)
class FeedbackTrialSpec:
    schedule: FeedbackSchedule
    multiplicity: int
    trials: int
    seed: int


@dataclass
class FeedbackStats:
    counts: Counter
    exact_recoveries: int
    mean_rate: float
    mean_rounds: float
    transcripts: list


def _one_feedback_trial(args: tuple[FeedbackTrialSpec, int]):
    spec, index = args
    rng = _trial_rng(spec.seed, index)
    sched = spec.schedule
    model = CorrelationModel(get_field(_m_for(sched.q)), sched.p, seed=index)
    x = sample_block(sched.n, sched.q, rng)
    y, _ = model.sample(x, rng)
    res = feedback_run(x, y, sched, GsConfig(multiplicity=spec.multiplicity))
    exact = bool(res.status == DecodeStatus.SUCCESS and np.array_equal(res.recovered, x))
    return res.status.value, exact, res.realized_rate, res.rounds, res.transcript


def run_feedback_trials(spec: FeedbackTrialSpec, workers: int | None = None,
                        keep_transcripts: int = 0) -> FeedbackStats:
    tasks = [(spec, i) for i in range(spec.trials)]
    results = _map_tasks(_one_feedback_trial, tasks, workers)
    counts: Counter = Counter()
    exact = 0
    rates = []
    rounds = []
    transcripts = []
    for i, (status, is_exact, rate, nrounds, transcript) in enumerate(results):
        counts[status] += 1
        exact += is_exact
        rates.append(rate)
        rounds.append(nrounds)
        if i < keep_transcripts:
            transcripts.append(transcript)
    return FeedbackStats(counts, exact, float(np.mean(rates)), float(np.mean(rounds)),
                         transcripts)


def expected_feedback_rate_runtime(schedule: FeedbackSchedule, multiplicity: int) -> float:
    """What the ladder should average at runtime decoding radii.

    For each error count, the session stops at the first rung whose
    runtime (finite-multiplicity) radius covers it, paying the rung's
    syndrome length plus the one-time checksum; error counts beyond every
    rung pay for the whole ladder and fail.
    """
    from .correlation import pmf_binomial
    from .listdecode import gs_radius

    n = schedule.n
    pmf = pmf_binomial(n, schedule.p)
    rungs = schedule.distinct_rungs()
    radii = [gs_radius(n, r.k, multiplicity) for r in rungs]
    full_cost = (n - rungs[-1].k + schedule.rho) / n
    total = 0.0
    for e in range(n + 1):
        rate = full_cost
        for r, rad in zip(rungs, radii):
            if rad >= e:
                rate = (n - r.k + schedule.rho) / n
                break
        total += pmf[e] * rate
    return total


def _map_tasks(fn, tasks, workers: int | None):
    if workers is None:
        workers = min(os.cpu_count() or 1, 8)
    if workers <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    chunk = max(1, len(tasks) // (workers * 8))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, tasks, chunksize=chunk))


def _m_for(q: int) -> int:
    m = q.bit_length() - 1
    if q != 1 << m:
        raise ValueError(f"q={q} is not a power of two")
    return m
