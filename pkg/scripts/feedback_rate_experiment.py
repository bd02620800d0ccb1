#!/usr/bin/env python3
"""Seeded feedback sessions against the planner's expectations.

Runs end-to-end rate-adaptive sessions over a simulated correlation and
compares the mean realized rate with two planner figures: the formula
rate of the planning ladder and the expectation under the runtime
decoding radii at the chosen interpolation multiplicity.
"""

import argparse

from swld.planner import plan_feedback
from swld.simulate import (FeedbackTrialSpec, expected_feedback_rate_runtime,
                           run_feedback_trials)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=float, default=0.34)
    ap.add_argument("--eps", type=float, default=1e-3)
    ap.add_argument("--trials", type=int, default=400)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--mult", type=int, default=1)
    ap.add_argument("--workers", type=int, default=2)
    args = ap.parse_args()

    sched = plan_feedback(256, 255, args.p, args.eps)
    print(f"window: errors {sched.lo}..{sched.hi}, "
          f"{len(sched.distinct_rungs())} distinct rungs")
    print(f"planning-ladder expected rate : {sched.expected_rate:.4f}")
    print(f"smooth rate-curve expectation : {sched.expected_rate_smooth:.4f}")
    runtime = expected_feedback_rate_runtime(sched, args.mult)
    print(f"runtime-radius expectation    : {runtime:.4f} (multiplicity {args.mult})")

    spec = FeedbackTrialSpec(schedule=sched, multiplicity=args.mult,
                             trials=args.trials, seed=args.seed)
    stats = run_feedback_trials(spec, workers=args.workers)
    print(f"simulated mean realized rate  : {stats.mean_rate:.4f} "
          f"over {args.trials} sessions")
    print(f"mean rounds per session       : {stats.mean_rounds:.1f}")
    for status, count in sorted(stats.counts.items()):
        print(f"  {status}: {count}")
    print(f"agreement (simulated - runtime expectation): "
          f"{stats.mean_rate - runtime:+.4f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
