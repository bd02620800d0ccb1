"""Algebraic rate planning: pick codes, radii and checksum length from
(q, n, p, eps) alone, with no simulation in the loop.

For RS codes the planning radius is the asymptotic list-decoding radius
n(1 - sqrt(R)); rearranged, the largest usable dimension for a target
radius T is k = floor((n-T)^2 / n).  For binary BCH codes the planning
radius is (n/2)(1 - sqrt(1 - 2 delta/n)) over the generated
designed-distance ladder.  Plans also carry the radius the runtime
decoder actually guarantees at a finite interpolation multiplicity, so
the gap between the planning formula and desk-scale decoding stays
visible instead of hidden.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .bch import LadderEntry, designed_distance_ladder
from .correlation import conditional_entropy, central_window, pmf_binomial, tail_radius
from .crc import CrcSpec, default_crc_for_field
from .errors import InfeasiblePlanError
from .gf import get_field
from .listdecode import gs_radius


def choose_rs(n: int, radius: int) -> int:
    """Largest RS dimension whose planning radius n(1 - sqrt(k/n)) covers radius."""
    if not 0 <= radius < n:
        raise ValueError(f"radius {radius} outside [0, {n})")
    return min(max((n - radius) ** 2 // n, 1), n)


def choose_rs_unique(n: int, radius: int) -> int | None:
    """Largest RS dimension for unique decoding (d_min = 2*radius + 1), or None."""
    k = n - 2 * radius
    return k if k >= 1 else None


def wu_radius(n: int, delta: int) -> float:
    """Binary list-decoding radius (n/2)(1 - sqrt(1 - 2D)) at D = delta/n."""
    d_rel = delta / n
    return n / 2.0 * (1.0 - math.sqrt(max(0.0, 1.0 - 2.0 * d_rel)))


@dataclass(frozen=True)
class BchChoice:
    list_entry: LadderEntry
    list_radius: float
    unique_entry: LadderEntry | None


def choose_bch(m: int, radius: int) -> BchChoice:
    """Largest-dimension BCH codes reaching the radius, list and unique routes.

    The degenerate k=1 rung (the generator covering every nonzero
    exponent) is not offered: it certifies any distance but compresses
    nothing, and including it would misstate the family's maximum
    designed correcting capability.
    """
    n = (1 << m) - 1
    ladder = [e for e in designed_distance_ladder(m) if e.k >= 2]
    list_entry = None
    list_rad = 0.0
    for e in ladder:  # ascending delta = descending k; first hit is largest k
        rad = wu_radius(n, e.delta)
        if rad >= radius:
            list_entry, list_rad = e, rad
            break
    if list_entry is None:
        raise InfeasiblePlanError(f"no BCH code of length {n} reaches list radius {radius}")
    unique_entry = next((e for e in ladder if e.t >= radius), None)
    return BchChoice(list_entry, list_rad, unique_entry)


@dataclass(frozen=True)
class UniqueAlternative:
    n: int
    k: int
    rate: float


@dataclass(frozen=True)
class RatePlan:
    """A complete non-feedback design point."""

    family: str           # "rs" | "bch"
    q: int                # source alphabet size
    n: int
    k: int
    p: float
    eps: float
    required_radius: int  # tail radius the code must cover
    plan_radius: float    # planning-formula radius of the chosen code
    runtime_multiplicity: int
    runtime_radius: int   # what gs decoding guarantees at that multiplicity
    rho: int
    crc_id: int
    rate_no_crc: float
    rate_with_crc: float
    h_cond: float
    gap: float
    unique_alt: UniqueAlternative | None

    def describe(self) -> str:
        lines = [
            f"family               {self.family}",
            f"alphabet q           {self.q}",
            f"block length n       {self.n}",
            f"error prob p         {self.p:g}",
            f"target eps           {self.eps:g}",
            f"required radius      {self.required_radius}",
            f"code                 ({self.n}, {self.k})",
            f"planning radius      {self.plan_radius:.2f}",
            f"runtime radius       {self.runtime_radius} (interpolation multiplicity "
            f"{self.runtime_multiplicity})",
            f"crc symbols rho      {self.rho} (spec id {self.crc_id})",
            f"rate without crc     {self.rate_no_crc:.4f}",
            f"rate with crc        {self.rate_with_crc:.4f}",
            f"conditional entropy  {self.h_cond:.4f}",
            f"gap to entropy       {self.gap:.4f}",
        ]
        if self.unique_alt is None:
            lines.append("unique-decoding alt  INFEASIBLE")
        else:
            ua = self.unique_alt
            lines.append(
                f"unique-decoding alt  ({ua.n}, {ua.k}) at rate {ua.rate:.4f}"
            )
        if self.runtime_radius < self.required_radius:
            lines.append(
                "note                 runtime radius is below the required radius; "
                "the planning rate relies on the asymptotic formula"
            )
        return "\n".join(lines)


def plan(q: int, n: int, p: float, eps: float, family: str = "rs",
         crc: CrcSpec | None = None, runtime_multiplicity: int = 4) -> RatePlan:
    """Design a non-feedback scheme for the given correlation."""
    family = family.lower()
    t_req = tail_radius(n, p, eps)
    if family == "rs":
        m = _rs_extension(q, n)
        crc = crc or default_crc_for_field(m)
        k = choose_rs(n, t_req)
        plan_rad = n * (1.0 - math.sqrt(k / n))
        runtime_rad = gs_radius(n, k, runtime_multiplicity)
        ku = choose_rs_unique(n, t_req)
        unique = None if ku is None else UniqueAlternative(n, ku, (n - ku) / n)
    elif family == "bch":
        if q != 2:
            raise ValueError("BCH planning is for binary sources (q = 2)")
        m = _bch_extension(n)
        crc = crc or default_crc_for_field(1)
        choice = choose_bch(m, t_req)
        k = choice.list_entry.k
        plan_rad = choice.list_radius
        sup_k = n - choice.list_entry.delta + 1
        runtime_rad = gs_radius(n, sup_k, runtime_multiplicity)
        unique = None
        if choice.unique_entry is not None:
            ku = choice.unique_entry.k
            unique = UniqueAlternative(n, ku, (n - ku) / n)
    else:
        raise ValueError(f"unknown family {family!r}")
    if crc.field.q != q:
        raise ValueError("checksum spec field does not match the source alphabet")
    rho = crc.rho
    h = conditional_entropy(p, q)
    rate = (n - k) / n
    rate_crc = (n - k + rho) / n
    return RatePlan(
        family=family, q=q, n=n, k=k, p=p, eps=eps,
        required_radius=t_req, plan_radius=plan_rad,
        runtime_multiplicity=runtime_multiplicity, runtime_radius=runtime_rad,
        rho=rho, crc_id=crc.id,
        rate_no_crc=rate, rate_with_crc=rate_crc,
        h_cond=h, gap=rate_crc - h, unique_alt=unique,
    )


def theoretical_rate(n: int, p: float, q: int, list_size: int) -> float:
    """Reference bound for a list-of-L scheme: H_q(p) + 1/L + log_q(L)/n."""
    if list_size < 1:
        raise ValueError("list size must be >= 1")
    return (conditional_entropy(p, q) + 1.0 / list_size
            + math.log(list_size, q) / n)


@dataclass(frozen=True)
class LadderRung:
    radius: int  # error count this rung is planned to cover
    k: int


@dataclass(frozen=True)
class FeedbackSchedule:
    """Rate-adaptive ladder: for each error count in [lo, hi] the largest-rate
    code whose planning radius covers it, all sharing nested parity rows."""

    q: int
    n: int
    p: float
    eps: float
    lo: int
    hi: int
    rho: int
    crc_id: int
    rungs: tuple[LadderRung, ...]
    expected_rate: float         # sum Pr[e=i] * (n - k_i)/n over the window
    expected_rate_smooth: float  # same with the real-valued rate curve 1-(1-i/n)^2
    window_mass: float

    def distinct_rungs(self) -> list[LadderRung]:
        out: list[LadderRung] = []
        for rung in self.rungs:
            if not out or rung.k < out[-1].k:
                out.append(rung)
        return out


def plan_feedback(q: int, n: int, p: float, eps: float,
                  window: tuple[int, int] | None = None,
                  crc: CrcSpec | None = None) -> FeedbackSchedule:
    """Build the feedback ladder and its expected compression rate.

    ``window`` overrides the equal-split error-count window.  The expected
    rate is reported twice: with the integer dimensions the ladder really
    uses, and with the real-valued rate curve 1 - (1 - i/n)^2 that the
    planning formula describes (the smooth figure is what closed-form rate
    tables quote; the integer one is what a session can achieve).
    """
    m = _rs_extension(q, n)
    crc = crc or default_crc_for_field(m)
    lo, hi = window if window is not None else central_window(n, p, eps)
    if not 0 <= lo <= hi < n:
        raise ValueError(f"invalid window ({lo}, {hi})")
    pmf = pmf_binomial(n, p)
    rungs = tuple(LadderRung(i, choose_rs(n, i)) for i in range(lo, hi + 1))
    expected = sum(pmf[r.radius] * (n - r.k) / n for r in rungs)
    smooth = sum(pmf[i] * (1.0 - (1.0 - i / n) ** 2) for i in range(lo, hi + 1))
    mass = float(pmf[lo : hi + 1].sum())
    return FeedbackSchedule(
        q=q, n=n, p=p, eps=eps, lo=lo, hi=hi, rho=crc.rho, crc_id=crc.id,
        rungs=rungs, expected_rate=float(expected), expected_rate_smooth=float(smooth),
        window_mass=mass,
    )


SWEEP_COLUMNS = ("p", "h_cond", "rate_list", "rate_list_crc", "rate_unique",
                 "rate_feedback", "gap_list", "gap_feedback", "feasible_unique")


def sweep(q: int, n: int, eps: float, family: str, p_grid) -> list[dict]:
    """Rate table across a grid of error probabilities.

    The feedback column is RS-only (rate adaptation rides on the nested
    parity rows of one RS family); for BCH rows it stays empty.  The gap
    columns measure transmitted symbols (syndrome + checksum) against the
    conditional entropy.
    """
    rows = []
    for p in p_grid:
        pl = plan(q, n, float(p), eps, family)
        row: dict = {
            "p": float(p),
            "h_cond": pl.h_cond,
            "rate_list": pl.rate_no_crc,
            "rate_list_crc": pl.rate_with_crc,
            "rate_unique": None if pl.unique_alt is None else pl.unique_alt.rate,
            "feasible_unique": 0 if pl.unique_alt is None else 1,
            "gap_list": pl.rate_with_crc - pl.h_cond,
        }
        if family == "rs" and p > 0:
            fb = plan_feedback(q, n, float(p), eps)
            row["rate_feedback"] = fb.expected_rate
            row["gap_feedback"] = fb.expected_rate + fb.rho / n - pl.h_cond
        else:
            row["rate_feedback"] = None
            row["gap_feedback"] = None
        rows.append(row)
    return rows


def sweep_csv(rows: list[dict]) -> str:
    out = [",".join(SWEEP_COLUMNS)]
    for row in rows:
        cells = []
        for col in SWEEP_COLUMNS:
            v = row[col]
            if v is None:
                cells.append("")
            elif col == "feasible_unique":
                cells.append(str(v))
            else:
                cells.append(f"{v:.6f}")
        out.append(",".join(cells))
    return "\n".join(out) + "\n"


def _rs_extension(q: int, n: int) -> int:
    m = q.bit_length() - 1
    if q != 1 << m or get_field(m) is None:
        raise ValueError(f"q={q} is not a supported power of two")
    if n != q - 1:
        raise ValueError(f"RS block length must be q - 1 = {q - 1}, got {n}")
    return m


def _bch_extension(n: int) -> int:
    m = (n + 1).bit_length() - 1
    if n != (1 << m) - 1:
        raise ValueError(f"BCH block length must be 2^m - 1, got {n}")
    return m
