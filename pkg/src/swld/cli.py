"""Command-line front end: plan, encode, decode, simulate, sweep, feedback-sim.

Source and side-information files hold raw packed symbols, ceil(m/8)
bytes each, big-endian, and must contain a whole number of blocks.
Identical arguments plus the same --seed always produce byte-identical
outputs.  Exit codes: 0 success, 1 decode failure (status name on
stderr), 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from .bch import designed_distance_ladder
from .codec import decode, encode, parse_packet, serialize_packet, transcript_csv
from .crc import default_crc_for_field, get_crc
from .errors import SwldError
from .listdecode import GsConfig
from .planner import plan, plan_feedback, sweep, sweep_csv
from .rs import get_rs_code
from .simulate import (FeedbackTrialSpec, TrialSpec, run_feedback_trials, run_trials)

DEFAULT_RS_GRID = [round(0.05 * i, 2) for i in range(1, 11)]
DEFAULT_BCH_GRID = [round(0.02 * i, 2) for i in range(1, 16)]


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="swld", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, *, code=True):
        p.add_argument("--q", type=int, default=256, help="alphabet size (power of two)")
        p.add_argument("--n", type=int, default=255, help="block length")
        if code:
            p.add_argument("--code", choices=("rs", "bch"), default="rs")
        p.add_argument("--mult", type=int, default=4, help="interpolation multiplicity")
        p.add_argument("--crc", type=int, default=None, help="checksum spec id")

    p = sub.add_parser("plan", help="print a rate plan for (q, n, p, eps)")
    common(p)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--eps", type=float, default=1e-3)
    p.add_argument("--csv", action="store_true", help="also print a one-row CSV")

    p = sub.add_parser("encode", help="compress blocks of a source file")
    common(p)
    p.add_argument("--k", type=int, required=True, help="code dimension")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)

    p = sub.add_parser("decode", help="recover blocks from packets + side info")
    p.add_argument("--mult", type=int, default=4)
    p.add_argument("--radius", type=int, default=None,
                   help="explicit decoding radius (BCH fallback path)")
    p.add_argument("--in", dest="infile", required=True, help="packet file")
    p.add_argument("--side", required=True, help="side-information file")
    p.add_argument("--out", required=True)

    p = sub.add_parser("simulate", help="seeded coder trials, print outcome counts")
    common(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--e-lo", type=int, default=0, help="min injected errors")
    p.add_argument("--e-hi", type=int, default=None, help="max injected errors")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("sweep", help="rate table CSV over an error-probability grid")
    common(p)
    p.add_argument("--eps", type=float, default=1e-3)
    p.add_argument("--p-grid", type=str, default=None,
                   help="comma-separated probabilities (default: family grid)")
    p.add_argument("--out", default="-")

    p = sub.add_parser("feedback-sim", help="seeded feedback sessions, write transcripts")
    common(p, code=False)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--eps", type=float, default=1e-3)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", default="-", help="transcript CSV destination")
    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except SwldError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args) -> int:
    if args.command == "plan":
        return _cmd_plan(args)
    if args.command == "encode":
        return _cmd_encode(args)
    if args.command == "decode":
        return _cmd_decode(args)
    if args.command == "simulate":
        return _cmd_simulate(args)
    if args.command == "sweep":
        return _cmd_sweep(args)
    if args.command == "feedback-sim":
        return _cmd_feedback_sim(args)
    raise AssertionError(f"unhandled command {args.command}")


def _crc_for(args, m: int):
    return get_crc(args.crc) if args.crc is not None else default_crc_for_field(m)


def _cmd_plan(args) -> int:
    crc = get_crc(args.crc) if args.crc is not None else None
    pl = plan(args.q, args.n, args.p, args.eps, args.code, crc=crc,
              runtime_multiplicity=args.mult)
    print(pl.describe())
    if args.csv:
        unique_rate = "" if pl.unique_alt is None else f"{pl.unique_alt.rate:.6f}"
        print("p,eps,n,k,required_radius,rate_list,rate_list_crc,rate_unique")
        print(f"{pl.p:.6f},{pl.eps:g},{pl.n},{pl.k},{pl.required_radius},"
              f"{pl.rate_no_crc:.6f},{pl.rate_with_crc:.6f},{unique_rate}")
    return 0


def _symbol_width(m: int) -> int:
    return (m + 7) // 8


def _read_blocks(path: str, m: int, n: int) -> list[np.ndarray]:
    width = _symbol_width(m)
    raw = _read_bytes(path)
    if len(raw) % (width * n):
        raise ValueError(f"{path}: length {len(raw)} is not a multiple of "
                         f"{n} symbols of {width} byte(s)")
    vals = np.frombuffer(raw, dtype=np.uint8).reshape(-1, width)
    syms = np.zeros(len(vals), dtype=np.int32)
    for b in range(width):
        syms = (syms << 8) | vals[:, b]
    limit = 1 << m
    if np.any(syms >= limit):
        raise ValueError(f"{path}: symbol out of range for GF(2^{m})")
    return [blk for blk in syms.reshape(-1, n)]


def _write_blocks(path: str, blocks, m: int) -> None:
    width = _symbol_width(m)
    out = bytearray()
    for blk in blocks:
        for v in blk:
            out += int(v).to_bytes(width, "big")
    _write_bytes(path, bytes(out))


def _code_for_args(args):
    m = args.q.bit_length() - 1
    if args.q != 1 << m:
        raise ValueError(f"--q {args.q} is not a power of two")
    if args.code == "rs":
        code = get_rs_code(m, args.k)
        if code.n != args.n:
            raise ValueError(f"RS over GF({args.q}) has n={code.n}, got --n {args.n}")
        return code, m
    if args.q != 2:
        raise ValueError("--code bch requires --q 2")
    mloc = (args.n + 1).bit_length() - 1
    if (1 << mloc) - 1 != args.n:
        raise ValueError(f"--n {args.n} is not 2^m - 1")
    from .bch import build_bch

    for entry in designed_distance_ladder(mloc):
        if entry.k == args.k:
            return build_bch(mloc, entry.delta), 1
    raise ValueError(f"no BCH code of length {args.n} has dimension {args.k}")


def _cmd_encode(args) -> int:
    code, m = _code_for_args(args)
    crc_spec = _crc_for(args, m)
    blocks = _read_blocks(args.infile, m, args.n)
    blob = bytearray()
    for blk in blocks:
        blob += serialize_packet(encode(blk, code, crc_spec))
    _write_bytes(args.out, bytes(blob))
    print(f"encoded {len(blocks)} block(s) -> {len(blob)} bytes")
    return 0


def _cmd_decode(args) -> int:
    raw = _read_bytes(args.infile)
    packets = []
    offset = 0
    while offset < len(raw):
        pkt, offset = parse_packet(raw, offset)
        packets.append(pkt)
    if not packets:
        raise ValueError("no packets in input")
    m, n = packets[0].m, packets[0].n
    side = _read_blocks(args.side, m, n)
    if len(side) != len(packets):
        raise ValueError(f"{len(packets)} packet(s) but {len(side)} side-info block(s)")
    cfg = GsConfig(multiplicity=args.mult)
    recovered = []
    for i, (pkt, y) in enumerate(zip(packets, side)):
        outcome = decode(pkt, y, cfg, radius=args.radius)
        if not outcome.ok:
            print(outcome.status.value, file=sys.stderr)
            return 1
        recovered.append(outcome.recovered)
    _write_blocks(args.out, recovered, m)
    print(f"decoded {len(recovered)} block(s)")
    return 0


def _cmd_simulate(args) -> int:
    code, m = _code_for_args(args)
    if args.code != "rs":
        raise ValueError("simulate currently drives the RS coder")
    crc_spec = _crc_for(args, m)
    from .listdecode import gs_radius

    e_hi = args.e_hi if args.e_hi is not None else gs_radius(args.n, args.k, args.mult)
    spec = TrialSpec(m=m, k=args.k, crc_id=crc_spec.id, multiplicity=args.mult,
                     trials=args.trials, seed=args.seed,
                     weight_lo=args.e_lo, weight_hi=e_hi)
    stats = run_trials(spec, workers=args.workers)
    for status in sorted(stats.counts):
        print(f"{status} {stats.counts[status]}")
    print(f"exact_recoveries {stats.exact_recoveries}")
    print(f"wrong_recoveries {stats.wrong_recoveries}")
    print(f"mean_decode_seconds {stats.mean_seconds:.4f}")
    return 0


def _cmd_sweep(args) -> int:
    if args.p_grid:
        grid = [float(v) for v in args.p_grid.split(",") if v]
    else:
        grid = DEFAULT_RS_GRID if args.code == "rs" else DEFAULT_BCH_GRID
    q, n = args.q, args.n
    if args.code == "bch" and (q, n) == (256, 255):
        q, n = 2, 1023  # untouched defaults: switch to the binary setting
    rows = sweep(q, n, args.eps, args.code, grid)
    _write_text(args.out, sweep_csv(rows))
    return 0


def _cmd_feedback_sim(args) -> int:
    sched = plan_feedback(args.q, args.n, args.p, args.eps)
    spec = FeedbackTrialSpec(schedule=sched, multiplicity=args.mult,
                             trials=args.trials, seed=args.seed)
    stats = run_feedback_trials(spec, workers=args.workers,
                                keep_transcripts=args.trials)
    lines = []
    for i, transcript in enumerate(stats.transcripts):
        body = transcript_csv(transcript)
        if i == 0:
            lines.append(body.rstrip("\n"))
        else:
            lines.extend(body.splitlines()[1:])
    _write_text(args.out, "\n".join(lines) + "\n")
    for status in sorted(stats.counts):
        print(f"{status} {stats.counts[status]}", file=sys.stderr)
    print(f"mean_rate {stats.mean_rate:.4f}", file=sys.stderr)
    return 0


def _read_bytes(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _write_bytes(path: str, data: bytes) -> None:
    if path == "-":
        sys.stdout.buffer.write(data)
        return
    with open(path, "wb") as fh:
        fh.write(data)


def _write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w") as fh:
        fh.write(text)


if __name__ == "__main__":
    raise SystemExit(main())
