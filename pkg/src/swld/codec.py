"""End-to-end coder for side-information compression, plus the
feedback-rate-adaptive session.

A block x is compressed to its syndrome under the chosen code together
with a short checksum of x; both are delivered reliably (the only noise
in this problem is the virtual channel between x and the decoder's side
information y).  Decoding shifts y into the transmitted coset via one
deterministic coset representative, list-decodes around the shifted word,
shifts the candidates back, and lets the checksum pick the block.

Packet wire format (byte-exact, big-endian):
  magic "SWLD" | version u8=1 | family u8 (0=RS, 1=BCH) | m u8 | n u16 |
  k u16 | crc_id u8 | rho u8 | (n-k) syndrome symbols | rho crc symbols,
  each symbol packed as ceil(m/8) bytes.  BCH packets carry GF(2) symbols
  (m = 1); the locator field is implied by n.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from ._vec import as_symbols, get_vec, hamming_distance
from .bch import BchCode, designed_distance_ladder, build_bch
from .crc import CrcSpec, crc_compute, crc_select, CrcSelectStatus, get_crc
from .errors import ListOverflowError, PacketFormatError
from .listdecode import GsConfig, coset_searcher, gs_list_decode, gs_radius
from .planner import FeedbackSchedule
from .rs import get_rs_code

FAMILY_RS = 0
FAMILY_BCH = 1

_HEADER = struct.Struct(">4sBBBHHBB")
MAGIC = b"SWLD"
VERSION = 1


@dataclass
class SyndromePacket:
    """The compressed representation of one block."""

    family: int
    m: int  # symbol field extension degree (1 for BCH packets)
    n: int
    k: int
    crc_id: int
    syndrome: np.ndarray  # n-k symbols
    crc: np.ndarray       # rho symbols

    @property
    def rho(self) -> int:
        return len(self.crc)

    def symbol_count(self) -> int:
        return len(self.syndrome) + len(self.crc)


class DecodeStatus(Enum):
    SUCCESS = "SUCCESS"
    LIST_EMPTY = "LIST_EMPTY"
    NO_CRC_MATCH = "NO_CRC_MATCH"
    AMBIGUOUS_CRC = "AMBIGUOUS_CRC"
    LIST_OVERFLOW = "LIST_OVERFLOW"


@dataclass
class DecodeOutcome:
    status: DecodeStatus
    recovered: np.ndarray | None
    list_size: int
    radius_used: int
    distance: int | None
    candidates: list[np.ndarray] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.status is DecodeStatus.SUCCESS


def encode(x, code, crc_spec: CrcSpec) -> SyndromePacket:
    """Compress a block to its syndrome plus checksum."""
    x = as_symbols(x, code.n)
    if isinstance(code, BchCode):
        family, m, syndrome = FAMILY_BCH, 1, code.syndrome(x)
    else:
        family, m, syndrome = FAMILY_RS, code.field.m, code.syndrome(x)
    return SyndromePacket(
        family=family, m=m, n=code.n, k=code.k, crc_id=crc_spec.id,
        syndrome=syndrome.astype(np.int32), crc=crc_compute(x, crc_spec),
    )


def code_for_packet(pkt: SyndromePacket):
    if pkt.family == FAMILY_RS:
        code = get_rs_code(pkt.m, pkt.k)
        if code.n != pkt.n:
            raise PacketFormatError(f"RS packet length {pkt.n} must be {code.n}")
        return code
    if pkt.family == FAMILY_BCH:
        m = (pkt.n + 1).bit_length() - 1
        if (1 << m) - 1 != pkt.n:
            raise PacketFormatError(f"BCH packet length {pkt.n} is not 2^m - 1")
        for entry in designed_distance_ladder(m):
            if entry.k == pkt.k:
                return build_bch(m, entry.delta)
        raise PacketFormatError(f"no BCH code of length {pkt.n} has dimension {pkt.k}")
    raise PacketFormatError(f"unknown family {pkt.family}")


def coset_representative(code, syndrome: np.ndarray) -> np.ndarray:
    """The deterministic solution of H a^T = s with free variables zero.

    Column-ordered Gaussian elimination puts every pivot in the first n-k
    positions (those columns are independent for both code families), so
    the representative is supported there; the inverse of that leading
    block is cached per code and the solve becomes one small matvec.
    """
    n, nk = code.n, code.n - code.k
    a = np.zeros(n, dtype=np.int32)
    if nk == 0:
        return a
    vf = get_vec(code.symbol_field.m)
    inv = _leading_block_inverse(code)
    a[:nk] = np.bitwise_xor.reduce(
        vf.mul(inv, np.asarray(syndrome, dtype=np.int32)[None, :]), axis=1
    )
    return a


_BLOCK_INV_CACHE: dict[int, np.ndarray] = {}


def _leading_block_inverse(code) -> np.ndarray:
    key = id(code)
    if key not in _BLOCK_INV_CACHE:
        nk = code.n - code.k
        vf = get_vec(code.symbol_field.m)
        block = np.asarray(code.H, dtype=np.int32)[:, :nk]
        aug = np.concatenate([block, np.eye(nk, dtype=np.int32)], axis=1)
        for col in range(nk):
            pivot = col + int(np.flatnonzero(aug[col:, col])[0])
            if pivot != col:
                aug[[col, pivot]] = aug[[pivot, col]]
            aug[col] = vf.mul_scalar(aug[col], code.symbol_field.inv(int(aug[col, col])))
            rows = np.flatnonzero(aug[:, col])
            rows = rows[rows != col]
            if rows.size:
                aug[rows] ^= vf.mul(aug[rows, col][:, None], aug[col][None, :])
        _BLOCK_INV_CACHE[key] = aug[:, nk:].copy()
    return _BLOCK_INV_CACHE[key]


def _shift_candidates(pkt: SyndromePacket, y: np.ndarray, code, cfg: GsConfig,
                      radius: int | None):
    """Approach via a coset representative: list-decode y - a, shift back."""
    a = coset_representative(code, pkt.syndrome)
    y_shift = y ^ a
    if isinstance(code, BchCode):
        radius = radius if radius is not None else gs_radius(
            code.supercode.n, code.supercode.k, cfg.multiplicity)
        vecs = code.list_decode(y_shift, radius, cfg)
        if len(vecs) > cfg.max_list:
            raise ListOverflowError(f"list size {len(vecs)} exceeds {cfg.max_list}")
        cands = [v ^ a for v in vecs]
        return cands, radius
    result = gs_list_decode(y_shift, code, cfg)
    return [cw ^ a for cw in result.vectors()], result.radius_used


def decode(pkt: SyndromePacket, y, cfg: GsConfig | None = None,
           radius: int | None = None) -> DecodeOutcome:
    """Recover the block from its packet and the side information y."""
    cfg = cfg or GsConfig()
    code = code_for_packet(pkt)
    y = as_symbols(y, code.n)
    if len(pkt.syndrome) != code.n - code.k:
        raise PacketFormatError("syndrome length does not match the declared code")
    crc_spec = get_crc(pkt.crc_id)
    try:
        cands, radius_used = _shift_candidates(pkt, y, code, cfg, radius)
    except ListOverflowError:
        return DecodeOutcome(DecodeStatus.LIST_OVERFLOW, None, 0, radius or 0, None)
    return _select(pkt, y, code, cands, radius_used, crc_spec)


def decode_oracle(pkt: SyndromePacket, y, cfg: GsConfig | None = None,
                  radius: int | None = None) -> DecodeOutcome:
    """Syndrome-side reference decoder (oracle scale).

    Works on the noise coset directly: the syndrome of the noise is the
    syndrome of y minus the transmitted syndrome; every coset member u
    within the radius yields the candidate y - u.  Outcomes must match
    :func:`decode` on every input.
    """
    cfg = cfg or GsConfig()
    code = code_for_packet(pkt)
    y = as_symbols(y, code.n)
    crc_spec = get_crc(pkt.crc_id)
    if radius is None:
        if isinstance(code, BchCode):
            radius = gs_radius(code.supercode.n, code.supercode.k, cfg.multiplicity)
        else:
            radius = gs_radius(code.n, code.k, cfg.multiplicity)
    s_u = code.syndrome(y) ^ pkt.syndrome
    members = coset_searcher(code).members_up_to(s_u, radius)
    if len(members) > cfg.max_list:
        return DecodeOutcome(DecodeStatus.LIST_OVERFLOW, None, 0, radius, None)
    cands = [y ^ u for u in members]
    return _select(pkt, y, code, cands, radius, crc_spec)


def _select(pkt, y, code, cands, radius_used, crc_spec) -> DecodeOutcome:
    cands.sort(key=lambda c: (hamming_distance(c, y), tuple(int(v) for v in c)))
    if not cands:
        return DecodeOutcome(DecodeStatus.LIST_EMPTY, None, 0, radius_used, None)
    sel = crc_select(cands, pkt.crc, crc_spec)
    if sel.status is CrcSelectStatus.NO_MATCH:
        return DecodeOutcome(DecodeStatus.NO_CRC_MATCH, None, len(cands),
                             radius_used, None, cands)
    if sel.status is CrcSelectStatus.AMBIGUOUS:
        return DecodeOutcome(DecodeStatus.AMBIGUOUS_CRC, None, len(cands),
                             radius_used, None, cands)
    x_hat = sel.match
    if np.any(code.syndrome(x_hat) ^ pkt.syndrome):
        raise AssertionError("recovered block fails its own syndrome check")
    return DecodeOutcome(DecodeStatus.SUCCESS, x_hat, len(cands), radius_used,
                         hamming_distance(x_hat, y), cands)


# --- serialization ---------------------------------------------------------


def serialize_packet(pkt: SyndromePacket) -> bytes:
    head = _HEADER.pack(MAGIC, VERSION, pkt.family, pkt.m, pkt.n, pkt.k,
                        pkt.crc_id, pkt.rho)
    width = (pkt.m + 7) // 8
    body = bytearray()
    for v in list(pkt.syndrome) + list(pkt.crc):
        body += int(v).to_bytes(width, "big")
    return head + bytes(body)


def parse_packet(data: bytes, offset: int = 0) -> tuple[SyndromePacket, int]:
    """Parse one packet; returns (packet, next offset)."""
    if len(data) - offset < _HEADER.size:
        raise PacketFormatError("truncated packet header")
    magic, version, family, m, n, k, crc_id, rho = _HEADER.unpack_from(data, offset)
    if magic != MAGIC:
        raise PacketFormatError(f"bad magic {magic!r}")
    if version != VERSION:
        raise PacketFormatError(f"unsupported version {version}")
    if family not in (FAMILY_RS, FAMILY_BCH):
        raise PacketFormatError(f"unknown family {family}")
    try:
        spec = get_crc(crc_id)
    except KeyError as exc:
        raise PacketFormatError(str(exc)) from exc
    if spec.rho != rho:
        raise PacketFormatError("rho does not match the checksum spec")
    if not 1 <= k <= n:
        raise PacketFormatError(f"bad dimensions n={n}, k={k}")
    width = (m + 7) // 8
    count = (n - k) + rho
    need = _HEADER.size + count * width
    if len(data) - offset < need:
        raise PacketFormatError("truncated packet body")
    pos = offset + _HEADER.size
    symbols = np.zeros(count, dtype=np.int32)
    limit = 1 << m
    for i in range(count):
        v = int.from_bytes(data[pos : pos + width], "big")
        if v >= limit:
            raise PacketFormatError(f"symbol {v} outside GF(2^{m})")
        symbols[i] = v
        pos += width
    pkt = SyndromePacket(family=family, m=m, n=n, k=k, crc_id=crc_id,
                         syndrome=symbols[: n - k], crc=symbols[n - k :])
    code_for_packet(pkt)  # validates that the (family, n, k) triple exists
    return pkt, pos


# --- feedback session ------------------------------------------------------


@dataclass
class FeedbackChunk:
    """One round of encoder output: new syndrome rows, plus the checksum once."""

    rung_k: int
    syndrome_symbols: np.ndarray
    crc_symbols: np.ndarray | None


@dataclass
class FeedbackSession:
    schedule: FeedbackSchedule
    crc_spec: CrcSpec
    rung_index: int = 0
    symbols_sent: int = 0
    transcript: list = field(default_factory=list)

    def rungs(self) -> list:
        return self.schedule.distinct_rungs()

    @property
    def exhausted(self) -> bool:
        return self.rung_index >= len(self.rungs())


def start_feedback_session(schedule: FeedbackSchedule, crc_spec: CrcSpec) -> FeedbackSession:
    if crc_spec.rho != schedule.rho:
        raise ValueError("checksum spec does not match the schedule")
    return FeedbackSession(schedule=schedule, crc_spec=crc_spec)


def feedback_encode_step(session: FeedbackSession, x) -> FeedbackChunk:
    """Emit the next increment: parity rows the previous rung did not cover.

    Because every rung's parity rows are a prefix of the next rung's, each
    step transmits exactly k_prev - k_next new syndromes; the checksum
    goes out once, with the first chunk.
    """
    if session.exhausted:
        raise RuntimeError("feedback ladder exhausted")
    rungs = session.rungs()
    n = session.schedule.n
    m = _rs_m_for(session.schedule.q)
    rung = rungs[session.rung_index]
    code = get_rs_code(m, rung.k)
    x = as_symbols(x, n)
    prev_rows = 0 if session.rung_index == 0 else n - rungs[session.rung_index - 1].k
    new_rows = n - rung.k
    symbols = code.syndrome_range(x, prev_rows, new_rows)
    crc_symbols = None
    if session.rung_index == 0:
        crc_symbols = crc_compute(x, session.crc_spec)
        session.symbols_sent += len(crc_symbols)
    session.symbols_sent += len(symbols)
    session.rung_index += 1
    return FeedbackChunk(rung_k=rung.k, syndrome_symbols=symbols, crc_symbols=crc_symbols)


@dataclass
class FeedbackResult:
    status: DecodeStatus
    recovered: np.ndarray | None
    rounds: int
    symbols_sent: int
    realized_rate: float
    transcript: list[tuple[int, int, int, str]]  # (round, rung_k, symbols_cum, status)


def feedback_run(x, y, schedule: FeedbackSchedule, cfg: GsConfig | None = None,
                 crc_spec: CrcSpec | None = None,
                 decoder=decode) -> FeedbackResult:
    """Drive a complete encoder/decoder session over a lossless feedback link.

    Each round reveals the next syndrome increment; the decoder retries
    from scratch on the accumulated packet.  ``decoder`` is swappable so
    oracle-scale runs can cross-check with the exhaustive path.
    """
    cfg = cfg or GsConfig()
    crc_spec = crc_spec or get_crc(schedule.crc_id)
    m = _rs_m_for(schedule.q)
    session = start_feedback_session(schedule, crc_spec)
    x = as_symbols(x, schedule.n)
    y = as_symbols(y, schedule.n)
    acc: list[int] = []
    crc_syms: np.ndarray | None = None
    outcome = None
    round_no = 0
    while not session.exhausted:
        chunk = feedback_encode_step(session, x)
        round_no += 1
        acc.extend(int(v) for v in chunk.syndrome_symbols)
        if chunk.crc_symbols is not None:
            crc_syms = chunk.crc_symbols
        pkt = SyndromePacket(
            family=FAMILY_RS, m=m, n=schedule.n, k=chunk.rung_k,
            crc_id=crc_spec.id,
            syndrome=np.asarray(acc, dtype=np.int32), crc=crc_syms,
        )
        outcome = decoder(pkt, y, cfg)
        session.transcript.append(
            (round_no, chunk.rung_k, session.symbols_sent, outcome.status.value)
        )
        if outcome.status is DecodeStatus.SUCCESS:
            break
    assert outcome is not None
    return FeedbackResult(
        status=outcome.status, recovered=outcome.recovered, rounds=round_no,
        symbols_sent=session.symbols_sent,
        realized_rate=session.symbols_sent / schedule.n,
        transcript=list(session.transcript),
    )


def transcript_csv(transcript) -> str:
    lines = ["round,rung_k,symbols_sent_cum,status"]
    for round_no, rung_k, symbols_cum, status in transcript:
        lines.append(f"{round_no},{rung_k},{symbols_cum},{status}")
    return "\n".join(lines) + "\n"


def _rs_m_for(q: int) -> int:
    m = q.bit_length() - 1
    if q != 1 << m:
        raise ValueError(f"q={q} is not a power of two")
    return m
