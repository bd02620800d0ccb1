"""Polynomial checksums over GF(q) for picking one sequence out of a list.

A checksum spec is a degree-rho generator polynomial over the working
field; the checksum of a block is the remainder of its polynomial mod the
generator.  Specs live in a small registry so a packet can name its
checksum by id and stay portable.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from ._vec import as_symbols, get_vec
from .gf import Field, Poly, get_field


@dataclass(frozen=True)
class CrcSpec:
    """rho-symbol checksum defined by a generator polynomial of degree rho."""

    id: int
    name: str
    field: Field
    gen: Poly

    def __post_init__(self) -> None:
        if self.gen.is_zero() or self.gen.coeffs[0] == 0:
            raise ValueError("generator needs a nonzero constant term")

    @property
    def rho(self) -> int:
        return len(self.gen.coeffs) - 1

    def remainder_table(self) -> np.ndarray:
        """Row j = coefficients of xi^j mod gen; crc(x) = xor_j x_j * row_j."""
        return _remainder_table(self.id)


def crc_compute(x, spec: CrcSpec) -> np.ndarray:
    """Coefficients of x(xi) mod gen, padded to exactly rho symbols."""
    x = as_symbols(x)
    f = spec.field
    rho = spec.rho
    g = spec.gen.coeffs
    lead_inv = f.inv(g[-1])
    rem = [int(v) for v in x]
    for i in range(len(rem) - 1, rho - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        qc = f.mul(c, lead_inv)
        rem[i] = 0
        for j in range(rho):
            if g[j]:
                rem[i - rho + j] ^= f.mul(qc, g[j])
    out = np.zeros(rho, dtype=np.int32)
    out[: min(rho, len(rem))] = rem[:rho]
    return out


def crc_compute_many(blocks: np.ndarray, spec: CrcSpec) -> np.ndarray:
    """Checksums of many equal-length blocks at once.

    Uses the linear form crc(x) = xor_j x_j * (xi^j mod gen), which is an
    independent route from the long-division in :func:`crc_compute`; the
    tests hold the two together.
    """
    blocks = np.asarray(blocks, dtype=np.int32)
    table = spec.remainder_table()[: blocks.shape[1]]
    vf = get_vec(spec.field.m)
    out = np.zeros((blocks.shape[0], spec.rho), dtype=np.int32)
    for j in range(blocks.shape[1]):
        row = table[j]
        if not row.any():
            continue
        out ^= vf.mul(blocks[:, j][:, None], row[None, :])
    return out


class CrcSelectStatus(Enum):
    MATCHED = "MATCHED"
    NO_MATCH = "NO_MATCH"
    AMBIGUOUS = "AMBIGUOUS"


@dataclass
class CrcSelection:
    status: CrcSelectStatus
    match: np.ndarray | None
    match_count: int


def crc_select(candidates, h, spec: CrcSpec) -> CrcSelection:
    """Pick the unique candidate whose checksum equals h.

    NO_MATCH and AMBIGUOUS are ordinary outcomes, not errors: with more
    than one match (or none) the decoder cannot commit to a block.
    """
    h = as_symbols(h, spec.rho)
    matches = [c for c in candidates if np.array_equal(crc_compute(c, spec), h)]
    if not matches:
        return CrcSelection(CrcSelectStatus.NO_MATCH, None, 0)
    if len(matches) > 1:
        return CrcSelection(CrcSelectStatus.AMBIGUOUS, None, len(matches))
    return CrcSelection(CrcSelectStatus.MATCHED, matches[0], 1)


def required_rho(list_size: int, q: int) -> int:
    """Minimum checksum symbols to separate a list of the given size: ceil(log_q L)."""
    if list_size < 1:
        raise ValueError("list size must be >= 1")
    rho = 0
    reach = 1
    while reach < list_size:
        reach *= q
        rho += 1
    return rho


def _gf256_default_gen() -> Poly:
    # xi^2 + alpha*xi + 1 over GF(256): two checksum symbols = 16 bits
    return Poly.of([1, 0x02, 1])


def _gf16_default_gen() -> Poly:
    return Poly.of([1, 0x02, 1])


def _gf1024_default_gen() -> Poly:
    return Poly.of([1, 0x02, 1])


# Registry of pinned checksum specs; packet headers carry the id.
CRC_GF256_DEG2 = 1
CRC_BIN_12 = 2
CRC_BIN_16_CCITT = 3
CRC_GF16_DEG2 = 4
CRC_GF1024_DEG2 = 5

REGISTRY: dict[int, CrcSpec] = {
    CRC_GF256_DEG2: CrcSpec(CRC_GF256_DEG2, "gf256-deg2", get_field(8), _gf256_default_gen()),
    # x^12 + x^11 + x^3 + x^2 + x + 1 (CRC-12, full mask 0x180F)
    CRC_BIN_12: CrcSpec(CRC_BIN_12, "bin-crc12", get_field(1), Poly.from_mask(0x180F)),
    # x^16 + x^12 + x^5 + 1 (CRC-16/CCITT, full mask 0x11021)
    CRC_BIN_16_CCITT: CrcSpec(CRC_BIN_16_CCITT, "bin-crc16-ccitt", get_field(1),
                              Poly.from_mask(0x11021)),
    CRC_GF16_DEG2: CrcSpec(CRC_GF16_DEG2, "gf16-deg2", get_field(4), _gf16_default_gen()),
    CRC_GF1024_DEG2: CrcSpec(CRC_GF1024_DEG2, "gf1024-deg2", get_field(10),
                             _gf1024_default_gen()),
}


def get_crc(crc_id: int) -> CrcSpec:
    if crc_id not in REGISTRY:
        raise KeyError(f"unknown checksum id {crc_id}")
    return REGISTRY[crc_id]


def default_crc_for_field(m: int) -> CrcSpec:
    """The pinned default checksum for blocks over GF(2^m)."""
    defaults = {8: CRC_GF256_DEG2, 1: CRC_BIN_12, 4: CRC_GF16_DEG2, 10: CRC_GF1024_DEG2}
    if m not in defaults:
        raise KeyError(f"no default checksum registered for GF(2^{m})")
    return REGISTRY[defaults[m]]


_TABLE_CACHE: dict[int, np.ndarray] = {}


def _remainder_table(crc_id: int) -> np.ndarray:
    if crc_id not in _TABLE_CACHE:
        spec = REGISTRY[crc_id]
        f = spec.field
        rho = spec.rho
        n_max = f.q - 1 if f.q > 2 else 1023
        rows = np.zeros((max(n_max, rho + 1), rho), dtype=np.int32)
        # xi^(j+1) mod g = (xi * (xi^j mod g)) mod g, built incrementally
        cur = [0] * rho
        cur[0] = 1
        lead_inv = f.inv(spec.gen.coeffs[-1])
        for j in range(rows.shape[0]):
            rows[j] = cur
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                qc = f.mul(top, lead_inv)
                for i in range(rho):
                    if spec.gen.coeffs[i]:
                        cur[i] ^= f.mul(qc, spec.gen.coeffs[i])
        _TABLE_CACHE[crc_id] = rows
    return _TABLE_CACHE[crc_id]
