"""Binary BCH codes as binary subcodes of Reed-Solomon codes.

A BCH code of designed distance delta over GF(2) with locator field
GF(2^m) is the set of binary length-n words whose spectrum vanishes at
alpha^1 .. alpha^(delta-1).  Those are exactly the binary words of the
(n, n-delta+1) RS code over GF(2^m), which makes that RS code a natural
supercode for list decoding: decode in the supercode, keep the binary
codewords.

Generator polynomials are built from cyclotomic cosets at construction
time rather than from hard-coded tables, so dimension/distance pairs are
derived, never transcribed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ._vec import as_symbols, get_vec
from .errors import InstanceTooLargeError, RadiusUnsupportedError
from .gf import Field, Poly, get_field, poly_mul
from .listdecode import GsConfig, gs_list_decode, gs_radius
from .rs import CODEBOOK_GUARD, RsCode, get_rs_code


def cyclotomic_coset(s: int, n: int) -> frozenset[int]:
    """The orbit of s under doubling mod n."""
    out = set()
    v = s % n
    while v not in out:
        out.add(v)
        v = (2 * v) % n
    return frozenset(out)


@lru_cache(maxsize=None)
def min_polynomial(m: int, exponent: int) -> Poly:
    """Minimal polynomial over GF(2) of alpha^exponent in GF(2^m)."""
    field = get_field(m)
    n = field.q - 1
    poly = Poly.of([1])
    for j in sorted(cyclotomic_coset(exponent, n)):
        poly = poly_mul(poly, Poly.of([field.alpha_pow(j), 1]), field)
    if any(c not in (0, 1) for c in poly.coeffs):
        raise AssertionError("minimal polynomial has non-binary coefficients")
    return poly


class BchCode:
    """Binary (n, k) BCH code with n = 2^m - 1 and a designed distance."""

    def __init__(self, m: int, designed_delta: int) -> None:
        field = get_field(m)
        n = field.q - 1
        if not 2 <= designed_delta <= n:
            raise ValueError(f"designed distance {designed_delta} outside [2, {n}]")
        self.locator_field = field
        self.n = n
        self.designed_delta = designed_delta
        self.relative_distance = designed_delta / n
        gen = np.array([1], dtype=np.int64)
        seen: set[frozenset[int]] = set()
        for root in range(1, designed_delta):
            coset = cyclotomic_coset(root, n)
            if coset in seen:
                continue
            seen.add(coset)
            mp = np.array(min_polynomial(m, root).coeffs, dtype=np.int64)
            gen = np.convolve(gen, mp) & 1
        self.gen_poly = Poly.of(int(c) for c in gen)
        self.k = n - (len(self.gen_poly.coeffs) - 1)
        self._vf = get_vec(m)

    def __repr__(self) -> str:
        return f"BchCode(n={self.n}, k={self.k}, designed_delta={self.designed_delta})"

    # Packets and coset algebra for BCH run over GF(2) symbols.
    @property
    def symbol_field(self) -> Field:
        return get_field(1)

    @property
    def field(self) -> Field:
        return self.locator_field

    @property
    def supercode(self) -> RsCode:
        """The (n, n - delta + 1) RS code over the locator field containing this code."""
        return get_rs_code(self.locator_field.m, self.n - self.designed_delta + 1)

    @property
    def H(self) -> np.ndarray:
        """Binary parity rows: row i of the remainder map x -> x mod gen_poly."""
        return _binary_parity(self.locator_field.m, self.designed_delta)

    def syndrome(self, x) -> np.ndarray:
        """Coset index of x: coefficients of x(xi) mod gen_poly, n-k bits."""
        x = as_symbols(x, self.n)
        g = self.gen_poly.coeffs
        nk = self.n - self.k
        rem = [int(v) & 1 for v in x]
        for i in range(self.n - 1, nk - 1, -1):
            if rem[i]:
                rem[i] = 0
                for j in range(nk):
                    if g[j]:
                        rem[i - nk + j] ^= 1
        return np.asarray(rem[:nk], dtype=np.int32)

    def power_syndrome(self, x) -> np.ndarray:
        """Spectrum samples x(alpha^1 .. alpha^(delta-1)) over the locator field.

        Zero exactly on codewords; these are the supercode's syndrome
        symbols, which is what makes supercode list decoding applicable.
        """
        x = as_symbols(x, self.n)
        return self._vf.eval_at_alpha_pows(x, np.arange(1, self.designed_delta))

    def is_codeword(self, x) -> bool:
        return not np.any(self.power_syndrome(x))

    def encode(self, u) -> np.ndarray:
        """A codeword from k message bits (non-systematic: u(xi) * gen(xi))."""
        u = as_symbols(u, self.k)
        g = np.array(self.gen_poly.coeffs, dtype=np.int64)
        c = np.convolve(u.astype(np.int64), g) & 1
        out = np.zeros(self.n, dtype=np.int32)
        out[: len(c)] = c
        return out

    def codebook(self) -> np.ndarray:
        return _bch_codebook(self.locator_field.m, self.designed_delta)

    def list_decode(self, y, radius: int, cfg: GsConfig | None = None) -> list[np.ndarray]:
        """All codewords within the given radius of y.

        Production path: Guruswami-Sudan decode y in the RS supercode and
        keep the binary results; usable whenever the radius is within the
        supercode's guaranteed radius.  Beyond that the decoder falls back
        to exhaustive enumeration when the code is small enough, and
        refuses otherwise.
        """
        y = as_symbols(y, self.n)
        cfg = cfg or GsConfig()
        sup = self.supercode
        sup_radius = gs_radius(sup.n, sup.k, cfg.multiplicity)
        if radius <= sup_radius:
            result = gs_list_decode(y, sup, cfg)
            out = []
            for cw, dist in result.candidates:
                if dist <= radius and np.all((cw == 0) | (cw == 1)):
                    out.append(cw)
            return out
        if 2 ** self.k <= CODEBOOK_GUARD:
            book = self.codebook()
            dists = np.count_nonzero(book != y[None, :].astype(book.dtype), axis=1)
            hits = np.flatnonzero(dists <= radius)
            order = sorted(hits, key=lambda i: (int(dists[i]), tuple(int(v) for v in book[i])))
            return [book[i].astype(np.int32) for i in order]
        raise RadiusUnsupportedError(
            f"radius {radius} exceeds the supercode radius {sup_radius} and the code is "
            "too large for exhaustive decoding"
        )


@lru_cache(maxsize=None)
def build_bch(m: int, delta: int) -> BchCode:
    return BchCode(m, delta)


def bch_syndrome(x, code: BchCode) -> np.ndarray:
    return code.power_syndrome(x)


def bch_list_decode(y, code: BchCode, radius: int, cfg: GsConfig | None = None):
    return code.list_decode(y, radius, cfg)


@dataclass(frozen=True)
class LadderEntry:
    """One distinct code in the designed-distance ladder."""

    delta: int  # largest designed distance this generator certifies
    k: int

    @property
    def t(self) -> int:
        return (self.delta - 1) // 2


@lru_cache(maxsize=None)
def designed_distance_ladder(m: int) -> tuple[LadderEntry, ...]:
    """Distinct (delta, k) pairs for GF(2^m), descending k.

    Walking delta upward, the dimension drops whenever a new cyclotomic
    coset joins the generator; each distinct generator is recorded with
    the largest designed distance it certifies (the smallest absent root
    exponent).
    """
    n = (1 << m) - 1
    covered: set[int] = set()
    entries: list[LadderEntry] = []
    k = n
    for root in range(1, n):
        if root in covered:
            continue
        # previous generator certified distances up to this first gap
        if k < n:
            entries.append(LadderEntry(delta=root, k=k))
        covered |= cyclotomic_coset(root, n)
        k = n - len(covered)
    entries.append(LadderEntry(delta=n, k=k))
    return tuple(entries)


@lru_cache(maxsize=None)
def _binary_parity(m: int, delta: int) -> np.ndarray:
    code = build_bch(m, delta)
    nk = code.n - code.k
    glow = np.array(code.gen_poly.coeffs[:nk], dtype=np.int32)
    rows = np.zeros((nk, code.n), dtype=np.int32)
    # column j = coefficients of xi^j mod gen_poly
    cur = np.zeros(nk, dtype=np.int32)
    cur[0] = 1
    for j in range(code.n):
        rows[:, j] = cur
        top = cur[-1]
        cur = np.concatenate([[0], cur[:-1]])
        if top:
            cur ^= glow
    return rows


@lru_cache(maxsize=4)
def _bch_codebook(m: int, delta: int) -> np.ndarray:
    code = build_bch(m, delta)
    if 2 ** code.k > CODEBOOK_GUARD:
        raise InstanceTooLargeError(f"codebook of 2^{code.k} words exceeds the enumeration guard")
    count = 1 << code.k
    ids = np.arange(count, dtype=np.int64)
    msgs = ((ids[:, None] >> np.arange(code.k)[None, :]) & 1).astype(np.int64)
    g = np.array(code.gen_poly.coeffs, dtype=np.int64)
    book = np.zeros((count, code.n), dtype=np.int64)
    for i in range(code.k):
        rows = np.flatnonzero(msgs[:, i])
        book[rows, i : i + len(g)] ^= g[None, :]
    return (book & 1).astype(np.uint8)