"""Reed-Solomon codes in evaluation form.

The (n, k) code over GF(q) has n = q - 1, generator rows G[i][j] =
alpha^(i*j) (codewords are evaluations of the message polynomial at the
nonzero field elements) and parity rows H[i][j] = alpha^((i+1)*j), so the
syndrome symbols are the evaluations x(alpha), x(alpha^2), ...,
x(alpha^(n-k)).  Because the parity rows of every rate over one field are
prefixes of each other, syndromes nest: the first n-k1 symbols of a lower
rate syndrome equal the higher rate syndrome.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from ._vec import as_symbols, get_vec, hamming_distance
from .errors import InstanceTooLargeError
from .gf import Field, get_field

# Exhaustive codeword enumeration is refused beyond this many codewords.
CODEBOOK_GUARD = 1 << 24


class RsCode:
    """An (n, k) Reed-Solomon code over GF(2^m) with n = q - 1."""

    def __init__(self, field: Field, k: int) -> None:
        n = field.q - 1
        if not 1 <= k <= n:
            raise ValueError(f"dimension k={k} outside [1, {n}]")
        self.field = field
        self.n = n
        self.k = k
        self.d_min = n - k + 1
        self.t = (n - k) // 2  # half-distance correction radius
        self._vf = get_vec(field.m)
        self._points = self._vf.exp[: n].copy()  # alpha^j, j = 0..n-1
        self._H: np.ndarray | None = None

    # Symbols live in the same field the code is defined over.
    @property
    def symbol_field(self) -> Field:
        return self.field

    def __repr__(self) -> str:
        return f"RsCode(GF(2^{self.field.m}), n={self.n}, k={self.k})"

    @property
    def H(self) -> np.ndarray:
        if self._H is None:
            self._H = self.parity_rows(0, self.n - self.k)
        return self._H

    @property
    def G(self) -> np.ndarray:
        exps = (np.arange(self.k, dtype=np.int64)[:, None]
                * np.arange(self.n, dtype=np.int64)[None, :]) % (self.field.q - 1)
        return self._vf.exp[exps].astype(np.int32)

    def parity_rows(self, lo: int, hi: int) -> np.ndarray:
        """Rows lo..hi-1 of the parity-check matrix (row i = alpha^((i+1)j))."""
        exps = ((np.arange(lo, hi, dtype=np.int64) + 1)[:, None]
                * np.arange(self.n, dtype=np.int64)[None, :]) % (self.field.q - 1)
        return self._vf.exp[exps].astype(np.int32)

    def encode(self, u) -> np.ndarray:
        """Codeword c with c_j = u(alpha^j) for the message polynomial u."""
        u = as_symbols(u, self.k)
        return self._vf.eval_at_alpha_pows(u, np.arange(self.n))

    def syndrome(self, x) -> np.ndarray:
        """H x^T, i.e. the evaluations x(alpha^1..alpha^(n-k))."""
        return self.syndrome_range(x, 0, self.n - self.k)

    def syndrome_range(self, x, lo: int, hi: int) -> np.ndarray:
        """Syndrome symbols lo..hi-1 only (used for incremental transmission)."""
        x = as_symbols(x, self.n)
        return self._vf.eval_at_alpha_pows(x, np.arange(lo + 1, hi + 1))

    def is_codeword(self, x) -> bool:
        return not np.any(self.syndrome(x))

    def codebook(self) -> np.ndarray:
        """All q^k codewords as a matrix (guarded; oracle scale only)."""
        return _codebook(self.field.m, self.k)

    def unique_decode(self, r) -> np.ndarray | None:
        """Bounded-distance decoding up to t = floor((d_min - 1)/2) errors.

        Berlekamp-Massey for the error locator, Chien search for the
        roots, Forney for the magnitudes.  Returns the nearest codeword or
        None when decoding fails.  If more than t errors land the received
        word within t of a different codeword, that codeword is returned
        (nearest-codeword semantics).
        """
        r = as_symbols(r, self.n)
        nk = self.n - self.k
        if nk == 0:
            return r.copy()
        synd = self.syndrome(r)
        if not np.any(synd):
            return r.copy()
        f = self.field
        locator, L = _berlekamp_massey([int(v) for v in synd], f)
        if L == 0 or L > self.t or len(locator) - 1 != L:
            return None
        positions = self._chien_roots(locator)
        if len(positions) != L:
            return None
        # Forney: omega = S(x) * locator(x) mod x^(n-k); the magnitude at
        # position j is omega(Xj^-1) / locator'(Xj^-1) with Xj = alpha^j.
        spoly = [int(v) for v in synd]
        omega = _poly_mul_trunc(spoly, locator, nk, f)
        deriv = [locator[i] if i % 2 == 1 else 0 for i in range(1, len(locator))]
        corrected = r.copy()
        for j in positions:
            xinv = f.alpha_pow(-j)
            num = _poly_eval_list(omega, xinv, f)
            den = _poly_eval_list(deriv, xinv, f)
            if den == 0:
                return None
            corrected[j] ^= f.div(num, den)
        if np.any(self.syndrome(corrected)):
            return None
        if hamming_distance(corrected, r) > self.t:
            return None
        return corrected

    def _chien_roots(self, locator: list[int]) -> list[int]:
        """Error positions j such that locator(alpha^-j) = 0."""
        period = self.field.q - 1
        degs = np.arange(len(locator), dtype=np.int64)
        exps = (degs[:, None] * ((period - np.arange(self.n, dtype=np.int64)) % period)) % period
        logs = self._vf.log[np.asarray(locator, dtype=np.int32)]
        prod = self._vf.exp[exps + logs[:, None]]
        prod[np.asarray(locator, dtype=np.int32) == 0, :] = 0
        vals = np.bitwise_xor.reduce(prod, axis=0)
        return [int(j) for j in np.flatnonzero(vals == 0)]


def _berlekamp_massey(synd: list[int], f: Field) -> tuple[list[int], int]:
    """Minimal LFSR (error locator) for the syndrome sequence."""
    C = [1]
    B = [1]
    L = 0
    m = 1
    b = 1
    for i, s in enumerate(synd):
        d = s
        for j in range(1, L + 1):
            if j < len(C) and C[j]:
                d ^= f.mul(C[j], synd[i - j])
        if d == 0:
            m += 1
            continue
        coef = f.div(d, b)
        shifted = [0] * m + [f.mul(coef, c) for c in B]
        if 2 * L <= i:
            T = C[:]
            C = _xor_lists(C, shifted)
            L = i + 1 - L
            B = T
            b = d
            m = 1
        else:
            C = _xor_lists(C, shifted)
            m += 1
    while C and C[-1] == 0:
        C.pop()
    return C, L


def _xor_lists(a: list[int], b: list[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = a[:]
    for i, v in enumerate(b):
        out[i] ^= v
    return out


def _poly_mul_trunc(a: list[int], b: list[int], limit: int, f: Field) -> list[int]:
    out = [0] * min(limit, len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0 or i >= limit:
            continue
        for j, cb in enumerate(b):
            if i + j >= limit:
                break
            if cb:
                out[i + j] ^= f.mul(ca, cb)
    return out


def _poly_eval_list(coeffs: list[int], x: int, f: Field) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = f.mul(acc, x) ^ c
    return acc


@lru_cache(maxsize=8)
def _codebook(m: int, k: int) -> np.ndarray:
    field = get_field(m)
    q = field.q
    if q ** k > CODEBOOK_GUARD:
        raise InstanceTooLargeError(f"codebook of GF({q})^{k} exceeds the enumeration guard")
    vf = get_vec(m)
    code = RsCode(field, k)
    count = q ** k
    ids = np.arange(count, dtype=np.int64)
    book = np.zeros((count, code.n), dtype=np.int32)
    G = code.G
    for i in range(k):
        digit = ((ids // (q ** i)) % q).astype(np.int32)
        book ^= vf.mul(digit[:, None], G[i][None, :])
    # uint8 storage halves scan cost for the oracle's distance passes
    return book.astype(np.uint8) if q <= 256 else book.astype(np.int16)


@lru_cache(maxsize=None)
def get_rs_code(m: int, k: int) -> RsCode:
    return RsCode(get_field(m), k)
