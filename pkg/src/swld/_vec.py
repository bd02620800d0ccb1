"""Vectorized GF(2^m) kernels used by the hot decoding paths.

The scalar :class:`~swld.gf.Field` is the reference implementation; these
numpy helpers must agree with it element for element (the test suite
cross-checks them).  Everything here works on int32 arrays of symbols.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .errors import LengthMismatchError
from .gf import Field, get_field


class VecField:
    """numpy exp/log tables mirroring a scalar Field.

    ``logz`` maps 0 to a sentinel of 2*(q-1) and ``expz`` is zero-padded
    beyond 2*(q-1), so products—including zero operands—are two gathers
    and an add, with no masking.
    """

    def __init__(self, field: Field) -> None:
        self.field = field
        self.q = field.q
        self.period = field.q - 1
        self.exp = np.asarray(field.exp_table, dtype=np.int32)
        self.log = np.asarray(field.log_table, dtype=np.int32)
        self.sentinel = 2 * self.period
        expz = np.zeros(5 * self.period + 1, dtype=np.int32)
        expz[: 2 * self.period] = self.exp
        self.expz = expz
        logz = self.log.copy()
        logz[0] = self.sentinel
        self.logz = logz
        # int64 copies for the compiled kernels
        self.expz64 = expz.astype(np.int64)
        self.logz64 = logz.astype(np.int64)

    def mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Elementwise product (broadcasting allowed)."""
        a = np.asarray(a, dtype=np.int32)
        b = np.asarray(b, dtype=np.int32)
        return self.expz[self.logz[a] + self.logz[b]]

    def mul_scalar(self, a: np.ndarray, s: int) -> np.ndarray:
        if s == 0:
            return np.zeros_like(a)
        ls = self.field.log_table[s]
        return self.expz[self.logz[a] + ls]

    def eval_at_alpha_pows(self, coeffs: np.ndarray, exponents: np.ndarray) -> np.ndarray:
        """Evaluate sum_a coeffs[a] * alpha^(exponents[j] * a) for each j.

        ``exponents`` are plain integers (powers of alpha); the result is a
        vector of field elements, one per exponent.
        """
        from ._koetter import eval_powers_compiled

        coeffs = np.asarray(coeffs, dtype=np.int32)
        exponents = np.asarray(exponents, dtype=np.int64)
        fast = eval_powers_compiled(coeffs, exponents, self)
        if fast is not None:
            return fast
        nz = np.flatnonzero(coeffs)
        out = np.zeros(len(exponents), dtype=np.int32)
        if nz.size == 0:
            return out
        logs = self.log[coeffs[nz]]
        # (j, a) exponent grid; values stay well inside int64.
        grid = exponents[:, None] * nz[None, :]
        grid %= self.period
        prod = self.exp[grid + logs[None, :]]
        return np.bitwise_xor.reduce(prod, axis=1).astype(np.int32)

    def poly_eval_many(self, coeffs: np.ndarray, xs: np.ndarray) -> np.ndarray:
        """Horner evaluation of one polynomial at many points."""
        xs = np.asarray(xs, dtype=np.int32)
        acc = np.zeros_like(xs)
        for c in np.asarray(coeffs, dtype=np.int32)[::-1]:
            acc = self.mul(acc, xs)
            if c:
                acc ^= int(c)
        return acc


@lru_cache(maxsize=None)
def get_vec(m: int) -> VecField:
    return VecField(get_field(m))


def hamming_distance(a: np.ndarray, b: np.ndarray) -> int:
    return int(np.count_nonzero(np.asarray(a) != np.asarray(b)))


def as_symbols(x, n: int | None = None) -> np.ndarray:
    """Normalize a symbol sequence to an int32 array, optionally checking length."""
    arr = np.asarray(x, dtype=np.int32)
    if arr.ndim != 1:
        raise LengthMismatchError("expected a one-dimensional symbol vector")
    if n is not None and len(arr) != n:
        raise LengthMismatchError(f"expected {n} symbols, got {len(arr)}")
    return arr
