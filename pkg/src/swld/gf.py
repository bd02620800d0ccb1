"""Exact arithmetic in GF(2^m) and for polynomials over GF(2^m).

Field elements are plain ints below 2^m, addition is XOR, and
multiplication goes through exp/log tables built once per field from a
pinned primitive polynomial.  Pinning the polynomials keeps packets and
test vectors bit-exact across machines.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import InconsistentSystemError

NEG_INF = float("-inf")

# Primitive polynomial per extension degree, as a bit mask including the
# leading x^m term.  The m=4/8/10 choices are the ones conventionally used
# with RS(15,·), RS(255,·) and BCH(1023,·).
PRIMITIVE_POLYS: dict[int, int] = {
    1: 0b11,
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    8: 0b1_0001_1101,
    10: 0b100_0000_1001,
}


class Field:
    """GF(2^m) realized through exp/log tables for a primitive element.

    ``exp_table`` is doubled in length so products of two logs can be
    looked up without an explicit ``% (q-1)``.
    """

    __slots__ = ("m", "q", "modulus", "exp_table", "log_table")

    def __init__(self, m: int) -> None:
        if m not in PRIMITIVE_POLYS:
            raise ValueError(
                f"unsupported extension degree m={m}; supported: {sorted(PRIMITIVE_POLYS)}"
            )
        self.m = m
        self.q = 1 << m
        self.modulus = PRIMITIVE_POLYS[m]
        size = self.q - 1
        exp_table = [0] * (2 * size)
        log_table = [0] * self.q
        seen = bytearray(self.q)
        x = 1
        for i in range(size):
            if seen[x]:
                raise ValueError(f"modulus {self.modulus:#x} is not primitive for m={m}")
            seen[x] = 1
            exp_table[i] = x
            log_table[x] = i
            x <<= 1
            if x & self.q:
                x ^= self.modulus
        if x != 1:
            raise ValueError(f"modulus {self.modulus:#x} is not primitive for m={m}")
        for i in range(size, 2 * size):
            exp_table[i] = exp_table[i - size]
        self.exp_table = exp_table
        self.log_table = log_table

    def __repr__(self) -> str:
        return f"Field(GF(2^{self.m}))"

    @staticmethod
    def add(a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp_table[self.log_table[a] + self.log_table[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in GF(2^m)")
        return self.exp_table[self.q - 1 - self.log_table[a]]

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise ZeroDivisionError("division by 0 in GF(2^m)")
        if a == 0:
            return 0
        return self.exp_table[self.log_table[a] - self.log_table[b] + self.q - 1]

    def alpha_pow(self, i: int) -> int:
        """alpha^i for any integer i (negative exponents allowed)."""
        return self.exp_table[i % (self.q - 1)]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("negative power of 0")
            return 0
        return self.exp_table[(self.log_table[a] * e) % (self.q - 1)]

    def log(self, a: int) -> int:
        if a == 0:
            raise ValueError("log of 0 in GF(2^m)")
        return self.log_table[a]


@lru_cache(maxsize=None)
def get_field(m: int) -> Field:
    """Canonical Field instance per extension degree."""
    return Field(m)


@dataclass(frozen=True)
class Poly:
    """Polynomial over GF(2^m); ``coeffs[i]`` is the coefficient of xi^i.

    The zero polynomial is the empty tuple and reports degree -inf.
    """

    coeffs: tuple[int, ...]

    @staticmethod
    def of(seq: Iterable[int]) -> "Poly":
        coeffs = list(seq)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return Poly(tuple(coeffs))

    @staticmethod
    def from_mask(mask: int) -> "Poly":
        """Binary polynomial from a bit mask (bit i = coefficient of xi^i)."""
        return Poly.of((mask >> i) & 1 for i in range(mask.bit_length()))

    @property
    def degree(self) -> float:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if i < len(self.coeffs) else 0


def poly_add(a: Poly, b: Poly) -> Poly:
    if len(a.coeffs) < len(b.coeffs):
        a, b = b, a
    out = list(a.coeffs)
    for i, c in enumerate(b.coeffs):
        out[i] ^= c
    return Poly.of(out)


def poly_scale(a: Poly, s: int, f: Field) -> Poly:
    if s == 0:
        return Poly(())
    return Poly.of(f.mul(c, s) for c in a.coeffs)


def poly_mul(a: Poly, b: Poly, f: Field) -> Poly:
    if a.is_zero() or b.is_zero():
        return Poly(())
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, ca in enumerate(a.coeffs):
        if ca == 0:
            continue
        for j, cb in enumerate(b.coeffs):
            if cb:
                out[i + j] ^= f.mul(ca, cb)
    return Poly.of(out)


def poly_divmod(a: Poly, g: Poly, f: Field) -> tuple[Poly, Poly]:
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(a.coeffs)
    dg = len(g.coeffs) - 1
    if len(rem) <= dg:
        return Poly(()), Poly.of(rem)
    quot = [0] * (len(rem) - dg)
    lead_inv = f.inv(g.coeffs[-1])
    for i in range(len(rem) - 1, dg - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        qc = f.mul(c, lead_inv)
        quot[i - dg] = qc
        for j, gc in enumerate(g.coeffs):
            if gc:
                rem[i - dg + j] ^= f.mul(qc, gc)
    return Poly.of(quot), Poly.of(rem[:dg])


def poly_mod(a: Poly, g: Poly, f: Field) -> Poly:
    """Remainder of a modulo g; deg(result) < deg(g)."""
    return poly_divmod(a, g, f)[1]


def poly_eval(a: Poly, x: int, f: Field) -> int:
    acc = 0
    for c in reversed(a.coeffs):
        acc = f.mul(acc, x) ^ c
    return acc


def solve_linear(rows: Sequence[Sequence[int]], s: Sequence[int], f: Field) -> list[int]:
    """One solution of H a^T = s with free variables fixed to zero.

    Gaussian elimination scans columns left to right and picks the first
    row with a nonzero entry as pivot, so the output is deterministic for
    a given input ordering.
    """
    nrows = len(rows)
    if len(s) != nrows:
        raise ValueError("right-hand side length does not match row count")
    if nrows == 0:
        return []
    ncols = len(rows[0])
    aug = [list(r) + [sv] for r, sv in zip(rows, s)]
    pivots: list[tuple[int, int]] = []
    row = 0
    for col in range(ncols):
        if row >= nrows:
            break
        pivot = next((r for r in range(row, nrows) if aug[r][col] != 0), None)
        if pivot is None:
            continue
        aug[row], aug[pivot] = aug[pivot], aug[row]
        inv = f.inv(aug[row][col])
        aug[row] = [f.mul(v, inv) for v in aug[row]]
        for r in range(nrows):
            if r != row and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [v ^ f.mul(factor, w) for v, w in zip(aug[r], aug[row])]
        pivots.append((row, col))
        row += 1
    for r in range(row, nrows):
        if aug[r][ncols] != 0:
            raise InconsistentSystemError("linear system has no solution")
    out = [0] * ncols
    for r, c in pivots:
        out[c] = aug[r][ncols]
    return out
