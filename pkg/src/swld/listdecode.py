"""Guruswami-Sudan list decoding of RS codes, plus exhaustive oracles.

The decoder interpolates a bivariate polynomial Q(x, y) with a prescribed
zero multiplicity at every point (alpha^j, r_j) using Koetter's iterative
algorithm under the (1, k-1)-weighted monomial order, then reads the
candidate messages off Q with Roth-Ruckenstein depth-first root finding.
Any message f with agreement t satisfying multiplicity * t > wdeg(Q) must
appear as a y-root, which yields the radius guarantees below.

Two independent oracles live here as well: ``brute_force_list`` (exhaustive
codeword enumeration) and ``min_weight_coset_list`` (syndrome-side search
by increasing weight).  They exist to cross-check the interpolation path
and are guarded against non-oracle-scale instances.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from ._koetter import interpolate_compiled
from ._vec import VecField, as_symbols, get_vec, hamming_distance
from .errors import (
    InstanceTooLargeError,
    InterpolationError,
    ListOverflowError,
    RadiusUnsupportedError,
)
from .gf import Field

# Support-enumeration budget for the coset searcher.
MAX_SUPPORTS = 2_000_000


@dataclass(frozen=True)
class GsConfig:
    """Decoder knobs: interpolation multiplicity and list-size cap."""

    multiplicity: int = 1
    max_list: int = 64
    max_cost: int = 50_000_000

    def __post_init__(self) -> None:
        if self.multiplicity < 1:
            raise ValueError("multiplicity must be >= 1")
        if self.max_list < 1:
            raise ValueError("max_list must be >= 1")


@dataclass
class ListDecodeResult:
    """Candidates (codeword, distance), ascending by distance then lex order."""

    candidates: list[tuple[np.ndarray, int]]
    radius_used: int

    def vectors(self) -> list[np.ndarray]:
        return [c for c, _ in self.candidates]

    def __len__(self) -> int:
        return len(self.candidates)


def gs_radius(n: int, k: int, multiplicity: int) -> int:
    """Decoding radius guaranteed at a finite interpolation multiplicity.

    tau = n - 1 - floor(sqrt((k-1) * n * (1 + 1/m))), never reported below
    the classical half-distance radius floor((n-k)/2).
    """
    if not 1 <= k <= n:
        raise ValueError(f"invalid parameters n={n}, k={k}")
    if multiplicity < 1:
        raise ValueError("multiplicity must be >= 1")
    val = (k - 1) * n * (multiplicity + 1) // multiplicity
    tau = n - 1 - math.isqrt(val)
    return max(tau, (n - k) // 2)


def gs_radius_limit(n: int, k: int) -> int:
    """Supremum of gs_radius over the multiplicity: ceil(n(1 - sqrt(k/n))) - 1."""
    if not 1 <= k <= n:
        raise ValueError(f"invalid parameters n={n}, k={k}")
    return max(n - math.isqrt(n * k) - 1, (n - k) // 2)


@dataclass(frozen=True)
class InterpParams:
    """Exact interpolation geometry for (n, k, multiplicity)."""

    constraints: int
    delta: int       # minimal weighted degree admitting a nonzero Q
    ell: int         # y-degree bound of Q
    t_min: int       # smallest guaranteed agreement
    tau_exact: int   # n - t_min, the radius the interpolation really covers
    cost: int        # rough work estimate used by the work guard


def _monomial_count(delta: int, w: int) -> int:
    # number of monomials x^a y^b with a + w*b <= delta
    b_max = delta // w
    return (b_max + 1) * (delta + 1) - w * b_max * (b_max + 1) // 2


def interp_params(n: int, k: int, multiplicity: int) -> InterpParams:
    if k < 2:
        raise ValueError("interpolation path requires k >= 2")
    w = k - 1
    constraints = n * multiplicity * (multiplicity + 1) // 2
    lo, hi = 0, math.isqrt(2 * w * constraints) + w + 2
    while _monomial_count(hi, w) <= constraints:
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if _monomial_count(mid, w) > constraints:
            hi = mid
        else:
            lo = mid + 1
    delta = lo
    ell = delta // w
    t_min = delta // multiplicity + 1
    cost = constraints * (ell + 1) * (delta + 1)
    return InterpParams(constraints, delta, ell, t_min, n - t_min, cost)


def min_multiplicity_for_radius(
    n: int, k: int, radius: int, max_cost: int = 50_000_000
) -> tuple[int, int]:
    """Smallest multiplicity whose guaranteed radius reaches ``radius``.

    Returns (multiplicity, estimated cost).  Raises RadiusUnsupportedError
    when no multiplicity can reach the radius, and InstanceTooLargeError
    when one could but its interpolation work exceeds ``max_cost``.
    """
    if radius > gs_radius_limit(n, k):
        raise RadiusUnsupportedError(
            f"radius {radius} exceeds the asymptotic bound {gs_radius_limit(n, k)} for ({n},{k})"
        )
    m = 1
    while True:
        if gs_radius(n, k, m) >= radius:
            cost = interp_params(n, k, m).cost if k >= 2 else 0
            if cost > max_cost:
                raise InstanceTooLargeError(
                    f"multiplicity {m} for radius {radius} needs cost {cost} > {max_cost}"
                )
            return m, cost
        if k >= 2 and interp_params(n, k, m).cost > max_cost:
            raise InstanceTooLargeError(
                f"no multiplicity within cost bound {max_cost} reaches radius {radius}"
            )
        m += 1


class _Interpolator:
    """Koetter's iterative interpolation with per-point Hasse-derivative caching.

    Each candidate is a padded (ell+1) x cap coefficient matrix; row b holds
    the x-polynomial multiplying y^b.  For every point we evaluate the m
    x-derivatives of every row once, then serve all m(m+1)/2 constraints of
    that point from the cached scalars, mirroring each polynomial update on
    the cache (updates are linear, and multiplying the pivot by (x - x0)
    just shifts its derivative column).
    """

    def __init__(self, vf: VecField, weight: int, ell: int, multiplicity: int) -> None:
        self.vf = vf
        self.w = weight
        self.ell = ell
        self.mult = multiplicity
        ncand = ell + 1
        cap = 16
        self.M = [np.zeros((ncand, cap), dtype=np.int32) for _ in range(ncand)]
        self.degs = [[-1] * ncand for _ in range(ncand)]
        self.used = [1] * ncand  # per candidate: max slice degree + 1
        for i in range(ncand):
            self.M[i][i, 0] = 1
            self.degs[i][i] = 0
        self.E = np.zeros((ncand, ncand, multiplicity), dtype=np.int32)
        self._masks = np.zeros((multiplicity, 0), dtype=bool)
        self._grow_masks(cap)

    def _grow_masks(self, length: int) -> None:
        idx = np.arange(length, dtype=np.int64)
        self._masks = np.stack([(idx & r) == r for r in range(self.mult)])

    def _ensure_cap(self, i: int, need: int) -> None:
        cap = self.M[i].shape[1]
        if need <= cap:
            return
        grown = np.zeros((self.ell + 1, max(need, 2 * cap)), dtype=np.int32)
        grown[:, :cap] = self.M[i]
        self.M[i] = grown

    def _key(self, i: int) -> tuple[int, int, int]:
        # leading monomial of candidate i under the (1, w)-weighted order:
        # (weighted degree, y-degree of the leader, index) — ties cannot
        # share the same leading monomial, so this orders candidates fully
        wd, lead = -1, -1
        row = self.degs[i]
        for b in range(self.ell + 1):
            d = row[b]
            if d >= 0:
                v = d + self.w * b
                if v > wd or (v == wd and b > lead):
                    wd, lead = v, b
        return (wd, lead, i)

    def process_point(self, logx: int, y0: int) -> None:
        vf = self.vf
        expz, logz, q1 = vf.expz, vf.logz, vf.period
        ncand = self.ell + 1
        mult = self.mult
        x0 = int(vf.exp[logx])
        maxlen = max(self.used)
        if maxlen > self._masks.shape[1]:
            self._grow_masks(2 * maxlen)
        idxexp = (np.arange(maxlen, dtype=np.int64) * logx) % q1
        xinv = np.array(
            [vf.exp[(q1 - (r * logx) % q1) % q1] for r in range(mult)], dtype=np.int32
        )
        # Hasse x-derivatives of every slice at x0:
        #   D_r slice(x0) = x0^(-r) * xor_{a & r == r} coeff_a x0^a
        for i in range(ncand):
            used = self.used[i]
            sub = self.M[i][:, :used]
            prod = expz[logz[sub] + idxexp[None, :used]]
            vals = np.bitwise_xor.reduce(
                np.where(self._masks[:, None, :used], prod[None, :, :], 0), axis=2
            )
            self.E[i] = vf.mul(vals.T, xinv[None, :])

        ly0 = int(vf.log[y0]) if y0 else 0
        bs = np.arange(ncand, dtype=np.int64)
        for s in range(mult):
            # coef_b = C(b, s) y0^(b-s) over GF; C(b, s) is odd iff b & s == s
            if y0:
                coef = vf.exp[((bs - s) % q1) * ly0 % q1].astype(np.int32)
                coef = np.where(((bs & s) == s) & (bs >= s), coef, 0)
            else:
                coef = np.where(bs == s, 1, 0).astype(np.int32)
            lcoef = logz[coef]
            for r in range(mult - s):
                d = np.bitwise_xor.reduce(expz[logz[self.E[:, :, r]] + lcoef[None, :]], axis=1)
                nz = np.flatnonzero(d)
                if nz.size == 0:
                    continue
                istar = min((self._key(int(i)) for i in nz), key=lambda t: t)[2]
                dstar = int(d[istar])
                used_star = self.used[istar]
                others = [int(i) for i in nz if int(i) != istar]
                for i in others:
                    di = int(d[i])
                    used_i = max(self.used[i], used_star)
                    self._ensure_cap(i, used_i)
                    self._ensure_cap(istar, used_i)
                    upd = vf.mul_scalar(self.M[i][:, :used_i], dstar)
                    upd ^= vf.mul_scalar(self.M[istar][:, :used_i], di)
                    self.M[i][:, :used_i] = upd
                    nzmask = upd != 0
                    anyrow = nzmask.any(axis=1)
                    lastnz = np.where(
                        anyrow, used_i - 1 - np.argmax(nzmask[:, ::-1], axis=1), -1
                    )
                    self.degs[i] = [int(v) for v in lastnz]
                    self.used[i] = int(lastnz.max()) + 1
                if others:
                    idx = np.asarray(others, dtype=np.int64)
                    dvec = d[idx].astype(np.int32)
                    self.E[idx] = vf.mul_scalar(self.E[idx], dstar) ^ vf.mul(
                        self.E[istar][None, :, :], dvec[:, None, None]
                    )
                # pivot <- (x - x0) * pivot
                self._ensure_cap(istar, used_star + 1)
                sub = self.M[istar][:, :used_star]
                shifted = np.zeros((ncand, used_star + 1), dtype=np.int32)
                shifted[:, 1:] = sub
                shifted[:, :used_star] ^= vf.mul_scalar(sub, x0)
                self.M[istar][:, : used_star + 1] = shifted
                self.degs[istar] = [dg + 1 if dg >= 0 else -1 for dg in self.degs[istar]]
                self.used[istar] = used_star + 1
                self.E[istar, :, 1:] = self.E[istar, :, :-1]
                self.E[istar, :, 0] = 0

    def minimal(self) -> list[np.ndarray]:
        key = min(self._key(i) for i in range(self.ell + 1))
        if key[0] < 0:
            raise InterpolationError("all interpolation candidates vanished")
        i = key[2]
        out = []
        for b in range(self.ell + 1):
            d = self.degs[i][b]
            out.append(self.M[i][b, : d + 1].copy() if d >= 0 else np.zeros(0, dtype=np.int32))
        return out


def _roth_ruckenstein(slices: list[np.ndarray], k: int, vf: VecField) -> list[tuple[int, ...]]:
    """All message polynomials f (deg < k) with Q(x, f(x)) = 0.

    Depth-first: pick the next coefficient as a root of Q(0, y), substitute
    y <- x*y + root, strip the common x power, recurse.  A prefix is a
    complete root whenever the y^0 slice vanishes.  Linear Q (y-degree 1)
    short-circuits to one exact polynomial division.
    """
    if len(slices) == 2:
        root = _linear_root(slices[0], slices[1], k, vf)
        return [] if root is None else [root]
    found: set[tuple[int, ...]] = set()
    stack: list[tuple[list[np.ndarray], tuple[int, ...]]] = [(slices, ())]
    while stack:
        cur, prefix = stack.pop()
        # strip the largest common power of x
        val = None
        for arr in cur:
            nz = np.flatnonzero(arr)
            if nz.size:
                v = int(nz[0])
                val = v if val is None else min(val, v)
        if val is None:
            raise InterpolationError("zero polynomial reached during factorization")
        if val:
            cur = [arr[val:] if len(arr) > val else arr[:0] for arr in cur]
        if len(cur[0]) == 0 or not cur[0].any():
            found.add(prefix + (0,) * (k - len(prefix)))
        if len(prefix) == k:
            continue
        consts = [int(arr[0]) if len(arr) else 0 for arr in cur]
        if not any(consts):
            continue
        for gamma in _univariate_roots(consts, vf):
            stack.append((_substitute(cur, gamma, vf), prefix + (gamma,)))
    return sorted(found)


def _univariate_roots(coeffs: list[int], vf: VecField) -> list[int]:
    """Roots of a low-degree polynomial by scanning the field."""
    f = vf.field
    if vf.q <= 64:  # scalar scan beats vector overhead on tiny fields
        out = []
        for x in range(vf.q):
            acc = 0
            for c in reversed(coeffs):
                acc = f.mul(acc, x) ^ c
            if acc == 0:
                out.append(x)
        return out
    elements = np.arange(vf.q, dtype=np.int32)
    mask = vf.poly_eval_many(np.asarray(coeffs, dtype=np.int32), elements) == 0
    return [int(v) for v in elements[mask]]


def _linear_root(q0: np.ndarray, q1: np.ndarray, k: int, vf: VecField) -> tuple[int, ...] | None:
    """The unique f with q0 + q1*f = 0, if it is polynomial of degree < k."""
    if not q1.any():
        return None
    if not q0.any():
        return (0,) * k
    f = vf.field
    a = [int(v) for v in q0]
    while a and a[-1] == 0:
        a.pop()
    b = [int(v) for v in q1]
    while b and b[-1] == 0:
        b.pop()
    if len(a) < len(b) or len(a) - len(b) >= k:
        return None
    quot = [0] * (len(a) - len(b) + 1)
    lead_inv = f.inv(b[-1])
    bnz = [(j, c) for j, c in enumerate(b) if c]
    for i in range(len(a) - 1, len(b) - 2, -1):
        c = a[i]
        if c == 0:
            continue
        qc = f.mul(c, lead_inv)
        quot[i - len(b) + 1] = qc
        for j, bc in bnz:
            a[i - len(b) + 1 + j] ^= f.mul(qc, bc)
    if any(a):
        return None  # division not exact: no polynomial root
    return tuple(quot) + (0,) * (k - len(quot))


def _substitute(slices: list[np.ndarray], gamma: int, vf: VecField) -> list[np.ndarray]:
    # Q(x, x*y + gamma): new slice s = x^s * sum_{b >= s, C(b,s) odd} gamma^(b-s) slice_b
    ell = len(slices) - 1
    out = []
    for s in range(ell + 1):
        acc = None
        for b in range(s, ell + 1):
            if (b & s) != s or len(slices[b]) == 0:
                continue
            if gamma == 0 and b != s:
                continue
            term = slices[b] if b == s else vf.mul_scalar(slices[b], vf.field.pow(gamma, b - s))
            if acc is None:
                acc = term.copy()
            elif len(acc) >= len(term):
                acc[: len(term)] ^= term
            else:
                term = term.copy()
                term[: len(acc)] ^= acc
                acc = term
        if acc is None:
            out.append(np.zeros(0, dtype=np.int32))
        else:
            out.append(np.concatenate([np.zeros(s, dtype=np.int32), acc]))
    return out


def gs_list_decode(r, code, cfg: GsConfig) -> ListDecodeResult:
    """Every codeword within gs_radius(n, k, cfg.multiplicity) of r.

    Candidates beyond that radius are filtered out even when the
    interpolation happens to cover more, so the result contract is exact.
    Exceeding cfg.max_list raises ListOverflowError instead of truncating.
    """
    n, k = code.n, code.k
    r = as_symbols(r, n)
    tau = gs_radius(n, k, cfg.multiplicity)
    vf = get_vec(code.field.m)
    if k == n:
        # rate-1 code: the whole space; only r itself lies within radius 0
        return ListDecodeResult([(r.copy(), 0)], 0)
    if k == 1:
        cands = []
        for v in range(code.field.q):
            cw = np.full(n, v, dtype=np.int32)
            dist = hamming_distance(cw, r)
            if dist <= tau:
                cands.append((cw, dist))
        return _finish(cands, tau, cfg)
    params = interp_params(n, k, cfg.multiplicity)
    if params.cost > cfg.max_cost:
        raise InstanceTooLargeError(
            f"interpolation cost {params.cost} exceeds configured bound {cfg.max_cost}"
        )
    if params.tau_exact < tau:
        raise InterpolationError(
            f"interpolation covers radius {params.tau_exact} < contract radius {tau}"
        )
    # every constraint multiplies exactly one candidate by (x - x0), so no
    # slice can ever exceed the constraint count in degree
    cap = params.constraints + 2
    slices = interpolate_compiled(r, cfg.multiplicity, k - 1, params.ell, cap, vf)
    if slices is None:  # numba unavailable; use the numpy reference path
        interp = _Interpolator(vf, k - 1, params.ell, cfg.multiplicity)
        for j in range(n):
            interp.process_point(j, int(r[j]))
        slices = interp.minimal()
    cands = []
    seen = set()
    for msg in _roth_ruckenstein(slices, k, vf):
        cw = code.encode(np.asarray(msg, dtype=np.int32))
        key = tuple(int(v) for v in cw)
        if key in seen:
            continue
        seen.add(key)
        dist = hamming_distance(cw, r)
        if dist <= tau:
            cands.append((cw, dist))
    return _finish(cands, tau, cfg)


def _finish(cands, tau: int, cfg: GsConfig) -> ListDecodeResult:
    cands.sort(key=lambda cd: (cd[1], tuple(int(v) for v in cd[0])))
    if len(cands) > cfg.max_list:
        raise ListOverflowError(f"list size {len(cands)} exceeds max_list {cfg.max_list}")
    return ListDecodeResult(cands, tau)


_TRANSPOSED_BOOKS: dict[int, np.ndarray] = {}


def brute_force_list(r, code, radius: int, max_list: int | None = None) -> ListDecodeResult:
    """Exhaustive list decoding by scanning the full codebook (oracle)."""
    r = as_symbols(r, code.n)
    book = code.codebook()
    key = id(book)
    if key not in _TRANSPOSED_BOOKS:
        _TRANSPOSED_BOOKS[key] = np.ascontiguousarray(book.T)
    bookT = _TRANSPOSED_BOOKS[key]
    mism = np.zeros(book.shape[0], dtype=np.uint16)
    for j in range(code.n):
        mism += bookT[j] != book.dtype.type(r[j])
    hits = np.flatnonzero(mism <= radius)
    cands = [(book[i].astype(np.int32), int(mism[i])) for i in hits]
    cands.sort(key=lambda cd: (cd[1], tuple(int(v) for v in cd[0])))
    if max_list is not None and len(cands) > max_list:
        raise ListOverflowError(f"list size {len(cands)} exceeds max_list {max_list}")
    return ListDecodeResult(cands, radius)


class CosetSearcher:
    """Finds low-weight members of a syndrome coset by support enumeration.

    For every support of size w the system H_S v = s either has no
    solution or exactly one (full column rank, true for any w <= n-k
    columns of an MDS parity matrix); over GF(2) the values are forced to 1
    and membership is a plain column-XOR test.  Solver data per support is
    precomputed once per weight so repeated queries are a few vectorized
    passes.
    """

    def __init__(self, code) -> None:
        self.code = code
        self.field: Field = code.symbol_field
        self.vf = get_vec(self.field.m)
        self.H = np.asarray(code.H, dtype=np.int32)
        self.nk = self.H.shape[0]
        self.n = code.n
        self._weights: dict[int, tuple] = {}

    def _prepare(self, w: int):
        if w in self._weights:
            return self._weights[w]
        if math.comb(self.n, w) > MAX_SUPPORTS:
            raise InstanceTooLargeError(f"support enumeration at weight {w} exceeds budget")
        supports = np.array(list(combinations(range(self.n), w)), dtype=np.int64)
        if self.field.q == 2:
            packed = _pack_columns(self.H)
            combo = np.bitwise_xor.reduce(packed[supports], axis=1)
            data = ("binary", supports, combo)
        else:
            solvers = []
            consistency = []
            for sup in supports:
                P, C = _support_solver(self.H[:, sup], self.field)
                solvers.append(P)
                consistency.append(C)
            # every weight-w support contributes the same number (nk - w) of
            # consistency rows, so queries reduce to one reshape
            crows = np.concatenate(consistency, axis=0)
            data = ("general", supports, solvers, crows, self.nk - w)
        self._weights[w] = data
        return data

    def members_of_weight(self, s: np.ndarray, w: int) -> list[np.ndarray]:
        if w > self.nk and self.field.q != 2:
            raise InstanceTooLargeError(
                "support solving beyond the parity rank is not supported"
            )
        s = np.asarray(s, dtype=np.int32)
        if w == 0:
            return [] if np.any(s) else [np.zeros(self.n, dtype=np.int32)]
        data = self._prepare(w)
        out = []
        if data[0] == "binary":
            _, supports, combo = data
            starget = _pack_vector(s)
            for idx in np.flatnonzero(combo == starget):
                vec = np.zeros(self.n, dtype=np.int32)
                vec[supports[idx]] = 1
                out.append(vec)
            return out
        _, supports, solvers, crows, rows_per = data
        if rows_per:
            cons = np.bitwise_xor.reduce(self.vf.mul(crows, s[None, :]), axis=1)
            ok = ~(cons.reshape(len(supports), rows_per) != 0).any(axis=1)
        else:
            ok = np.ones(len(supports), dtype=bool)
        for idx in np.flatnonzero(ok):
            vals = np.bitwise_xor.reduce(self.vf.mul(solvers[idx], s[None, :]), axis=1)
            if np.all(vals != 0):
                vec = np.zeros(self.n, dtype=np.int32)
                vec[supports[idx]] = vals
                out.append(vec)
        return out

    def members_up_to(self, s, weight_limit: int, count: int | None = None) -> list[np.ndarray]:
        """All coset members of weight <= weight_limit (or the ``count`` lightest)."""
        s = as_symbols(s, self.nk)
        found: list[np.ndarray] = []
        for w in range(weight_limit + 1):
            if self.field.q != 2 and w > self.nk:
                if count is not None and len(found) < count:
                    raise InstanceTooLargeError(
                        "coset search exhausted the supported weight range"
                    )
                break
            found.extend(self.members_of_weight(s, w))
            if count is not None and len(found) >= count:
                break
        found.sort(key=lambda v: (int(np.count_nonzero(v)), tuple(int(x) for x in v)))
        return found


def _pack_columns(H: np.ndarray) -> np.ndarray:
    nk, n = H.shape
    if nk > 64:
        raise InstanceTooLargeError("binary coset search supports at most 64 parity rows")
    weights = (np.uint64(1) << np.arange(nk, dtype=np.uint64))
    return (H.astype(np.uint64).T * weights[None, :]).sum(axis=1)


def _pack_vector(v: np.ndarray) -> np.uint64:
    return np.uint64(sum(int(b) << i for i, b in enumerate(v)))


def _support_solver(sub: np.ndarray, f: Field) -> tuple[np.ndarray, np.ndarray]:
    """Row-reduce [sub | I] so that v = P s solves sub v = s when C s = 0."""
    nk, w = sub.shape
    aug = np.concatenate([sub.astype(np.int32), np.eye(nk, dtype=np.int32)], axis=1)
    row = 0
    for col in range(w):
        pivot = next((r for r in range(row, nk) if aug[r, col]), None)
        if pivot is None:
            raise InstanceTooLargeError("rank-deficient support; only MDS parity supported")
        aug[[row, pivot]] = aug[[pivot, row]]
        inv = f.inv(int(aug[row, col]))
        aug[row] = get_vec(f.m).mul_scalar(aug[row], inv)
        for r in range(nk):
            if r != row and aug[r, col]:
                factor = int(aug[r, col])
                aug[r] ^= get_vec(f.m).mul_scalar(aug[row], factor)
        row += 1
    P = aug[:w, w:]
    C = aug[w:, w:]
    return P.copy(), C.copy()


_searchers: dict[int, CosetSearcher] = {}


def coset_searcher(code) -> CosetSearcher:
    key = id(code)
    if key not in _searchers:
        _searchers[key] = CosetSearcher(code)
    return _searchers[key]


def min_weight_coset_list(s, code, count: int) -> list[np.ndarray]:
    """The ``count`` lowest-weight vectors u with H u^T = s (oracle scale).

    Ascending weight, lexicographic tie-break.  Weights are enumerated via
    supports, so the search is exact; it refuses instances beyond its
    budget rather than approximating.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    searcher = coset_searcher(code)
    limit = code.n if code.symbol_field.q == 2 else searcher.nk
    found = searcher.members_up_to(s, limit, count=count)
    if len(found) < count:
        raise InstanceTooLargeError(
            f"coset search found only {len(found)} members within the supported weight range"
        )
    return found[:count]
