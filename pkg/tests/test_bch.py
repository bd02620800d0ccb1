import random

import numpy as np
import pytest

from swld.bch import (BchCode, bch_list_decode, bch_syndrome, build_bch,
                      cyclotomic_coset, designed_distance_ladder, min_polynomial)
from swld.errors import RadiusUnsupportedError
from swld.gf import Poly, get_field, poly_divmod
from swld.listdecode import GsConfig, gs_radius
from swld.planner import wu_radius


def test_cyclotomic_cosets_15():
    assert cyclotomic_coset(1, 15) == frozenset({1, 2, 4, 8})
    assert cyclotomic_coset(3, 15) == frozenset({3, 6, 12, 9})
    assert cyclotomic_coset(5, 15) == frozenset({5, 10})


def test_build_15_7():
    code = build_bch(4, 5)
    assert (code.n, code.k) == (15, 7)
    # xi^8 + xi^7 + xi^6 + xi^4 + 1
    assert code.gen_poly.coeffs == (1, 0, 0, 0, 1, 0, 1, 1, 1)


@pytest.mark.parametrize("m", [4, 8, 10])
def test_delta_two_gives_single_coset(m):
    code = build_bch(m, 2)
    assert code.k == code.n - m


def test_build_1023_56():
    code = build_bch(10, 383)
    assert (code.n, code.k) == (1023, 56)
    assert code.relative_distance > 0.3743


def test_generator_divides_whole_space_polynomial():
    for m, delta in ((4, 5), (4, 7)):
        code = build_bch(m, delta)
        xn1 = Poly.of([1] + [0] * (code.n - 1) + [1])
        _, rem = poly_divmod(xn1, code.gen_poly, get_field(1))
        assert rem.is_zero()


def test_min_polynomial_is_binary_and_annihilates():
    f = get_field(4)
    for exp in (1, 3, 5, 7):
        mp = min_polynomial(4, exp)
        assert all(c in (0, 1) for c in mp.coeffs)
        beta = f.alpha_pow(exp)
        acc = 0
        for i, c in enumerate(mp.coeffs):
            if c:
                acc ^= f.pow(beta, i)
        assert acc == 0


def test_ladder_monotone_and_known_corners():
    lad = designed_distance_ladder(10)
    ks = [e.k for e in lad]
    assert ks == sorted(ks, reverse=True)
    by_k = {e.k: e for e in lad}
    assert by_k[56].delta == 383
    assert by_k[11].delta == 511 and by_k[11].t == 255
    assert by_k[16].t == 247
    # the only rung certifying more than t=255 is the degenerate k=1 one
    assert max(e.t for e in lad if e.k >= 2) == 255


def test_subcode_property_exhaustive_15_7():
    code = build_bch(4, 5)
    sup = code.supercode
    book = code.codebook()
    assert len(book) == 2 ** 7
    for cw in book:
        assert not sup.syndrome(cw.astype(np.int32)).any()


def test_subcode_property_sampled_1023():
    code = build_bch(10, 383)
    rng = random.Random(1)
    for _ in range(1000):
        cw = code.encode([rng.randrange(2) for _ in range(code.k)])
        assert not code.power_syndrome(cw).any()


def test_syndrome_examples():
    code = build_bch(4, 5)
    assert not bch_syndrome(np.zeros(15, dtype=np.int32), code).any()
    g_vec = np.zeros(15, dtype=np.int32)
    g_vec[: len(code.gen_poly.coeffs)] = code.gen_poly.coeffs
    assert not bch_syndrome(g_vec, code).any()
    assert not code.syndrome(g_vec).any()
    f = code.locator_field
    e = np.zeros(15, dtype=np.int32)
    e[6] = 1
    s = bch_syndrome(e, code)
    assert s.tolist() == [f.alpha_pow((i + 1) * 6) for i in range(4)]


def test_list_decode_radius_zero_on_codeword():
    code = build_bch(4, 5)
    rng = random.Random(2)
    cw = code.encode([rng.randrange(2) for _ in range(7)])
    got = bch_list_decode(cw, code, 0, GsConfig(multiplicity=1))
    assert len(got) == 1 and (got[0] == cw).all()


def test_list_decode_matches_brute_force_radius_4():
    code = build_bch(4, 5)
    book = code.codebook().astype(np.int32)
    rng = random.Random(3)
    cfg = GsConfig(multiplicity=2, max_list=512)
    for _ in range(200):
        y = np.array([rng.randrange(2) for _ in range(15)], dtype=np.int32)
        got = [tuple(int(v) for v in c) for c in bch_list_decode(y, code, 4, cfg)]
        dists = np.count_nonzero(book != y[None, :], axis=1)
        hits = np.flatnonzero(dists <= 4)
        want = sorted(
            (tuple(int(v) for v in book[i]) for i in hits),
            key=lambda t: (sum(a != b for a, b in zip(t, y.tolist())), t),
        )
        assert got == want


def test_list_decode_supercode_path_matches_brute_force():
    code = build_bch(4, 5)
    sup = code.supercode
    cfg = GsConfig(multiplicity=3)
    radius = gs_radius(sup.n, sup.k, cfg.multiplicity)
    book = code.codebook().astype(np.int32)
    rng = random.Random(4)
    for _ in range(100):
        y = np.array([rng.randrange(2) for _ in range(15)], dtype=np.int32)
        got = [tuple(int(v) for v in c) for c in bch_list_decode(y, code, radius, cfg)]
        dists = np.count_nonzero(book != y[None, :], axis=1)
        want = sorted(
            (tuple(int(v) for v in book[i]) for i in np.flatnonzero(dists <= radius)),
            key=lambda t: (sum(a != b for a, b in zip(t, y.tolist())), t),
        )
        assert got == want


def test_list_decode_empty_beyond_all_codewords():
    code = build_bch(4, 5)
    book = code.codebook().astype(np.int32)
    rng = random.Random(5)
    found_isolated = False
    for _ in range(200):
        y = np.array([rng.randrange(2) for _ in range(15)], dtype=np.int32)
        dists = np.count_nonzero(book != y[None, :], axis=1)
        if dists.min() > 2:
            got = bch_list_decode(y, code, 2, GsConfig(multiplicity=2))
            assert got == []
            found_isolated = True
            break
    assert found_isolated


def test_list_decode_refuses_large_radius_at_scale():
    code = build_bch(10, 383)
    y = np.zeros(1023, dtype=np.int32)
    y[0] = 1
    with pytest.raises(RadiusUnsupportedError):
        bch_list_decode(y, code, 255, GsConfig(multiplicity=1))


def test_wu_radius_monotone_in_distance():
    vals = [wu_radius(1023, d) for d in range(3, 512, 2)]
    assert all(b >= a for a, b in zip(vals, vals[1:]))
    assert wu_radius(1023, 383) == pytest.approx(255.13, abs=0.01)


def test_k_non_increasing_in_delta():
    ks = [build_bch(4, d).k for d in range(2, 16)]
    assert ks == sorted(ks, reverse=True)


def test_rejects_bad_delta():
    with pytest.raises(ValueError):
        BchCode(4, 1)
    with pytest.raises(ValueError):
        BchCode(4, 16)
