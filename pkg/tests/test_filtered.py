"""Level invariants N, N-transpose, Gamma, r_s on the filtered models.

The one-generator complex with zeta at (1, r) has N(1, s) = r for every
s, and its dual concentrates everything in the k = 0 column with
threshold -r.  The local two-generator model has Gamma(0) = 8/53 and
r_0 = 20/53.
"""

import random
from fractions import Fraction

import pytest

from scx.coeff import INF, NEG_INF, RING_QT, RING_LOC
from scx.scomplex import SComplex, Morphism, RefusedPrecondition, \
    GRADING_ZR, F_ONE
from scx.models import (filtered_trivial, filtered_one_gen,
                        ten28star_local, twobridge_model)
from scx.filtered import (n_value, n_transpose, gamma, r_invariant,
                          morphism_level, level_set)

S_SAMPLES = [Fraction(-1, 7), Fraction(-3), NEG_INF]


def test_trivial_table():
    t = filtered_trivial()
    for s in S_SAMPLES:
        assert n_value(t, 1, s) == INF
        assert n_value(t, 2, s) == INF
        assert n_value(t, 0, s) == 0
        assert n_value(t, -1, s) == 0
    assert gamma(t, 1) == INF
    assert gamma(t, 0) == 0
    assert n_transpose(t, 0, 0) == NEG_INF
    assert r_invariant(t, 0) == INF
    assert r_invariant(t, Fraction(-5)) == INF
    assert r_invariant(t, NEG_INF) == INF


@pytest.mark.parametrize("r0", [Fraction(1, 3), Fraction(2),
                                Fraction(5, 7)])
def test_one_gen_table(r0):
    e = filtered_one_gen(r0)
    for s in S_SAMPLES:
        assert n_value(e, 1, s) == r0
        assert n_value(e, 0, s) == 0
        assert n_value(e, -1, s) == 0
    assert gamma(e, 1) == r0
    assert n_value(e, 2, NEG_INF) == INF
    assert n_value(e, 3, NEG_INF) == INF


@pytest.mark.parametrize("r0", [Fraction(1, 3), Fraction(2)])
def test_one_gen_transpose(r0):
    e = filtered_one_gen(r0)
    assert n_transpose(e, 1, r0) == NEG_INF
    assert n_transpose(e, 1, r0 + 1) == NEG_INF
    assert n_transpose(e, 1, INF) == NEG_INF
    assert n_transpose(e, 1, 0) == 0
    assert n_transpose(e, 1, r0 - Fraction(1, 100)) == 0


def test_one_gen_dual_table():
    # the k = 0 threshold sits at deg_I of the dualized delta1 value
    r0 = Fraction(1, 3)
    d = filtered_one_gen(r0).dual()
    assert d.validate()["ok"]
    for k in (1, 2, 3):
        assert n_value(d, k, Fraction(-1, 2)) == INF
    assert n_value(d, 0, -r0) == 0
    assert n_value(d, 0, -r0 + Fraction(1, 100)) == 0
    assert n_value(d, 0, -r0 - Fraction(1, 100)) == INF
    assert n_value(d, 0, NEG_INF) == INF
    assert n_value(d, -1, NEG_INF) == 0
    assert gamma(d, 0) == INF
    assert r_invariant(d, 0) == r0


def test_refusals():
    e = filtered_one_gen(Fraction(1, 3))
    with pytest.raises(RefusedPrecondition):
        n_value(e, 1, 0)
    with pytest.raises(RefusedPrecondition):
        n_value(e, 1, Fraction(1, 2))
    with pytest.raises(RefusedPrecondition):
        n_transpose(e, 1, Fraction(-1, 2))
    with pytest.raises(RefusedPrecondition):
        r_invariant(e, Fraction(1, 2))
    with pytest.raises(RefusedPrecondition):
        n_value(twobridge_model(1), 1, Fraction(-1, 2))
    with pytest.raises(RefusedPrecondition):
        n_value(filtered_one_gen(1, ring=RING_LOC), 1, Fraction(-1, 2))
    skew = SComplex(RING_QT, [], [], grading=GRADING_ZR, degI=[],
                    omega=Fraction(1, 3))
    with pytest.raises(RefusedPrecondition):
        n_value(skew, 0, Fraction(-1, 2))


def test_level_set():
    loc = ten28star_local()
    assert level_set(loc, -1) == [Fraction(8, 53)]
    assert level_set(loc, -2) == [Fraction(-20, 53)]
    assert level_set(loc, 2) == [Fraction(33, 53)]
    assert level_set(loc, 1) == []


def _models():
    return [filtered_one_gen(Fraction(1, 3)),
            filtered_one_gen(Fraction(1, 3)).dual(),
            ten28star_local(),
            ten28star_local().dual()]


def test_monotonicity():
    ks = [-1, 0, 1, 2]
    ss = [NEG_INF, Fraction(-2), Fraction(-21, 53), Fraction(-1, 7)]
    rs = [0, Fraction(8, 53), Fraction(1), INF]
    for cx in _models():
        grid = {(k, s): n_value(cx, k, s) for k in ks for s in ss}
        tgrid = {(k, r): n_transpose(cx, k, r) for k in ks for r in rs}
        for k in ks:
            for k2 in ks:
                if k2 > k:
                    continue
                for s in ss:
                    for s2 in ss:
                        if s2 == NEG_INF and s != NEG_INF:
                            continue
                        if s2 != NEG_INF and s != NEG_INF and s2 < s:
                            continue
                        # k2 <= k and s2 >= s
                        assert grid[(k2, s2)] <= grid[(k, s)]
                for r in rs:
                    for r2 in rs:
                        if r2 != INF and (r == INF or r2 < r):
                            continue
                        assert tgrid[(k2, r2)] <= tgrid[(k, r)]


def test_field_collapse():
    # N and underline-N agree over the fraction field
    for cx in _models():
        for k in (-1, 0, 1):
            for s in (Fraction(-1, 7), Fraction(-2), NEG_INF):
                assert n_value(cx, k, s) == n_value(cx, k, s,
                                                   underline=True)


def test_values_live_in_level_set():
    for cx in _models():
        for k in (-1, 0, 1, 2):
            levels = set(level_set(cx, 2 * k - 1))
            if k <= 0:
                levels.add(Fraction(0))
            for s in (Fraction(-1, 7), Fraction(-2), NEG_INF):
                val = n_value(cx, k, s)
                if val != INF:
                    assert val in levels
            tlevels = set(level_set(cx, 2 * k - 2))
            if k >= 1:
                tlevels.add(Fraction(0))
            for r in (0, Fraction(1, 2), INF):
                tv = n_transpose(cx, k, r)
                if tv != NEG_INF:
                    assert tv in tlevels


def test_transpose_recovery():
    # N(k, s) = min{r : N^T(k, r) <= s} away from the defect level set
    for cx in _models():
        for k in (-1, 0, 1):
            bad = set(level_set(cx, 2 * k - 2))
            cands = [Fraction(0)] + \
                [l for l in level_set(cx, 2 * k - 1) if l > 0] + [INF]
            for s in (Fraction(-1, 7), Fraction(-9, 8), Fraction(-3)):
                if s in bad:
                    continue
                direct = n_value(cx, k, s)
                recovered = INF
                for r in cands:
                    if n_transpose(cx, k, r) <= s:
                        recovered = r
                        break
                assert recovered == direct


def test_morphism_level_examples():
    loc = ten28star_local()
    ident = Morphism(loc, loc, eta=F_ONE)
    for i in range(loc.n):
        ident.lam[i][i] = F_ONE
    assert ident.is_chain_map()
    assert morphism_level(ident) == 0

    shifted = ten28star_local()
    shifted.degI = [x - Fraction(1, 4) for x in shifted.degI]
    assert shifted.validate()["ok"]
    up = Morphism(shifted, loc, eta=F_ONE)
    for i in range(loc.n):
        up.lam[i][i] = F_ONE
    assert up.is_chain_map()
    assert morphism_level(up) == Fraction(1, 4)


def _pool():
    pool = [filtered_trivial(),
            filtered_one_gen(Fraction(1, 3)),
            filtered_one_gen(Fraction(1, 2)),
            filtered_one_gen(Fraction(2)),
            filtered_one_gen(Fraction(1, 3)).dual(),
            filtered_one_gen(Fraction(5, 7)).dual(),
            ten28star_local(),
            ten28star_local().dual()]
    return pool


def test_connected_sum_fuzz():
    pool = _pool()
    rng = random.Random(2026)
    ks = [-1, 0, 1]
    ss = [Fraction(-1, 7), Fraction(-1, 3), Fraction(-1), Fraction(-3)]
    rvals = [Fraction(0), Fraction(1, 3), Fraction(1)]
    s0s = [Fraction(0), Fraction(-1, 7), Fraction(-1, 3)]
    checked = 0
    for _ in range(100):
        a = rng.choice(pool)
        b = rng.choice(pool)
        ab = a.tensor(b)
        k, k2 = rng.choice(ks), rng.choice(ks)
        s, s2 = rng.choice(ss), rng.choice(ss)
        na, nb = n_value(a, k, s), n_value(b, k2, s2)
        if na != INF and nb != INF:
            s_sum = max(na + s2, nb + s)
            if s_sum < 0:
                assert n_value(ab, k + k2, s_sum) <= na + nb
                checked += 1
        r, r2 = rng.choice(rvals), rng.choice(rvals)
        ta = n_transpose(a, k, r)
        tb = n_transpose(b, k2, r2)
        bound = max(ta + r2, tb + r)
        lhs = n_transpose(ab, k + k2, r + r2)
        if bound == NEG_INF:
            assert lhs == NEG_INF
        else:
            assert lhs <= bound
        ga, gb = gamma(a, k), gamma(b, k2)
        if ga != INF and gb != INF:
            assert gamma(ab, k + k2) <= ga + gb
        sa, sb = rng.choice(s0s), rng.choice(s0s)
        ra, rb = r_invariant(a, sa), r_invariant(b, sb)
        rab = r_invariant(ab, sa + sb)
        assert rab - sa - sb >= min(ra - sa, rb - sb)
        checked += 1
    assert checked >= 100
