"""Seeded self-test suites behind the command line.

Each suite is a list of named pure checks.  Property cases run on a
small worker pool; results are sorted by name before emission, so a
fixed seed gives byte-identical summaries no matter how the pool
schedules them.
"""

import random
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import linalg as la
from . import models
from . import topology
from .coeff import F_ONE, F_ZERO, INF, RING_LOC, RING_QT, LPoly
from .concordance import (froyshov, j_report, s_invariants, staircase_ideal,
                          zhat)
from .equivariant import a_space, annihilator_kills, torsion_annihilator
from .filtered import gamma, n_value, n_transpose
from .scomplex import Morphism

SUITES = ("trefoil", "properties", "cobordism", "filtered", "signature")

F = Fraction


def _case(name, fn):
    try:
        fn()
        return {"name": name, "ok": True}
    except AssertionError as err:
        return {"name": name, "ok": False,
                "detail": str(err) or "assertion failed"}
    except Exception as err:  # a crash is a failure, not an abort
        return {"name": name, "ok": False,
                "detail": "%s: %s" % (type(err).__name__, err)}


# ---------------------------------------------------------------------------
# trefoil suite

def _trefoil_heights():
    for l in (1, 2, 3):
        cx = models.trefoil_sum(l)
        assert froyshov(cx) == l, "h of %d trefoils" % l
        rep = j_report(cx, l)
        assert rep["nontrivial"] and rep["min_valuation"] == l, rep
        mir = models.trefoil_sum(-l)
        assert froyshov(mir) == -l
        rep = j_report(mir, -l)
        assert rep["nontrivial"] and rep["min_valuation"] == 0, rep


def _trefoil_s_invariants():
    out = s_invariants(models.trefoil_right())
    assert (out["h"], out["stilde"]) == (1, 1)
    assert (out["ssharp_plus"], out["ssharp_minus"]) == (1, 0)
    assert out["epsilon"] == 1 and out["type"] == "I"
    out = s_invariants(models.trefoil_left())
    assert (out["h"], out["stilde"]) == (-1, -1)
    assert (out["ssharp_plus"], out["ssharp_minus"]) == (0, -1)


def _trefoil_zhat():
    for l in (1, 2, 3):
        assert zhat(models.trefoil_sum(l)) == staircase_ideal(l)
        assert zhat(models.trefoil_sum(-l)).contains(0, 0)


def _trefoil_sigma():
    a = topology.seifert_for(topology.KnotDescriptor.twobridge(3, 1))
    assert topology.signature_sigma(a) == -2
    assert topology.tristram_levine(a, F(1, 4)) == -2
    assert topology.tristram_levine(a, F(1, 24)) == 0
    assert not topology.alexander_root_gate(a, F(1, 12))


def suite_trefoil(seed=0, cases=0):
    return [_case("trefoil/heights-and-ideals", _trefoil_heights),
            _case("trefoil/s-invariants", _trefoil_s_invariants),
            _case("trefoil/zhat-staircases", _trefoil_zhat),
            _case("trefoil/signatures", _trefoil_sigma)]


# ---------------------------------------------------------------------------
# properties suite

_ATOMS = {
    1: ("trefoil_right", "trefoil_left", "one_gen_delta1", "omega1",
        "tb+1", "tb-1"),
    2: ("tb+2", "tb-2"),
    3: ("tb+3", "tb-3"),
    4: ("tb+4", "tb-4"),
    5: ("tb+5", "tb-5"),
}


def _atom(rng, ring, max_gens):
    pool = []
    for size, names in _ATOMS.items():
        if size <= max_gens:
            pool.extend(names)
    name = rng.choice(sorted(pool))
    if name == "trefoil_right":
        return models.trefoil_right(ring)
    if name == "trefoil_left":
        return models.trefoil_left(ring)
    if name == "one_gen_delta1":
        return models.one_gen_delta1(ring)
    if name == "omega1":
        return models.omega_block(1, ring)
    return models.twobridge_model(int(name[2:]), ring)


def _random_complex(rng, ring):
    cx = _atom(rng, ring, 5)
    while rng.random() < 0.4 and cx.n >= 1:
        room = (5 - cx.n - 1) // (2 * cx.n + 1)
        if room < 1:
            break
        cx = cx.tensor(_atom(rng, ring, min(room, 3)))
    if rng.random() < 0.3:
        cx = cx.dual()
    return cx


def _property_case(seed, i):
    rng = random.Random(seed * 1000003 + i)
    ring = RING_LOC if rng.random() < 0.7 else RING_QT
    cx = _random_complex(rng, ring)
    assert cx.n <= 5, "corpus bound"
    assert cx.validate()["ok"], "axioms"
    dual = cx.dual()
    assert dual.validate()["ok"], "axioms of dual"
    partner = _atom(rng, ring, 1)
    prod = cx.tensor(partner)
    assert prod.validate()["ok"], "axioms of tensor"
    h = froyshov(cx)
    assert froyshov(dual) == -h, "h negation"
    assert froyshov(prod) == h + froyshov(partner), "h additivity"
    if ring == RING_LOC:
        out = s_invariants(cx)
        sp, sm, st = out["ssharp_plus"], out["ssharp_minus"], out["stilde"]
        assert 0 <= sp - sm <= 2, "ssharp gap"
        assert max(sp - 1, sm) <= st <= min(sp, sm + 1), "sandwich"
        basis = a_space(cx)
        if basis:
            coeffs = torsion_annihilator(cx, basis[0], {})
            assert len(coeffs) <= cx.n + 1, "annihilator degree"
            assert annihilator_kills(cx, basis[0], {}, coeffs), \
                "torsion bound"


def _quasi_additivity():
    pairs = ((1, 1), (1, -1), (2, -1), (2, 2), (-2, -1), (3, -2))
    for a, b in pairs:
        ca = models.twobridge_model(a)
        cb = models.twobridge_model(b)
        s_ab = s_invariants(ca.tensor(cb))["ssharp"]
        s_a = s_invariants(ca)["ssharp"]
        s_b = s_invariants(cb)["ssharp"]
        assert abs(s_ab - s_a - s_b) <= 1, (a, b, s_ab, s_a, s_b)


def _inclusion_morphism(h):
    """The evident inclusion of staircase models, height 0 and strong."""
    src = models.twobridge_model(h - 1)
    tgt = models.twobridge_model(h)
    lam = [[F_ONE if i == j else F_ZERO for j in range(src.n)]
           for i in range(tgt.n)]
    # eta = 1 carries the R summand; without it the delta1 row breaks
    return Morphism(src, tgt, height=0, lam=lam, eta=F_ONE)


def _morphism_monotonicity():
    for h in (2, 3):
        m = _inclusion_morphism(h)
        assert m.is_chain_map(), "inclusion is a chain map"
        assert not m.check_graded(), "inclusion is graded"
        assert m.is_strong(), "inclusion is strong"
        assert froyshov(m.src) <= froyshov(m.tgt), "h monotonicity"
    cx = models.trefoil_right()
    ident = Morphism(cx, cx, lam=la.eye(cx.n), eta=F_ONE)
    assert ident.is_chain_map() and ident.is_strong()


def suite_properties(seed=0, cases=200):
    out = [_case("properties/quasi-additivity", _quasi_additivity),
           _case("properties/morphism-monotonicity",
                 _morphism_monotonicity)]
    with ThreadPoolExecutor(max_workers=4) as pool:
        futs = [(i, pool.submit(_case, "properties/case-%03d" % i,
                                lambda i=i: _property_case(seed, i)))
                for i in range(cases)]
        out.extend(f.result() for _, f in futs)
    return out


# ---------------------------------------------------------------------------
# cobordism suite

def _cob_crossing():
    data = topology.CobordismData([-2])
    for om in (F(1, 8), F(1, 4)):
        kmin, height, strong, eta, mins = \
            topology.minimal_reducibles(data, om)
        assert eta.c == {0: 1, 4: -1}, "eta = 1 - T^4"
        assert mins == [[0], [1]] and height == 0 and strong
        assert topology.reducible_invariants(data, [0], om)[:2] == \
            (4 * om * om, 0)
        assert topology.reducible_invariants(data, [1], om)[:2] == \
            (1 - 4 * om + 4 * om * om, -4)


def _cob_two_handle():
    data = topology.CobordismData([1], chi_w=1, sigma_w=-1, chi_s=0)
    kmin, height, strong, eta, mins = \
        topology.minimal_reducibles(data, F(1, 4))
    assert kmin == F(1, 16) and eta.c == {0: 1}
    assert mins == [[0]] and height == 0 and strong
    assert topology.reducible_invariants(data, [0], F(1, 4))[2] == -1


def _cob_immersed():
    for sp in (1, 2, 3):
        data = topology.immersed_data(sp, 1)
        kmin, height, strong, eta, mins = \
            topology.minimal_reducibles(data, F(1, 4))
        tau = LPoly({2: 1, -2: -1})
        want = LPoly({0: 1})
        for _ in range(sp):
            want = want * tau
        shifted = want * LPoly({2 * sp: (-1) ** sp})
        assert eta.c == shifted.c, "eta = (T^2 - T^-2)^s+ up to unit"
        assert kmin == 4 * sp * F(1, 16) and len(mins) == 2 ** sp


def _cob_empty():
    kmin, height, strong, eta, mins = \
        topology.minimal_reducibles(topology.CobordismData([]), F(1, 4))
    assert (kmin, height, strong) == (0, 0, True)
    assert eta.c == {0: 1} and mins == [[]]


def suite_cobordism(seed=0, cases=0):
    return [_case("cobordism/crossing-change", _cob_crossing),
            _case("cobordism/two-handle", _cob_two_handle),
            _case("cobordism/immersed", _cob_immersed),
            _case("cobordism/empty-form", _cob_empty)]


# ---------------------------------------------------------------------------
# filtered suite

def _filtered_trivial_table():
    cx = models.filtered_trivial()
    for k in (1, 2, 3):
        assert n_value(cx, k, F(-1)) == INF, "N(k>0) infinite"
        assert gamma(cx, k) == INF
    for k in (0, -1, -2):
        assert n_value(cx, k, F(-1)) == 0, "N(k<=0) zero"
        assert gamma(cx, k) == 0


def _filtered_one_gen_table():
    r = F(2, 7)
    cx = models.filtered_one_gen(r)
    assert n_value(cx, 1, F(-1, 100)) == r
    assert gamma(cx, 1) == r
    assert n_transpose(cx, 1, r) == -INF
    assert n_transpose(cx, 1, r - F(1, 50)) == 0


def _filtered_figure_gamma():
    fig = models.ten28star()
    assert gamma(fig, 0) == F(8, 53), "figure Gamma(0)"
    loc = models.ten28star_local()
    assert gamma(loc, 0) == F(8, 53), "local model Gamma(0)"


def _filtered_fuzz_case(seed, i):
    rng = random.Random(seed * 7777 + i)
    rs = [F(rng.randint(1, 12), rng.randint(13, 19)) for _ in range(2)]
    ca = models.filtered_one_gen(rs[0])
    cb = models.filtered_one_gen(rs[1])
    if rng.random() < 0.3:
        ca = ca.dual()
    ks = [rng.randint(-1, 2) for _ in range(2)]
    ss = sorted(F(rng.randint(-20, -1), 23) for _ in range(2))
    # monotonicity: k' <= k and s' >= s force N(k',s') <= N(k,s)
    lo = n_value(ca, ks[0], ss[1])
    hi = n_value(ca, max(ks), ss[0])
    assert lo <= hi or (lo == hi == INF), "monotonicity"
    # connected sum inequality at admissible levels
    na = n_value(ca, ks[0], ss[0])
    nb = n_value(cb, ks[1], ss[1])
    if na not in (INF, -INF) and nb not in (INF, -INF):
        s_tensor = max(na + ss[1], nb + ss[0])
        if s_tensor < 0:
            nab = n_value(ca.tensor(cb), ks[0] + ks[1], s_tensor)
            assert nab <= na + nb, "connected sum inequality"


def suite_filtered(seed=0, cases=15):
    out = [_case("filtered/trivial-table", _filtered_trivial_table),
           _case("filtered/one-generator-table", _filtered_one_gen_table),
           _case("filtered/figure-gamma", _filtered_figure_gamma)]
    for i in range(cases):
        out.append(_case("filtered/fuzz-%03d" % i,
                         lambda i=i: _filtered_fuzz_case(seed, i)))
    return out


# ---------------------------------------------------------------------------
# signature suite

def _sig_kmn_slice():
    for m in (1, 4, 7, 10):
        for n in (0, 3, 7, 10):
            assert topology.signature_sigma(topology._kmn_matrix(m, n)) \
                == 0, (m, n)


def _sig_hermitian_det():
    for m in (1, 3, 6):
        for n in (1, 4, 6):
            herm = [[2 * x for x in row]
                    for row in topology._kmn_matrix(m, n).symmetric()]
            assert topology._det(herm) == \
                -64 * (53 + 4 * (-17 + 53 * m) * n)


def _sig_trefoil_profile():
    a = topology.seifert_for(topology.KnotDescriptor.twobridge(3, 1))
    for om in (F(1, 50), F(2, 41), F(1, 13)):
        assert topology.tristram_levine(a, om) == 0, om
    for om in (F(1, 8), F(31, 100), F(2, 5)):
        assert topology.tristram_levine(a, om) == -2, om


def _sig_k71():
    a = topology._kmn_matrix(7, 1)
    for om in (F(1, 101), F(25, 101), F(50, 101)):
        assert topology.tristram_levine(a, om) == 0, om


def suite_signature(seed=0, cases=0):
    return [_case("signature/kmn-vanishing", _sig_kmn_slice),
            _case("signature/hermitian-determinant", _sig_hermitian_det),
            _case("signature/trefoil-profile", _sig_trefoil_profile),
            _case("signature/k71-grid-slice", _sig_k71)]


# ---------------------------------------------------------------------------

_SUITE_FNS = {
    "trefoil": suite_trefoil,
    "properties": suite_properties,
    "cobordism": suite_cobordism,
    "filtered": suite_filtered,
    "signature": suite_signature,
}


def run_suite(name, seed=0, cases=None):
    """Run one suite (or "all") and return the canonical summary dict."""
    if name == "all":
        names = list(SUITES)
    elif name in _SUITE_FNS:
        names = [name]
    else:
        raise ValueError("unknown suite %r" % name)
    results = []
    for suite in names:
        kw = {"seed": seed}
        if cases is not None and suite == "properties":
            kw["cases"] = cases
        results.extend(_SUITE_FNS[suite](**kw))
    results.sort(key=lambda r: r["name"])
    failures = [r["name"] for r in results if not r["ok"]]
    return {
        "suite": name,
        "seed": seed,
        "checks": len(results),
        "failures": len(failures),
        "failed": failures,
        "results": results,
    }
