"""Small standard S-complexes used throughout.

The two-bridge family is parametrized by the integer h determining its
local equivalence class: generators a_1 .. a_h in degrees 1, 3, 5, ...
with v(a_i) = tau * a_(i-1) and delta1(a_1) = tau, everything else
zero.  Negative h gives the dual complex.  The single-generator
complexes for the torus knot T(2,3) and its mirror are the h = 1 and
h = -1 cases of the same shape.
"""

from fractions import Fraction

from .coeff import Frac, F_ONE, TAU, RING_LOC, RING_QT
from .scomplex import SComplex, Morphism, RefusedPrecondition, GRADING_ZR
from . import linalg as la


def twobridge_model(h, ring=RING_LOC):
    """Model S-complex for a two-bridge knot with Froyshov number h."""
    h = int(h)
    if h == 0:
        return SComplex(ring, [], [], name="twobridge[h=0]")
    if h < 0:
        out = twobridge_model(-h, ring).dual()
        out.name = "twobridge[h=%d]" % h
        return out
    gens = ["a%d" % i for i in range(1, h + 1)]
    degZ = [2 * i - 1 for i in range(1, h + 1)]
    cx = SComplex(ring, gens, degZ, name="twobridge[h=%d]" % h)
    for i in range(1, h):
        # v(a_{i+1}) = tau * a_i
        cx.v[i - 1][i] = TAU
    cx.delta1[0] = TAU
    return cx


def trefoil_right(ring=RING_LOC):
    """T(2,3): one generator in degree 1 with delta1 = tau."""
    cx = twobridge_model(1, ring)
    cx.name = "trefoil[+1]"
    cx.gens = ["a"]
    return cx


def trefoil_left(ring=RING_LOC):
    """Mirror of T(2,3): one generator in degree -2 with delta2 = tau."""
    cx = twobridge_model(-1, ring)
    cx.name = "trefoil[-1]"
    cx.gens = ["b"]
    return cx


def trefoil_sum(l, ring=RING_LOC):
    """Connected sum of |l| copies of the (mirrored, if l < 0) trefoil
    model, reduced by tensoring."""
    l = int(l)
    if l == 0:
        out = SComplex(ring, [], [], name="unknot")
        out.tag = ("trefoil_sum", 0)
        return out
    base = trefoil_right(ring) if l > 0 else trefoil_left(ring)
    out = base
    for _ in range(abs(l) - 1):
        out = out.tensor(base)
    out.name = "trefoil[%+d]" % l
    out.tag = ("trefoil_sum", l)
    return out


def one_gen_delta1(ring=RING_LOC):
    """Single generator in degree 1 with delta1 = 1.  Models the
    2-handle cobordism block; tensor powers give the k-fold version."""
    cx = SComplex(ring, ["e"], [1], name="block")
    cx.delta1[0] = F_ONE
    return cx


def omega_block(k, ring=RING_LOC):
    k = int(k)
    if k < 0:
        raise RefusedPrecondition("omega-block needs k >= 0")
    if k == 0:
        return SComplex(ring, [], [], name="block^0")
    out = one_gen_delta1(ring)
    for _ in range(k - 1):
        out = out.tensor(one_gen_delta1(ring))
    out.name = "block^%d" % k
    return out


# 10*_28 = K(53,34): the one knot whose irreducible chain data is known
# explicitly.  Degrees (deg_Z, 53 * deg_I) per generator zeta^k.
_TEN28_GENS = {
    1: (2, 39), 2: (3, 50), 3: (1, 33), 4: (2, 41), 5: (0, 21),
    6: (1, 26), 7: (3, 56), 8: (0, 5), 9: (2, 32), 10: (1, 31),
    11: (-1, 2), 12: (2, 51), 13: (0, 19), 14: (-1, 12), 15: (1, 30),
    16: (0, 20), 17: (2, 35), 18: (1, 22), 19: (-2, -20), 20: (0, 18),
    21: (1, 27), 22: (-1, 8), 23: (0, 14), 24: (-2, -8), 25: (-1, -5),
    26: (1, 23),
}

# d(src) = sum of sign * tau * tgt over (src, tgt, sign)
_TEN28_ARROWS = [
    (1, 18, 1), (2, 1, 1), (2, 17, -1), (3, 16, 1), (4, 15, 1),
    (5, 14, 1), (6, 13, 1), (6, 5, -1), (7, 4, 1), (7, 12, -1),
    (8, 11, 1), (9, 10, 1), (12, 15, 1), (13, 14, 1), (17, 18, 1),
    (21, 20, 1), (22, 19, 1), (25, 24, 1), (26, 23, 1),
]


def ten28star(c=0, complete_v=True):
    """I-graded complex of the two-bridge knot 10*_28 = K(53,34) over
    Q(T), omega = 1/4.

    The printed chain data leaves v undetermined.  d-squared forces
    v(zeta3) = tau * zeta22, which is the default completion; the one
    coefficient it does not force is c in v(zeta22) = c U^-1 tau
    zeta18, default 0.

    :param c: integer coefficient of the undetermined v-component.
    :param complete_v: when false, keep the literal v = 0 data, which
        fails validation.
    """
    keys = sorted(_TEN28_GENS)
    idx = {k: i for i, k in enumerate(keys)}
    cx = SComplex(RING_QT,
                  ["zeta%d" % k for k in keys],
                  [_TEN28_GENS[k][0] for k in keys],
                  grading=GRADING_ZR,
                  degI=[Fraction(_TEN28_GENS[k][1], 53) for k in keys],
                  omega=Fraction(1, 4), name="10_28*")
    for s, t, sgn in _TEN28_ARROWS:
        cx.d[idx[t]][idx[s]] = TAU if sgn > 0 else -TAU
    cx.delta1[idx[3]] = TAU
    cx.delta2[idx[19]] = TAU
    if complete_v:
        cx.v[idx[22]][idx[3]] = TAU
        if c:
            # graded slot pins this entry to U^-1
            cx.v[idx[18]][idx[22]] = TAU * Frac.of(c)
    return cx


def ten28star_local():
    """Two-generator local model of ten28star: alpha at (-2, -20/53),
    beta at (-1, 8/53), d(beta) = tau alpha = delta2(1)."""
    cx = SComplex(RING_QT, ["alpha", "beta"], [-2, -1],
                  grading=GRADING_ZR,
                  degI=[Fraction(-20, 53), Fraction(8, 53)],
                  omega=Fraction(1, 4), name="10_28*-local")
    cx.d[0][1] = TAU
    cx.delta2[0] = TAU
    return cx


def ten28star_to_local(fig=None, model=None):
    """Level-0 strong morphism ten28star -> ten28star_local.

    The mu and Delta1 entries at zeta16 compensate the delta1 value of
    zeta3, which has no counterpart in the model; without them the
    chain identity Delta1 d + eta delta1 = delta1' lambda fails.
    """
    if fig is None:
        fig = ten28star()
    if model is None:
        model = ten28star_local()
    i16 = fig.gens.index("zeta16")
    m = Morphism(fig, model)
    m.lam[0][fig.gens.index("zeta19")] = F_ONE
    m.lam[1][fig.gens.index("zeta22")] = F_ONE
    m.mu[1][i16] = -F_ONE
    m.Delta1[i16] = -F_ONE
    m.eta = F_ONE
    return m


def ten28star_from_local(fig=None, model=None, c=0):
    """Level-0 strong morphism ten28star_local -> ten28star; pass the
    same c as the target complex."""
    if fig is None:
        fig = ten28star(c=c)
    if model is None:
        model = ten28star_local()
    m = Morphism(model, fig)
    m.lam[fig.gens.index("zeta19")][0] = F_ONE
    m.lam[fig.gens.index("zeta22")][1] = F_ONE
    if c:
        # mu(beta) = c U^-1 zeta1, the slot pins the U-power
        m.mu[fig.gens.index("zeta1")][1] = Frac.of(c)
    m.eta = F_ONE
    return m


def filtered_trivial(ring=RING_QT):
    """Empty I-graded complex; every level question is about the
    reducible alone."""
    return SComplex(ring, [], [], grading=GRADING_ZR, degI=[],
                    omega=Fraction(1, 4), name="filtered-trivial")


def filtered_one_gen(r, ring=RING_QT):
    """One generator zeta at degree (1, r) with delta1(zeta) = 1.

    :param r: filtration level of the generator, a positive rational.
    """
    r = Fraction(r)
    assert r > 0, "delta1 must drop the filtration strictly"
    cx = SComplex(ring, ["zeta"], [1], grading=GRADING_ZR, degI=[r],
                  omega=Fraction(1, 4), name="filtered[r=%s]" % r)
    cx.delta1[0] = F_ONE
    return cx
