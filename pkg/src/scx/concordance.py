"""Concordance invariants of an S-complex over the local ring.

The chain of computations: scan the ideals J_k for the largest k with
J_k nonzero (the height h), realize f = L^{n0} by a special cycle at
that height, push the cycle into the framed models, and measure the
divisibility of its class in H^q modulo torsion.  The resulting
integers

    s~ = n0 - m        (plus model, even parity)
    s#+ = n0 - m+      (unreduced model, degree 2h mod 4)
    s#- = n0 - m-      (x-translate, degree 2h - 2 mod 4)

do not depend on the exponent n0 used, and s# = s#+ + s#-,
eps~ = 2 s~ - s#.  The difference s#+ - s#- is 0, 1 or 2 and sorts
complexes into types O, I and II.

All of this requires the coefficient ring in which divisibility by L
is a discrete valuation, so anything other than the local ring is
refused up front.
"""

from .coeff import lambda_pow, INF, RING_LOC
from .scomplex import RefusedPrecondition, InternalViolation
from .equivariant import special_family, psi_hat
from .framed import FramedPM, FramedSharp

TYPE_LABELS = {0: "O", 1: "I", 2: "II"}


def froyshov(cx):
    """Largest k with J_k nonzero, scanning downward.

    :param cx: a validated S-complex.
    """
    n = cx.n
    for k in range(n + 1, -(2 * n + 3), -1):
        if special_family(cx, k).is_nontrivial():
            return k
    raise InternalViolation("no nontrivial special-cycle ideal found")


def j_report(cx, k):
    """Summary of the ideal J_k: trivial or not, and the minimal
    L-valuation among achievable values."""
    fam = special_family(cx, k)
    if not fam.is_nontrivial():
        return {"k": k, "nontrivial": False, "min_valuation": None}
    return {"k": k, "nontrivial": True, "min_valuation": fam.n0}


def _push_special(cx, h, n0):
    fam = special_family(cx, h)
    alpha, apoly = fam.solve(lambda_pow(n0))
    return psi_hat(cx, alpha, apoly)


def s_invariants(cx):
    """h, n0 and the full s-family for a complex over the local ring."""
    if cx.ring != RING_LOC:
        raise RefusedPrecondition(
            "s-invariants need the ring localized at T=1, got %r"
            % cx.ring)
    h = froyshov(cx)
    fam = special_family(cx, h)
    n0 = fam.n0
    assert n0 != INF
    w = _push_special(cx, h, n0)

    fp = FramedPM(cx, 1)
    vec_plus = fp.push(w)
    if not fp.is_cycle(vec_plus):
        raise InternalViolation("pushforward to the plus model not a cycle")
    m_tilde = fp.hq_divisibility(vec_plus, 0)

    fs = FramedSharp(cx)
    vec_sharp = fs.push(w)
    if not fs.is_cycle(vec_sharp):
        raise InternalViolation("pushforward to the framed model not a cycle")
    m_plus = fs.hq_divisibility(vec_sharp, (2 * h) % 4)
    m_minus = fs.hq_divisibility(fs.x_act(vec_sharp), (2 * h - 2) % 4)

    for m in (m_tilde, m_plus, m_minus):
        if m == INF:
            raise InternalViolation(
                "special-cycle class is torsion in H^q; "
                "divisibility is unbounded")

    st = n0 - m_tilde
    sp = n0 - m_plus
    sm = n0 - m_minus
    diff = sp - sm
    if diff not in TYPE_LABELS:
        raise InternalViolation(
            "s#+ - s#- = %d falls outside {0, 1, 2}" % diff)
    return {
        "h": h,
        "n0": n0,
        "stilde": st,
        "ssharp_plus": sp,
        "ssharp_minus": sm,
        "ssharp": sp + sm,
        "epsilon": 2 * st - (sp + sm),
        "type": TYPE_LABELS[diff],
    }


class MonomialIdeal(object):
    """Ideal in R[x] generated by monomials x^i tau^j, recorded as
    exponent pairs.  Used for the fractional-ideal invariant of
    twist-knot style models, where the answer is always of this shape.
    """

    def __init__(self, gens):
        gens = set(gens)
        # drop generators dominated by another one
        self.gens = sorted(
            g for g in gens
            if not any(o != g and o[0] <= g[0] and o[1] <= g[1]
                       for o in gens))

    def contains(self, xexp, tauexp):
        """Membership of x^xexp tau^tauexp."""
        return any(xexp >= i and tauexp >= j for i, j in self.gens)

    def __eq__(self, other):
        return isinstance(other, MonomialIdeal) and self.gens == other.gens

    def __repr__(self):
        if self.gens == [(0, 0)]:
            return "MonomialIdeal(full)"
        terms = ",".join("x^%d*tau^%d" % g for g in self.gens)
        return "MonomialIdeal(%s)" % terms

    def describe(self):
        return [{"x": i, "tau": j} for i, j in self.gens]


def staircase_ideal(l):
    """The ideal (x^l, x^{l-1} tau, ..., tau^l)."""
    assert l >= 0
    return MonomialIdeal([(l - i, i) for i in range(l + 1)])


def zhat(cx):
    """Fractional-ideal invariant for tagged models.

    Computed from the model tag rather than from homology: for the
    connected sums of right-handed trefoils the answer is the
    staircase ideal, for left-handed sums it is all of R[x].  Untagged
    complexes are refused, since the general fractional ideal is not
    something this engine computes.
    """
    tag = getattr(cx, "tag", None)
    if tag is None:
        raise RefusedPrecondition(
            "zhat is only computed for tagged trefoil-sum models")
    kind, l = tag
    if kind == "trefoil_sum" and l >= 1:
        return staircase_ideal(l)
    if kind == "trefoil_sum" and l <= -1:
        return MonomialIdeal([(0, 0)])
    if kind == "trivial" or l == 0:
        return MonomialIdeal([(0, 0)])
    raise RefusedPrecondition("unrecognized model tag %r" % (tag,))
