"""Filtration-level invariants of I-graded S-complexes.

An I-graded complex pins the U-power of every chain component by its
integer degree, so a chain of fixed degree is a finite combination of
monomials U^u g with known filtration level u + deg_I(g).  All the
invariants below are answers to small exact feasibility problems over
the fraction field:

    N(k, s)   minimal level of a normalized cycle whose boundary
              defect sits at level <= s
    N^T(k, r) minimal defect level over normalized cycles of level
              <= r
    Gamma(k)  N(k, -infinity), the defect-free case
    r_s       -N^T(0, -s)

The scan enumerates candidate levels in increasing order and solves a
linear system restricted to the monomials below the candidate; the
first feasible level is the exact infimum, since any better solution
would already be supported below an earlier candidate.
"""

from fractions import Fraction

from .coeff import Frac, F_ZERO, F_ONE, INF, NEG_INF, RING_QT
from .scomplex import GRADING_ZR, RefusedPrecondition, InternalViolation
from .equivariant import delta1_v_rows
from . import linalg as la

QUARTER = Fraction(1, 4)


def _require_filtered(cx):
    if cx.grading != GRADING_ZR:
        raise RefusedPrecondition(
            "filtration invariants need a ZxR graded complex")
    if cx.ring != RING_QT:
        raise RefusedPrecondition(
            "level scans run over the fraction field, got ring %s"
            % cx.ring)
    if cx.omega != QUARTER:
        # nonzero T-weight makes the monomial set at each level infinite
        raise RefusedPrecondition(
            "level scan supports omega = 1/4 only, got omega = %s"
            % cx.omega)


def alpha_slots(cx, k):
    """Monomials spanning full degree 2k-1: (generator, U-power,
    level)."""
    deg = 2 * k - 1
    out = []
    for g in range(cx.n):
        num = deg - cx.degZ[g]
        if num % 4:
            continue
        u = num // 4
        out.append((g, u, Fraction(u) + cx.degI[g]))
    return out


def target_slots(cx, k):
    """Monomials spanning full degree 2k-2, where boundary defects
    live."""
    deg = 2 * k - 2
    out = []
    for g in range(cx.n):
        num = deg - cx.degZ[g]
        if num % 4:
            continue
        u = num // 4
        out.append((g, u, Fraction(u) + cx.degI[g]))
    return out


def level_set(cx, deg_z):
    """Sorted filtration levels realizable at one integer degree."""
    _require_filtered(cx)
    levels = set()
    for g in range(cx.n):
        num = deg_z - cx.degZ[g]
        if num % 4 == 0:
            levels.add(Fraction(num // 4) + cx.degI[g])
    return sorted(levels)


def _system(cx, k):
    """Assemble the scan data: alpha columns, a-variable columns, the
    homogeneous delta1-tower rows, the normalization row, and one
    defect row per target monomial with its level."""
    slots = alpha_slots(cx, k)
    tgts = target_slots(cx, k)
    n = cx.n
    if k >= 1:
        avars = []
        dv = delta1_v_rows(cx, k)
        tower = [[dv[j][g] for (g, u, lev) in slots] for j in range(k - 1)]
        norm = [dv[k - 1][g] for (g, u, lev) in slots]
    else:
        avars = [i for i in range(0, -k + 1) if (i - k) % 2 == 0]
        tower = []
        norm = [F_ZERO] * len(slots) + \
            [F_ONE if i == -k else F_ZERO for i in avars]
    acols = []
    for i in avars:
        vec = cx.delta2_vec()
        for _ in range(i):
            vec = cx.apply_v(vec)
        acols.append(vec)
    defect = []
    for (t, ut, lev) in tgts:
        row = [cx.d[t][g] for (g, u, l2) in slots]
        row += [-col[t] for col in acols]
        defect.append((lev, row))
    return slots, avars, tower, norm, defect


def _dot(row, vec):
    return sum((a * b for a, b in zip(row, vec)
                if not a.is_zero() and not b.is_zero()), F_ZERO)


def _feasible(allowed, hom_rows, norm_row, underline):
    """Solvability of the restricted system.  With underline the
    normalization asks for a nonzero value instead of exactly 1, which
    over a field is the same thing unless the functional dies on the
    whole solution space."""
    rows = [[r[c] for c in allowed] for r in hom_rows]
    nr = [norm_row[c] for c in allowed]
    if underline:
        if not rows:
            return any(not x.is_zero() for x in nr)
        ker = la.kernel_field(rows)
        return any(not _dot(nr, kv).is_zero() for kv in ker)
    mat = rows + [nr]
    rhs = [F_ZERO] * len(rows) + [F_ONE]
    return la.solve_field(mat, rhs) is not None


def n_value(cx, k, s, underline=False):
    """N(k, s): minimal filtration level of a filtered special
    (k,1,s)-cycle, or infinity when none exists.

    :param s: negative rational, or -infinity for a vanishing defect.
    """
    _require_filtered(cx)
    if s != NEG_INF and not s < 0:
        raise RefusedPrecondition("the defect bound s must be negative")
    slots, avars, tower, norm, defect = _system(cx, k)
    hom = list(tower) + [row for (lev, row) in defect if lev > s]
    na = len(slots)
    acols = [na + j for j in range(len(avars))]
    if k >= 1:
        thresholds = sorted({lev for (g, u, lev) in slots})
        for t in thresholds:
            allowed = [ci for ci, (g, u, lev) in enumerate(slots)
                       if lev <= t]
            if _feasible(allowed, hom, norm, underline):
                return t
        return INF
    thresholds = [Fraction(0)]
    thresholds += sorted({lev for (g, u, lev) in slots if lev > 0})
    for t in thresholds:
        allowed = [ci for ci, (g, u, lev) in enumerate(slots)
                   if lev <= t] + acols
        if _feasible(allowed, hom, norm, underline):
            return t
    return INF


def n_transpose(cx, k, r):
    """N^T(k, r): minimal defect level over normalized cycles of
    filtration level at most r (r = infinity allows everything).
    Values land in [-infinity, 0] by the clamp for k >= 1 and
    automatically for k <= 0."""
    _require_filtered(cx)
    if r != INF and r < 0:
        raise RefusedPrecondition("the level bound r must be >= 0")
    slots, avars, tower, norm, defect = _system(cx, k)
    na = len(slots)
    allowed = [ci for ci, (g, u, lev) in enumerate(slots)
               if r == INF or lev <= r]
    allowed += [na + j for j in range(len(avars))]
    tlevels = sorted({lev for (lev, row) in defect})
    for t in [NEG_INF] + tlevels:
        hom = list(tower) + [row for (lev, row) in defect if lev > t]
        if _feasible(allowed, hom, norm, underline=False):
            if k >= 1:
                return t if t == NEG_INF or t < 0 else Fraction(0)
            return t
    if k >= 1:
        return Fraction(0)
    raise InternalViolation("defect scan exhausted every level")


def gamma(cx, k):
    """Gamma(k) = N(k, -infinity) with the nonvanishing normalization,
    computed over the fraction field."""
    return n_value(cx, k, NEG_INF, underline=True)


def r_invariant(cx, s):
    """r_s = -N^T(0, -s) for s in [-infinity, 0]."""
    _require_filtered(cx)
    if s != NEG_INF and s > 0:
        raise RefusedPrecondition("r_s is defined for s <= 0")
    bound = INF if s == NEG_INF else -Fraction(s)
    out = n_transpose(cx, 0, bound)
    if out == NEG_INF:
        return INF
    return -out


def morphism_level(m):
    """Filtration level of a morphism between I-graded complexes."""
    _require_filtered(m.src)
    _require_filtered(m.tgt)
    return m.level()
