"""Equivariant models of an S-complex and special cycles.

Two small models are used.  The "hat" model has underlying module
C + R[x] with differential (a, p) -> (da - sum_i v^i delta2(p_i), 0)
and x-action x(a, p) = (va, delta1(a) + x p).  The "check" model has
underlying module C + x^-1 R[x^-1]; its cycles with trivial tail are
exactly the a with da = 0 and delta1 v^j a = 0 for all j.

Special (k, f)-cycles drive every numerical invariant: for k >= 1 a
cycle is an a in degree 2k-1 with da = 0, delta1 v^j a = 0 for
j <= k-2 and delta1 v^(k-1) a = f; for k <= 0 it is a pair (a, p) with
da = sum v^i delta2(p_i), the top coefficient p_{-k} playing the role
of f.  The ideal of achievable f is computed from a saturated kernel
basis, so its minimal valuation is exact.
"""

from fractions import Fraction

from .coeff import Frac, F_ZERO, F_ONE, INF, RING_QT, lambda_pow
from . import linalg as la
from .scomplex import RefusedPrecondition


def _kernel(cx, rows):
    if cx.ring == RING_QT:
        return la.kernel_field(rows)
    return la.kernel_local(rows)


def delta1_v_rows(cx, count):
    """Row vectors delta1 * v^j for j = 0 .. count-1."""
    rows = []
    row = list(cx.delta1)
    for _ in range(count):
        rows.append(row)
        row = [sum((cx.v[i][j] * row[i] for i in range(cx.n)
                    if not cx.v[i][j].is_zero() and not row[i].is_zero()),
                   F_ZERO) for j in range(cx.n)]
    return rows


def a_space(cx):
    """Saturated basis of {a : da = 0, delta1 v^j a = 0 for all j}.
    These generate the torsion classes killed by the q-quotient."""
    n = cx.n
    if n == 0:
        return []
    rows = [cx.d[i][:] for i in range(n)]
    rows += delta1_v_rows(cx, n)
    return _kernel(cx, rows)


def degree_slice(cx, resid):
    return [j for j in range(cx.n) if (cx.degZ[j] - resid) % 4 == 0]


class SpecialFamily(object):
    """All special (k, f)-cycles of one S-complex.

    ideal_gens holds the f values of a saturated basis of the solution
    space; n0 is the minimal valuation among them (INF when the ideal
    is zero).  solve(f) returns one cycle with that exact f, and gens
    spans the f = 0 subfamily."""

    def __init__(self, cx, k):
        self.cx = cx
        self.k = int(k)
        n = cx.n
        sl = degree_slice(cx, 2 * k - 1)
        self.slice = sl
        if k >= 1:
            rows = [[cx.d[i][j] for j in sl] for i in range(n)]
            dv = delta1_v_rows(cx, max(k, 1))
            for j in range(k - 1):
                rows.append([dv[j][c] for c in sl])
            basis = _kernel(cx, rows) if sl else []
            frow = dv[k - 1]
            self._emit = [
                sum((frow[c] * vec[ci] for ci, c in enumerate(sl)
                     if not frow[c].is_zero()), F_ZERO)
                for vec in basis]
            self._basis = basis
            self._avars = []
        else:
            avars = [i for i in range(0, -k + 1) if (i - k) % 2 == 0]
            self._avars = avars
            cols = []
            for c in sl:
                cols.append([cx.d[i][c] for i in range(n)])
            for i in avars:
                vec = cx.delta2_vec()
                for _ in range(i):
                    vec = cx.apply_v(vec)
                cols.append([-x for x in vec])
            if cols and n > 0:
                rows = [[cols[c][i] for c in range(len(cols))]
                        for i in range(n)]
                basis = _kernel(cx, rows)
            elif cols:
                # no constraints at all: every coefficient vector works
                basis = [[F_ONE if i == j else F_ZERO
                          for i in range(len(cols))]
                         for j in range(len(cols))]
            else:
                basis = []
            self._basis = basis
            top = len(sl) + avars.index(-k)
            self._emit = [vec[top] for vec in basis]

        self.ideal_gens = [f for f in self._emit if not f.is_zero()]
        self.n0 = INF
        for f in self.ideal_gens:
            v = f.val1()
            if v < self.n0:
                self.n0 = v

    def is_nontrivial(self):
        return bool(self.ideal_gens)

    def _vec_to_cycle(self, vec):
        n = self.cx.n
        alpha = [F_ZERO] * n
        for ci, c in enumerate(self.slice):
            alpha[c] = vec[ci]
        apoly = {}
        base = len(self.slice)
        for ai, i in enumerate(self._avars):
            x = vec[base + ai]
            if not x.is_zero():
                apoly[i] = x
        return alpha, apoly

    def kernel_gens(self):
        """Cycles with f = 0, spanning the ambiguity of solve()."""
        if not self._basis:
            return []
        row = [self._emit[i] if i < len(self._emit) else F_ZERO
               for i in range(len(self._basis))]
        if all(x.is_zero() for x in row):
            inner = [[F_ONE if i == j else F_ZERO
                      for i in range(len(self._basis))]
                     for j in range(len(self._basis))]
        else:
            inner = _kernel(self.cx, [row])
        out = []
        for cvec in inner:
            vec = [sum((cvec[b] * self._basis[b][i]
                        for b in range(len(self._basis))
                        if not cvec[b].is_zero()), F_ZERO)
                   for i in range(len(self._basis[0]))]
            out.append(self._vec_to_cycle(vec))
        return out

    def solve(self, f):
        """One special (k, f)-cycle, or None if f is not achievable."""
        f = Frac.of(f)
        if f.is_zero():
            n = self.cx.n
            return [F_ZERO] * n, {}
        best = None
        for i, g in enumerate(self._emit):
            if g.is_zero():
                continue
            if best is None or g.val1() < self._emit[best].val1():
                best = i
        if best is None:
            return None
        g = self._emit[best]
        c = f / g
        if self.cx.ring != RING_QT and not c.in_local():
            return None
        vec = [c * x for x in self._basis[best]]
        return self._vec_to_cycle(vec)


def special_family(cx, k):
    return SpecialFamily(cx, k)


def verify_special_cycle(cx, k, alpha, apoly, f):
    """Check the defining equations of a special (k, f)-cycle."""
    n = cx.n
    if k >= 1:
        if apoly:
            return False
        if any(not x.is_zero() for x in cx.apply_d(alpha)):
            return False
        dv = delta1_v_rows(cx, k)
        for j in range(k - 1):
            s = sum((dv[j][c] * alpha[c] for c in range(n)), F_ZERO)
            if not s.is_zero():
                return False
        s = sum((dv[k - 1][c] * alpha[c] for c in range(n)), F_ZERO)
        return s == f
    rhs = [F_ZERO] * n
    for i, a in apoly.items():
        vec = cx.delta2_vec()
        for _ in range(i):
            vec = cx.apply_v(vec)
        rhs = [r + a * x for r, x in zip(rhs, vec)]
    lhs = cx.apply_d(alpha)
    if any((x - y) != F_ZERO for x, y in zip(lhs, rhs)):
        return False
    return apoly.get(-k, F_ZERO) == f


# ---------------------------------------------------------------------------
# the hat model and the maps into the framed complexes

def hat_x_action(cx, alpha, poly):
    """x * (a, p) = (v a, delta1(a) + x p) on the hat model."""
    shifted = {i + 1: c for i, c in poly.items()}
    d1 = cx.apply_delta1(alpha)
    if not d1.is_zero():
        shifted[0] = shifted.get(0, F_ZERO) + d1
    return cx.apply_v(alpha), {i: c for i, c in shifted.items()
                               if not c.is_zero()}


def hat_differential(cx, alpha, poly):
    out = cx.apply_d(alpha)
    for i, a in poly.items():
        vec = cx.delta2_vec()
        for _ in range(i):
            vec = cx.apply_v(vec)
        out = [o - a * x for o, x in zip(out, vec)]
    return out, {}


def frak_j(alpha, tail):
    """Map from the check model to the hat model: (a, q) -> (-a, 0)."""
    return [-x for x in alpha], {}


def psi_hat(cx, alpha, apoly):
    """Image of a hat-model element in the big equivariant complex,
    returned as {x-power: full-complex vector}.  The x-slot at power m
    collects sum_{i > m} v^(i-m-1) delta2(p_i); the y-slot carries a at
    power 0; the r-slot carries the polynomial itself."""
    n = cx.n
    out = {}

    def bump(power, idx, val):
        if val.is_zero():
            return
        vec = out.setdefault(power, [F_ZERO] * (2 * n + 1))
        vec[idx] = vec[idx] + val

    for c in range(n):
        bump(0, n + c, alpha[c])
    for i, a in apoly.items():
        bump(i, 2 * n, a)
        vec = [a * x for x in cx.delta2_vec()]
        for m in range(i - 1, -1, -1):
            # coefficient of x^m: v^(i-m-1) delta2(a_i)
            for c in range(n):
                bump(m, c, vec[c])
            if m > 0:
                vec = cx.apply_v(vec)
    return {p: v for p, v in out.items()
            if any(not x.is_zero() for x in v)}


def check_witness(cx, alpha, tail, m):
    """x-slot coefficient of the check-model resolution at power -m:
    v^(m-1) a + sum_{j=0}^{m-2} v^j delta2(a_{j+1-m})."""
    assert m >= 1
    vec = list(alpha)
    for _ in range(m - 1):
        vec = cx.apply_v(vec)
    for j in range(0, m - 1):
        a = tail.get(j + 1 - m, F_ZERO)
        if a.is_zero():
            continue
        dv = cx.delta2_vec()
        for _ in range(j):
            dv = cx.apply_v(dv)
        vec = [x + a * y for x, y in zip(vec, dv)]
    return vec


def hat_boundary_span(cx):
    """Columns spanning the image of the hat differential over the
    fraction field: d-columns plus v^i delta2(1)."""
    n = cx.n
    cols = []
    for j in range(n):
        col = [cx.d[i][j] for i in range(n)]
        if any(not x.is_zero() for x in col):
            cols.append(col)
    vec = cx.delta2_vec()
    for _ in range(n + 1):
        if any(not x.is_zero() for x in vec):
            cols.append(list(vec))
        vec = cx.apply_v(vec)
    return cols


def is_hat_boundary(cx, alpha, poly):
    """Boundary test over the fraction field: the polynomial part of a
    hat boundary vanishes and the C-part lies in the boundary span."""
    if any(not c.is_zero() for c in poly.values()):
        return False
    if all(x.is_zero() for x in alpha):
        return True
    cols = hat_boundary_span(cx)
    if not cols:
        return False
    mat = [[cols[c][i] for c in range(len(cols))] for i in range(cx.n)]
    return la.solve_field(mat, list(alpha)) is not None


def torsion_annihilator(cx, alpha, tail=None):
    """Nonzero polynomial f with f(x^2) * j(xi) a hat boundary, for a
    check-model cycle xi = (a, tail).  Returns the coefficient list of
    f (degree <= number of generators in the relevant degree slice)."""
    tail = tail or {}
    n = cx.n
    if n == 0:
        return [F_ONE]
    if alpha and any(not x.is_zero() for x in alpha):
        nz = [j for j in range(n) if not alpha[j].is_zero()]
        resid = cx.degZ[nz[0]]
        r = len(degree_slice(cx, resid))
    else:
        return [F_ONE]
    ker = None
    for count in (r + 1, n + 1):
        cols = [check_witness(cx, alpha, tail, 2 * i + 1)
                for i in range(count)]
        mat = [[cols[c][i] for c in range(len(cols))] for i in range(n)]
        ker = la.kernel_field(mat)
        if ker:
            break
    assert ker, "witness matrix has full column rank"
    coeffs = ker[0]
    # clear denominators at T=1 so f has coefficients in the local ring
    worst = min(x.val1() for x in coeffs if not x.is_zero())
    if worst < 0:
        coeffs = [x * lambda_pow(-worst) for x in coeffs]
    return coeffs


def annihilator_kills(cx, alpha, tail, coeffs):
    """Verify f(x^2) j(xi) is a hat boundary for f given by coeffs."""
    tail = tail or {}
    ja, jp = frak_j(alpha, tail)
    total_a = [F_ZERO] * cx.n
    total_p = {}
    cur_a, cur_p = ja, jp
    for i, b in enumerate(coeffs):
        if i > 0:
            for _ in range(2):
                cur_a, cur_p = hat_x_action(cx, cur_a, cur_p)
        if b.is_zero():
            continue
        total_a = [t + b * x for t, x in zip(total_a, cur_a)]
        for p, c in cur_p.items():
            total_p[p] = total_p.get(p, F_ZERO) + b * c
    total_p = {p: c for p, c in total_p.items() if not c.is_zero()}
    return is_hat_boundary(cx, total_a, total_p)
