"""Exact linear algebra over Q(T) and over the localization at T=1.

Matrices are lists of rows of coeff.Frac.  Two regimes:

  * field routines (rank / solve / kernel / inverse / det) treat entries
    as elements of Q(T);
  * the discrete-valuation routines assume entries lie in the local ring
    (no pole at T=1) and use the order of vanishing of L = T - T^-1 as
    the valuation.  Diagonal entries of the normal form are exact powers
    of L, so torsion exponents and divisibility orders come out exact.
"""

from .coeff import Frac, F_ZERO, F_ONE, INF, lambda_pow


def zeros(n, m):
    return [[F_ZERO for _ in range(m)] for _ in range(n)]


def eye(n):
    return [[F_ONE if i == j else F_ZERO for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    n, k = len(a), len(b)
    m = len(b[0]) if b else 0
    out = zeros(n, m)
    for i in range(n):
        ai = a[i]
        for t in range(k):
            v = ai[t]
            if v.is_zero():
                continue
            bt = b[t]
            row = out[i]
            for j in range(m):
                if not bt[j].is_zero():
                    row[j] = row[j] + v * bt[j]
    return out


def mat_vec(a, x):
    out = []
    for row in a:
        s = F_ZERO
        for v, xi in zip(row, x):
            if not v.is_zero() and not xi.is_zero():
                s = s + v * xi
        out.append(s)
    return out


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, c):
    return [[c * x for x in row] for row in a]


def mat_neg(a):
    return [[-x for x in row] for row in a]


def transpose(a):
    if not a:
        return []
    return [[a[i][j] for i in range(len(a))] for j in range(len(a[0]))]


def mat_eq(a, b):
    if len(a) != len(b):
        return False
    for ra, rb in zip(a, b):
        if len(ra) != len(rb):
            return False
        if any(x != y for x, y in zip(ra, rb)):
            return False
    return True


def is_zero_mat(a):
    return all(x.is_zero() for row in a for x in row)


def _rref(a):
    """Row-reduce a copy; returns (rows, pivot column list)."""
    a = [row[:] for row in a]
    n = len(a)
    m = len(a[0]) if n else 0
    pivots = []
    r = 0
    for j in range(m):
        p = None
        for i in range(r, n):
            if not a[i][j].is_zero():
                p = i
                break
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = a[r][j].inv()
        a[r] = [inv * x for x in a[r]]
        for i in range(n):
            if i != r and not a[i][j].is_zero():
                f = a[i][j]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(j)
        r += 1
        if r == n:
            break
    return a, pivots


def rank_field(a):
    if not a or not a[0]:
        return 0
    _, piv = _rref(a)
    return len(piv)


def kernel_field(a):
    """Basis of the right kernel, as a list of column vectors."""
    if not a:
        return []
    m = len(a[0])
    red, piv = _rref(a)
    pivset = set(piv)
    free = [j for j in range(m) if j not in pivset]
    basis = []
    for f in free:
        v = [F_ZERO] * m
        v[f] = F_ONE
        for r, j in enumerate(piv):
            v[j] = -red[r][f]
        basis.append(v)
    return basis


def solve_field(a, b):
    """One solution of a x = b, or None if inconsistent."""
    n = len(a)
    m = len(a[0]) if n else 0
    aug = [a[i][:] + [b[i]] for i in range(n)]
    red, piv = _rref(aug)
    for r, j in enumerate(piv):
        if j == m:
            return None
    x = [F_ZERO] * m
    for r, j in enumerate(piv):
        x[j] = red[r][m]
    return x


def inv_field(a):
    n = len(a)
    aug = [a[i][:] + eye(n)[i] for i in range(n)]
    red, piv = _rref(aug)
    if piv != list(range(n)):
        raise ValueError("matrix not invertible")
    return [row[n:] for row in red]


def det_field(a):
    n = len(a)
    a = [row[:] for row in a]
    det = F_ONE
    for j in range(n):
        p = None
        for i in range(j, n):
            if not a[i][j].is_zero():
                p = i
                break
        if p is None:
            return F_ZERO
        if p != j:
            a[j], a[p] = a[p], a[j]
            det = -det
        det = det * a[j][j]
        inv = a[j][j].inv()
        for i in range(j + 1, n):
            if not a[i][j].is_zero():
                f = a[i][j] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[j])]
    return det


# ---------------------------------------------------------------------------
# normal form over the local ring at T=1

def _val(x):
    return x.val1()


def snf_local(mat):
    """Diagonalize over the local ring: returns (U, D, V, exps) with
    U*mat*V = D, U and V invertible over the local ring, and the first
    len(exps) diagonal entries of D equal to L^e for e in exps
    (nondecreasing).  All entries of mat must have valuation >= 0."""
    a = [row[:] for row in mat]
    n = len(a)
    m = len(a[0]) if n else 0
    u = eye(n)
    v = eye(m)
    t = 0
    exps = []
    while t < min(n, m):
        bi = bj = None
        bv = INF
        for i in range(t, n):
            for j in range(t, m):
                w = _val(a[i][j])
                if w < bv:
                    bi, bj, bv = i, j, w
        if bi is None or bv == INF:
            break
        assert bv >= 0, "entry with a pole at T=1 in local normal form"
        if bi != t:
            a[t], a[bi] = a[bi], a[t]
            u[t], u[bi] = u[bi], u[t]
        if bj != t:
            for row in a:
                row[t], row[bj] = row[bj], row[t]
            for row in v:
                row[t], row[bj] = row[bj], row[t]
        p = a[t][t]
        for i in range(n):
            if i != t and not a[i][t].is_zero():
                f = a[i][t] / p
                a[i] = [x - f * y for x, y in zip(a[i], a[t])]
                u[i] = [x - f * y for x, y in zip(u[i], u[t])]
        for j in range(m):
            if j != t and not a[t][j].is_zero():
                g = a[t][j] / p
                for row in a:
                    row[j] = row[j] - g * row[t]
                for row in v:
                    row[j] = row[j] - g * row[t]
        # scale the pivot row so the diagonal entry is an exact power of L
        unit = p / lambda_pow(bv)
        iu = unit.inv()
        a[t] = [iu * x for x in a[t]]
        u[t] = [iu * x for x in u[t]]
        exps.append(bv)
        t += 1
    return u, a, v, exps


def kernel_local(mat):
    """Basis (list of column vectors) of the kernel over the local ring.
    The span is saturated: any ring-valued kernel vector is a ring-linear
    combination of the basis."""
    if not mat or not mat[0]:
        m = len(mat[0]) if mat else 0
        cols = eye(m)
        return [[row[j] for row in cols] for j in range(m)]
    _, _, v, exps = snf_local(mat)
    m = len(mat[0])
    r = len(exps)
    return [[v[i][j] for i in range(m)] for j in range(r, m)]


class Module(object):
    """Finitely generated module over the local ring, given as the
    cokernel of a presentation matrix P: R^m -> R^k.

    Elements are k-vectors of coordinates in the chosen generators."""

    def __init__(self, k, pres_cols):
        self.k = k
        self.pres = pres_cols  # list of k-vectors
        if pres_cols:
            p = [[pres_cols[j][i] for j in range(len(pres_cols))]
                 for i in range(k)]
        else:
            p = [[] for _ in range(k)]
        if k == 0:
            self.u, self.exps = [], []
            self.rank = 0
            self.torsion = []
            return
        if not pres_cols:
            self.u = eye(k)
            self.exps = []
        else:
            self.u, _, _, self.exps = snf_local(p)
        # coordinate i < len(exps) carries relation L^e; e == 0 kills it
        self.rank = k - len(self.exps)
        self.torsion = [e for e in self.exps if e > 0]

    def _diag_coords(self, vec):
        return mat_vec(self.u, vec)

    def is_zero(self, vec):
        w = self._diag_coords(vec)
        for i, x in enumerate(w):
            if i < len(self.exps):
                if _val(x) < self.exps[i]:
                    return False
            elif not x.is_zero():
                return False
        return True

    def is_torsion(self, vec):
        w = self._diag_coords(vec)
        return all(w[i].is_zero() for i in range(len(self.exps), self.k))

    def divisibility(self, vec):
        """Largest d with [vec] in L^d * (M / torsion); INF if the image
        in M/torsion vanishes."""
        w = self._diag_coords(vec)
        free = [w[i] for i in range(len(self.exps), self.k)]
        if all(x.is_zero() for x in free):
            return INF
        return min(_val(x) for x in free if not x.is_zero())

    def quotient(self, extra_cols):
        return Module(self.k, self.pres + [list(c) for c in extra_cols])


class Homology(object):
    """ker(d_out) / im(d_in) over the local ring.

    d_out: n x ? matrix consuming the ambient space R^n
    d_in:  columns in R^n spanning the image being divided out
    Classes are represented by ambient cycle vectors in R^n."""

    def __init__(self, n, d_out_rows, d_in_cols):
        self.n = n
        if d_out_rows and any(any(not x.is_zero() for x in r)
                              for r in d_out_rows):
            self.kbasis = kernel_local(d_out_rows)
        else:
            self.kbasis = [[F_ONE if i == j else F_ZERO for i in range(n)]
                           for j in range(n)]
        self.kmat = [[self.kbasis[j][i] for j in range(len(self.kbasis))]
                     for i in range(n)]
        pres = []
        for col in d_in_cols:
            if all(x.is_zero() for x in col):
                continue
            pres.append(self.cycle_coords(col))
        self.module = Module(len(self.kbasis), pres)

    def cycle_coords(self, z):
        """Coordinates of a cycle in the kernel basis.  The basis is
        saturated, so ring-valued cycles get ring-valued coordinates."""
        if not self.kbasis:
            assert all(x.is_zero() for x in z), "nonzero vector, zero kernel"
            return []
        x = solve_field(self.kmat, list(z))
        assert x is not None, "vector is not a cycle"
        assert all(xi.val1() >= 0 or xi.is_zero() for xi in x)
        return x

    @property
    def rank(self):
        return self.module.rank

    @property
    def torsion(self):
        return self.module.torsion

    def class_is_zero(self, z):
        return self.module.is_zero(self.cycle_coords(z))

    def class_is_torsion(self, z):
        return self.module.is_torsion(self.cycle_coords(z))

    def divisibility(self, z):
        return self.module.divisibility(self.cycle_coords(z))

    def quotient_module(self, cycles):
        """Module obtained by additionally killing the given cycles."""
        return self.module.quotient([self.cycle_coords(z) for z in cycles])
