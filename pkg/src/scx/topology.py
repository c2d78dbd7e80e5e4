"""Knot descriptors, Seifert-form signatures, and the definite-lattice
cobordism calculator.

Conventions.  Two-bridge knots are written K(p, q) with p odd and
K(3, 1) the right-handed trefoil, whose signature is -2.  The Seifert
form of K(p, q) comes from the even continued fraction of p over an
even representative of q; because that construction is easy to get
wrong by a mirror, the module checks two anchor signatures,
sigma(K(3,1)) = -2 and sigma(K(53,34)) = 0, and aborts loudly if
either fails rather than flipping signs to fit.

Tristram-Levine signatures are exact whenever cos(4 pi omega) is
rational and otherwise use certified interval arithmetic, refusing to
answer instead of guessing when an eigenvalue cannot be separated
from zero.

Cobordism data is restricted to diagonal negative definite forms
diag(-1, ..., -1), which covers every blown-up cylinder used here.
Squares of cohomology classes use that form, so the energy
kappa = -(c_1 + omega S - c/2)^2 is a non-negative rational.
"""

import itertools
import json
import math
from fractions import Fraction

from .coeff import LPoly, KNOWN_RINGS, RING_LOC, RING_QT
from .scomplex import RefusedPrecondition, InternalViolation
from .qinterval import (QI, StraddleError, cos_of_pi_multiple,
                        sin_of_pi_multiple, precision_schedule,
                        signature_rational, signature_interval)
from . import models

HALF = Fraction(1, 2)


class CalibrationError(InternalViolation):
    """An anchor signature came out wrong, so the two-bridge Seifert
    construction cannot be trusted."""


class NotNegativeDefinite(RefusedPrecondition):
    """The minimal reducibles sit at negative height."""


# ---------------------------------------------------------------------------
# small exact helpers

def _det(rows):
    """Determinant of a square Fraction matrix by Gaussian elimination."""
    n = len(rows)
    a = [[Fraction(x) for x in row] for row in rows]
    det = Fraction(1)
    for col in range(n):
        piv = None
        for i in range(col, n):
            if a[i][col] != 0:
                piv = i
                break
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        p = a[col][col]
        det *= p
        for i in range(col + 1, n):
            f = a[i][col] / p
            if f == 0:
                continue
            for j in range(col, n):
                a[i][j] -= f * a[col][j]
    return det


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_divmod(a, b):
    """Division with remainder in Q[t]; b is normalized by its leading
    coefficient, so exactness of the quotient is up to the caller."""
    a = [Fraction(x) for x in a]
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    db = len(b) - 1
    while db > 0 and b[db] == 0:
        db -= 1
    lead = Fraction(b[db])
    q = [Fraction(0)] * max(len(a) - db, 1)
    for i in range(len(a) - 1, db - 1, -1):
        f = a[i] / lead
        if f == 0:
            continue
        q[i - db] = f
        for j in range(db + 1):
            a[i - db + j] -= f * b[j]
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return q, a


_CYCLOTOMIC_CACHE = {}


def cyclotomic(n):
    """Integer coefficient list of the n-th cyclotomic polynomial."""
    assert n >= 1
    if n in _CYCLOTOMIC_CACHE:
        return _CYCLOTOMIC_CACHE[n]
    poly = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod(poly, cyclotomic(d))
            assert all(x == 0 for x in rem)
    out = []
    for x in poly:
        assert x.denominator == 1
        out.append(int(x))
    _CYCLOTOMIC_CACHE[n] = out
    return out


# ---------------------------------------------------------------------------
# Seifert matrices

class SeifertMatrix(object):
    """Square integer matrix A with det(A - A^t) = +-1.

    The skew determinant condition is what makes A the Seifert matrix
    of a genuine knot; in particular the size is even (or zero).
    """

    def __init__(self, rows):
        rows = [[int(x) for x in row] for row in rows]
        n = len(rows)
        for row in rows:
            if len(row) != n:
                raise RefusedPrecondition("Seifert matrix must be square")
        self.rows = rows
        if n:
            skew = [[rows[i][j] - rows[j][i] for j in range(n)]
                    for i in range(n)]
            if _det(skew) not in (1, -1):
                raise RefusedPrecondition(
                    "det(A - A^t) must be +-1 for a knot Seifert matrix")

    @property
    def n(self):
        return len(self.rows)

    def symmetric(self):
        """A + A^t as integer rows."""
        r = self.rows
        return [[r[i][j] + r[j][i] for j in range(self.n)]
                for i in range(self.n)]

    def skew(self):
        """A^t - A as integer rows."""
        r = self.rows
        return [[r[j][i] - r[i][j] for j in range(self.n)]
                for i in range(self.n)]

    def mirror(self):
        """Seifert matrix of the mirror knot, -A^t."""
        r = self.rows
        return SeifertMatrix([[-r[j][i] for j in range(self.n)]
                              for i in range(self.n)])

    def block_sum(self, other):
        """Seifert matrix of a connected sum."""
        n, m = self.n, other.n
        out = [[0] * (n + m) for _ in range(n + m)]
        for i in range(n):
            for j in range(n):
                out[i][j] = self.rows[i][j]
        for i in range(m):
            for j in range(m):
                out[n + i][n + j] = other.rows[i][j]
        return SeifertMatrix(out)

    def to_json(self):
        return [list(row) for row in self.rows]

    def __eq__(self, other):
        return isinstance(other, SeifertMatrix) and self.rows == other.rows

    def __repr__(self):
        return "SeifertMatrix(%r)" % (self.rows,)


def alexander_poly(A):
    """Coefficients of det(A - t A^t), constant term first.

    Computed by interpolation at t = 0..n, which keeps the arithmetic
    to plain rational determinants.  The result is an integer vector.
    """
    n = A.n
    if n == 0:
        return [1]
    xs = list(range(n + 1))
    ys = []
    for k in xs:
        ys.append(_det([[A.rows[i][j] - k * A.rows[j][i]
                         for j in range(n)] for i in range(n)]))
    coeffs = [Fraction(0)] * (n + 1)
    for i, xi in enumerate(xs):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = _poly_mul(basis, [Fraction(-xj), Fraction(1)])
            denom *= xi - xj
        scale = ys[i] / denom
        for e, c in enumerate(basis):
            coeffs[e] += c * scale
    out = []
    for c in coeffs:
        assert c.denominator == 1
        out.append(int(c))
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def alexander_root_gate(A, omega):
    """True when e^{4 pi i omega} misses every root of det(A - t A^t).

    The evaluation point is a primitive root of unity whose order is
    the denominator of 2*omega, so the exact test is divisibility by
    the corresponding cyclotomic polynomial.

    :param omega: rational in (0, 1/2).
    """
    omega = Fraction(omega)
    if not 0 < omega < HALF:
        raise RefusedPrecondition(
            "holonomy parameter must lie in (0, 1/2), got %s" % omega)
    delta = alexander_poly(A)
    if len(delta) == 1:
        return True
    n = (2 * omega).denominator
    phi = cyclotomic(n)
    if len(phi) > len(delta):
        return True
    _, rem = _poly_divmod(delta, phi)
    return not all(x == 0 for x in rem)


def signature_sigma(A):
    """Signature of A + A^t, exactly over Q.  Always even."""
    if A.n == 0:
        return 0
    pos, neg, zero = signature_rational(A.symmetric())
    if zero:
        raise InternalViolation("symmetrized Seifert form is degenerate")
    sig = pos - neg
    assert sig % 2 == 0
    return sig


_RATIONAL_COS = {
    Fraction(1): Fraction(-1),
    Fraction(1, 2): Fraction(0),
    Fraction(3, 2): Fraction(0),
    Fraction(1, 3): Fraction(1, 2),
    Fraction(5, 3): Fraction(1, 2),
    Fraction(2, 3): Fraction(-1, 2),
    Fraction(4, 3): Fraction(-1, 2),
}


def tristram_levine(A, omega):
    """Signature of (1 - e^{4 pi i omega}) A + (1 - e^{-4 pi i omega}) A^t.

    The Hermitian matrix is X + i s B with X = (1-c)(A + A^t),
    B = A^t - A, c = cos(4 pi omega), s = sin(4 pi omega); its
    signature is half that of the real symmetric doubling
    [[X, -sB], [sB, X]].  When c is rational the doubling is congruent
    to the rational matrix [[X, -B], [B, X/s^2]] and the answer is
    exact; otherwise interval arithmetic with escalating precision is
    used, and a persistent straddle is reported instead of a guess.

    :param omega: rational in (0, 1/2), gated away from Alexander roots.
    """
    omega = Fraction(omega)
    if not 0 < omega < HALF:
        raise RefusedPrecondition(
            "holonomy parameter must lie in (0, 1/2), got %s" % omega)
    if not alexander_root_gate(A, omega):
        raise RefusedPrecondition(
            "e^{4 pi i omega} is a root of the Alexander polynomial "
            "at omega = %s" % omega)
    n = A.n
    if n == 0:
        return 0
    sym = A.symmetric()
    skew = A.skew()
    r = (4 * omega) % 2
    c = _RATIONAL_COS.get(r)
    if c is not None:
        one_minus_c = 1 - c
        x = [[one_minus_c * sym[i][j] for j in range(n)] for i in range(n)]
        s2 = 1 - c * c
        if s2 == 0:
            # only omega = 1/4 lands here; the matrix is already real
            pos, neg, zero = signature_rational(x)
            assert zero == 0
            assert (pos - neg) % 2 == 0
            return pos - neg
        big = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
        for i in range(n):
            for j in range(n):
                big[i][j] = x[i][j]
                big[i][n + j] = Fraction(-skew[i][j])
                big[n + i][j] = Fraction(skew[i][j])
                big[n + i][n + j] = x[i][j] / s2
        pos, neg, zero = signature_rational(big)
        assert zero == 0 and (pos - neg) % 2 == 0
        return (pos - neg) // 2
    last = None
    for bits in precision_schedule():
        cq = cos_of_pi_multiple(4 * omega, bits)
        sq = sin_of_pi_multiple(4 * omega, bits)
        one_minus_c = 1 - cq
        big = [[QI(0)] * (2 * n) for _ in range(2 * n)]
        for i in range(n):
            for j in range(n):
                xe = one_minus_c * sym[i][j]
                big[i][j] = xe
                big[n + i][n + j] = xe
                big[i][n + j] = sq * (-skew[i][j])
                big[n + i][j] = sq * skew[i][j]
        try:
            pos, neg = signature_interval(big, work_bits=bits + 16)
        except StraddleError as err:
            last = err
            continue
        assert pos + neg == 2 * n and (pos - neg) % 2 == 0
        return (pos - neg) // 2
    raise StraddleError(
        "signature at omega = %s not certified at any scheduled "
        "precision; e^{4 pi i omega} may be close to an Alexander "
        "root (%s)" % (omega, last))


# ---------------------------------------------------------------------------
# knot descriptors

_BUILTIN_NAMES = ("10_28_star_figure", "10_28_star_local", "K_mn", "D_lmn")


class KnotDescriptor(object):
    """Symbolic knot, one of a fixed list of shapes.

    Variants: unknot; twobridge (p odd, gcd(p, q) = 1); trefoil_sum
    (signed count l, negative meaning mirrors); mirror (inner
    descriptor); connected_sum (list of descriptors); seifert (an
    explicit matrix); builtin (named families); c_r (one-generator
    filtered block at level r); omega_block (k-fold tensor of the
    2-handle block).
    """

    def __init__(self, variant, **fields):
        self.variant = variant
        for key, val in fields.items():
            setattr(self, key, val)

    @staticmethod
    def unknot():
        return KnotDescriptor("unknot")

    @staticmethod
    def twobridge(p, q):
        p, q = int(p), int(q)
        if p < 1 or p % 2 == 0:
            raise RefusedPrecondition(
                "two-bridge p must be a positive odd integer, got %d" % p)
        if math.gcd(p, q) != 1:
            raise RefusedPrecondition(
                "two-bridge parameters must be coprime, got (%d, %d)"
                % (p, q))
        return KnotDescriptor("twobridge", p=p, q=q)

    @staticmethod
    def trefoil_sum(l):
        return KnotDescriptor("trefoil_sum", l=int(l))

    @staticmethod
    def mirror(inner):
        return KnotDescriptor("mirror", inner=inner)

    @staticmethod
    def connected_sum(parts):
        parts = list(parts)
        if not parts:
            raise RefusedPrecondition("connected sum needs at least one part")
        return KnotDescriptor("connected_sum", parts=parts)

    @staticmethod
    def seifert(matrix):
        if not isinstance(matrix, SeifertMatrix):
            matrix = SeifertMatrix(matrix)
        return KnotDescriptor("seifert", matrix=matrix)

    @staticmethod
    def builtin(name, **params):
        if name not in _BUILTIN_NAMES:
            raise RefusedPrecondition("unknown builtin %r" % name)
        if name == "K_mn":
            m, n = int(params["m"]), int(params["n"])
            if m < 1 or n < 0:
                raise RefusedPrecondition(
                    "K_mn needs m >= 1 and n >= 0, got (%d, %d)" % (m, n))
            return KnotDescriptor("builtin", name=name, m=m, n=n)
        if name == "D_lmn":
            l, m, n = int(params["l"]), int(params["m"]), int(params["n"])
            if min(l, m, n) < 1:
                raise RefusedPrecondition(
                    "D_lmn needs positive parameters, got (%d, %d, %d)"
                    % (l, m, n))
            return KnotDescriptor("builtin", name=name, l=l, m=m, n=n)
        return KnotDescriptor("builtin", name=name)

    @staticmethod
    def c_r(r):
        r = Fraction(r)
        if r <= 0:
            raise RefusedPrecondition(
                "the one-generator filtered block needs r > 0, got %s" % r)
        return KnotDescriptor("c_r", r=r)

    @staticmethod
    def omega_block(k):
        k = int(k)
        if k < 0:
            raise RefusedPrecondition("omega-block needs k >= 0")
        return KnotDescriptor("omega_block", k=k)

    def __str__(self):
        v = self.variant
        if v == "unknot":
            return "unknot"
        if v == "twobridge":
            return "twobridge:%d/%d" % (self.p, self.q)
        if v == "trefoil_sum":
            return "trefoil:%+d" % self.l
        if v == "mirror":
            return "mirror(%s)" % self.inner
        if v == "connected_sum":
            return "sum(%s)" % ",".join(str(p) for p in self.parts)
        if v == "seifert":
            return "seifert:%s" % json.dumps(self.matrix.to_json(),
                                             separators=(",", ":"))
        if v == "builtin":
            if self.name == "K_mn":
                return "Kmn:%d,%d" % (self.m, self.n)
            if self.name == "D_lmn":
                return "Dlmn:%d,%d,%d" % (self.l, self.m, self.n)
            return "builtin:10_28*" if self.name == "10_28_star_figure" \
                else "builtin:10_28*-local"
        if v == "c_r":
            return "Cr:%s" % self.r
        if v == "omega_block":
            return "omega-block:%d" % self.k
        raise InternalViolation("unprintable descriptor %r" % v)

    __repr__ = __str__


def _split_top(s):
    """Split on commas that sit outside every bracket."""
    parts = []
    depth = 0
    cur = []
    for ch in s:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def parse_descriptor(s):
    """Descriptor from its command-line spelling.

    unknot | twobridge:p/q | trefoil:+l | trefoil:-l | mirror(...) |
    sum(a,b,...) | builtin:10_28* | builtin:10_28*-local | Kmn:m,n |
    Dlmn:l,m,n | Cr:p/q | omega-block:k | seifert:[[...],...]

    Structural problems raise ValueError; a descriptor that parses but
    names an invalid knot raises RefusedPrecondition.
    """
    s = s.strip()
    if s == "unknot":
        return KnotDescriptor.unknot()
    if s.startswith("mirror(") and s.endswith(")"):
        return KnotDescriptor.mirror(parse_descriptor(s[7:-1]))
    if s.startswith("sum(") and s.endswith(")"):
        inner = _split_top(s[4:-1])
        if inner == [""]:
            raise ValueError("empty connected sum")
        return KnotDescriptor.connected_sum(
            [parse_descriptor(p) for p in inner])
    head, sep, rest = s.partition(":")
    if not sep:
        raise ValueError("unrecognized descriptor %r" % s)
    try:
        if head == "twobridge":
            p, q = rest.split("/")
            return KnotDescriptor.twobridge(int(p), int(q))
        if head == "trefoil":
            return KnotDescriptor.trefoil_sum(int(rest))
        if head == "builtin":
            if rest == "10_28*":
                return KnotDescriptor.builtin("10_28_star_figure")
            if rest == "10_28*-local":
                return KnotDescriptor.builtin("10_28_star_local")
            raise ValueError("unknown builtin %r" % rest)
        if head == "Kmn":
            m, n = rest.split(",")
            return KnotDescriptor.builtin("K_mn", m=int(m), n=int(n))
        if head == "Dlmn":
            l, m, n = rest.split(",")
            return KnotDescriptor.builtin("D_lmn", l=int(l), m=int(m),
                                          n=int(n))
        if head == "Cr":
            return KnotDescriptor.c_r(Fraction(rest))
        if head == "omega-block":
            return KnotDescriptor.omega_block(int(rest))
        if head == "seifert":
            return KnotDescriptor.seifert(json.loads(rest))
    except (ValueError, ZeroDivisionError) as err:
        raise ValueError("bad descriptor %r: %s" % (s, err))
    raise ValueError("unrecognized descriptor %r" % s)


# ---------------------------------------------------------------------------
# Seifert matrices for the supported families

def _even_rep(p, q):
    """Even representative x of q modulo p with |x| < p."""
    q1 = q % p
    x = q1 if q1 % 2 == 0 else q1 - p
    assert x % 2 == 0 and 0 < abs(x) < p
    return x


def _even_cf(p, x):
    """Even continued fraction p/x = e1 + 1/(e2 + 1/(...)).

    Every quotient is the even integer nearest the running ratio; the
    remainders alternate parity and strictly decrease, so the list has
    even length and no zero entries.
    """
    u, w = p, x
    out = []
    while w != 0:
        f = math.floor(Fraction(u, 2 * w) + HALF)
        e = 2 * f
        r = u - e * w
        assert e != 0 and abs(r) < abs(w)
        out.append(e)
        u, w = w, r
    assert len(out) % 2 == 0
    return out


def _twobridge_seifert_raw(p, x):
    es = _even_cf(p, x)
    n = len(es)
    rows = [[0] * n for _ in range(n)]
    for i, e in enumerate(es):
        rows[i][i] = (e // 2) if i % 2 == 0 else -(e // 2)
        if i + 1 < n:
            rows[i][i + 1] = 1
    out = SeifertMatrix(rows)
    # the symmetrized determinant recovers p up to sign
    assert abs(_det(out.symmetric())) == p
    return out


_ANCHORS = ((3, 1, -2), (53, 34, 0))
_calibrated = [False]


def _calibrate():
    if _calibrated[0]:
        return
    for p, q, want in _ANCHORS:
        got = signature_sigma(_twobridge_seifert_raw(p, _even_rep(p, q)))
        if got != want:
            raise CalibrationError(
                "two-bridge anchor K(%d,%d) has sigma = %d, expected %d; "
                "refusing to emit Seifert matrices" % (p, q, got, want))
    _calibrated[0] = True


def _kmn_matrix(m, n):
    diag = [2, 2, -1, -1, -m, n]
    rows = [[0] * 6 for _ in range(6)]
    for i in range(6):
        rows[i][i] = diag[i]
        if i:
            rows[i][i - 1] = -1
    return SeifertMatrix(rows)


def _dlmn_matrix(l, m, n):
    diag = [-m, -n, l, 1]
    rows = [[0] * 4 for _ in range(4)]
    for i in range(4):
        rows[i][i] = diag[i]
        if i:
            rows[i][i - 1] = -1
    return SeifertMatrix(rows)


def seifert_for(d):
    """Seifert matrix of a descriptor, for the families that have one.

    Supported: unknot, twobridge, trefoil sums, K_mn, D_lmn, explicit
    seifert data, and mirror / connected_sum of those.
    """
    v = d.variant
    if v == "unknot":
        return SeifertMatrix([])
    if v == "seifert":
        return d.matrix
    if v == "twobridge":
        if d.p == 1:
            return SeifertMatrix([])
        _calibrate()
        return _twobridge_seifert_raw(d.p, _even_rep(d.p, d.q))
    if v == "trefoil_sum":
        if d.l == 0:
            return SeifertMatrix([])
        base = seifert_for(KnotDescriptor.twobridge(3, 1))
        if d.l < 0:
            base = base.mirror()
        out = base
        for _ in range(abs(d.l) - 1):
            out = out.block_sum(base)
        return out
    if v == "mirror":
        return seifert_for(d.inner).mirror()
    if v == "connected_sum":
        out = seifert_for(d.parts[0])
        for part in d.parts[1:]:
            out = out.block_sum(seifert_for(part))
        return out
    if v == "builtin" and d.name == "K_mn":
        _calibrate()
        return _kmn_matrix(d.m, d.n)
    if v == "builtin" and d.name == "D_lmn":
        _calibrate()
        return _dlmn_matrix(d.l, d.m, d.n)
    raise RefusedPrecondition(
        "no Seifert matrix construction for %s" % d)


# ---------------------------------------------------------------------------
# complex builders

def build_complex(d, ring=None, filtered=False):
    """S-complex for a descriptor.

    Unfiltered knots map to their local-equivalence model: the
    two-bridge families land on the staircase model at height
    -sigma/2, connected sums tensor, mirrors dualize.  Filtered mode
    supports the explicit I-graded complexes (the 10_28* figure and
    its local model, the one-generator blocks) and tensor/dual
    combinations of them; everything else is refused rather than
    approximated.
    """
    if filtered:
        ring = RING_QT if ring is None else ring
        if ring != RING_QT:
            raise RefusedPrecondition(
                "filtered complexes live over %s, got %s" % (RING_QT, ring))
        v = d.variant
        if v == "builtin" and d.name == "10_28_star_figure":
            return models.ten28star()
        if v == "builtin" and d.name == "10_28_star_local":
            return models.ten28star_local()
        if v == "c_r":
            return models.filtered_one_gen(d.r)
        if v == "unknot":
            return models.filtered_trivial()
        if v == "mirror":
            return build_complex(d.inner, ring, filtered=True).dual()
        if v == "connected_sum":
            out = build_complex(d.parts[0], ring, filtered=True)
            for part in d.parts[1:]:
                out = out.tensor(build_complex(part, ring, filtered=True))
            return out
        raise RefusedPrecondition(
            "unsupported combination: no filtered model for %s" % d)
    ring = RING_LOC if ring is None else ring
    if ring not in KNOWN_RINGS:
        raise RefusedPrecondition("unknown coefficient ring %r" % ring)
    v = d.variant
    if v == "unknot":
        return models.trefoil_sum(0, ring)
    if v == "trefoil_sum":
        return models.trefoil_sum(d.l, ring)
    if v == "omega_block":
        return models.omega_block(d.k, ring)
    if v == "twobridge" or (v == "builtin" and d.name in ("K_mn", "D_lmn")):
        sig = signature_sigma(seifert_for(d))
        return models.twobridge_model(-sig // 2, ring)
    if v == "mirror":
        if d.inner.variant == "trefoil_sum":
            return models.trefoil_sum(-d.inner.l, ring)
        return build_complex(d.inner, ring).dual()
    if v == "connected_sum":
        out = build_complex(d.parts[0], ring)
        for part in d.parts[1:]:
            out = out.tensor(build_complex(part, ring))
        return out
    raise RefusedPrecondition(
        "unsupported combination: %s outside filtered mode" % d)


# ---------------------------------------------------------------------------
# cobordism calculator

class CobordismData(object):
    """Topological data of a definite cobordism block.

    The intersection form is diag(-1, ..., -1) on n blowup classes.

    :param surface: coordinates of the surface class S in that basis.
    :param c: bundle class coordinates, default zero.
    :param genus: genus of the (possibly immersed) surface.
    :param s_plus, s_minus: positive and negative double point counts.
    :param chi_w, sigma_w: Euler characteristic and signature of the
        4-manifold; default to the n-fold blown-up cylinder (n, -n).
    :param chi_s: Euler characteristic of the surface, default -2*genus
        (an annulus between two knots).
    :param sigma_start, sigma_end: endpoint signatures sigma(Y, K) and
        sigma(Y', K'), at whatever holonomy parameter the caller uses.
    :param s_dot_s: optional cross-check of the self-intersection.
    """

    def __init__(self, surface, c=None, genus=0, s_plus=0, s_minus=0,
                 chi_w=None, sigma_w=None, chi_s=None, sigma_start=0,
                 sigma_end=0, s_dot_s=None):
        self.surface = [int(x) for x in surface]
        n = len(self.surface)
        self.c = [int(x) for x in c] if c is not None else [0] * n
        if len(self.c) != n:
            raise RefusedPrecondition(
                "bundle class must have %d coordinates" % n)
        self.genus = int(genus)
        self.s_plus = int(s_plus)
        self.s_minus = int(s_minus)
        if min(self.genus, self.s_plus, self.s_minus) < 0:
            raise RefusedPrecondition("negative surface data")
        self.chi_w = int(chi_w) if chi_w is not None else n
        self.sigma_w = int(sigma_w) if sigma_w is not None else -n
        self.chi_s = int(chi_s) if chi_s is not None else -2 * self.genus
        self.sigma_start = int(sigma_start)
        self.sigma_end = int(sigma_end)
        want = -sum(x * x for x in self.surface)
        if s_dot_s is not None and int(s_dot_s) != want:
            raise RefusedPrecondition(
                "S.S = %d does not match the diagonal form value %d"
                % (int(s_dot_s), want))
        self.s_dot_s = want

    @property
    def n(self):
        return len(self.surface)

    def to_json(self):
        return {
            "surface": list(self.surface),
            "c": list(self.c),
            "genus": self.genus,
            "s_plus": self.s_plus,
            "s_minus": self.s_minus,
            "chi_w": self.chi_w,
            "sigma_w": self.sigma_w,
            "chi_s": self.chi_s,
            "sigma_start": self.sigma_start,
            "sigma_end": self.sigma_end,
            "s_dot_s": self.s_dot_s,
        }

    @staticmethod
    def from_json(doc):
        if isinstance(doc, str):
            doc = json.loads(doc)
        if "surface" not in doc:
            raise RefusedPrecondition("cobordism data needs a surface class")
        kw = {k: doc[k] for k in
              ("c", "genus", "s_plus", "s_minus", "chi_w", "sigma_w",
               "chi_s", "sigma_start", "sigma_end", "s_dot_s")
              if k in doc}
        return CobordismData(doc["surface"], **kw)


def immersed_data(s_plus, s_minus, genus=0, sigma_start=0, sigma_end=0):
    """Blow up every double point of an immersed cylinder-cobordism.

    Positive double points contribute surface coordinate -2 (the
    proper transform picks up twice the exceptional class), negative
    ones contribute 0.
    """
    surface = [-2] * int(s_plus) + [0] * int(s_minus)
    return CobordismData(surface, genus=genus, s_plus=s_plus,
                         s_minus=s_minus, sigma_start=sigma_start,
                         sigma_end=sigma_end)


def reducible_invariants(data, c1, omega):
    """Energy, monopole number and index of one reducible.

    kappa = -(c_1 + omega S - c/2)^2 with the square taken in the
    diagonal form, nu = (c - 2 c_1) . S, and the index is

        8 kappa + 2(1 - 4 omega) nu - 3/2 (chi(W) + sigma(W)) + chi(S)
          + 8 omega^2 S.S + sigma(Y,K) - sigma(Y',K') - 1

    which must come out an integer; a fractional value means the data
    is inconsistent.
    """
    omega = Fraction(omega)
    if not 0 < omega < HALF:
        raise RefusedPrecondition(
            "holonomy parameter must lie in (0, 1/2), got %s" % omega)
    c1 = [int(x) for x in c1]
    if len(c1) != data.n:
        raise RefusedPrecondition(
            "c1 must have %d coordinates" % data.n)
    kap = Fraction(0)
    nu = 0
    for x, s, cc in zip(c1, data.surface, data.c):
        t = x + omega * s - Fraction(cc, 2)
        kap += t * t
        nu -= (cc - 2 * x) * s
    ind = (8 * kap + 2 * (1 - 4 * omega) * nu
           - Fraction(3, 2) * (data.chi_w + data.sigma_w)
           + data.chi_s + 8 * omega * omega * data.s_dot_s
           + data.sigma_start - data.sigma_end - 1)
    if ind.denominator != 1:
        raise RefusedPrecondition(
            "reducible index %s is not an integer; inconsistent "
            "cobordism data" % ind)
    return kap, nu, int(ind)


def minimal_reducibles(data, omega):
    """Index-minimizing reducibles and their signed count.

    Per coordinate the energy is a parabola in c1_i centered at
    (2 c_i - S_i)/4, and the combination 8 kappa + 2(1-4 omega) nu
    seen by the index shares that center for every omega, so the
    minimizers form a box with one or two integer choices per
    coordinate.  Returns (kappa_min, height, strong, eta, minimizers)
    where eta = sum of (-1)^{c1^2} T^{nu(A0) - nu(A)} over minimal
    reducibles, A0 being the energy-minimal (equivalently nu-maximal)
    one, so eta has non-negative T-powers and constant term from A0.

    :param omega: rational in (0, 1/4]; above 1/4 the normalization
        convention breaks down and the call is refused.
    """
    omega = Fraction(omega)
    if not 0 < omega <= Fraction(1, 4):
        raise RefusedPrecondition(
            "eta normalization needs omega in (0, 1/4], got %s" % omega)
    choices = []
    for s, cc in zip(data.surface, data.c):
        t = Fraction(2 * cc - s, 4)
        if t.denominator == 1:
            choices.append([int(t)])
        elif t.denominator == 2:
            choices.append([int(t - HALF), int(t + HALF)])
        else:
            choices.append([math.floor(t + HALF)])
    minimizers = sorted(itertools.product(*choices))
    rows = [(c1, reducible_invariants(data, c1, omega))
            for c1 in minimizers]
    indices = sorted({ind for _, (_, _, ind) in rows})
    if len(indices) != 1:
        raise InternalViolation(
            "coordinatewise minimization produced several indices %s"
            % indices)
    ind = indices[0]
    if ind % 2 == 0:
        raise RefusedPrecondition(
            "minimal reducible index %d is even; inconsistent "
            "cobordism data" % ind)
    height = (ind + 1) // 2
    if height < 0:
        raise NotNegativeDefinite(
            "not negative definite of non-negative height "
            "(minimal index %d)" % ind)
    nu0 = max(nu for _, (_, nu, _) in rows)
    kappa_min = min(kap for _, (kap, _, _) in rows)
    terms = {}
    for c1, (kap, nu, _) in rows:
        if nu == nu0 and kap != kappa_min:
            raise InternalViolation(
                "nu-maximal reducible misses the minimal energy")
        e = nu0 - nu
        assert e >= 0
        sign = -1 if sum(x * x for x in c1) % 2 else 1
        terms[e] = terms.get(e, 0) + sign
    eta = LPoly(terms)
    const = eta.c.get(0, Fraction(0))
    strong = abs(const) == 1
    return kappa_min, height, strong, eta, [list(c1) for c1 in minimizers]
