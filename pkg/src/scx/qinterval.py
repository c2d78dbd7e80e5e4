"""Signatures of symmetric matrices without floating point.

Rational symmetric matrices get an exact signature by congruence
(diagonal pivots plus hyperbolic 2x2 blocks).  Matrices whose entries
involve sin/cos of rational multiples of pi are handled with interval
arithmetic: endpoints are Fractions, pi comes from Machin's formula,
sin and cos from Taylor series with explicit tail bounds, and the
signature from an LDL^T sweep that only accepts pivots whose intervals
are bounded away from zero.  If a pivot straddles zero the caller is
expected to retry at higher precision.
"""

import os
from fractions import Fraction


class StraddleError(ArithmeticError):
    """A pivot interval contains zero; retry with more precision."""


class QI(object):
    """Closed interval with Fraction endpoints."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi=None):
        if hi is None:
            hi = lo
        self.lo = Fraction(lo)
        self.hi = Fraction(hi)
        assert self.lo <= self.hi

    def __add__(self, other):
        other = _qi(other)
        return QI(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __neg__(self):
        return QI(-self.hi, -self.lo)

    def __sub__(self, other):
        return self + (-_qi(other))

    def __rsub__(self, other):
        return _qi(other) + (-self)

    def __mul__(self, other):
        other = _qi(other)
        vals = [self.lo * other.lo, self.lo * other.hi,
                self.hi * other.lo, self.hi * other.hi]
        return QI(min(vals), max(vals))

    __rmul__ = __mul__

    def inv(self):
        if self.lo <= 0 <= self.hi:
            raise StraddleError("inverting an interval containing zero")
        return QI(1 / self.hi, 1 / self.lo)

    def __truediv__(self, other):
        return self * _qi(other).inv()

    def contains_zero(self):
        return self.lo <= 0 <= self.hi

    def sign(self):
        """-1, 0 (only for the exact point interval [0,0]), or +1.
        Raises StraddleError on a genuine straddle."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        if self.lo == 0 and self.hi == 0:
            return 0
        raise StraddleError("sign of straddling interval")

    def width(self):
        return self.hi - self.lo

    def __repr__(self):
        return "QI(%s, %s)" % (self.lo, self.hi)


def _qi(x):
    return x if isinstance(x, QI) else QI(x)


def _atan_interval(inv_x, eps):
    """arctan(1/inv_x) for integer inv_x > 1, to absolute error < eps."""
    x = Fraction(1, inv_x)
    term = x
    s = Fraction(0)
    k = 0
    sign = 1
    while term > eps:
        s += sign * term / (2 * k + 1)
        term *= x * x
        sign = -sign
        k += 1
    # alternating with decreasing terms: truth within the next term
    tail = term / (2 * k + 1)
    return QI(s - tail, s + tail)


def pi_interval(bits):
    """Enclosure of pi with width < 2^-bits (Machin)."""
    eps = Fraction(1, 2 ** (bits + 8))
    a = _atan_interval(5, eps)
    b = _atan_interval(239, eps)
    out = 16 * a - 4 * b
    assert out.width() < Fraction(1, 2 ** bits)
    return out


def _sin_point(x, eps):
    """sin at a Fraction x, |x| <= 4, to absolute error < eps."""
    term = Fraction(x)
    s = Fraction(0)
    k = 0
    while abs(term) > eps or k < 3:
        s += term
        k += 1
        term = -term * x * x / ((2 * k) * (2 * k + 1))
        if k > 200:
            break
    return QI(s - abs(term) * 2, s + abs(term) * 2)


def _cos_point(x, eps):
    term = Fraction(1)
    s = Fraction(0)
    k = 0
    while abs(term) > eps or k < 3:
        s += term
        k += 1
        term = -term * x * x / ((2 * k - 1) * (2 * k))
        if k > 200:
            break
    return QI(s - abs(term) * 2, s + abs(term) * 2)


def sin_of_pi_multiple(r, bits):
    """Enclosure of sin(r * pi) for a Fraction r."""
    r = Fraction(r) % 2          # sin has period 2pi
    if r > 1:
        return -sin_of_pi_multiple(r - 1, bits)
    eps = Fraction(1, 2 ** (bits + 8))
    x = r * pi_interval(bits + 16)
    lo = _sin_point(x.lo, eps)
    hi = _sin_point(x.hi, eps)
    # sin is 1-Lipschitz so the value over [x.lo, x.hi] lies within
    # [min - w, max + w]; cheaper: union of endpoint enclosures padded
    w = x.width()
    return QI(min(lo.lo, hi.lo) - w, max(lo.hi, hi.hi) + w)


def cos_of_pi_multiple(r, bits):
    r = Fraction(r) % 2
    if r > 1:
        r = 2 - r                # cos(2pi - t) = cos t
    eps = Fraction(1, 2 ** (bits + 8))
    x = r * pi_interval(bits + 16)
    lo = _cos_point(x.lo, eps)
    hi = _cos_point(x.hi, eps)
    w = x.width()
    return QI(min(lo.lo, hi.lo) - w, max(lo.hi, hi.hi) + w)


def precision_schedule():
    """Bit precisions to try, lowest first.  SCX_PRECISION_BITS sets the
    starting point."""
    start = int(os.environ.get("SCX_PRECISION_BITS", "64"))
    return [start, start * 2, start * 4, start * 8]


# ---------------------------------------------------------------------------
# signatures

def signature_rational(mat):
    """Exact signature (pos, neg, zero) of a symmetric Fraction matrix."""
    n = len(mat)
    a = [[Fraction(x) for x in row] for row in mat]
    pos = neg = 0
    live = list(range(n))
    while live:
        # prefer a nonzero diagonal pivot
        piv = None
        for i in live:
            if a[i][i] != 0:
                piv = i
                break
        if piv is not None:
            p = a[piv][piv]
            if p > 0:
                pos += 1
            else:
                neg += 1
            rest = [j for j in live if j != piv]
            for i in rest:
                f = a[i][piv] / p
                if f == 0:
                    continue
                for j in rest:
                    a[i][j] -= f * a[piv][j]
            live = rest
            continue
        # all diagonal zero: hunt for an off-diagonal hyperbolic pair
        hyp = None
        for ii, i in enumerate(live):
            for j in live[ii + 1:]:
                if a[i][j] != 0:
                    hyp = (i, j)
                    break
            if hyp:
                break
        if hyp is None:
            break  # remaining block is zero
        i, j = hyp
        b = a[i][j]
        pos += 1
        neg += 1
        rest = [k for k in live if k not in (i, j)]
        # congruence update for the 2x2 pivot [[0,b],[b,0]]
        for r in rest:
            ci, cj = a[r][i], a[r][j]
            if ci == 0 and cj == 0:
                continue
            for s in rest:
                a[r][s] -= (ci * a[j][s] + cj * a[i][s]) / b
        live = rest
    zero = n - pos - neg
    return pos, neg, zero


def _round_out(x, bits):
    """Outward rounding to denominator 2^bits.

    Exact rational arithmetic doubles entry bit-length at every Schur
    step; rounding endpoints outward keeps the sweep polynomial while
    staying rigorous (intervals only ever widen).
    """
    d = 1 << bits
    lo = x.lo
    hi = x.hi
    lo = Fraction((lo.numerator * d) // lo.denominator, d)
    hi = Fraction(-((-hi.numerator * d) // hi.denominator), d)
    return QI(lo, hi)


def signature_interval(mat, work_bits=None):
    """Signature (pos, neg) of a symmetric QI matrix assumed nonsingular.
    Raises StraddleError when the intervals cannot certify a pivot.

    :param work_bits: when set, intermediate entries are outward-rounded
        to this many fractional bits, bounding coefficient growth."""
    n = len(mat)
    a = [[_qi(x) for x in row] for row in mat]
    if work_bits is not None:
        a = [[_round_out(x, work_bits) for x in row] for row in a]
    pos = neg = 0
    live = list(range(n))
    while live:
        piv = None
        best = Fraction(0)
        for i in live:
            d = a[i][i]
            if not d.contains_zero():
                mig = min(abs(d.lo), abs(d.hi))
                if mig > best:
                    best = mig
                    piv = i
        if piv is not None:
            p = a[piv][piv]
            if p.sign() > 0:
                pos += 1
            else:
                neg += 1
            rest = [j for j in live if j != piv]
            for i in rest:
                f = a[i][piv] / p
                for j in rest:
                    e = a[i][j] - f * a[piv][j]
                    a[i][j] = e if work_bits is None \
                        else _round_out(e, work_bits)
            live = rest
            continue
        # 2x2 block pivot with certainly-negative determinant
        hyp = None
        for ii, i in enumerate(live):
            for j in live[ii + 1:]:
                det = a[i][i] * a[j][j] - a[i][j] * a[i][j]
                if det.hi < 0:
                    hyp = (i, j)
                    break
            if hyp:
                break
        if hyp is None:
            raise StraddleError("no certifiable pivot")
        i, j = hyp
        pos += 1
        neg += 1
        rest = [k for k in live if k not in (i, j)]
        det = a[i][i] * a[j][j] - a[i][j] * a[i][j]
        for r in rest:
            ci, cj = a[r][i], a[r][j]
            for s in rest:
                cs_i, cs_j = a[i][s], a[j][s]
                # inverse of [[aii,aij],[aij,ajj]] applied inside the
                # Schur complement
                num = (ci * (a[j][j] * cs_i - a[i][j] * cs_j)
                       + cj * (a[i][i] * cs_j - a[i][j] * cs_i))
                e = a[r][s] - num / det
                a[r][s] = e if work_bits is None \
                    else _round_out(e, work_bits)
        live = rest
    return pos, neg
