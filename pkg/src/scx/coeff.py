"""Exact scalar arithmetic for the engine.

Three rings are supported, named by tags:
    "Z[T]"     Laurent polynomials in T with integer coefficients
    "Q(T)"     rational functions in T
    "localT1"  Q[T,T^-1] localized at T=1 (denominators nonvanishing at 1)

Scalars are stored as quotients of Laurent polynomials with Fraction
coefficients.  The element L = T - T^-1 vanishes to first order at T=1
and generates the maximal ideal of the localization; valuations used
throughout the engine are orders of vanishing at T=1.
"""

from fractions import Fraction

INF = float("inf")
NEG_INF = float("-inf")

RING_ZT = "Z[T]"
RING_QT = "Q(T)"
RING_LOC = "localT1"

KNOWN_RINGS = (RING_ZT, RING_QT, RING_LOC)


def _norm(c):
    return {e: v for e, v in c.items() if v != 0}


class LPoly(object):
    """Laurent polynomial in T, held as {exponent: Fraction}."""

    __slots__ = ("c",)

    def __init__(self, c=None):
        if c is None:
            c = {}
        self.c = {int(e): Fraction(v) for e, v in c.items() if v != 0}

    @staticmethod
    def const(v):
        return LPoly({0: Fraction(v)})

    @staticmethod
    def T(k=1, coeff=1):
        return LPoly({k: Fraction(coeff)})

    def is_zero(self):
        return not self.c

    def __eq__(self, other):
        return isinstance(other, LPoly) and self.c == other.c

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(tuple(sorted(self.c.items())))

    def __add__(self, other):
        out = dict(self.c)
        for e, v in other.c.items():
            out[e] = out.get(e, Fraction(0)) + v
        return LPoly(out)

    def __neg__(self):
        return LPoly({e: -v for e, v in self.c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out = {}
        for e1, v1 in self.c.items():
            for e2, v2 in other.c.items():
                e = e1 + e2
                out[e] = out.get(e, Fraction(0)) + v1 * v2
        return LPoly(out)

    def scale(self, r):
        r = Fraction(r)
        return LPoly({e: v * r for e, v in self.c.items()})

    def __pow__(self, n):
        # n >= 0 only; negative powers live in Frac
        assert n >= 0
        out = LPoly.const(1)
        b = self
        while n:
            if n & 1:
                out = out * b
            b = b * b
            n >>= 1
        return out

    def min_exp(self):
        return min(self.c) if self.c else 0

    def max_exp(self):
        return max(self.c) if self.c else 0

    def eval1(self):
        """Value at T=1."""
        return sum(self.c.values(), Fraction(0))

    def ord1(self):
        """Order of vanishing at T=1 (INF for the zero polynomial)."""
        if not self.c:
            return INF
        p = self
        k = 0
        while p.eval1() == 0:
            p = p.div_tm1()
            k += 1
        return k

    def div_tm1(self):
        """Exact quotient by (T-1).  Caller guarantees eval1() == 0."""
        lo = self.min_exp()
        coeffs = self._as_list(lo)
        # synthetic division of sum coeffs[i] t^i by (t-1)
        out = [Fraction(0)] * (len(coeffs) - 1)
        acc = Fraction(0)
        for i in range(len(coeffs) - 1, 0, -1):
            acc += coeffs[i]
            out[i - 1] = acc
        return LPoly({lo + i: v for i, v in enumerate(out)})

    def _as_list(self, lo):
        hi = self.max_exp()
        out = [Fraction(0)] * (hi - lo + 1)
        for e, v in self.c.items():
            out[e - lo] = v
        return out

    def is_monomial(self):
        return len(self.c) == 1

    def __repr__(self):
        return "LPoly(%s)" % format_lpoly(self)


LP_ZERO = LPoly()
LP_ONE = LPoly.const(1)


def _list_divmod(a, b):
    """INPUT: coefficient lists (index = exponent) over Q, b nonzero.
    OUTPUT: (q, r) lists with a = q*b + r, deg r < deg b."""
    a = list(a)
    db = len(b) - 1
    while db > 0 and b[db] == 0:
        db -= 1
    q = [Fraction(0)] * max(len(a) - db, 1)
    for i in range(len(a) - 1, db - 1, -1):
        if a[i] == 0:
            continue
        f = a[i] / b[db]
        q[i - db] = f
        for j in range(db + 1):
            a[i - db + j] -= f * b[j]
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return q, a


def _list_gcd(a, b):
    def trim(x):
        x = list(x)
        while len(x) > 1 and x[-1] == 0:
            x.pop()
        return x

    a, b = trim(a), trim(b)
    while not (len(b) == 1 and b[0] == 0):
        _, r = _list_divmod(a, b)
        a, b = b, trim(r)
    if len(a) == 1 and a[0] == 0:
        return [Fraction(1)]
    lead = a[-1]
    return [v / lead for v in a]


class Frac(object):
    """Quotient of Laurent polynomials, reduced on construction."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, (int, Fraction)):
            num = LPoly.const(num)
        if den is None:
            den = LP_ONE
        if isinstance(den, (int, Fraction)):
            den = LPoly.const(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = LP_ZERO, LP_ONE
            return
        # shift T-powers so both sides are ordinary polynomials, then cancel
        shift = num.min_exp() - den.min_exp()
        a = num._as_list(num.min_exp())
        b = den._as_list(den.min_exp())
        g = _list_gcd(a, b)
        if len(g) > 1:
            a, _ = _list_divmod(a, g)
            b, _ = _list_divmod(b, g)
        lead = b[-1]
        a = [v / lead for v in a]
        b = [v / lead for v in b]
        if shift >= 0:
            self.num = LPoly({i + shift: v for i, v in enumerate(a)})
            self.den = LPoly({i: v for i, v in enumerate(b)})
        else:
            self.num = LPoly({i: v for i, v in enumerate(a)})
            self.den = LPoly({i - shift: v for i, v in enumerate(b)})

    @staticmethod
    def of(p):
        if isinstance(p, Frac):
            return p
        if isinstance(p, LPoly):
            return Frac(p)
        return Frac(LPoly.const(p))

    def is_zero(self):
        return self.num.is_zero()

    def __eq__(self, other):
        if not isinstance(other, Frac):
            other = Frac.of(other)
        return self.num * other.den == other.num * self.den

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        other = Frac.of(other)
        return Frac(self.num * other.den + other.num * self.den,
                    self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return Frac(-self.num, self.den)

    def __sub__(self, other):
        return self + (-Frac.of(other))

    def __rsub__(self, other):
        return Frac.of(other) + (-self)

    def __mul__(self, other):
        other = Frac.of(other)
        return Frac(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = Frac.of(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero element")
        return Frac(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return Frac.of(other) / self

    def inv(self):
        return Frac.of(1) / self

    def val1(self):
        """Order of vanishing at T=1; INF for zero."""
        if self.is_zero():
            return INF
        return self.num.ord1() - self.den.ord1()

    def in_local(self):
        return self.is_zero() or self.val1() >= 0

    def is_integral_zt(self):
        """True if the reduced form is a Laurent polynomial over Z."""
        if not self.den.is_monomial():
            return False
        return all(v.denominator == 1 for v in self.num.c.values()) \
            and all(v.denominator == 1 for v in self.den.c.values())

    def __repr__(self):
        return "Frac(%s)" % format_frac(self)


F_ZERO = Frac.of(0)
F_ONE = Frac.of(1)

# L = T - T^-1 vanishes simply at T=1; tau = T^2 - T^-2 = L*(T + T^-1)
LAMBDA = Frac(LPoly({1: 1, -1: -1}))
TAU = Frac(LPoly({2: 1, -2: -1}))


def lambda_pow(k):
    """L^k as a Frac, any integer k."""
    if k >= 0:
        return Frac(LPoly({1: 1, -1: -1}) ** k)
    return Frac(LP_ONE, LPoly({1: 1, -1: -1}) ** (-k))


def is_unit(x, ring):
    """Unit test in the given coefficient ring."""
    x = Frac.of(x)
    if x.is_zero():
        return False
    if ring == RING_QT:
        return True
    if ring == RING_LOC:
        return x.val1() == 0
    if ring == RING_ZT:
        if not x.is_integral_zt():
            return False
        if not x.num.is_monomial():
            return False
        coeff = list(x.num.c.values())[0] / list(x.den.c.values())[0]
        return coeff in (1, -1)
    raise ValueError("unknown ring %r" % ring)


def element_in_ring(x, ring):
    x = Frac.of(x)
    if ring == RING_QT:
        return True
    if ring == RING_LOC:
        return x.in_local()
    if ring == RING_ZT:
        return x.is_integral_zt()
    raise ValueError("unknown ring %r" % ring)


# ---------------------------------------------------------------------------
# power series in L (used to express local elements as series at T=1)

def _series_mul(a, b, order):
    out = [Fraction(0)] * order
    for i, x in enumerate(a):
        if i >= order or x == 0:
            continue
        for j, y in enumerate(b):
            if i + j >= order:
                break
            out[i + j] += x * y
    return out


def _series_inv(a, order):
    assert a[0] != 0
    out = [Fraction(0)] * order
    out[0] = 1 / a[0]
    for n in range(1, order):
        s = Fraction(0)
        for k in range(1, n + 1):
            if k < len(a):
                s += a[k] * out[n - k]
        out[n] = -s / a[0]
    return out


def t_series(order):
    """T as a power series in L, branch with T(0)=1.

    Solves T^2 - L T - 1 = 0: T = L/2 + sqrt(1 + L^2/4).
    First terms: 1, 1/2, 1/8, 0, -1/128.
    """
    sq = [Fraction(0)] * order
    # binomial series for (1 + L^2/4)^(1/2)
    term = Fraction(1)
    for k in range(0, (order + 1) // 2):
        if 2 * k < order:
            sq[2 * k] += term * Fraction(1, 4) ** k
        # next binomial coefficient binom(1/2, k+1)/binom(1/2, k)
        term = term * (Fraction(1, 2) - k) / (k + 1)
    out = list(sq)
    if order > 1:
        out[1] += Fraction(1, 2)
    return out


def lambda_series_expand(x, order):
    """INPUT: x a Frac lying in localT1, order >= 1.
    OUTPUT: list of Fractions c with x = sum c[i] L^i + O(L^order)."""
    x = Frac.of(x)
    if x.is_zero():
        return [Fraction(0)] * order
    if not x.in_local():
        raise ValueError("element has a pole at T=1")
    ts = t_series(order)
    tinv = _series_inv(ts, order)

    def poly_series(p):
        out = [Fraction(0)] * order
        tp = {0: [Fraction(1)] + [Fraction(0)] * (order - 1)}
        for e, v in sorted(p.c.items()):
            if e not in tp:
                base = ts if e > 0 else tinv
                cur = tp[0]
                for _ in range(abs(e)):
                    cur = _series_mul(cur, base, order)
                tp[e] = cur
            out = [a + v * b for a, b in zip(out, tp[e])]
        return out

    ns = poly_series(x.num)
    ds = poly_series(x.den)
    assert ds[0] != 0
    return _series_mul(ns, _series_inv(ds, order), order)


# ---------------------------------------------------------------------------
# parsing and printing

def _tokenize_terms(s):
    """Split a sum into signed terms.  A +/- directly after '^' or '*' or
    at the start binds to the factor, not the sum."""
    terms = []
    cur = ""
    prev = ""
    for ch in s:
        if ch in "+-" and cur.strip() and prev not in "^*/(" and prev != "":
            terms.append(cur)
            cur = ch
        else:
            cur += ch
        if not ch.isspace():
            prev = ch
    if cur.strip():
        terms.append(cur)
    return terms


def _parse_factor(f):
    """Returns (value, variable-or-None, exponent)."""
    f = f.strip()
    if not f:
        raise ValueError("empty factor")
    base, exp = f, 1
    if "^" in f:
        base, e = f.split("^", 1)
        base = base.strip()
        exp = int(e.strip())
    if base in ("T", "U", "x", "L"):
        return (Fraction(1), base, exp)
    # numeric factor, possibly a fraction like 3/4
    if "/" in base:
        p, q = base.split("/", 1)
        val = Fraction(int(p.strip()), int(q.strip()))
    else:
        val = Fraction(int(base))
    if exp != 1:
        val = val ** exp
    return (val, None, 0)


def parse_coeff(s):
    """Parse a coefficient string into {(upow, xpow): Frac}.

    Grammar: signed sums of '*'-separated factors; factors are rationals,
    T^k, U^k, x^k, or L (alias for T - T^-1).  Example: "T^2-T^-2",
    "-1/2*L^3*U^-1", "3*x^2".
    """
    out = {}
    for term in _tokenize_terms(str(s)):
        term = term.strip()
        sign = Fraction(1)
        while term and term[0] in "+-":
            if term[0] == "-":
                sign = -sign
            term = term[1:].strip()
        if not term:
            raise ValueError("dangling sign in %r" % s)
        rat = sign
        tpow = 0
        upow = 0
        xpow = 0
        lpow = 0
        for fct in term.split("*"):
            val, var, exp = _parse_factor(fct)
            if var == "T":
                tpow += exp
            elif var == "U":
                upow += exp
            elif var == "x":
                xpow += exp
            elif var == "L":
                lpow += exp
            else:
                rat *= val
        piece = Frac(LPoly({tpow: rat}))
        if lpow:
            piece = piece * lambda_pow(lpow)
        key = (upow, xpow)
        out[key] = out.get(key, F_ZERO) + piece
    return {k: v for k, v in out.items() if not v.is_zero()}


def parse_scalar(s):
    """Parse a coefficient string that must not involve U or x."""
    d = parse_coeff(s)
    for (u, x) in d:
        if u or x:
            raise ValueError("unexpected U or x in scalar %r" % s)
    return d.get((0, 0), F_ZERO)


def format_lpoly(p):
    if p.is_zero():
        return "0"
    parts = []
    for e in sorted(p.c, reverse=True):
        v = p.c[e]
        mag = abs(v)
        if e == 0:
            body = str(mag)
        else:
            tp = "T" if e == 1 else "T^%d" % e
            body = tp if mag == 1 else "%s*%s" % (mag, tp)
        if not parts:
            parts.append(body if v > 0 else "-" + body)
        else:
            parts.append(("+" if v > 0 else "-") + body)
    return "".join(parts)


def format_frac(x):
    if x.is_zero():
        return "0"
    if x.den == LP_ONE:
        return format_lpoly(x.num)
    # denominators are kept monic; print monomial denominators as T powers
    if x.den.is_monomial():
        e = x.den.min_exp()
        shifted = LPoly({k - e: v for k, v in x.num.c.items()})
        return format_lpoly(shifted)
    return "(%s)/(%s)" % (format_lpoly(x.num), format_lpoly(x.den))


def format_ucoef(d):
    """Print {upow: Frac} with U factors."""
    parts = []
    for u in sorted(d, reverse=True):
        v = d[u]
        if v.is_zero():
            continue
        body = format_frac(v)
        if u != 0:
            up = "U" if u == 1 else "U^%d" % u
            if body == "1":
                body = up
            elif body == "-1":
                body = "-" + up
            elif ("+" in body[1:]) or ("-" in body[1:]):
                body = "(%s)*%s" % (body, up)
            else:
                body = "%s*%s" % (body, up)
        if parts and not body.startswith("-"):
            parts.append("+" + body)
        else:
            parts.append(body)
    return "".join(parts) if parts else "0"
