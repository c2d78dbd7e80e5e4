"""S-complexes with exact coefficients.

An S-complex is a chain complex C with three structure maps: the
internal differential d (degree -1), the endomorphism v (degree -2),
and a pair of maps delta1: C -> R, delta2: R -> C tying C to one extra
rank-one summand.  The full complex is

    C~ = C_* + C_{*-1} + R,   d~ = [[d, 0, 0], [v, -d, delta2],
                                    [delta1, 0, 0]]

together with chi(x, y, r) = (0, x, 0).  Everything here manipulates
the small data (d, v, delta1, delta2) but validates identities on the
assembled full matrix, so sign conventions cannot drift.

Gradings come in two flavours: "Z4" (degrees of generators read mod 4)
and "ZxR" (an integer degree plus a rational filtration level; the
coefficient ring gains an invertible variable U of degree 4 whose
power on each matrix entry is pinned by homogeneity).
"""

import json
from fractions import Fraction

from .coeff import (
    Frac, F_ZERO, F_ONE, INF, RING_ZT, RING_QT, RING_LOC, KNOWN_RINGS,
    element_in_ring, is_unit, parse_coeff, format_frac,
)
from . import linalg as la

GRADING_Z4 = "Z4"
GRADING_ZR = "ZxR"

NEG_INF_DEG = float("-inf")


class RefusedPrecondition(Exception):
    """Input outside the guaranteed domain of an operation."""


class InternalViolation(Exception):
    """An internal consistency check failed."""


def _cong4(a, b):
    return (a - b) % 4 == 0


def chi_matrix(n):
    m = la.zeros(2 * n + 1, 2 * n + 1)
    for i in range(n):
        m[n + i][i] = F_ONE
    return m


def assemble_full(d, v, delta1, delta2):
    """Full differential on C + C[1] + R from the four structure maps."""
    n = len(d)
    m = la.zeros(2 * n + 1, 2 * n + 1)
    for i in range(n):
        for j in range(n):
            m[i][j] = d[i][j]
            m[n + i][j] = v[i][j]
            m[n + i][n + j] = -d[i][j]
    for j in range(n):
        m[2 * n][j] = delta1[j]
    for i in range(n):
        m[i + n][2 * n] = delta2[i]
    return m


# block name -> degree shift of the map C_src -> C_tgt it encodes
_BLOCK_SHIFT = {"d": -1, "v": -2, "delta1": -1, "delta2": -2}


class SComplex(object):
    """Exact S-complex over one of the supported coefficient rings."""

    def __init__(self, ring, gens, degZ, d=None, v=None, delta1=None,
                 delta2=None, grading=GRADING_Z4, degI=None, omega=None,
                 name=""):
        if ring not in KNOWN_RINGS:
            raise RefusedPrecondition("unknown coefficient ring %r" % ring)
        if grading not in (GRADING_Z4, GRADING_ZR):
            raise RefusedPrecondition("unknown grading %r" % grading)
        n = len(gens)
        self.ring = ring
        self.grading = grading
        self.gens = list(gens)
        self.degZ = [int(z) for z in degZ]
        assert len(self.degZ) == n
        if grading == GRADING_ZR:
            assert degI is not None and len(degI) == n
            self.degI = [Fraction(x) for x in degI]
            self.omega = Fraction(omega) if omega is not None \
                else Fraction(1, 4)
        else:
            self.degI = None
            self.omega = None
        self.d = d if d is not None else la.zeros(n, n)
        self.v = v if v is not None else la.zeros(n, n)
        self.delta1 = list(delta1) if delta1 is not None \
            else [F_ZERO] * n
        self.delta2 = list(delta2) if delta2 is not None \
            else [F_ZERO] * n
        self.name = name

    @property
    def n(self):
        return len(self.gens)

    def w_slope(self):
        """Filtration weight of one power of T."""
        return 2 * self.omega - Fraction(1, 2)

    # -- grading bookkeeping ------------------------------------------------

    def entry_u(self, z_tgt, z_src, shift):
        """Pinned U-power of a matrix entry, or None when homogeneity
        forbids a nonzero entry in that slot.  The entry f*U^u carries
        the image onto degree z_src + shift, so u = (z_src + shift -
        z_tgt) / 4."""
        num = z_src + shift - z_tgt
        if self.grading == GRADING_Z4:
            return 0 if num % 4 == 0 else None
        if num % 4 != 0:
            return None
        return num // 4

    def _block_u(self, block, i, j):
        shift = _BLOCK_SHIFT[block]
        if block == "delta1":
            return self.entry_u(0, self.degZ[j], shift)
        if block == "delta2":
            return self.entry_u(self.degZ[i], 0, shift)
        return self.entry_u(self.degZ[i], self.degZ[j], shift)

    def entry_degI(self, f, u):
        """Filtration degree of the coefficient f * U^u.  For nonzero
        slope the T-support of the (polynomial) numerator contributes."""
        if f.is_zero():
            return NEG_INF_DEG
        w = self.w_slope()
        if w == 0:
            return Fraction(u)
        best = max(Fraction(e) * w for e in f.num.c)
        return Fraction(u) + best

    # -- validation ---------------------------------------------------------

    def validate(self):
        """Full structural check; returns {"ok": bool, "failures": [...]}."""
        fails = []
        n = self.n

        def entries():
            for i in range(n):
                for j in range(n):
                    yield "d", i, j, self.d[i][j]
                    yield "v", i, j, self.v[i][j]
            for j in range(n):
                yield "delta1", 0, j, self.delta1[j]
            for i in range(n):
                yield "delta2", i, 0, self.delta2[i]

        for block, i, j, f in entries():
            if f.is_zero():
                continue
            if not element_in_ring(f, self.ring):
                fails.append("%s[%d,%d] outside ring %s"
                             % (block, i, j, self.ring))
            u = self._block_u(block, i, j)
            if u is None:
                fails.append("%s[%d,%d] violates Z grading" % (block, i, j))

        full = self.full_differential()
        sq = la.mat_mul(full, full)
        if not la.is_zero_mat(sq):
            fails.append("assembled differential does not square to zero")

        if self.grading == GRADING_ZR:
            fails.extend(self._filtration_failures())
        return {"ok": not fails, "failures": fails}

    def _filtration_failures(self):
        fails = []
        n = self.n
        for i in range(n):
            for j in range(n):
                f = self.d[i][j]
                if f.is_zero():
                    continue
                u = self._block_u("d", i, j)
                if u is None:
                    continue
                if self.entry_degI(f, u) + self.degI[i] >= self.degI[j]:
                    fails.append("d[%d,%d] fails strict filtration drop"
                                 % (i, j))
        for i in range(n):
            for j in range(n):
                f = self.v[i][j]
                if f.is_zero():
                    continue
                u = self._block_u("v", i, j)
                if u is None:
                    continue
                if self.entry_degI(f, u) + self.degI[i] > self.degI[j]:
                    fails.append("v[%d,%d] raises filtration" % (i, j))
        for j in range(n):
            f = self.delta1[j]
            if not f.is_zero():
                u = self._block_u("delta1", 0, j)
                if u is not None and \
                        self.entry_degI(f, u) + 0 >= self.degI[j]:
                    fails.append("delta1[%d] fails strict filtration drop"
                                 % j)
        for i in range(n):
            f = self.delta2[i]
            if not f.is_zero():
                u = self._block_u("delta2", i, 0)
                if u is not None and \
                        self.entry_degI(f, u) + self.degI[i] >= 0:
                    fails.append("delta2[%d] fails strict filtration drop"
                                 % i)
        return fails

    def assert_valid(self):
        rep = self.validate()
        if not rep["ok"]:
            raise InternalViolation("; ".join(rep["failures"]))
        return self

    # -- assembled data -----------------------------------------------------

    def full_differential(self):
        return assemble_full(self.d, self.v, self.delta1, self.delta2)

    def full_degrees(self):
        """Degrees of the 2n+1 basis vectors of the full complex
        (x-slots, y-slots, reducible)."""
        return self.degZ + [z + 1 for z in self.degZ] + [0]

    def epsilon_full(self):
        """Parity sign matrix on the full complex."""
        degs = self.full_degrees()
        m = la.zeros(len(degs), len(degs))
        for i, z in enumerate(degs):
            m[i][i] = F_ONE if z % 2 == 0 else -F_ONE
        return m

    def apply_d(self, x):
        return la.mat_vec(self.d, x)

    def apply_v(self, x):
        return la.mat_vec(self.v, x)

    def apply_delta1(self, x):
        s = F_ZERO
        for c, xi in zip(self.delta1, x):
            if not c.is_zero() and not xi.is_zero():
                s = s + c * xi
        return s

    def delta2_vec(self):
        return list(self.delta2)

    # -- duality ------------------------------------------------------------

    def dual(self):
        """Dual S-complex: generator i goes to degree -degZ[i]-1, the
        differential picks up the parity sign of the target degree, v
        transposes, and the delta maps swap (with a sign on delta1)."""
        n = self.n
        degZ = [-z - 1 for z in self.degZ]
        sgn = [F_ONE if z % 2 == 0 else -F_ONE for z in degZ]
        d = la.zeros(n, n)
        v = la.zeros(n, n)
        for i in range(n):
            for j in range(n):
                d[i][j] = sgn[j] * self.d[j][i]
                v[i][j] = self.v[j][i]
        # delta1 on the dual picks up the parity of the dual degree;
        # on graded slots that parity is odd, so the net sign is +
        delta1 = [-sgn[j] * self.delta2[j] for j in range(n)]
        delta2 = [self.delta1[i] for i in range(n)]
        kw = {}
        if self.grading == GRADING_ZR:
            kw = dict(grading=GRADING_ZR,
                      degI=[-x for x in self.degI], omega=self.omega)
        out = SComplex(self.ring, [g + "*" for g in self.gens], degZ,
                       d, v, delta1, delta2,
                       name=(self.name + "*") if self.name else "",
                       **kw)
        return out

    def dual_pairing(self, f_vec, z_vec):
        """Pairing of a full-complex element of the dual with one of the
        original: <(f,g,b),(a,b',r)> = (-1)^i g(a) + f(b') + b r where i
        is the degree of the dual element.  Both arguments are 2n+1
        coordinate vectors; the dual one must be homogeneous."""
        n = self.n
        dual = self.dual()
        degs = dual.full_degrees()
        out = F_ZERO
        for k in range(2 * n + 1):
            fk = f_vec[k]
            if fk.is_zero():
                continue
            if k < n:
                # f-slot: generator i* pairs with y-slot of generator i
                out = out + fk * z_vec[n + k]
            elif k < 2 * n:
                i = k - n
                s = F_ONE if degs[k] % 2 == 0 else -F_ONE
                out = out + s * fk * z_vec[i]
            else:
                out = out + fk * z_vec[2 * n]
        return out

    # -- tensor product -----------------------------------------------------

    def tensor(self, other):
        """Tensor product S-complex.  Assembles the full differential of
        the product, changes basis so chi takes the standard block form,
        and reads the structure maps back off; raises InternalViolation
        if the result does not have the required block shape."""
        if other.ring != self.ring:
            raise RefusedPrecondition("tensor of complexes over "
                                      "different rings")
        if other.grading != self.grading:
            raise RefusedPrecondition("tensor of complexes with "
                                      "different grading types")
        if self.grading == GRADING_ZR and self.omega != other.omega:
            raise RefusedPrecondition("tensor with mismatched omega")
        n, m = self.n, other.n
        da, db = self.full_differential(), other.full_differential()
        ca, cb = chi_matrix(n), chi_matrix(m)
        ea = self.epsilon_full()
        wa, wb = 2 * n + 1, 2 * m + 1
        dim = wa * wb

        def kron(a, b):
            out = la.zeros(dim, dim)
            for i in range(wa):
                for j in range(wa):
                    if a[i][j].is_zero():
                        continue
                    for k in range(wb):
                        for l in range(wb):
                            if b[k][l].is_zero():
                                continue
                            out[i * wb + k][j * wb + l] = \
                                a[i][j] * b[k][l]
            return out

        ident_a = la.eye(wa)
        ident_b = la.eye(wb)
        dt = la.mat_add(kron(da, ident_b), kron(ea, db))
        ct = la.mat_add(kron(ca, ident_b), kron(ea, cb))

        # generators of the new irreducible part:
        #   x(i) tensor x'(j), x(i) tensor y'(j), x(i) tensor r',
        #   r tensor x'(j)
        cols = []
        names = []
        degZ = []
        degI = [] if self.grading == GRADING_ZR else None
        za = self.full_degrees()
        zb = other.full_degrees()

        def basis_vec(k):
            vec = [F_ZERO] * dim
            vec[k] = F_ONE
            return vec

        def add_gen(ai, bj, label):
            cols.append(basis_vec(ai * wb + bj))
            names.append(label)
            degZ.append(za[ai] + zb[bj])
            if degI is not None:
                ia = self.degI[ai] if ai < n else (
                    self.degI[ai - n] if ai < 2 * n else Fraction(0))
                ib = other.degI[bj] if bj < m else (
                    other.degI[bj - m] if bj < 2 * m else Fraction(0))
                degI.append(ia + ib)

        for i in range(n):
            for j in range(m):
                add_gen(i, j, "%s&%s" % (self.gens[i], other.gens[j]))
        for i in range(n):
            for j in range(m):
                add_gen(i, m + j, "%s&%s'" % (self.gens[i], other.gens[j]))
        for i in range(n):
            add_gen(i, 2 * m, "%s&." % self.gens[i])
        for j in range(m):
            add_gen(2 * n, j, ".&%s" % other.gens[j])

        nn = len(cols)
        assert 2 * nn + 1 == dim
        pcols = list(cols)
        pcols += [la.mat_vec(ct, c) for c in cols]
        unit = basis_vec(2 * n * wb + 2 * m)
        pcols.append(unit)
        p = [[pcols[j][i] for j in range(dim)] for i in range(dim)]
        pinv = la.inv_field(p)
        md = la.mat_mul(pinv, la.mat_mul(dt, p))

        # read off blocks and check the shape is exactly the S-form
        d = [[md[i][j] for j in range(nn)] for i in range(nn)]
        v = [[md[nn + i][j] for j in range(nn)] for i in range(nn)]
        delta1 = [md[2 * nn][j] for j in range(nn)]
        delta2 = [md[nn + i][2 * nn] for i in range(nn)]
        for i in range(nn):
            for j in range(nn):
                if not md[i][nn + j].is_zero():
                    raise InternalViolation("tensor: x-x' block nonzero")
                if not (md[nn + i][nn + j] + d[i][j]).is_zero():
                    raise InternalViolation("tensor: -d block mismatch")
            if not md[i][2 * nn].is_zero():
                raise InternalViolation("tensor: x-r block nonzero")
            if not md[2 * nn][nn + i].is_zero():
                raise InternalViolation("tensor: r-y block nonzero")
        if not md[2 * nn][2 * nn].is_zero():
            raise InternalViolation("tensor: r-r block nonzero")

        kw = {}
        if self.grading == GRADING_ZR:
            kw = dict(grading=GRADING_ZR, degI=degI, omega=self.omega)
        label = "(%s)x(%s)" % (self.name or "?", other.name or "?")
        return SComplex(self.ring, names, degZ, d, v, delta1, delta2,
                        name=label, **kw)

    # -- serialization ------------------------------------------------------

    def to_json(self):
        def fmt_entry(f, u):
            s = format_frac(f)
            if u:
                s = "(%s)*U^%d" % (s, u) if ("+" in s[1:] or "-" in s[1:]) \
                    else "%s*U^%d" % (s, u)
            return s

        out = {
            "ring": self.ring,
            "grading": self.grading,
            "generators": [],
            "d": [], "v": [], "delta1": [], "delta2": [],
        }
        if self.name:
            out["name"] = self.name
        if self.grading == GRADING_ZR:
            out["omega"] = str(self.omega)
        for i, g in enumerate(self.gens):
            rec = {"name": g, "degZ": self.degZ[i]}
            if self.grading == GRADING_ZR:
                rec["degI"] = str(self.degI[i])
            out["generators"].append(rec)
        for i in range(self.n):
            for j in range(self.n):
                if not self.d[i][j].is_zero():
                    out["d"].append([i, j, fmt_entry(self.d[i][j], 0)])
                if not self.v[i][j].is_zero():
                    out["v"].append([i, j, fmt_entry(self.v[i][j], 0)])
        for j in range(self.n):
            if not self.delta1[j].is_zero():
                out["delta1"].append([j, fmt_entry(self.delta1[j], 0)])
        for i in range(self.n):
            if not self.delta2[i].is_zero():
                out["delta2"].append([i, fmt_entry(self.delta2[i], 0)])
        return out

    @staticmethod
    def from_json(data):
        if isinstance(data, str):
            data = json.loads(data)
        ring = data.get("ring", RING_LOC)
        grading = data.get("grading", GRADING_Z4)
        gens = [g["name"] for g in data["generators"]]
        degZ = [g["degZ"] for g in data["generators"]]
        degI = None
        omega = None
        if grading == GRADING_ZR:
            degI = [Fraction(str(g.get("degI", 0)))
                    for g in data["generators"]]
            omega = Fraction(str(data.get("omega", "1/4")))
        n = len(gens)
        cx = SComplex(ring, gens, degZ, grading=grading, degI=degI,
                      omega=omega, name=data.get("name", ""))

        def read_entry(block, i, j, s):
            """Entries are stored as plain T-coefficients; a declared U
            power is accepted only when it matches the grading pin."""
            parsed = parse_coeff(s)
            total = F_ZERO
            pin = cx._block_u(block, i, j)
            for (u, x), f in parsed.items():
                if x != 0:
                    raise RefusedPrecondition(
                        "x not allowed in complex entries")
                if u != 0 and u != pin:
                    raise RefusedPrecondition(
                        "U^%d disagrees with graded slot (expected U^%s)"
                        % (u, pin))
                total = total + f
            return total

        for i, j, s in data.get("d", []):
            cx.d[i][j] = read_entry("d", i, j, s)
        for i, j, s in data.get("v", []):
            cx.v[i][j] = read_entry("v", i, j, s)
        for rec in data.get("delta1", []):
            j, s = rec
            cx.delta1[j] = read_entry("delta1", 0, j, s)
        for rec in data.get("delta2", []):
            i, s = rec
            cx.delta2[i] = read_entry("delta2", i, 0, s)
        return cx


# ---------------------------------------------------------------------------
# morphisms

class Morphism(object):
    """Height-h morphism of S-complexes, data (lam, mu, Delta1, Delta2,
    eta) assembling to [[lam,0,0],[mu,lam,Delta2],[Delta1,0,eta]]."""

    def __init__(self, src, tgt, height=0, lam=None, mu=None,
                 Delta1=None, Delta2=None, eta=None):
        self.src = src
        self.tgt = tgt
        self.height = int(height)
        ns, nt = src.n, tgt.n
        self.lam = lam if lam is not None else la.zeros(nt, ns)
        self.mu = mu if mu is not None else la.zeros(nt, ns)
        self.Delta1 = list(Delta1) if Delta1 is not None \
            else [F_ZERO] * ns
        self.Delta2 = list(Delta2) if Delta2 is not None \
            else [F_ZERO] * nt
        self.eta = eta if eta is not None else F_ZERO

    def full_matrix(self):
        ns, nt = self.src.n, self.tgt.n
        m = la.zeros(2 * nt + 1, 2 * ns + 1)
        for i in range(nt):
            for j in range(ns):
                m[i][j] = self.lam[i][j]
                m[nt + i][j] = self.mu[i][j]
                m[nt + i][ns + j] = self.lam[i][j]
        for j in range(ns):
            m[2 * nt][j] = self.Delta1[j]
        for i in range(nt):
            m[nt + i][2 * ns] = self.Delta2[i]
        m[2 * nt][2 * ns] = self.eta
        return m

    def is_chain_map(self):
        f = self.full_matrix()
        lhs = la.mat_mul(f, self.src.full_differential())
        rhs = la.mat_mul(self.tgt.full_differential(), f)
        return la.mat_eq(lhs, rhs)

    def check_graded(self):
        """Homogeneity failures of all five blocks for the height."""
        fails = []
        h2 = 2 * self.height
        src, tgt = self.src, self.tgt

        def pin(z_t, z_s, shift, label):
            num = z_t - z_s - shift
            if src.grading == GRADING_Z4:
                if num % 4 != 0:
                    fails.append(label)
            elif num % 4 != 0:
                fails.append(label)

        for i in range(tgt.n):
            for j in range(src.n):
                if not self.lam[i][j].is_zero():
                    pin(tgt.degZ[i], src.degZ[j], h2, "lam[%d,%d]" % (i, j))
                if not self.mu[i][j].is_zero():
                    pin(tgt.degZ[i], src.degZ[j], h2 - 1,
                        "mu[%d,%d]" % (i, j))
        for j in range(src.n):
            if not self.Delta1[j].is_zero():
                pin(0, src.degZ[j], h2, "Delta1[%d]" % j)
        for i in range(tgt.n):
            if not self.Delta2[i].is_zero():
                pin(tgt.degZ[i], 0, h2 - 1, "Delta2[%d]" % i)
        if not self.eta.is_zero():
            pin(0, 0, h2, "eta")
        return fails

    def c_value(self, j):
        """Obstruction element c_j; c_0 = eta."""
        if j == 0:
            return self.eta
        src, tgt = self.src, self.tgt

        def d1v(cx, k, vec):
            for _ in range(k):
                vec = cx.apply_v(vec)
            return cx.apply_delta1(vec)

        # delta1' v'^(j-1) Delta2(1)
        total = d1v(tgt, j - 1, self.Delta2)
        # Delta1 v^(j-1) delta2(1)
        vec = src.delta2_vec()
        for _ in range(j - 1):
            vec = src.apply_v(vec)
        total = total + sum((c * x for c, x in zip(self.Delta1, vec)),
                           F_ZERO)
        for l in range(j - 1):
            vec = src.delta2_vec()
            for _ in range(j - 2 - l):
                vec = src.apply_v(vec)
            vec = la.mat_vec(self.mu, vec)
            total = total + d1v(tgt, l, vec)
        return total

    def is_strong(self):
        """Strong height-h morphism: chain map, graded, and c_|h|
        a unit."""
        if not self.is_chain_map() or self.check_graded():
            return False
        c = self.c_value(abs(self.height))
        return is_unit(c, self.src.ring)

    def level(self):
        """Filtration level (ZxR only): the largest filtration gain
        over all nonzero entries of the assembled matrix."""
        src, tgt = self.src, self.tgt
        assert src.grading == GRADING_ZR and tgt.grading == GRADING_ZR
        w = src.w_slope()
        h2 = 2 * self.height
        best = NEG_INF_DEG

        def upd(best, f, u, i_t, i_s):
            if f.is_zero():
                return best
            du = Fraction(u)
            if w != 0:
                du += max(Fraction(e) * w for e in f.num.c)
            lv = du + i_t - i_s
            return lv if best == NEG_INF_DEG or lv > best else best

        for i in range(tgt.n):
            for j in range(src.n):
                zt, zs = tgt.degZ[i], src.degZ[j]
                if not self.lam[i][j].is_zero():
                    u = (zs + h2 - zt) // 4
                    best = upd(best, self.lam[i][j], u,
                               tgt.degI[i], src.degI[j])
                if not self.mu[i][j].is_zero():
                    u = (zs + (h2 - 1) - zt) // 4
                    best = upd(best, self.mu[i][j], u,
                               tgt.degI[i], src.degI[j])
        for j in range(src.n):
            if not self.Delta1[j].is_zero():
                u = (src.degZ[j] + h2 - 0) // 4
                best = upd(best, self.Delta1[j], u, Fraction(0),
                           src.degI[j])
        for i in range(tgt.n):
            if not self.Delta2[i].is_zero():
                u = (0 + (h2 - 1) - tgt.degZ[i]) // 4
                best = upd(best, self.Delta2[i], u, tgt.degI[i],
                           Fraction(0))
        if not self.eta.is_zero():
            u = (0 + h2 - 0) // 4
            best = upd(best, self.eta, u, Fraction(0), Fraction(0))
        return best
