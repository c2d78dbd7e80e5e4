"""Framed versions of an S-complex and the maps into them.

Two constructions on the full complex (dimension 2n+1):

  * C+ / C-: same module, differential d~ +- 2L chi, graded mod 2; the
    deck variable x acts by the scalar -+2L.
  * C#: two copies, differential [[d~, 2L^2 chi], [2chi, d~]], graded
    mod 4 with the second copy shifted down by 2; x acts by
    (z1, z2) -> (-2L^2 z2, -2 z1), so x^2 = 4L^2.

Equivariant cycles written as polynomials in x with full-complex
coefficients are pushed into these models: for C+- substitute the
scalar for x and apply the parity sign slotwise; for C# reduce mod
x^2 - 4L^2 to u1 + x u2 and take (u1, -2 u2) after the same sign.

Homology is computed over the local ring; the q-quotient additionally
kills the classes of (0, a, 0) for a in the A-space (and their x-
translates in C#), which is exactly the torsion coming from the
check-to-hat map, so divisibility orders in H^q / torsion are exact.
"""

from .coeff import Frac, F_ZERO, F_ONE, LAMBDA
from . import linalg as la
from .equivariant import a_space


def _scaled_chi(cx, scalar):
    n = cx.n
    m = la.zeros(2 * n + 1, 2 * n + 1)
    for i in range(n):
        m[n + i][i] = scalar
    return m


class FramedPM(object):
    """(C~, d~ +- 2L chi), graded mod 2."""

    def __init__(self, cx, sign):
        assert sign in (1, -1)
        self.cx = cx
        self.sign = sign
        n = cx.n
        scal = Frac.of(2 * sign) * LAMBDA
        self.dim = 2 * n + 1
        self.diff = la.mat_add(cx.full_differential(),
                               _scaled_chi(cx, scal))
        self.degs = cx.full_degrees()
        # x acts by the opposite scalar
        self.x_scalar = Frac.of(-2 * sign) * LAMBDA

    def push(self, wdict):
        """Substitute the x scalar into {power: full vector} and apply
        the parity sign slotwise."""
        out = [F_ZERO] * self.dim
        for p, vec in wdict.items():
            c = self.x_scalar
            scal = F_ONE
            for _ in range(p):
                scal = scal * c
            for i in range(self.dim):
                if not vec[i].is_zero():
                    out[i] = out[i] + scal * vec[i]
        for i in range(self.dim):
            if self.degs[i] % 2 != 0:
                out[i] = -out[i]
        return out

    def is_cycle(self, vec):
        return all(x.is_zero() for x in la.mat_vec(self.diff, vec))

    def _slice(self, par):
        return [i for i in range(self.dim) if self.degs[i] % 2 == par % 2]

    def homology(self, par):
        amb = self._slice(par)
        d_out = [[self.diff[r][c] for c in amb] for r in range(self.dim)]
        src = self._slice(par + 1)
        d_in = []
        for j in src:
            col = [self.diff[i][j] for i in amb]
            d_in.append(col)
        h = la.Homology(len(amb), d_out, d_in)
        h.ambient = amb
        return h

    def restrict(self, vec, amb):
        return [vec[i] for i in amb]

    def torsion_killers(self, par):
        """Cycles (0, a, 0) for a in the A-space, in the given parity."""
        out = []
        n = self.cx.n
        for a in a_space(self.cx):
            nz = [j for j in range(n) if not a[j].is_zero()]
            if not nz:
                continue
            if (self.cx.degZ[nz[0]] + 1) % 2 != par % 2:
                continue
            vec = [F_ZERO] * self.dim
            for j in range(n):
                vec[n + j] = a[j]
            out.append(vec)
        return out

    def hq_divisibility(self, vec, par, extra=()):
        """Divisibility of a cycle class in H^q modulo torsion, after
        killing the torsion image and any extra cycle classes."""
        h = self.homology(par)
        amb = h.ambient
        kill = [h.cycle_coords(self.restrict(k, amb))
                for k in self.torsion_killers(par)]
        for e in extra:
            kill.append(h.cycle_coords(self.restrict(e, amb)))
        mod = h.module.quotient(kill) if kill else h.module
        return mod.divisibility(h.cycle_coords(self.restrict(vec, amb)))


class FramedSharp(object):
    """C# = C~ + C~ with the mixed differential, graded mod 4."""

    def __init__(self, cx):
        self.cx = cx
        n = cx.n
        w = 2 * n + 1
        self.w = w
        self.dim = 2 * w
        full = cx.full_differential()
        chi2 = _scaled_chi(cx, Frac.of(2))
        chi2l = _scaled_chi(cx, Frac.of(2) * LAMBDA * LAMBDA)
        self.diff = la.zeros(self.dim, self.dim)
        for i in range(w):
            for j in range(w):
                self.diff[i][j] = full[i][j]
                self.diff[w + i][w + j] = full[i][j]
                self.diff[i][w + j] = chi2l[i][j]
                self.diff[w + i][j] = chi2[i][j]
        base = cx.full_degrees()
        self.degs = base + [z - 2 for z in base]

    def x_matrix(self):
        m = la.zeros(self.dim, self.dim)
        c1 = Frac.of(-2) * LAMBDA * LAMBDA
        for i in range(self.w):
            m[i][self.w + i] = c1
            m[self.w + i][i] = Frac.of(-2)
        return m

    def x_act(self, vec):
        w = self.w
        top = [Frac.of(-2) * LAMBDA * LAMBDA * vec[w + i] for i in range(w)]
        bot = [Frac.of(-2) * vec[i] for i in range(w)]
        return top + bot

    def push(self, wdict):
        """q#: parity sign slotwise, reduce mod x^2 - 4 L^2 to
        u1 + x u2, then (u1, -2 u2)."""
        w = self.w
        u1 = [F_ZERO] * w
        u2 = [F_ZERO] * w
        four_l2 = Frac.of(4) * LAMBDA * LAMBDA
        base = self.cx.full_degrees()
        for p, vec in wdict.items():
            scal = F_ONE
            for _ in range(p // 2):
                scal = scal * four_l2
            tgt = u1 if p % 2 == 0 else u2
            for i in range(w):
                if vec[i].is_zero():
                    continue
                val = scal * vec[i]
                if base[i] % 2 != 0:
                    val = -val
                tgt[i] = tgt[i] + val
        return u1 + [Frac.of(-2) * x for x in u2]

    def is_cycle(self, vec):
        return all(x.is_zero() for x in la.mat_vec(self.diff, vec))

    def _slice(self, m):
        return [i for i in range(self.dim) if (self.degs[i] - m) % 4 == 0]

    def homology(self, m):
        amb = self._slice(m)
        d_out = [[self.diff[r][c] for c in amb] for r in range(self.dim)]
        src = self._slice(m + 1)
        d_in = [[self.diff[i][j] for i in amb] for j in src]
        h = la.Homology(len(amb), d_out, d_in)
        h.ambient = amb
        return h

    def restrict(self, vec, amb):
        return [vec[i] for i in amb]

    def torsion_killers(self, m):
        """Classes of (0,a,0) in the first copy and their x-images in
        the second, filtered to the given degree mod 4."""
        out = []
        n = self.cx.n
        w = self.w
        for a in a_space(self.cx):
            nz = [j for j in range(n) if not a[j].is_zero()]
            if not nz:
                continue
            deg = self.cx.degZ[nz[0]] + 1
            vec = [F_ZERO] * self.dim
            for j in range(n):
                vec[n + j] = a[j]
            if (deg - m) % 4 == 0:
                out.append(vec)
            xv = self.x_act(vec)
            if (deg - 2 - m) % 4 == 0:
                out.append(xv)
        return out

    def hq_divisibility(self, vec, m, extra=()):
        h = self.homology(m)
        amb = h.ambient
        kill = [h.cycle_coords(self.restrict(k, amb))
                for k in self.torsion_killers(m)]
        for e in extra:
            kill.append(h.cycle_coords(self.restrict(e, amb)))
        mod = h.module.quotient(kill) if kill else h.module
        return mod.divisibility(h.cycle_coords(self.restrict(vec, amb)))

    def rank_profile(self):
        """Free rank of H in each degree mod 4."""
        return {m: self.homology(m).rank for m in range(4)}

    def is_rank_one(self):
        prof = self.rank_profile()
        return prof[0] == 1 and prof[2] == 1 and prof[1] == 0 \
            and prof[3] == 0


def pm_rank_profile(cx):
    """Free ranks of H(C+) in even and odd parity."""
    fp = FramedPM(cx, 1)
    return {0: fp.homology(0).rank, 1: fp.homology(1).rank}


def pm_is_rank_one(cx):
    prof = pm_rank_profile(cx)
    return prof[0] == 1 and prof[1] == 0


def sharp_pairing(cx, dual_vec, vec):
    """Pairing of C#(dual complex) against C#(complex):
    ((phi, psi), (z1, z2)) -> psi . z1 + phi . z2 using the graded
    pairing of the full complexes."""
    w = 2 * cx.n + 1
    phi = dual_vec[:w]
    psi = dual_vec[w:]
    z1 = vec[:w]
    z2 = vec[w:]
    return cx.dual_pairing(psi, z1) + cx.dual_pairing(phi, z2)


def sharp_iota(cx, sign, vec):
    """Inclusion C-+ -> C# given by the column (L, +-1)... iota maps
    z to (L z, +- z)."""
    top = [LAMBDA * x for x in vec]
    bot = [Frac.of(sign) * x for x in vec]
    return top + bot


def sharp_pi(cx, sign, vec):
    """Projection C# -> C+-: (z1, z2) -> z1 +- L z2."""
    w = 2 * cx.n + 1
    return [vec[i] + Frac.of(sign) * LAMBDA * vec[w + i] for i in range(w)]
