"""Free virtual-bundle ring with canonical normal form, the twisted-bundle
builders, and the Chern-character homomorphism into graded polynomials.

Atoms are exterior powers of tilde-reduced symbols Lam^i(S~), plain exterior
powers Lam^i(S), and spinor classes D(S); symmetric powers are not atomic:
S_t(S~) is realised as the series inverse of Lam_(-t)(S~), so S^i(S~)
normalises into Lam-monomials and equality of bundle expressions is decided
structurally.  Coefficients are integers; the rank map and ch are the two
homomorphisms out of the ring.
"""

import math
import threading
from fractions import Fraction

from .graded import GradedPoly
from .series import QSeries

DEFAULT_ATOM_CAP = 24


class Atom:
    __slots__ = ("kind", "sym", "i")
    KINDS = ("lam", "lamt", "delta")

    def __init__(self, kind, sym, i):
        if kind not in self.KINDS:
            raise ValueError(f"unknown atom kind {kind!r}")
        self.kind = kind
        self.sym = sym
        self.i = i

    def key(self):
        return (self.sym, self.kind, self.i)

    def __lt__(self, other):
        return self.key() < other.key()

    def __eq__(self, other):
        return isinstance(other, Atom) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        if self.kind == "delta":
            return f"D({self.sym})"
        base = f"{self.sym}~" if self.kind == "lamt" else self.sym
        if self.i == 1:
            return base if self.kind == "lamt" else f"{self.sym}"
        return f"L^{self.i}({base})"


class BundleExpr:
    """Integer combination of tensor monomials over atoms, in normal form."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    # -- constructors ---------------------------------------------------

    @classmethod
    def unit(cls, c=1):
        return cls({(): c}) if c else cls({})

    @classmethod
    def atom(cls, kind, sym, i, coeff=1):
        if i == 0:
            return cls.unit(coeff)
        return cls({(Atom(kind, sym, i),): coeff})

    @classmethod
    def lam_tilde(cls, sym, i):
        return cls.atom("lamt", sym, i)

    @classmethod
    def lam(cls, sym, i):
        return cls.atom("lam", sym, i)

    @classmethod
    def delta(cls, sym):
        return cls.atom("delta", sym, 1)

    @classmethod
    def sym_tilde(cls, sym, i):
        """S^i(S~) expanded into Lam-monomials via S_t = 1/Lam_(-t)."""
        return _sym_tilde_powers(sym, i)[i]

    # -- ring structure ---------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = BundleExpr.unit(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return BundleExpr(out)

    __radd__ = __add__

    def __neg__(self):
        return BundleExpr({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = BundleExpr.unit(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return BundleExpr({m: c * other for m, c in self.terms.items()})
        out = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = tuple(sorted(ma + mb))
                if len(m) > DEFAULT_ATOM_CAP:
                    raise ValueError(
                        f"tensor monomial exceeds the atom cap ({DEFAULT_ATOM_CAP})"
                    )
                out[m] = out.get(m, 0) + ca * cb
        return BundleExpr(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = BundleExpr.unit()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = BundleExpr.unit(other)
        return isinstance(other, BundleExpr) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted((m, c) for m, c in self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- homomorphisms ----------------------------------------------------

    def rank(self, ranks):
        total = 0
        for m, c in self.terms.items():
            r = c
            for atom in m:
                r *= _atom_rank(atom, ranks)
            total += r
        return total

    def ch(self, roots, poly_ring):
        ev = ChernEvaluator(roots, poly_ring)
        out = poly_ring.zero()
        for m, c in self.terms.items():
            p = GradedPoly.constant(poly_ring, c)
            for atom in m:
                p = p * ev.atom_ch(atom)
            out = out + p
        return out

    # -- presentation -------------------------------------------------------

    def render(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items(), key=lambda mc: (len(mc[0]), str(mc[0]))):
            mono = "(x)".join(repr(a) for a in m) if m else "1"
            if not m:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c} {mono}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = render


def _atom_rank(atom, ranks):
    if atom.kind == "lamt":
        return 0 if atom.i >= 1 else 1
    n = ranks[atom.sym]
    if atom.kind == "lam":
        return math.comb(n, atom.i)
    if atom.kind == "delta":
        if n % 2:
            raise ValueError("delta requires an even-rank symbol")
        return 2 ** (n // 2)
    raise ValueError(atom.kind)


_SYM_CACHE = {}
_SYM_LOCK = threading.Lock()


def _sym_tilde_powers(sym, up_to):
    """Coefficients of S_t(S~) = 1/Lam_(-t)(S~) through t^up_to."""
    with _SYM_LOCK:
        have = _SYM_CACHE.setdefault(sym, [BundleExpr.unit()])
        while len(have) <= up_to:
            i = len(have)
            # h_i = sum_{j=1..i} (-1)^(j-1) lam_j h_(i-j), from Lam_(-t) S_t = 1.
            acc = BundleExpr()
            for j in range(1, i + 1):
                term = BundleExpr.lam_tilde(sym, j) * have[i - j]
                acc = acc + (term if j % 2 == 1 else -term)
            have.append(acc)
        return have


class BundleRing:
    """Coefficient-ring adapter so QSeries can carry BundleExpr coefficients."""

    tag = "K"

    def zero(self):
        return BundleExpr()

    def one(self):
        return BundleExpr.unit()

    def coerce(self, x):
        if isinstance(x, BundleExpr):
            return x
        if isinstance(x, int):
            return BundleExpr.unit(x)
        raise TypeError(f"cannot coerce {x!r} into the bundle ring")

    def is_zero(self, c):
        return not c

    def is_unit(self, c):
        return c.terms in ({(): 1}, {(): -1})

    def inv(self, c):
        if not self.is_unit(c):
            raise ZeroDivisionError("bundle coefficient is not a unit")
        return c

    def serialize(self, c):
        return c.render()

    def __eq__(self, other):
        return isinstance(other, BundleRing)

    def __hash__(self):
        return hash("K")


KRING = BundleRing()


# -- builders -------------------------------------------------------------


def lambda_series(sym, sign, half_shift, order_half):
    """tensor over n >= 1 of Lam_(sign q^e(n)) (S~); e(n) = n or n - 1/2."""
    out = QSeries.one(KRING, order_half)
    e = 1 if half_shift else 2
    while e < order_half:
        coeffs = {0: BundleExpr.unit()}
        i = 1
        while i * e < order_half:
            coeffs[i * e] = BundleExpr.lam_tilde(sym, i) * (sign**i)
            i += 1
        out = out * QSeries(KRING, coeffs, order_half)
        e += 2
    return out


def symm_series(sym, order_half):
    """tensor over n >= 1 of S_(q^n)(S~), via inversion of Lam_(-q^n)(S~)."""
    out = QSeries.one(KRING, order_half)
    e = 2
    while e < order_half:
        coeffs = {0: BundleExpr.unit()}
        i = 1
        while i * e < order_half:
            coeffs[i * e] = BundleExpr.lam_tilde(sym, i) * ((-1) ** i)
            i += 1
        out = out * QSeries(KRING, coeffs, order_half).inv()
        e += 2
    return out


BUILDERS = (
    "Theta1",
    "Theta2",
    "Theta3",
    "Q",
    "Q1",
    "Q2",
    "Q3",
    "ThetaTL",
    "ThetaStarTL",
)


def build(which, order_half):
    """The twisted virtual-bundle q-expansions, in canonical normal form.

    Symbols: T (complexified tangent bundle), E (the auxiliary real bundle,
    complexified), L (the spin^c line bundle as a real plane bundle,
    complexified).
    """
    if which == "Theta1":
        return symm_series("T", order_half) * lambda_series("T", +1, False, order_half)
    if which == "Theta2":
        return symm_series("T", order_half) * lambda_series("T", -1, True, order_half)
    if which == "Theta3":
        return symm_series("T", order_half) * lambda_series("T", +1, True, order_half)
    if which == "Q1":
        return lambda_series("E", +1, False, order_half).scale(BundleExpr.delta("E"))
    if which == "Q2":
        return lambda_series("E", -1, True, order_half)
    if which == "Q3":
        return lambda_series("E", +1, True, order_half)
    if which == "Q":
        return build("Q1", order_half) * build("Q2", order_half) * build("Q3", order_half)
    if which == "ThetaTL":
        return (
            symm_series("T", order_half)
            * lambda_series("L", +1, False, order_half)
            * lambda_series("L", -1, True, order_half)
            * lambda_series("L", +1, True, order_half)
        )
    if which == "ThetaStarTL":
        return symm_series("T", order_half) * lambda_series("L", -1, False, order_half)
    raise ValueError(f"unknown builder {which!r}")


# -- Chern character -------------------------------------------------------


class RootAssignment:
    """Chern roots for a symbol: generator indices for +/- pairs plus a
    count of trivial (zero) roots.  rank = 2 * pairs + trivial."""

    def __init__(self, pair_gens, trivial=0):
        self.pair_gens = tuple(pair_gens)
        self.trivial = trivial

    @property
    def rank(self):
        return 2 * len(self.pair_gens) + self.trivial


class ChernEvaluator:
    def __init__(self, roots, poly_ring):
        self.roots = roots
        self.pr = poly_ring
        self._exps = {}
        self._elem = {}
        self._comp = {}

    def _exponentials(self, sym):
        if sym not in self._exps:
            ra = self.roots[sym]
            xs = []
            for g in ra.pair_gens:
                gen = GradedPoly.gen(self.pr, g)
                xs.append(gen.exp_even())
                xs.append((-gen).exp_even())
            xs.extend([self.pr.one()] * ra.trivial)
            self._exps[sym] = xs
        return self._exps[sym]

    def _elementary(self, sym, up_to):
        """e_0..e_up_to of the root exponentials."""
        have = self._elem.setdefault(sym, [self.pr.one()])
        xs = self._exponentials(sym)
        if len(have) == 1 and up_to >= 1:
            es = [self.pr.one()] + [self.pr.zero()] * len(xs)
            for x in xs:
                for i in range(len(es) - 1, 0, -1):
                    es[i] = es[i] + es[i - 1] * x
            self._elem[sym] = es
            have = es
        while len(have) <= up_to:
            have.append(self.pr.zero())
        return have

    def _complete(self, sym, up_to):
        """h_0..h_up_to via h_i = sum (-1)^(j-1) e_j h_(i-j)."""
        have = self._comp.setdefault(sym, [self.pr.one()])
        es = self._elementary(sym, up_to)
        while len(have) <= up_to:
            i = len(have)
            acc = self.pr.zero()
            for j in range(1, i + 1):
                t = es[j] * have[i - j]
                acc = acc + (t if j % 2 == 1 else -t)
            have.append(acc)
        return have

    def atom_ch(self, atom):
        sym, kind, i = atom.sym, atom.kind, atom.i
        ra = self.roots[sym]
        if kind == "delta":
            if ra.trivial:
                raise ValueError("delta root assignment must be +/- pairs only")
            out = self.pr.one()
            for g in ra.pair_gens:
                half = GradedPoly.gen(self.pr, g) * Fraction(1, 2)
                out = out * (half.exp_even() + (-half).exp_even())
            return out
        if kind == "lam":
            return self._elementary(sym, i)[i]
        if kind == "lamt":
            # Lam_t(S~) = Lam_t(S) (1+t)^(-n)
            n = ra.rank
            acc = self.pr.zero()
            es = self._elementary(sym, i)
            for j in range(i + 1):
                m = i - j
                c = (-1) ** m * math.comb(n + m - 1, m)
                acc = acc + es[j] * c
            return acc
        raise ValueError(kind)


def ch(expr, roots, poly_ring):
    """Chern character: a ring homomorphism BundleExpr -> GradedPoly."""
    return expr.ch(roots, poly_ring)


def ch_series(kseries, roots, poly_ring, coeff_ring):
    """Apply ch coefficientwise to a KSeries."""
    return kseries.map_coefficients(lambda c: c.ch(roots, poly_ring), ring=coeff_ring)
