"""Multivariate polynomials over exact rationals, graded by cohomological degree.

Even generators all sit in degree 2 (formal Chern roots and the line-bundle
class); a monomial may additionally carry at most one odd marker ``t<d>`` of
odd degree d (the transgression generators).  Everything above ``degree_cap``
is truncated away, which makes the even part of the ring nilpotent and lets
``exp_even`` terminate.
"""

import threading
from fractions import Fraction

from ._kernel import add_terms, mul_terms, term_degree


class OddProductError(ValueError):
    pass


class GradedPoly:
    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    # -- constructors -------------------------------------------------

    @classmethod
    def constant(cls, ring, value):
        value = Fraction(value)
        if value == 0:
            return cls(ring, {})
        return cls(ring, {ring.unit_key: value})

    @classmethod
    def gen(cls, ring, i, power=1):
        key = list(ring.unit_key)
        key[i] = power
        if 2 * power > ring.degree_cap:
            return cls(ring, {})
        return cls(ring, {tuple(key): Fraction(1)})

    @classmethod
    def odd_gen(cls, ring, degree):
        if degree % 2 == 0 or degree < 1:
            raise ValueError("odd marker degree must be odd and positive")
        key = list(ring.unit_key)
        key[-1] = degree
        if degree > ring.degree_cap:
            return cls(ring, {})
        return cls(ring, {tuple(key): Fraction(1)})

    # -- basic ring operations ----------------------------------------

    def _check(self, other):
        if self.ring is not other.ring and self.ring != other.ring:
            raise ValueError("mixing polynomials from different rings")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GradedPoly.constant(self.ring, other)
        self._check(other)
        return GradedPoly(self.ring, add_terms(self.terms, other.terms))

    __radd__ = __add__

    def __neg__(self):
        return GradedPoly(self.ring, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GradedPoly.constant(self.ring, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if c == 0:
                return GradedPoly(self.ring, {})
            return GradedPoly(self.ring, {k: v * c for k, v in self.terms.items()})
        self._check(other)
        try:
            terms = mul_terms(self.terms, other.terms, self.ring.degree_cap)
        except ValueError as exc:
            raise OddProductError(str(exc)) from None
        return GradedPoly(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            return self.inv() ** (-n)
        out = GradedPoly.constant(self.ring, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GradedPoly.constant(self.ring, other)
        if not isinstance(other, GradedPoly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, tuple(sorted(self.terms.items()))))

    def __bool__(self):
        return bool(self.terms)

    # -- structure ----------------------------------------------------

    def constant_term(self):
        return self.terms.get(self.ring.unit_key, Fraction(0))

    def has_odd(self):
        return any(k[-1] for k in self.terms)

    def degree_component(self, d):
        return GradedPoly(
            self.ring, {k: v for k, v in self.terms.items() if term_degree(k) == d}
        )

    def degree_components(self):
        out = {}
        for k, v in self.terms.items():
            out.setdefault(term_degree(k), {})[k] = v
        return {d: GradedPoly(self.ring, t) for d, t in sorted(out.items())}

    def is_unit(self):
        return self.constant_term() != 0

    def inv(self):
        c0 = self.constant_term()
        if c0 == 0:
            raise ZeroDivisionError("constant term is not a unit")
        if self.has_odd():
            raise OddProductError("cannot invert a polynomial with odd content")
        # 1/(c0(1+n)) = (1/c0) sum (-n)^i with n nilpotent of degree >= 2.
        n = self * (1 / c0) - 1
        out = GradedPoly.constant(self.ring, 1)
        power = GradedPoly.constant(self.ring, 1)
        sign = 1
        for _ in range(self.ring.degree_cap // 2 + 1):
            power = power * n
            if not power:
                break
            sign = -sign
            out = out + power * sign
        return out * (1 / c0)

    def exp_even(self):
        """exp of a nilpotent even element, exact to the degree cap."""
        if self.constant_term() != 0:
            raise ValueError("exp requires a vanishing constant term")
        if self.has_odd():
            raise OddProductError("exp requires purely even content")
        out = GradedPoly.constant(self.ring, 1)
        power = GradedPoly.constant(self.ring, 1)
        k = 0
        while True:
            k += 1
            power = power * self
            if not power:
                break
            out = out + power * Fraction(1, _factorial(k))
        return out

    def substitute_even_square(self, var, replacement):
        """Replace X_var^(2a) by replacement^a; error on odd powers of X_var."""
        self._check(replacement)
        powers = {0: GradedPoly.constant(self.ring, 1)}
        out = GradedPoly(self.ring, {})
        for k, v in self.terms.items():
            e = k[var]
            if e % 2:
                raise ValueError("substitution target appears with an odd exponent")
            a = e // 2
            if a not in powers:
                powers[a] = replacement ** a
            kk = list(k)
            kk[var] = 0
            out = out + powers[a] * GradedPoly(self.ring, {tuple(kk): v})
        return out

    def eval_numeric(self, assignment):
        """Evaluate at complex values for the even generators.

        Returns {odd_marker_degree: complex}, with key 0 for the even part.
        """
        if len(assignment) != self.ring.nvars:
            raise ValueError("assignment must cover every even generator")
        out = {}
        for k, v in self.terms.items():
            val = complex(v)
            for i, e in enumerate(k[:-1]):
                if e:
                    val *= assignment[i] ** e
            out[k[-1]] = out.get(k[-1], 0j) + val
        return out

    # -- presentation ---------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items())

    def to_json_obj(self):
        return [[list(k), str(v)] for k, v in self.sorted_terms()]

    def __str__(self):
        if not self.terms:
            return "0"
        names = self.ring.names
        parts = []
        for k, v in self.sorted_terms():
            factors = []
            for i, e in enumerate(k[:-1]):
                if e == 1:
                    factors.append(names[i])
                elif e > 1:
                    factors.append(f"{names[i]}^{e}")
            if k[-1]:
                factors.append(f"t{k[-1]}")
            mono = "*".join(factors)
            if not mono:
                parts.append(str(v))
            elif v == 1:
                parts.append(mono)
            elif v == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{v}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


class PolyRing:
    """Shape of a GradedPoly: generator arity, names and the degree cap."""

    __slots__ = ("nvars", "degree_cap", "names", "unit_key")

    def __init__(self, nvars, degree_cap, names=None):
        if names is None:
            names = tuple(f"X{i + 1}" for i in range(nvars))
        if len(names) != nvars:
            raise ValueError("one name per even generator")
        self.nvars = nvars
        self.degree_cap = degree_cap
        self.names = tuple(names)
        self.unit_key = (0,) * (nvars + 1)

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.nvars == other.nvars
            and self.degree_cap == other.degree_cap
        )

    def __hash__(self):
        return hash((self.nvars, self.degree_cap))

    def __repr__(self):
        return f"PolyRing(nvars={self.nvars}, cap={self.degree_cap})"

    def zero(self):
        return GradedPoly(self, {})

    def one(self):
        return GradedPoly.constant(self, 1)

    def gens(self):
        return [GradedPoly.gen(self, i) for i in range(self.nvars)]


_FACTORIALS = [1, 1]
_FACTORIALS_LOCK = threading.Lock()


def _factorial(n):
    if n >= len(_FACTORIALS):
        with _FACTORIALS_LOCK:
            while len(_FACTORIALS) <= n:
                _FACTORIALS.append(_FACTORIALS[-1] * len(_FACTORIALS))
    return _FACTORIALS[n]
