"""Truncated formal power series in u = q^(1/2) over a pluggable coefficient ring.

Exponents are stored as integer multiples of 1/2 (powers of u) and must be
nonnegative.  ``order`` is the exclusive truncation bound in u-units; reading
a coefficient at or beyond it raises instead of returning a fabricated zero.
Arithmetic propagates the minimum order of the operands.
"""

from fractions import Fraction

from .graded import GradedPoly, PolyRing


class RingMismatchError(ValueError):
    pass


class TruncationError(ValueError):
    pass


class RationalRing:
    """Exact rational coefficients (Fraction)."""

    tag = "QQ"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        raise TypeError(f"cannot coerce {x!r} into the rational ring")

    def is_zero(self, c):
        return c == 0

    def is_unit(self, c):
        return c != 0

    def inv(self, c):
        return 1 / c

    def serialize(self, c):
        return str(c)

    def __eq__(self, other):
        return isinstance(other, RationalRing)

    def __hash__(self):
        return hash("QQ")


QQ = RationalRing()


class PolyCoeffRing:
    """GradedPoly coefficients over a fixed PolyRing shape."""

    def __init__(self, poly_ring):
        self.poly_ring = poly_ring
        self.tag = f"GP[{poly_ring.nvars};{poly_ring.degree_cap}]"

    def zero(self):
        return self.poly_ring.zero()

    def one(self):
        return self.poly_ring.one()

    def coerce(self, x):
        if isinstance(x, GradedPoly):
            if x.ring != self.poly_ring:
                raise RingMismatchError("polynomial from a different ring")
            return x
        if isinstance(x, (int, Fraction)):
            return GradedPoly.constant(self.poly_ring, x)
        raise TypeError(f"cannot coerce {x!r} into {self.tag}")

    def is_zero(self, c):
        return not c

    def is_unit(self, c):
        return c.is_unit()

    def inv(self, c):
        return c.inv()

    def serialize(self, c):
        return c.to_json_obj()

    def __eq__(self, other):
        return isinstance(other, PolyCoeffRing) and self.poly_ring == other.poly_ring

    def __hash__(self):
        return hash(self.tag)


class QSeries:
    __slots__ = ("ring", "coeffs", "order")

    def __init__(self, ring, coeffs, order):
        if order < 1:
            raise ValueError("order must be at least 1")
        clean = {}
        for e, c in coeffs.items():
            if e < 0:
                raise ValueError("negative exponents are not supported")
            if e >= order:
                continue
            c = ring.coerce(c)
            if not ring.is_zero(c):
                clean[e] = c
        self.ring = ring
        self.coeffs = clean
        self.order = order

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, ring, order):
        return cls(ring, {}, order)

    @classmethod
    def one(cls, ring, order):
        return cls(ring, {0: ring.one()}, order)

    @classmethod
    def monomial(cls, ring, coeff, exp_half, order):
        return cls(ring, {exp_half: coeff}, order)

    # -- coefficient access ----------------------------------------------

    def coeff(self, exp_half):
        """Stored coefficient; reading past the truncation order is an error."""
        if exp_half >= self.order:
            raise TruncationError(
                f"coefficient u^{exp_half} requested but series is truncated at u^{self.order}"
            )
        return self.coeffs.get(exp_half, self.ring.zero())

    def coeff_q(self, n):
        """Coefficient of q^n (integer n)."""
        return self.coeff(2 * n)

    def valuation(self):
        if not self.coeffs:
            return None
        return min(self.coeffs)

    def is_zero(self):
        return not self.coeffs

    # -- arithmetic -------------------------------------------------------

    def _check(self, other):
        if self.ring != other.ring:
            raise RingMismatchError(
                f"cannot combine series over {self.ring.tag} and {other.ring.tag}"
            )

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QSeries(self.ring, {0: self.ring.coerce(other)}, self.order)
        self._check(other)
        order = min(self.order, other.order)
        out = {e: c for e, c in self.coeffs.items() if e < order}
        for e, c in other.coeffs.items():
            if e >= order:
                continue
            if e in out:
                out[e] = out[e] + c
            else:
                out[e] = c
        return QSeries(self.ring, out, order)

    __radd__ = __add__

    def __neg__(self):
        return QSeries(self.ring, {e: -c for e, c in self.coeffs.items()}, self.order)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QSeries(self.ring, {0: self.ring.coerce(other)}, self.order)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        """Multiply every coefficient by a ring element (or int/Fraction)."""
        c = self.ring.coerce(c)
        return QSeries(
            self.ring, {e: v * c for e, v in self.coeffs.items()}, self.order
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, GradedPoly):
            return self.scale(other)
        self._check(other)
        order = min(self.order, other.order)
        out = {}
        for ea, ca in self.coeffs.items():
            if ea >= order:
                continue
            for eb, cb in other.coeffs.items():
                e = ea + eb
                if e >= order:
                    continue
                prod = ca * cb
                if e in out:
                    out[e] = out[e] + prod
                else:
                    out[e] = prod
        return QSeries(self.ring, out, order)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            return self.inv() ** (-n)
        out = QSeries.one(self.ring, self.order)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def inv(self):
        """Multiplicative inverse; requires a unit constant term."""
        c0 = self.coeffs.get(0)
        if c0 is None or not self.ring.is_unit(c0):
            raise ZeroDivisionError("series has no unit constant term")
        inv0 = self.ring.inv(c0)
        out = {0: inv0}
        for e in range(1, self.order):
            acc = None
            for i, ci in self.coeffs.items():
                if 0 < i <= e and (e - i) in out:
                    term = ci * out[e - i]
                    acc = term if acc is None else acc + term
            if acc is not None:
                val = -(acc * inv0)
                if not self.ring.is_zero(val):
                    out[e] = val
        return QSeries(self.ring, out, self.order)

    def tau_shift(self):
        """Series image of tau -> tau + 1: negates odd powers of u."""
        return QSeries(
            self.ring,
            {e: (c if e % 2 == 0 else -c) for e, c in self.coeffs.items()},
            self.order,
        )

    def truncate(self, order):
        if order > self.order:
            raise TruncationError("cannot extend a truncated series")
        return QSeries(self.ring, self.coeffs, order)

    def map_coefficients(self, fn, ring=None):
        ring = ring or self.ring
        return QSeries(ring, {e: fn(c) for e, c in self.coeffs.items()}, self.order)

    # -- comparison and presentation --------------------------------------

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.ring, self.order, tuple(sorted(self.coeffs))))

    def eq_prefix(self, other, through=None):
        """Equality of all coefficients below min(order) (or `through`, in u-units)."""
        self._check(other)
        bound = min(self.order, other.order)
        if through is not None:
            bound = min(bound, through + 1)
        for e in range(bound):
            a = self.coeffs.get(e)
            b = other.coeffs.get(e)
            if a is None and b is None:
                continue
            if a is None or b is None or a != b:
                return False
        return True

    def to_json_obj(self):
        return {
            "order_half": self.order,
            "terms": [[e, self.ring.serialize(c)] for e, c in sorted(self.coeffs.items())],
        }

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in sorted(self.coeffs.items()):
            if e == 0:
                q = ""
            elif e == 2:
                q = "q"
            elif e % 2 == 0:
                q = f"q^{e // 2}"
            else:
                q = f"q^{{{e}/2}}"
            cs = str(c)
            if " + " in cs or " - " in cs:
                cs = f"({cs})"
            if not q:
                parts.append(cs)
            elif cs == "1":
                parts.append(q)
            elif cs == "-1":
                parts.append(f"-{q}")
            else:
                parts.append(f"{cs} {q}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


def poly_series_ring(nvars, degree_cap, names=None):
    """Convenience: the QSeries coefficient ring over a fresh PolyRing."""
    return PolyCoeffRing(PolyRing(nvars, degree_cap, names))
