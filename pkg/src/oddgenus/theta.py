"""Theta-function machinery.

Two layers share the same definitions: an exact symbolic layer producing the
prefactor-free quotient series (rational in the formal variable and q^(1/2)),
and a complex-double numeric layer evaluating the raw infinite products, used
as the oracle for transformation laws.

The symbolic layer never materialises a theta function itself (whose q^(1/8)
and pi prefactors are irrational); only the quotients below, all of which have
exact rational closed forms under X = 2*pi*sqrt(-1)*v:

  A      X/2 / sinh(X/2) * prod (1-q^n)^2 / ((1-q^n e^X)(1-q^n e^-X))
  Q1     cosh(X/2) * prod (1+q^n e^X)(1+q^n e^-X) / (1+q^n)^2
  Q2     prod (1-q^(n-1/2) e^X)(1-q^(n-1/2) e^-X) / (1-q^(n-1/2))^2
  Q3     prod (1+q^(n-1/2) e^X)(1+q^(n-1/2) e^-X) / (1+q^(n-1/2))^2
  WY     sinh(Y/2) * prod (1-q^n e^Y)(1-q^n e^-Y) / (1-q^n)^2
  LOGDj  d/dZ log theta_j, an odd series in Z
"""

import cmath
from fractions import Fraction

from .graded import GradedPoly, PolyRing, _factorial
from .series import PolyCoeffRing, QQ, QSeries

THETA_KINDS = ("A", "Q1", "Q2", "Q3", "WY", "LOGD1", "LOGD2", "LOGD3")

EVEN_KINDS = {"A", "Q1", "Q2", "Q3"}
ODD_KINDS = {"WY", "LOGD1", "LOGD2", "LOGD3"}


class ThetaQuotient:
    def __init__(self, kind, series, variable, orders):
        self.kind = kind
        self.series = series
        self.variable = variable
        self.orders = orders

    def __repr__(self):
        return f"ThetaQuotient({self.kind}, orders={self.orders}): {self.series}"


# -- symbolic layer -----------------------------------------------------


def _uni_ring(variable, degree_cap):
    return PolyCoeffRing(PolyRing(1, degree_cap, names=(variable,)))


def _exp_gen(pr, c):
    """exp(c*X) truncated by the degree cap."""
    return (GradedPoly.gen(pr, 0) * Fraction(c)).exp_even()


def _sinh_half_over_half(pr):
    """sinh(X/2)/(X/2) = sum X^(2i) / (4^i (2i+1)!)."""
    terms = {}
    for i in range(pr.degree_cap // 4 + 1):
        key = (2 * i, 0)
        terms[key] = Fraction(1, 4**i * _factorial(2 * i + 1))
    return GradedPoly(pr, terms)


def _sinh_half(pr):
    return (_exp_gen(pr, Fraction(1, 2)) - _exp_gen(pr, Fraction(-1, 2))) * Fraction(1, 2)


def _cosh_half(pr):
    return (_exp_gen(pr, Fraction(1, 2)) + _exp_gen(pr, Fraction(-1, 2))) * Fraction(1, 2)


def _pair_product(cr, n_half, exponents, sign):
    """prod over e in exponents of (1 + sign u^e e^X)(1 + sign u^e e^-X)/(1 + sign u^e)^2."""
    pr = cr.poly_ring
    ex_pos = _exp_gen(pr, 1)
    ex_neg = _exp_gen(pr, -1)
    out = QSeries.one(cr, n_half)
    for e in exponents:
        s = Fraction(sign)
        f1 = QSeries(cr, {0: pr.one(), e: ex_pos * s}, n_half)
        f2 = QSeries(cr, {0: pr.one(), e: ex_neg * s}, n_half)
        denom = QSeries(cr, {0: pr.one(), e: GradedPoly.constant(pr, s)}, n_half)
        out = out * f1 * f2 * (denom * denom).inv()
    return out


def _int_exponents(n_half):
    return [2 * n for n in range(1, (n_half - 1) // 2 + 1)]


def _half_exponents(n_half):
    return [2 * n - 1 for n in range(1, n_half // 2 + 1)]


def _two_sinh(pr, m):
    """e^(mZ) - e^(-mZ), the odd part generator for log-derivative sums."""
    terms = {}
    for i in range(1, pr.degree_cap // 2 + 1, 2):
        terms[(i, 0)] = Fraction(2 * m**i, _factorial(i))
    return GradedPoly(pr, terms)


def _logd_lattice(cr, n_half, half_step, alternating):
    """Sum over j,m >= 1 of s(m) u^(e_j m) (e^(mZ)-e^(-mZ)) with e_j the factor exponents."""
    pr = cr.poly_ring
    coeffs = {}
    step = 2
    e = 1 if half_step else 2
    while e < n_half:
        m = 1
        while e * m < n_half:
            s = (-1) ** (m - 1) if alternating else 1
            poly = _two_sinh(pr, m) * s
            key = e * m
            coeffs[key] = coeffs.get(key, pr.zero()) + poly
            m += 1
        e += step
    return QSeries(cr, coeffs, n_half)


def theta_quotient(kind, variable="X", n_half=6, degree_cap=8):
    """Exact truncated series for one of the theta quotients (see module doc)."""
    if n_half < 1 or degree_cap < 0:
        raise ValueError("n_half >= 1 and degree_cap >= 0 required")
    cr = _uni_ring(variable, degree_cap)
    pr = cr.poly_ring
    if kind == "A":
        base = _sinh_half_over_half(pr).inv()
        series = _pair_product(cr, n_half, _int_exponents(n_half), -1).inv().scale(base)
        # _pair_product gives prod (1-u^e e^X)(1-u^e e^-X)/(1-u^e)^2; A wants its
        # reciprocal times (X/2)/sinh(X/2).
    elif kind == "Q1":
        series = _pair_product(cr, n_half, _int_exponents(n_half), +1).scale(_cosh_half(pr))
    elif kind == "Q2":
        series = _pair_product(cr, n_half, _half_exponents(n_half), -1)
    elif kind == "Q3":
        series = _pair_product(cr, n_half, _half_exponents(n_half), +1)
    elif kind == "WY":
        series = _pair_product(cr, n_half, _int_exponents(n_half), -1).scale(_sinh_half(pr))
    elif kind == "LOGD1":
        tanh_part = _sinh_half(pr) * _cosh_half(pr).inv() * Fraction(1, 2)
        series = QSeries(cr, {0: tanh_part}, n_half) + _logd_lattice(cr, n_half, False, True)
    elif kind == "LOGD2":
        series = -_logd_lattice(cr, n_half, True, False)
    elif kind == "LOGD3":
        series = _logd_lattice(cr, n_half, True, True)
    else:
        raise ValueError(f"unknown theta quotient kind {kind!r}")
    _check_parity(kind, series)
    return ThetaQuotient(kind, series, variable, (n_half, degree_cap))


def quotient_core(kind, variable="X", n_half=6, degree_cap=8):
    """Even product cores used by the anomaly kernels.

    "Q1" here is the Q1 quotient without its cosh(X/2) prefactor and "W" the
    WY quotient without its sinh(Y/2) prefactor, i.e. exactly the exterior
    power products the virtual-bundle builders transform into under ch.
    """
    cr = _uni_ring(variable, degree_cap)
    if kind == "Q1":
        return _pair_product(cr, n_half, _int_exponents(n_half), +1)
    if kind == "W":
        return _pair_product(cr, n_half, _int_exponents(n_half), -1)
    raise ValueError(f"unknown quotient core {kind!r}")


def _check_parity(kind, series):
    want_odd = kind not in EVEN_KINDS
    for c in series.coeffs.values():
        for key in c.terms:
            if key[0] % 2 != (1 if want_odd else 0):
                raise AssertionError(f"{kind} violates its parity contract")


def variable_parity_ok(quotient):
    """Structural parity check: even kinds have only even powers, odd kinds odd."""
    try:
        _check_parity(quotient.kind, quotient.series)
    except AssertionError:
        return False
    return True


def theta_const_fourth(j, n_half):
    """theta_j(0, tau)^4 as an exact rational q-series.

    theta_1(0)^4 = 16 q^(1/2) prod (1-q^n)^4 (1+q^n)^8
    theta_2(0)^4 =            prod (1-q^n)^4 (1-q^(n-1/2))^8
    theta_3(0)^4 =            prod (1-q^n)^4 (1+q^(n-1/2))^8
    """
    if j not in (1, 2, 3):
        raise ValueError("j must be 1, 2 or 3")

    def factor(e, sign, power):
        return QSeries(QQ, {0: 1, e: sign}, n_half) ** power

    out = QSeries.one(QQ, n_half)
    if j == 1:
        out = QSeries.monomial(QQ, Fraction(16), 1, n_half)
        for e in _int_exponents(n_half):
            out = out * factor(e, -1, 4) * factor(e, +1, 8)
    elif j == 2:
        for e in _int_exponents(n_half):
            out = out * factor(e, -1, 4)
        for e in _half_exponents(n_half):
            out = out * factor(e, -1, 8)
    else:
        for e in _int_exponents(n_half):
            out = out * factor(e, -1, 4)
        for e in _half_exponents(n_half):
            out = out * factor(e, +1, 8)
    return out


# -- numeric layer ------------------------------------------------------


def _check_tau(tau):
    if tau.imag <= 0:
        raise ValueError("tau must lie in the upper half plane")


def theta_numeric(which, v, tau, n_factors=40):
    """Truncated-product evaluation of the four theta functions and theta'(0)."""
    _check_tau(tau)
    if n_factors < 1:
        raise ValueError("n_factors must be positive")
    # Fractional q-powers are taken continuously in tau (q^c := e^(2 pi i c tau)),
    # which is what the tau -> tau+1 laws rely on; a principal-branch power of q
    # would lose the phases.
    q = cmath.exp(2j * cmath.pi * tau)
    q18 = cmath.exp(2j * cmath.pi * tau / 8)
    u = cmath.exp(1j * cmath.pi * tau)
    a = cmath.exp(2j * cmath.pi * v)
    if which == "theta_prime0":
        prod = 1
        for j in range(1, n_factors + 1):
            prod *= (1 - q**j) ** 3
        return 2 * cmath.pi * q18 * prod

    prod = 1
    for j in range(1, n_factors + 1):
        qj = q**j
        qh = u ** (2 * j - 1)
        if which == "theta":
            prod *= (1 - qj) * (1 - a * qj) * (1 - qj / a)
        elif which == "theta1":
            prod *= (1 - qj) * (1 + a * qj) * (1 + qj / a)
        elif which == "theta2":
            prod *= (1 - qj) * (1 - a * qh) * (1 - qh / a)
        elif which == "theta3":
            prod *= (1 - qj) * (1 + a * qh) * (1 + qh / a)
        else:
            raise ValueError(f"unknown theta function {which!r}")
    if which == "theta":
        return 2 * q18 * cmath.sin(cmath.pi * v) * prod
    if which == "theta1":
        return 2 * q18 * cmath.cos(cmath.pi * v) * prod
    return prod


def theta_logderiv_z(j, v, tau, n_factors=40):
    """(1/(2 pi i)) d/dv log theta_j -- the numeric oracle for LOGDj."""
    _check_tau(tau)
    q = cmath.exp(2j * cmath.pi * tau)
    u = cmath.exp(1j * cmath.pi * tau)
    a = cmath.exp(2j * cmath.pi * v)
    total = 0j
    if j == 1:
        total += cmath.tan(cmath.pi * v) * 0.5j  # = (1/2) tanh(Z/2) at Z = 2 pi i v
        for n in range(1, n_factors + 1):
            qn = q**n
            total += a * qn / (1 + a * qn) - qn / a / (1 + qn / a)
    elif j == 2:
        for n in range(1, n_factors + 1):
            qh = u ** (2 * n - 1)
            total += -a * qh / (1 - a * qh) + qh / a / (1 - qh / a)
    elif j == 3:
        for n in range(1, n_factors + 1):
            qh = u ** (2 * n - 1)
            total += a * qh / (1 + a * qh) - qh / a / (1 + qh / a)
    else:
        raise ValueError("j must be 1, 2 or 3")
    return total


def theta_dv_numeric(which, v, tau, n_factors=40):
    """d/dv of a theta function; v must avoid the zero locus for 'theta'."""
    _check_tau(tau)
    q = cmath.exp(2j * cmath.pi * tau)
    a = cmath.exp(2j * cmath.pi * v)
    th = theta_numeric(which, v, tau, n_factors)
    if which == "theta":
        logd = cmath.pi / cmath.tan(cmath.pi * v)
        for n in range(1, n_factors + 1):
            qn = q**n
            logd += 2j * cmath.pi * (-a * qn / (1 - a * qn) + qn / a / (1 - qn / a))
        return th * logd
    j = {"theta1": 1, "theta2": 2, "theta3": 3}[which]
    return th * 2j * cmath.pi * theta_logderiv_z(j, v, tau, n_factors)


def _root_tau_over_i(tau):
    return cmath.sqrt(tau / 1j)


def transformation_law_suite(samples, tol=1e-9, n_factors=40):
    """Check the Jacobi identity and the S/T laws at the given (v, tau) samples.

    Returns a list of (law_name, max_deviation, passed).
    """
    devs = {}

    def rec(name, lhs, rhs):
        d = abs(lhs - rhs)
        devs[name] = max(devs.get(name, 0.0), d)

    for v, tau in samples:
        q18 = cmath.exp(1j * cmath.pi / 4)
        s_fac = _root_tau_over_i(tau) * cmath.exp(1j * cmath.pi * tau * v * v)
        rec(
            "jacobi_2.12",
            theta_numeric("theta_prime0", 0, tau, n_factors),
            cmath.pi
            * theta_numeric("theta1", 0, tau, n_factors)
            * theta_numeric("theta2", 0, tau, n_factors)
            * theta_numeric("theta3", 0, tau, n_factors),
        )
        rec(
            "T_2.13",
            theta_numeric("theta", v, tau + 1, n_factors),
            q18 * theta_numeric("theta", v, tau, n_factors),
        )
        rec(
            "S_2.13",
            theta_numeric("theta", v, -1 / tau, n_factors),
            s_fac / 1j * theta_numeric("theta", tau * v, tau, n_factors),
        )
        rec(
            "T_2.14",
            theta_numeric("theta1", v, tau + 1, n_factors),
            q18 * theta_numeric("theta1", v, tau, n_factors),
        )
        rec(
            "S_2.14",
            theta_numeric("theta1", v, -1 / tau, n_factors),
            s_fac * theta_numeric("theta2", tau * v, tau, n_factors),
        )
        rec(
            "T_2.15",
            theta_numeric("theta2", v, tau + 1, n_factors),
            theta_numeric("theta3", v, tau, n_factors),
        )
        rec(
            "S_2.15",
            theta_numeric("theta2", v, -1 / tau, n_factors),
            s_fac * theta_numeric("theta1", tau * v, tau, n_factors),
        )
        rec(
            "T_2.16",
            theta_numeric("theta3", v, tau + 1, n_factors),
            theta_numeric("theta2", v, tau, n_factors),
        )
        rec(
            "S_2.16",
            theta_numeric("theta3", v, -1 / tau, n_factors),
            s_fac * theta_numeric("theta3", tau * v, tau, n_factors),
        )
        rec(
            "T_2.17",
            theta_dv_numeric("theta", v, tau + 1, n_factors),
            q18 * theta_dv_numeric("theta", v, tau, n_factors),
        )
        lhs, rhs = theta_prime0_S(tau, n_factors)
        rec("S_2.17", lhs, rhs)
    return [(name, dev, dev < tol) for name, dev in sorted(devs.items())]


def theta_prime0_S(tau, n_factors=40):
    """Both sides of theta'(0, -1/tau) = (1/i)(tau/i)^(1/2) tau theta'(0, tau)."""
    lhs = theta_numeric("theta_prime0", 0, -1 / tau, n_factors)
    rhs = _root_tau_over_i(tau) / 1j * tau * theta_numeric("theta_prime0", 0, tau, n_factors)
    return lhs, rhs


def default_law_samples(count=20, seed=7):
    """Deterministic sample points with |q| <= 0.1 (Im tau >= 0.4)."""
    import random

    rng = random.Random(seed)
    samples = []
    for _ in range(count):
        tau = complex(rng.uniform(-0.5, 0.5), rng.uniform(0.9, 1.8))
        v = complex(rng.uniform(-0.25, 0.25), rng.uniform(-0.2, 0.2))
        samples.append((v, tau))
    return samples


def series_vs_numeric(quotient, v, tau, n_factors=60):
    """Evaluate an exact quotient series at (X=2 pi i v, q=e^(2 pi i tau)) and
    the matching numeric theta ratio; returns (symbolic, numeric)."""
    _check_tau(tau)
    u = cmath.exp(1j * cmath.pi * tau)
    x = 2j * cmath.pi * v
    total = 0j
    for e, poly in quotient.series.coeffs.items():
        val = poly.eval_numeric([x]).get(0, 0j)
        total += val * u**e
    kind = quotient.kind
    if kind == "A":
        num = v * theta_numeric("theta_prime0", 0, tau, n_factors) / theta_numeric(
            "theta", v, tau, n_factors
        )
    elif kind in ("Q1", "Q2", "Q3"):
        name = {"Q1": "theta1", "Q2": "theta2", "Q3": "theta3"}[kind]
        num = theta_numeric(name, v, tau, n_factors) / theta_numeric(name, 0, tau, n_factors)
    elif kind == "WY":
        num = (
            1j
            * theta_numeric("theta", v, tau, n_factors)
            / (
                theta_numeric("theta1", 0, tau, n_factors)
                * theta_numeric("theta2", 0, tau, n_factors)
                * theta_numeric("theta3", 0, tau, n_factors)
            )
        )
    elif kind in ("LOGD1", "LOGD2", "LOGD3"):
        num = theta_logderiv_z(int(kind[-1]), v, tau, n_factors)
    else:
        raise ValueError(kind)
    return total, num
