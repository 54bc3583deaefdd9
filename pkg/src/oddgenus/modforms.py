"""Scalar modular forms: Eisenstein series, the level-2 delta/epsilon forms,
exact basis decompositions and the numeric modularity checker."""

import cmath
from fractions import Fraction

from . import theta
from .series import QQ, QSeries, TruncationError

GROUPS = ("SL2Z", "Gamma0_2", "Gamma0_upper_2", "Gamma_theta", "none")


class ModularForm:
    def __init__(self, series, weight, group, name=""):
        if group not in GROUPS:
            raise ValueError(f"unknown group {group!r}")
        self.series = series
        self.weight = weight
        self.group = group
        self.name = name

    def __repr__(self):
        label = self.name or "form"
        return f"{label} (weight {self.weight}, {self.group}): {self.series}"


def sigma(n, p):
    """Divisor power sum."""
    return sum(d**p for d in range(1, n + 1) if n % d == 0)


def eisenstein(weight, order_half):
    """E4 or E6 from divisor sums, truncated at u^order_half (u = q^(1/2))."""
    if weight == 4:
        mult, p = 240, 3
    elif weight == 6:
        mult, p = -504, 5
    else:
        raise ValueError("only weights 4 and 6 are supported")
    coeffs = {0: Fraction(1)}
    for n in range(1, (order_half - 1) // 2 + 1):
        coeffs[2 * n] = Fraction(mult * sigma(n, p))
    return ModularForm(QSeries(QQ, coeffs, order_half), weight, "SL2Z", f"E{weight}")


def delta_eps(group, order_half):
    """The (delta, eps) pair for Gamma0(2) or Gamma^0(2), built from theta_j(0)^4."""
    if order_half < 2:
        raise ValueError("order_half >= 2 required")
    t3 = theta.theta_const_fourth(3, order_half)
    if group == "Gamma0_2":
        t2 = theta.theta_const_fourth(2, order_half)
        delta = (t2 + t3).scale(Fraction(1, 8))
        eps = (t2 * t3).scale(Fraction(1, 16))
        names = ("delta1", "eps1")
    elif group == "Gamma0_upper_2":
        t1 = theta.theta_const_fourth(1, order_half)
        delta = -(t1 + t3).scale(Fraction(1, 8))
        eps = (t1 * t3).scale(Fraction(1, 16))
        names = ("delta2", "eps2")
    else:
        raise ValueError(f"no delta/eps pair for group {group!r}")
    return (
        ModularForm(delta, 2, group, names[0]),
        ModularForm(eps, 4, group, names[1]),
    )


# -- basis decompositions ----------------------------------------------


def sl2z_basis(weight, order_half):
    """Monomials E4^a E6^b with 4a + 6b = weight, as (label, series) pairs."""
    if weight < 0 or weight % 2:
        raise ValueError("weight must be a nonnegative even integer")
    e4 = eisenstein(4, order_half).series
    e6 = eisenstein(6, order_half).series
    out = []
    for b in range(weight // 6 + 1):
        rem = weight - 6 * b
        if rem % 4 == 0:
            a = rem // 4
            out.append((f"E4^{a}*E6^{b}", e4**a * e6**b))
    if weight == 0:
        return [("1", QSeries.one(QQ, order_half))]
    return out


def _solve_exact(matrix, rhs):
    """Gaussian elimination: rational matrix, rhs entries in any Q-module."""
    n = len(matrix)
    m = [row[:] for row in matrix]
    b = list(rhs)
    for col in range(n):
        piv = None
        for r in range(col, n):
            if m[r][col] != 0:
                piv = r
                break
        if piv is None:
            raise ValueError("decomposition system is singular (insufficient truncation)")
        m[col], m[piv] = m[piv], m[col]
        b[col], b[piv] = b[piv], b[col]
        inv = Fraction(1, 1) / m[col][col]
        m[col] = [x * inv for x in m[col]]
        b[col] = b[col] * inv
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
                b[r] = b[r] - b[col] * f
    return b


def decompose_sl2z(series, weight):
    """Write an SL2(Z) form of the given weight over the E4^a E6^b basis.

    Returns (list of (label, coefficient), residual series).  Coefficients live
    in the series' coefficient module (rationals or graded polynomials); the
    residual must vanish for a true modular form.
    """
    basis = sl2z_basis(weight, series.order)
    n = len(basis)
    rows = []
    rhs = []
    for i in range(n):
        if 2 * i >= series.order:
            raise ValueError("series too short to determine the basis")
        rows.append([bs.coeff(2 * i) for _, bs in basis])
        rhs.append(series.coeff(2 * i))
    coeffs = _solve_exact(rows, rhs)
    recomposed = QSeries.zero(series.ring, series.order)
    for c, (_, bs) in zip(coeffs, basis):
        lifted = QSeries(
            series.ring,
            {e: series.ring.coerce(v) * c for e, v in bs.coeffs.items()},
            series.order,
        )
        recomposed = recomposed + lifted
    residual = series - recomposed
    return list(zip([label for label, _ in basis], coeffs)), residual


def gamma0upper_basis(k, order_half):
    """(8 delta2)^(k-2s) eps2^s for s = 0..floor(k/2)."""
    d2, e2 = delta_eps("Gamma0_upper_2", order_half)
    b8 = d2.series.scale(8)
    return [
        (f"(8d2)^{k - 2 * s}*e2^{s}", b8 ** (k - 2 * s) * e2.series**s)
        for s in range(k // 2 + 1)
    ]


def decompose_gamma0upper(series, k):
    """Triangular solve over the (8 delta2)^(k-2s) eps2^s basis.

    eps2 has valuation u, 8 delta2 a unit constant term, so the coefficient of
    u^s pins h_s once h_0..h_(s-1) are known.  Returns (h list, residual).
    """
    if series.order < k // 2 + 1:
        raise ValueError("series too short for the triangular solve")
    basis = gamma0upper_basis(k, series.order)
    hs = []
    residual = series
    for s, (_, bs) in enumerate(basis):
        pivot = bs.coeff(s)
        target = residual.coeff(s)
        h = target * (Fraction(1, 1) / pivot)
        hs.append(h)
        lifted = QSeries(
            series.ring,
            {e: series.ring.coerce(v) * h for e, v in bs.coeffs.items()},
            series.order,
        )
        residual = residual - lifted
    return hs, residual


def recompose_gamma0lower(hs, k, order_half, ring=None):
    """sum_s h_s (8 delta1)^(k-2s) eps1^s, the mirror image of (h, Gamma^0(2))."""
    d1, e1 = delta_eps("Gamma0_2", order_half)
    b8 = d1.series.scale(8)
    out = None
    for s, h in enumerate(hs):
        bs = b8 ** (k - 2 * s) * e1.series**s
        if ring is None:
            term = bs.scale(h)
        else:
            term = QSeries(
                ring, {e: ring.coerce(v) * h for e, v in bs.coeffs.items()}, order_half
            )
        out = term if out is None else out + term
    return out


def power_expansion_gamma0lower(k, s, order_half):
    """(8 delta1)^(k-2s) eps1^s, exact."""
    if not 0 <= s <= k // 2:
        raise ValueError("need 0 <= s <= floor(k/2)")
    d1, e1 = delta_eps("Gamma0_2", order_half)
    return d1.series.scale(8) ** (k - 2 * s) * e1.series**s


# -- numeric checks ------------------------------------------------------


def evaluate_series(series, tau, max_terms=None):
    """Evaluate a rational q-expansion at tau via u = e^(pi i tau)."""
    u = cmath.exp(1j * cmath.pi * tau)
    total = 0j
    for e, c in sorted(series.coeffs.items()):
        total += complex(c) * u**e
    return total


def numeric_modularity_check(form, samples, tol=1e-6):
    """Check the T-law for the form's group, and the S-law over SL2(Z).

    Returns {"max_dev": float, "passed": bool, "laws": {...}} -- the group
    decides the checks: SL2(Z) forms get f(tau+1)=f and f(-1/tau)=tau^w f;
    level-2 forms get their T-power (T for Gamma0(2), T^2 for Gamma^0(2)).
    """
    devs = {}
    for tau in samples:
        if abs(cmath.exp(2j * cmath.pi * tau)) > 0.5:
            raise ValueError("sample too close to |q| = 1; evaluation may diverge")
        f = evaluate_series(form.series, tau)
        if form.group == "SL2Z":
            devs["T"] = max(
                devs.get("T", 0.0), abs(evaluate_series(form.series, tau + 1) - f)
            )
            devs["S"] = max(
                devs.get("S", 0.0),
                abs(evaluate_series(form.series, -1 / tau) - tau**form.weight * f),
            )
        elif form.group == "Gamma0_2":
            devs["T"] = max(
                devs.get("T", 0.0), abs(evaluate_series(form.series, tau + 1) - f)
            )
        elif form.group == "Gamma0_upper_2":
            devs["T^2"] = max(
                devs.get("T^2", 0.0), abs(evaluate_series(form.series, tau + 2) - f)
            )
    max_dev = max(devs.values()) if devs else 0.0
    return {"max_dev": max_dev, "passed": max_dev < tol, "laws": devs}


def delta_eps_s_check(samples, tol=1e-6, order_half=40):
    """Numeric S-relations delta2(-1/tau) = tau^2 delta1(tau) and
    eps2(-1/tau) = tau^4 eps1(tau)."""
    d1, e1 = delta_eps("Gamma0_2", order_half)
    d2, e2 = delta_eps("Gamma0_upper_2", order_half)
    dev = 0.0
    for tau in samples:
        lhs = evaluate_series(d2.series, -1 / tau)
        rhs = tau**2 * evaluate_series(d1.series, tau)
        dev = max(dev, abs(lhs - rhs))
        lhs = evaluate_series(e2.series, -1 / tau)
        rhs = tau**4 * evaluate_series(e1.series, tau)
        dev = max(dev, abs(lhs - rhs))
    return {"max_dev": dev, "passed": dev < tol}
