"""The theorem engine.

Assembles the characteristic-form q-series at the Chern-root level, slices
them by cohomological degree, attaches the transgression-form q-series on
formal odd generators, and verifies the cancellation identities by exact
basis decomposition.

Conventions baked in here (see also the module docstrings they come from):

* Even kernels.  spin (4k-1): prod_j 2A(X_j) * (prod Q1(X_j) + prod Q2(X_j)
  + prod Q3(X_j)) over 2k-1 roots.  spin^c "witten" (4k-1): prod_j A(X_j) *
  Q1(Y) Q2(Y) Q3(Y).  spin^c "star" (4k+1): prod_j A(X_j) * WY(Y).  The
  kernels are exactly the theta-quotient products the twisted-bundle
  expressions transform into on the degree slices the odd extraction uses
  (slices of degree 0 mod 4 resp. 2 mod 4); the exp(c/2) factor contributes
  nothing there by Y-parity.

* Anomaly conditions.  The spin^c conditions (3 p1(L) = p1(M) resp.
  p1(L) = p1(M)) are imposed as a formal substitution: the last tangent root
  only ever appears through its square, which is replaced by
  3Y^2 - sum X_j^2 (resp. Y^2 - sum X_j^2).  The condition c3(E,g,d) = 0
  kills the degree-3 transgression class: the r = 1 slice (whose q-series is
  quasi-modular, an E2 multiple) is excluded from the verified sum but still
  computed and reported, so the discrepancy is observable.

* Odd normalisation.  The transgression generator t_(4r-1) absorbs every
  analytic constant (powers of 2 pi, the -1/(8 pi^2), 2^(N/2)) except the
  relative 2^(N/2) weight between the theta_1 family and the theta_2/theta_3
  families, which the level-2 mirror identity needs.  All ratio checks are
  normalisation-invariant.
"""

import json
import math
import time
from fractions import Fraction

from . import modforms, theta
from .graded import GradedPoly, PolyRing
from .series import PolyCoeffRing, QQ, QSeries

FAMILIES = (
    "spin_sl2z",
    "spinc_witten",
    "spinc_star",
    "gamma_spin",
    "gamma_spinc_witten",
    "gamma_spinc_star",
)

# Claimed proportionality constants (printed reference values) per weight-2k
# keyed by k.  The q^2 entry for k = 5 is the printed reference value; exact
# arithmetic from the pinned E4/E6 series forces -135432 there (E4*E6 is the
# weight-10 Eisenstein series), and reports carry both.
CLAIMED_RATIOS = {
    2: ("E4^1*E6^0", {1: Fraction(240), 2: Fraction(2160)}),
    3: ("E4^0*E6^1", {1: Fraction(-504), 2: Fraction(-16632)}),
    4: ("E4^2*E6^0", {1: Fraction(480), 2: Fraction(61920)}),
    5: ("E4^1*E6^1", {1: Fraction(-264), 2: Fraction(-117288)}),
}


def odd_moment(r):
    """I_(2r-1) = integral over [0,1] of (u^2-u)^(2r-1) du."""
    if r < 1:
        raise ValueError("r must be >= 1")
    m = 2 * r - 1
    return Fraction(-math.factorial(m) ** 2, math.factorial(2 * m + 1))


ODD_FAMILIES = ("sum_A", "theta1", "theta2", "theta3")


def odd_transgression(family, r, n_half):
    """q-series carried by t_(4r-1): the z^(2r-1) coefficient of the requested
    log-derivative family times the exact curvature moment I_(2r-1)."""
    if family not in ODD_FAMILIES:
        raise ValueError(f"unknown odd family {family!r}")
    power = 2 * r - 1
    js = (1, 2, 3) if family == "sum_A" else (int(family[-1]),)
    total = None
    for j in js:
        tq = theta.theta_quotient(f"LOGD{j}", "Z", n_half, 2 * power)
        s = tq.series.map_coefficients(
            lambda p: p.terms.get((power, 0), Fraction(0)), ring=QQ
        )
        total = s if total is None else total + s
    return total.scale(odd_moment(r))


# -- kernel construction -------------------------------------------------


def _lift_univariate(uni, cr, var):
    """Map a univariate quotient series into the target polynomial ring,
    sending the formal variable to generator index `var`."""
    pr = cr.poly_ring
    out = {}
    for e, poly in uni.coeffs.items():
        terms = {}
        for (p, _odd), v in poly.terms.items():
            if 2 * p > pr.degree_cap:
                continue
            key = list(pr.unit_key)
            key[var] = p
            terms[tuple(key)] = v
        if terms:
            out[e] = GradedPoly(pr, terms)
    return QSeries(cr, out, uni.order)


def _lift_univariate_square_subst(uni, cr, replacement):
    """Map a univariate *even* quotient series into the target ring with
    X^(2a) replaced by replacement^a (the anomaly-condition substitution)."""
    powers = {0: cr.poly_ring.one()}
    out = {}
    for e, poly in uni.coeffs.items():
        acc = cr.poly_ring.zero()
        for (p, _odd), v in poly.terms.items():
            if p % 2:
                raise ValueError("substitution requires an even series")
            a = p // 2
            if a not in powers:
                powers[a] = replacement**a
            acc = acc + powers[a] * v
        if acc:
            out[e] = acc
    return QSeries(cr, out, uni.order)


def spin_kernel(k, n_half, degree_cap=None):
    """prod_j 2A(X_j) * (prod Q1 + prod Q2 + prod Q3) over 2k-1 roots."""
    nroots = 2 * k - 1
    cap = 4 * (k - 1) if degree_cap is None else degree_cap
    cr = PolyCoeffRing(PolyRing(nroots, cap))
    a_uni = theta.theta_quotient("A", "X", n_half, cap).series
    q_unis = {
        i: theta.theta_quotient(f"Q{i}", "X", n_half, cap).series for i in (1, 2, 3)
    }
    a_prod = QSeries.one(cr, n_half)
    for j in range(nroots):
        a_prod = a_prod * _lift_univariate(a_uni, cr, j)
    a_prod = a_prod.scale(Fraction(2**nroots))
    total = None
    for i in (1, 2, 3):
        qi = QSeries.one(cr, n_half)
        for j in range(nroots):
            qi = qi * _lift_univariate(q_unis[i], cr, j)
        total = qi if total is None else total + qi
    return a_prod * total


def _free_a_product(cr, a_uni, n_free, replacement):
    """prod of A over n_free free roots and one substituted root."""
    out = QSeries.one(cr, a_uni.order)
    for j in range(n_free):
        out = out * _lift_univariate(a_uni, cr, j)
    return out * _lift_univariate_square_subst(a_uni, cr, replacement)


def witten_kernel(k, n_half, degree_cap=None):
    """prod_j A(X_j) * Q1(Y) Q2(Y) Q3(Y) over 2k-1 roots, with the last
    root's square replaced by 3Y^2 - sum X_j^2 (the 3p1(L) = p1(M) condition).

    Generators: X_1 .. X_(2k-2), Y.
    """
    n_free = 2 * k - 2
    cap = 4 * (k - 1) if degree_cap is None else degree_cap
    names = tuple(f"X{i + 1}" for i in range(n_free)) + ("Y",)
    cr = PolyCoeffRing(PolyRing(n_free + 1, cap, names))
    pr = cr.poly_ring
    y = GradedPoly.gen(pr, n_free)
    repl = y * y * 3
    for j in range(n_free):
        xj = GradedPoly.gen(pr, j)
        repl = repl - xj * xj
    a_uni = theta.theta_quotient("A", "X", n_half, cap).series
    out = _free_a_product(cr, a_uni, n_free, repl)
    for i in (1, 2, 3):
        qi = theta.theta_quotient(f"Q{i}", "X", n_half, cap).series
        out = out * _lift_univariate(qi, cr, n_free)
    return out


def star_kernel(k, n_half, degree_cap=None, n_roots=None):
    """prod_j A(X_j) * WY(Y) over n_roots roots (default 2k = floor(dim/2)),
    with the last root's square replaced by Y^2 - sum X_j^2 (p1(L) = p1(M)).

    Generators: X_1 .. X_(n_roots-1), Y.
    """
    if n_roots is None:
        n_roots = 2 * k
    n_free = n_roots - 1
    cap = 4 * (k - 1) + 2 if degree_cap is None else degree_cap
    names = tuple(f"X{i + 1}" for i in range(n_free)) + ("Y",)
    cr = PolyCoeffRing(PolyRing(n_free + 1, cap, names))
    pr = cr.poly_ring
    y = GradedPoly.gen(pr, n_free)
    repl = y * y
    for j in range(n_free):
        xj = GradedPoly.gen(pr, j)
        repl = repl - xj * xj
    a_uni = theta.theta_quotient("A", "X", n_half, cap).series
    out = _free_a_product(cr, a_uni, n_free, repl)
    wy = theta.theta_quotient("WY", "X", n_half, cap).series
    return out * _lift_univariate(wy, cr, n_free)


def _slice_series(kernel_series, degree):
    return kernel_series.map_coefficients(lambda c: c.degree_component(degree))


def _scalar_times_poly(scalar_series, poly_series):
    """Multiply a rational q-series into a polynomial-coefficient q-series."""
    ring = poly_series.ring
    lifted = QSeries(
        ring,
        {e: GradedPoly.constant(ring.poly_ring, c) for e, c in scalar_series.coeffs.items()},
        scalar_series.order,
    )
    return lifted * poly_series


def _embed_with_marker(poly, marker_ring, marker_deg):
    terms = {}
    for key, v in poly.terms.items():
        if key[-1]:
            raise ValueError("slice already carries an odd marker")
        terms[key[:-1] + (marker_deg,)] = v
    return GradedPoly(marker_ring, terms)


def _poly_ratio(base, other):
    """Fraction c with other == c * base, or None if no such c exists."""
    if not base.terms:
        return Fraction(0) if not other.terms else None
    key, v = next(iter(base.terms.items()))
    c = other.terms.get(key, Fraction(0)) / v
    return c if other == base * c else None


class SliceCheck:
    def __init__(self, r, degree, zero, included, reason, proportional):
        self.r = r
        self.degree = degree
        self.zero = zero
        self.included = included
        self.reason = reason
        self.proportional = proportional

    def to_json_obj(self):
        return {
            "r": self.r,
            "even_degree": self.degree,
            "even_slice_zero": self.zero,
            "included": self.included,
            "reason": self.reason,
            "proportional": self.proportional,
        }


class TheoremReport:
    def __init__(self, case, **fields):
        self.case = case
        self.fields = fields

    def __getattr__(self, name):
        try:
            return self.fields[name]
        except KeyError:
            raise AttributeError(name) from None

    @property
    def passed(self):
        return self.fields["pass"]

    def to_json_obj(self):
        def enc(x):
            if isinstance(x, Fraction):
                return str(x)
            if isinstance(x, GradedPoly):
                return str(x)
            if isinstance(x, QSeries):
                return x.to_json_obj()
            if isinstance(x, SliceCheck):
                return x.to_json_obj()
            if isinstance(x, dict):
                return {str(k): enc(v) for k, v in x.items()}
            if isinstance(x, (list, tuple)):
                return [enc(v) for v in x]
            return x

        out = {"case": self.case}
        for k, v in self.fields.items():
            out[k] = enc(v)
        return out

    def to_json(self):
        return json.dumps(self.to_json_obj(), sort_keys=True)


def _assemble_components(kernel, odd_series, k, shift, families_scale=None):
    """Per-r components: [kernel]^(4(k-r)+shift) * odd_r, as polynomial series.

    families_scale optionally multiplies each component (used for the 2^(N/2)
    weight on the theta_1 family).  Returns dict r -> (component, slice_zero).
    """
    comps = {}
    for r, odd in odd_series.items():
        p = k - r
        if p < 0:
            continue
        deg = 4 * p + shift
        sl = _slice_series(kernel, deg)
        zero = all(not c for c in sl.coeffs.values())
        comp = _scalar_times_poly(odd, sl)
        if families_scale is not None:
            comp = comp.scale(families_scale)
        comps[r] = (comp, zero)
    return comps


def _component_sum(comps, include_r1):
    total = None
    for r, (comp, zero) in sorted(comps.items()):
        if r == 1 and not include_r1 and not zero:
            continue
        total = comp if total is None else total + comp
    return total


def _spin_case(dim, family):
    if family in ("spin_sl2z", "spinc_witten", "gamma_spin", "gamma_spinc_witten"):
        if dim % 4 != 3:
            raise ValueError("dim must be congruent to 3 mod 4 for this family")
        return (dim + 1) // 4
    if dim % 4 != 1 or dim < 5:
        raise ValueError("dim must be congruent to 1 mod 4 for this family")
    return (dim - 1) // 4


def _kernel_for(family, k, n_half, n_roots=None):
    if family in ("spin_sl2z", "gamma_spin"):
        return spin_kernel(k, n_half), 0
    if family in ("spinc_witten", "gamma_spinc_witten"):
        return witten_kernel(k, n_half), 0
    return star_kernel(k, n_half, n_roots=n_roots), 2


def spin_sl2z_series(k, n_half=6, degree_cap=None, rank_n=8, include_r1=True):
    """The assembled degree-(4k-1) extraction: sum over p+r=k, r>=1 of
    [even]^(4p) odd_r t_(4r-1), as one series with odd markers."""
    kernel = spin_kernel(k, n_half, degree_cap)
    odd = {r: odd_transgression("sum_A", r, n_half) for r in range(1, k + 1)}
    scale = Fraction(2 ** (rank_n // 2))
    comps = _assemble_components(kernel, odd, k, 0, families_scale=scale)
    marker_ring = PolyRing(
        kernel.ring.poly_ring.nvars, 4 * k - 1, kernel.ring.poly_ring.names
    )
    cr = PolyCoeffRing(marker_ring)
    total = QSeries.zero(cr, n_half)
    for r, (comp, zero) in sorted(comps.items()):
        if r == 1 and not include_r1 and not zero:
            continue
        marked = comp.map_coefficients(
            lambda c, r=r: _embed_with_marker(c, marker_ring, 4 * r - 1), ring=cr
        )
        total = total + marked
    return total


def _proportionality_report(total, k, n_half):
    """Decompose the verified sum over the weight-2k basis; extract ratios."""
    weight = 2 * k
    out = {}
    decomp, residual = modforms.decompose_sl2z(total, weight)
    out["residual_zero"] = residual.is_zero()
    out["basis"] = [label for label, _ in decomp]
    c0 = total.coeff(0)
    extracted = {}
    for n in (1, 2):
        if 2 * n < total.order:
            extracted[n] = _poly_ratio(c0, total.coeff(2 * n))
    out["extracted"] = extracted
    if weight == 12:
        lam = {label: c for label, c in decomp}
        out["lambda_solution"] = lam
        # Weight-12 consistency: q^2 must follow from the (q^0, q^1) solution,
        # equivalently coeff_q2 = 196560 coeff_q0 - 24 coeff_q1.
        ok = total.coeff(4) == total.coeff(0) * Fraction(196560) - total.coeff(2) * Fraction(24)
        out["q2_consistent"] = ok
    return out


def verify_sl2z(dim, n_half=6, rank_n=8):
    """Verify the SL2(Z) spin identity for dim in {7, 11, 15, 19, 23}."""
    return _verify_eisenstein_case(dim, "spin_sl2z", n_half, rank_n)


def verify_spinc(family, dim, n_half=6, rank_n=8, n_roots=None):
    """Verify a spin^c identity; family in {"witten_tl", "star"}."""
    fam = {"witten_tl": "spinc_witten", "star": "spinc_star"}[family]
    return _verify_eisenstein_case(dim, fam, n_half, rank_n, n_roots=n_roots)


def _verify_eisenstein_case(dim, family, n_half, rank_n, n_roots=None):
    t0 = time.perf_counter()
    k = _spin_case(dim, family)
    if n_half < 6:
        raise ValueError("n_half >= 6 required to compare through q^2")
    kernel, shift = _kernel_for(family, k, n_half, n_roots=n_roots)
    odd = {r: odd_transgression("sum_A", r, n_half) for r in range(1, k + 1)}
    scale = Fraction(2 ** (rank_n // 2))
    comps = _assemble_components(kernel, odd, k, shift, families_scale=scale)

    slices = []
    for r, (comp, zero) in sorted(comps.items()):
        deg = 4 * (k - r) + shift
        if r >= 2 or zero:
            included, reason = True, ("zero slice" if zero else "modular slice")
        else:
            included, reason = False, "excluded: quasi-modular r=1 slice killed by c3(E,g,d)=0"
        # per-slice pass/fail, so the excluded slice's failure stays observable
        if zero:
            proportional = True
        else:
            _, sres = modforms.decompose_sl2z(comp, 2 * k)
            proportional = sres.is_zero()
        slices.append(SliceCheck(r, deg, zero, included, reason, proportional))

    total = _component_sum(comps, include_r1=False)
    weight2_deg = 4 + shift
    weight2_zero = all(
        not c for c in _slice_series(kernel, weight2_deg).coeffs.values()
    )
    prop = _proportionality_report(total, k, n_half)

    claimed = {}
    claimed_match = True
    if k in CLAIMED_RATIOS:
        label, table = CLAIMED_RATIOS[k]
        claimed = {n: table[n] for n in table}
        for n, c in table.items():
            got = prop["extracted"].get(n)
            if got != c:
                claimed_match = False
    if 2 * k == 12:
        verified = prop["residual_zero"] and weight2_zero and prop["q2_consistent"]
        claimed_match = claimed_match and prop["q2_consistent"]
    else:
        verified = prop["residual_zero"] and weight2_zero and all(
            v is not None for v in prop["extracted"].values()
        )

    extra = {}
    if family == "spinc_star":
        extra["witten_reduction"] = star_reduction_check(k, n_half, n_roots=n_roots)

    wall_ms = int((time.perf_counter() - t0) * 1000)
    return TheoremReport(
        f"{family}_dim{dim}",
        dim=dim,
        family=family,
        k=k,
        n_half=n_half,
        rank_N=rank_n,
        constants=prop["extracted"],
        claimed=claimed,
        claimed_match=claimed_match,
        residual_zero=prop["residual_zero"],
        weight2_slice_zero=weight2_zero,
        slices=slices,
        verified=verified,
        extra={**extra, **({"lambda": prop["lambda_solution"]} if "lambda_solution" in prop else {})},
        wall_ms=wall_ms,
        **{"pass": verified and claimed_match},
    )


def star_reduction_check(k, n_half, n_roots=None):
    """c = 0 reduction: the Y-free part of the star kernel's Witten factor is
    the plain Witten product prod A(X_j) under its own p1(M) = 0 condition."""
    if n_roots is None:
        n_roots = 2 * k
    n_free = n_roots - 1
    cap = 4 * (k - 1) + 2
    names = tuple(f"X{i + 1}" for i in range(n_free)) + ("Y",)
    cr = PolyCoeffRing(PolyRing(n_free + 1, cap, names))
    pr = cr.poly_ring
    a_uni = theta.theta_quotient("A", "X", n_half, cap).series
    # p1(L) = p1(M) at Y = 0 collapses to sum X^2 = 0.
    repl0 = pr.zero()
    for j in range(n_free):
        xj = GradedPoly.gen(pr, j)
        repl0 = repl0 - xj * xj
    witten_at_p1zero = _free_a_product(cr, a_uni, n_free, repl0)
    # Star kernel core without the WY factor, with Y set to 0.
    y = GradedPoly.gen(pr, n_free)
    repl = y * y + repl0
    star_core = _free_a_product(cr, a_uni, n_free, repl)

    def y_zero(p):
        return GradedPoly(pr, {kk: v for kk, v in p.terms.items() if kk[n_free] == 0})

    lw = theta.quotient_core("W", "X", n_half, cap)
    lw_y = _lift_univariate(lw, cr, n_free)
    reduced = (star_core * lw_y).map_coefficients(y_zero)
    return reduced == witten_at_p1zero.map_coefficients(y_zero)


# -- the Gamma^0(2)/Gamma_0(2) ladder ------------------------------------


def gamma_pipeline(family, dim, n_half=6, rank_n=8, n_roots=None):
    """Build P2 (theta_2-twisted) and P1 (theta_1-twisted, carrying 2^(N/2)),
    run the triangular (8 delta_2)^(k-2s) eps_2^s decomposition, and check the
    ladder: h_0 = 0, the h_1 sign structure, the h_2 recurrence, and the
    mirror recomposition against the directly built P1."""
    t0 = time.perf_counter()
    fam = {
        "spin": "gamma_spin",
        "spinc_witten": "gamma_spinc_witten",
        "spinc_star": "gamma_spinc_star",
    }[family]
    k = _spin_case(dim, fam)
    kernel, shift = _kernel_for(fam, k, n_half, n_roots=n_roots)
    odd1 = {r: odd_transgression("theta1", r, n_half) for r in range(1, k + 1)}
    odd2 = {r: odd_transgression("theta2", r, n_half) for r in range(1, k + 1)}
    scale_n = Fraction(2 ** (rank_n // 2))
    comps1 = _assemble_components(kernel, odd1, k, shift, families_scale=scale_n)
    comps2 = _assemble_components(kernel, odd2, k, shift)

    marker_cap = 4 * k - 1 if shift == 0 else 4 * k + 1
    marker_ring = PolyRing(kernel.ring.poly_ring.nvars, marker_cap, kernel.ring.poly_ring.names)
    cr = PolyCoeffRing(marker_ring)

    def combine(comps):
        total = QSeries.zero(cr, n_half)
        excluded_r1 = False
        for r, (comp, zero) in sorted(comps.items()):
            if r == 1 and not zero:
                excluded_r1 = True
                continue
            marked = comp.map_coefficients(
                lambda c, r=r: _embed_with_marker(c, marker_ring, 4 * r - 1), ring=cr
            )
            total = total + marked
        return total, excluded_r1

    p1, excl1 = combine(comps1)
    p2, excl2 = combine(comps2)

    hs, residual = modforms.decompose_gamma0upper(p2, k)
    h0_zero = not hs[0]
    # h_1 sign structure: h_1 = (-1)^k * coefficient of q^(1/2) in P2
    # (the bundle image there enters with a minus sign).
    h1_ok = hs[1] == p2.coeff(1) * Fraction((-1) ** k) if len(hs) > 1 else True

    h2_info = {}
    if len(hs) > 2:
        derived_bracket = Fraction(24 * (k - 2) + 8)
        claimed_bracket = Fraction(24 * (k - 2) + 8 * (-1) ** (k - 1))
        recurrence_ok = hs[2] == p2.coeff(2) * Fraction((-1) ** k) - hs[1] * derived_bracket
        h2_info = {
            "derived_bracket": -derived_bracket,
            "claimed_bracket": -claimed_bracket,
            "bracket_matches_printed": derived_bracket == claimed_bracket,
            "recurrence_ok": recurrence_ok,
        }

    mirror = modforms.recompose_gamma0lower(hs, k, n_half, ring=cr).scale(scale_n)
    mirror_ok = mirror == p1

    # Constant-term identity (the 2^(N/2+k) sum_s 2^(-6s) h_s scaling).
    const_identity = p1.coeff(0) == sum(
        (h * (scale_n * Fraction(2 ** (k - 6 * s))) for s, h in enumerate(hs)),
        marker_ring.zero(),
    )

    verified = (
        residual.is_zero()
        and h0_zero
        and h1_ok
        and mirror_ok
        and const_identity
        and h2_info.get("recurrence_ok", True)
    )
    wall_ms = int((time.perf_counter() - t0) * 1000)
    return TheoremReport(
        f"{fam}_dim{dim}",
        dim=dim,
        family=fam,
        k=k,
        n_half=n_half,
        rank_N=rank_n,
        h_list=hs,
        residual_zero=residual.is_zero(),
        h0_zero=h0_zero,
        h1_sign_ok=h1_ok,
        h2=h2_info,
        mirror_ok=mirror_ok,
        constant_term_identity=const_identity,
        r1_excluded=excl1 or excl2,
        verified=verified,
        wall_ms=wall_ms,
        extra={},
        **{"pass": verified},
    )


# -- divisibility table ----------------------------------------------------

_DIVISIBILITY = {
    ("spin_sl2z", 7): [("q^1 identity", 16), ("q^2 identity", 16)],
    ("spin_sl2z", 11): [("q^1 identity", 8), ("q^2 identity", 8)],
    ("spin_sl2z", 15): [("q^1 identity", 32), ("q^2 identity", 32)],
    ("spin_sl2z", 19): [("q^1 identity", 8), ("q^2 identity", 8)],
    ("spin_sl2z", 23): [("q^2 identity", 16)],
    ("spinc_witten", 7): [("q^1 identity", 240), ("q^2 identity", 2160)],
    ("spinc_witten", 11): [("q^1 identity", 504), ("q^2 identity", 16632)],
    ("spinc_witten", 15): [("q^1 identity", 480), ("q^2 identity", 61920)],
    ("spinc_witten", 19): [("q^1 identity", 264), ("q^2 identity", 117288)],
    ("spinc_witten", 23): [("q^2 identity", 24)],
    ("spinc_star", 13): [("q^1 identity", 504), ("q^2 identity", 16632)],
    ("spinc_star", 17): [("q^1 identity", 480), ("q^2 identity", 61920)],
}


def divisibility_table(dim, family):
    """Claimed corollary moduli with direct-divisibility flags.

    "direct" means the modulus divides the verified standalone integer
    constants of the identity; "chained" marks cases resting on
    index-integrality arguments beyond this engine's scope (notably the
    dim-23 cases, whose -24 cross-term is not divisible by the modulus).
    """
    key = (family, dim)
    if key not in _DIVISIBILITY:
        raise ValueError(f"no divisibility data for {key}")
    k = _spin_case(dim, family)
    constants = []
    if k in CLAIMED_RATIOS:
        label, table = CLAIMED_RATIOS[k]
        constants = [abs(int(c)) for c in table.values()]
    else:
        constants = [196560, 24]
    rows = []
    for label, modulus in _DIVISIBILITY[key]:
        direct = all(c % modulus == 0 for c in constants)
        rows.append(
            {
                "expression": label,
                "claimed_modulus": modulus,
                "flag": "direct" if direct else "chained",
            }
        )
    return rows
