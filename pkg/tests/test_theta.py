import cmath
from fractions import Fraction as F

import pytest

from oddgenus import theta
from oddgenus.series import QQ


def poly_terms(tq, u_exp):
    return {k[0]: v for k, v in tq.series.coeff(u_exp).terms.items()}


def test_a_quotient_q0_taylor():
    # (X/2)/sinh(X/2) = 1 - X^2/24 + 7X^4/5760 - ...
    a = theta.theta_quotient("A", n_half=6, degree_cap=8)
    assert poly_terms(a, 0) == {0: F(1), 2: F(-1, 24), 4: F(7, 5760)}
    # numeric oracle at small real x
    x = 0.05
    val = sum(complex(c) * x**p for p, c in poly_terms(a, 0).items())
    exact = (x / 2) / ((cmath.exp(x / 2) - cmath.exp(-x / 2)) / 2).real
    assert abs(val - exact) < 1e-10


def test_q1_quotient_q0_is_cosh_half():
    q1 = theta.theta_quotient("Q1", n_half=6, degree_cap=8)
    assert poly_terms(q1, 0) == {0: F(1), 2: F(1, 8), 4: F(1, 384)}


def test_q2_u1_coefficient():
    # q^(1/2) coefficient is 2 - e^X - e^(-X) = -(X^2 + X^4/12 + ...)
    q2 = theta.theta_quotient("Q2", n_half=6, degree_cap=8)
    assert poly_terms(q2, 1) == {2: F(-1), 4: F(-1, 12)}


def test_logd1_z1_coefficient_q0():
    l1 = theta.theta_quotient("LOGD1", "Z", n_half=6, degree_cap=8)
    assert poly_terms(l1, 0)[1] == F(1, 4)


def test_logd2_leading():
    l2 = theta.theta_quotient("LOGD2", "Z", n_half=6, degree_cap=4)
    assert poly_terms(l2, 1)[1] == F(-2)


def test_parity_contracts():
    for kind in theta.THETA_KINDS:
        tq = theta.theta_quotient(kind, n_half=6, degree_cap=8)
        assert theta.variable_parity_ok(tq)


def test_tau_shift_swaps_q2_q3_and_fixes_q1_a():
    n, cap = 8, 6
    q2 = theta.theta_quotient("Q2", n_half=n, degree_cap=cap).series
    q3 = theta.theta_quotient("Q3", n_half=n, degree_cap=cap).series
    assert q2.tau_shift() == q3
    assert q3.tau_shift() == q2
    for kind in ("A", "Q1"):
        s = theta.theta_quotient(kind, n_half=n, degree_cap=cap).series
        assert s.tau_shift() == s


def test_theta_const_fourth_goldens():
    t1 = theta.theta_const_fourth(1, 6)
    assert t1.coeff(0) == 0 and t1.coeff(1) == 16
    t3 = theta.theta_const_fourth(3, 6)
    assert (t3.coeff(0), t3.coeff(1), t3.coeff(2)) == (1, 8, 24)
    # (1/16) theta1^4 theta3^4 has leading coefficient q^(1/2)
    eps2 = (t1 * t3).scale(F(1, 16))
    assert eps2.coeff(1) == 1 and eps2.coeff(0) == 0


def test_theta_const_fourth_numeric_oracle():
    tau = 0.07 + 1.1j
    u = cmath.exp(1j * cmath.pi * tau)
    for j in (1, 2, 3):
        series = theta.theta_const_fourth(j, 40)
        sym = sum(complex(c) * u**e for e, c in series.coeffs.items())
        num = theta.theta_numeric(f"theta{j}", 0, tau, 60) ** 4
        assert abs(sym - num) < 1e-9


def test_quotient_series_vs_numeric():
    samples = [
        (0.04 - 0.01j, 0.09 + 1.2j),
        (-0.07 + 0.03j, -0.3 + 1.1j),
        (0.11 + 0.02j, 0.42 + 1.5j),
    ]
    # degree cap 30 keeps the truncation tail under 1e-9 at |v| ~ 0.11
    for kind in theta.THETA_KINDS:
        tq = theta.theta_quotient(kind, n_half=14, degree_cap=30)
        for v, tau in samples:
            sym, num = theta.series_vs_numeric(tq, v, tau, n_factors=60)
            assert abs(sym - num) < 1e-9, (kind, v, tau)


def test_numeric_rejects_lower_half_plane():
    with pytest.raises(ValueError):
        theta.theta_numeric("theta", 0.1, 0.2 - 1j)


def test_theta_at_zero_vanishes():
    assert abs(theta.theta_numeric("theta", 0, 0.1 + 1.1j)) == 0


def test_jacobi_identity_numeric():
    tau = 0.1 + 1.1j
    lhs = theta.theta_numeric("theta_prime0", 0, tau)
    rhs = (
        cmath.pi
        * theta.theta_numeric("theta1", 0, tau)
        * theta.theta_numeric("theta2", 0, tau)
        * theta.theta_numeric("theta3", 0, tau)
    )
    assert abs(lhs - rhs) < 1e-9


def test_s_law_theta2_numeric():
    v, tau = 0.13 - 0.04j, 0.21 + 1.3j
    lhs = theta.theta_numeric("theta2", v, -1 / tau)
    rhs = (
        cmath.sqrt(tau / 1j)
        * cmath.exp(1j * cmath.pi * tau * v * v)
        * theta.theta_numeric("theta1", tau * v, tau)
    )
    assert abs(lhs - rhs) < 1e-9


def test_full_law_suite():
    results = theta.transformation_law_suite(theta.default_law_samples(20), 1e-9, 40)
    assert len(results) == 11
    for name, dev, ok in results:
        assert ok, (name, dev)
