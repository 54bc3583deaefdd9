import random
from fractions import Fraction as F

import pytest

from oddgenus import kring as kr
from oddgenus import theta
from oddgenus.graded import GradedPoly, PolyRing
from oddgenus.series import PolyCoeffRing, QSeries

B = kr.BundleExpr


def lam(sym, i):
    return B.lam_tilde(sym, i)


def test_theta1_expansion_through_q2():
    t1 = kr.build("Theta1", 6)
    assert t1.coeff(0) == B.unit()
    assert t1.coeff(1) == B()
    assert t1.coeff(2) == lam("T", 1) * 2
    expect = lam("T", 1) * 2 + lam("T", 2) + lam("T", 1) * lam("T", 1) + B.sym_tilde("T", 2)
    assert t1.coeff(4) == expect


def test_theta2_theta3_expansions():
    t2 = kr.build("Theta2", 6)
    assert t2.coeff(1) == -lam("T", 1)
    assert t2.coeff(2) == lam("T", 1) + lam("T", 2)
    assert t2.coeff(3) == -(lam("T", 3) + lam("T", 1) + lam("T", 1) * lam("T", 1))
    assert t2.coeff(4) == (
        lam("T", 4)
        + lam("T", 2) * lam("T", 1)
        + lam("T", 1) * lam("T", 1)
        + B.sym_tilde("T", 2)
        + lam("T", 1)
    )
    t3 = kr.build("Theta3", 6)
    for e in range(6):
        assert t3.coeff(e) == t2.coeff(e) * ((-1) ** e)


def test_theta2_tau_shift_is_theta3():
    assert kr.build("Theta2", 6).tau_shift() == kr.build("Theta3", 6)


def test_q_builder_through_q2():
    q = kr.build("Q", 6)
    d = B.delta("E")
    assert q.coeff(0) == d
    assert q.coeff(2) == d * (lam("E", 2) * 2 - lam("E", 1) * lam("E", 1) + lam("E", 1))
    expect_q2 = d * (
        lam("E", 2) * lam("E", 2)
        + lam("E", 4) * 2
        - lam("E", 1) * lam("E", 3) * 2
        + lam("E", 1) * lam("E", 2) * 2
        - lam("E", 1) * lam("E", 1) * lam("E", 1)
        + lam("E", 1)
        + lam("E", 2)
    )
    assert q.coeff(4) == expect_q2


def test_lambda_series_first_order():
    ls = kr.lambda_series("T", +1, False, 6)
    assert ls.coeff(2) == lam("T", 1)  # q^1 term of the q^m family


def test_symm_times_lambda_is_one():
    # S_t(E~) Lam_(-t)(E~) = 1, exactly, in the free ring
    n = 10
    assert kr.symm_series("T", n) * kr.lambda_series("T", -1, False, n) == QSeries.one(
        kr.KRING, n
    )


def test_sym_tilde_powers():
    assert B.sym_tilde("E", 1) == lam("E", 1)
    assert B.sym_tilde("E", 2) == lam("E", 1) * lam("E", 1) - lam("E", 2)


def test_builder_rebuild_idempotent():
    a = kr.build("Q", 6)
    b = kr.build("Q", 6)
    assert a == b
    # normal form: sums of the same terms collapse structurally
    assert (a + b).coeff(2) == a.coeff(2) * 2


def test_rank_rules():
    ranks = {"E": 8, "T": 7, "L": 2}
    assert B.lam("E", 2).rank(ranks) == 28
    assert B.delta("E").rank(ranks) == 16
    assert lam("E", 1).rank(ranks) == 0  # E - dim E
    assert B.sym_tilde("E", 2).rank(ranks) == 0
    assert (B.delta("E") * (lam("E", 2) + 3)).rank(ranks) == 48


def test_builder_constant_term_ranks():
    ranks = {"E": 8, "T": 7, "L": 2}
    assert kr.build("Theta1", 6).coeff(0).rank(ranks) == 1
    assert kr.build("Q", 6).coeff(0).rank(ranks) == 2 ** (8 // 2)
    assert kr.build("ThetaTL", 6).coeff(0).rank(ranks) == 1


def test_atom_cap():
    t = lam("T", 1)
    expr = B.unit()
    with pytest.raises(ValueError):
        for _ in range(kr.DEFAULT_ATOM_CAP + 1):
            expr = expr * t


def test_render():
    assert (-lam("T", 1)).render() == "-T~"
    assert (B.delta("E") * lam("E", 2)).render() == "D(E)(x)L^2(E~)"


# -- Chern character -----------------------------------------------------


def _roots_ring(npairs, trivial, cap=8):
    pr = PolyRing(npairs, cap)
    roots = {"E": kr.RootAssignment(tuple(range(npairs)), trivial)}
    return pr, roots


def test_ch_line_bundle_and_top_power():
    pr, roots = _roots_ring(2, 0)
    # ch(L^2 E) for roots {a, -a, b, -b}: e_2 of the exponentials
    x = B.lam("E", 2).ch(roots, pr)
    assert x.constant_term() == 6
    # top exterior power of a 2-dim piece: for roots {a, b} use a rank-2 symbol
    pr2 = PolyRing(2, 8)
    roots2 = {"E": kr.RootAssignment((0,), 0)}  # roots {a, -a}
    top = B.lam("E", 2).ch(roots2, pr2)
    assert top == pr2.one()  # e^(a) e^(-a) = 1


def test_ch_is_ring_homomorphism_random():
    pr, _ = _roots_ring(2, 1)
    rng = random.Random(5)
    atoms = [lam("E", 1), lam("E", 2), B.lam("E", 1), B.delta("E")]

    def rand_expr():
        out = B.unit(rng.randint(-2, 2))
        for a in atoms:
            if rng.random() < 0.5:
                out = out + a * rng.randint(-2, 2)
        return out

    delta_roots = {"E": kr.RootAssignment((0, 1), 0)}
    for _ in range(8):
        a, b = rand_expr(), rand_expr()
        assert (a + b).ch(delta_roots, pr) == a.ch(delta_roots, pr) + b.ch(delta_roots, pr)
        ch_ab = (a * b).ch(delta_roots, pr)
        assert ch_ab == a.ch(delta_roots, pr) * b.ch(delta_roots, pr)


def test_rank_is_degree0_of_ch():
    pr, roots = _roots_ring(2, 0)
    ranks = {"E": 4}
    for expr in (
        B.lam("E", 2),
        B.delta("E"),
        lam("E", 2),
        B.sym_tilde("E", 2),
        B.delta("E") * lam("E", 1) + B.lam("E", 3) * 5,
    ):
        assert expr.ch(roots, pr).constant_term() == expr.rank(ranks)


def test_ch_tilde_leading_term():
    # ch(T~) for roots {x, -x} + 1 trivial, rank 3: leading term x^2
    pr = PolyRing(1, 8)
    roots = {"T": kr.RootAssignment((0,), 1)}
    x = GradedPoly.gen(pr, 0)
    cht = lam("T", 1).ch(roots, pr)
    assert cht.degree_component(0) == pr.zero()
    assert cht.degree_component(2) == pr.zero()
    assert cht.degree_component(4) == x * x  # e^x + e^-x - 2 = x^2 + x^4/12...


def test_delta_requires_pairs():
    pr = PolyRing(1, 8)
    roots = {"E": kr.RootAssignment((0,), 1)}
    with pytest.raises(ValueError):
        B.delta("E").ch(roots, pr)


# -- the bundle path vs the theta path ------------------------------------


def _lift(uni, cr, var):
    from oddgenus.anomaly import _lift_univariate

    return _lift_univariate(uni, cr, var)


def test_bundle_theta_bridge_dim7():
    """Through q^2 and the degree cap, the ch image of the builders equals the
    theta-quotient products (the k = 2 case, three root pairs + one trivial)."""
    n_half, cap, npairs = 6, 8, 3
    pr = PolyRing(npairs, cap)
    cr = PolyCoeffRing(pr)
    roots = {"T": kr.RootAssignment(tuple(range(npairs)), 1)}

    a_uni = theta.theta_quotient("A", "X", n_half, cap).series
    q_uni = {i: theta.theta_quotient(f"Q{i}", "X", n_half, cap).series for i in (1, 2, 3)}
    prod_a = QSeries.one(cr, n_half)
    prod_q = {i: QSeries.one(cr, n_half) for i in (1, 2, 3)}
    for j in range(npairs):
        prod_a = prod_a * _lift(a_uni, cr, j)
        for i in (1, 2, 3):
            prod_q[i] = prod_q[i] * _lift(q_uni[i], cr, j)

    # A-hat form and the odd spinor character in Chern coordinates
    from oddgenus.theta import _sinh_half_over_half, _cosh_half, _uni_ring

    upr = _uni_ring("X", cap).poly_ring
    ahat_uni = QSeries(PolyCoeffRing(upr), {0: _sinh_half_over_half(upr).inv()}, n_half)
    cosh_uni = QSeries(PolyCoeffRing(upr), {0: _cosh_half(upr)}, n_half)
    ahat = QSeries.one(cr, n_half)
    chd = QSeries.one(cr, n_half).scale(F(2**npairs))
    for j in range(npairs):
        ahat = ahat * _lift(ahat_uni, cr, j)
        chd = chd * _lift(cosh_uni, cr, j)

    # A-hat ch(tensor S_q^n (T~)) == prod_j A(X_j)  (the Witten product)
    ch_symm = kr.ch_series(kr.symm_series("T", n_half), roots, pr, cr)
    assert ahat * ch_symm == prod_a

    # (i=1): A-hat ch(D(M)) ch(Theta1) == prod_j 2A(X_j) Q1(X_j)
    lhs1 = ahat * chd * kr.ch_series(kr.build("Theta1", n_half), roots, pr, cr)
    assert lhs1 == prod_a.scale(F(2**npairs)) * prod_q[1]

    # (i=2,3): A-hat 2^(2k-1) ch(Theta_i) == prod_j 2A(X_j) Q_i(X_j)
    for i in (2, 3):
        lhs = ahat.scale(F(2**npairs)) * kr.ch_series(kr.build(f"Theta{i}", n_half), roots, pr, cr)
        assert lhs == prod_a.scale(F(2**npairs)) * prod_q[i]
