import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oddgenus.graded import GradedPoly, OddProductError, PolyRing


RING = PolyRing(2, 8, names=("X1", "X2"))
X1, X2 = RING.gens()
YRING = PolyRing(2, 8, names=("X1", "Y"))


def test_mul_degree_and_odd_rules():
    assert X1 * X2 == GradedPoly(RING, {(1, 1, 0): F(1)})
    t3 = GradedPoly.odd_gen(RING, 3)
    assert (X1 + t3) * X1 == X1 * X1 + X1 * t3
    with pytest.raises(OddProductError):
        t3 * t3


def test_truncation_by_degree_cap():
    assert not (X1**2 * X2**2 * X1)  # degree 10 > cap 8


def test_exp_even_taylor():
    y = GradedPoly.gen(YRING, 1)
    e = (y * F(1, 2)).exp_even()
    expect = (
        YRING.one()
        + y * F(1, 2)
        + y**2 * F(1, 8)
        + y**3 * F(1, 48)
        + y**4 * F(1, 384)
    )
    assert e == expect
    assert YRING.zero().exp_even() == YRING.one()


def test_exp_even_group_law():
    assert X1.exp_even() * (-X1).exp_even() == RING.one()
    a, b = X1 * F(2, 3), X2 * F(-1, 2)
    assert (a + b).exp_even() == a.exp_even() * b.exp_even()


def test_exp_even_rejects_constant_and_odd():
    with pytest.raises(ValueError):
        (RING.one() + X1).exp_even()
    with pytest.raises(OddProductError):
        GradedPoly.odd_gen(RING, 3).exp_even()


def test_degree_component():
    p = RING.one() + X1**2
    assert p.degree_component(4) == X1**2
    assert p.degree_component(0) == RING.one()
    assert p.degree_component(3) == RING.zero()
    t3 = GradedPoly.odd_gen(RING, 3)
    q = X1 * t3 + t3
    assert q.degree_component(3) == t3


def test_degree_components_sum_back():
    p = (RING.one() + X1 + X2**2) ** 2 + GradedPoly.odd_gen(RING, 3) * X1
    total = RING.zero()
    for d, comp in p.degree_components().items():
        for key in comp.terms:
            assert 2 * sum(key[:-1]) + key[-1] == d
        total = total + comp
    assert total == p


@settings(max_examples=30, deadline=None)
@given(
    st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2), st.fractions(min_value=-3, max_value=3, max_denominator=4)), max_size=4),
    st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2), st.fractions(min_value=-3, max_value=3, max_denominator=4)), max_size=4),
)
def test_mul_respects_grading(ta, tb):
    def mk(ts):
        out = RING.zero()
        for i, j, c in ts:
            out = out + X1**i * X2**j * c
        return out

    a, b = mk(ta), mk(tb)
    prod = a * b
    ac, bc = a.degree_components(), b.degree_components()
    for d, comp in prod.degree_components().items():
        conv = RING.zero()
        for i, pa in ac.items():
            if d - i in bc:
                conv = conv + pa * bc[d - i]
        assert conv == comp


def test_eval_numeric_slots():
    p = X1**2
    assert p.eval_numeric([2.0, 0.0])[0] == pytest.approx(4.0)
    t3 = GradedPoly.odd_gen(RING, 3)
    ev = (X1 * t3).eval_numeric([3.0, 0.0])
    assert ev[3] == pytest.approx(3.0)


def test_eval_numeric_exp_oracle():
    # tail bound from the first dropped Taylor term (degree cap 8 keeps X^4)
    e = X1.exp_even()
    val = e.eval_numeric([0.1, 0.0])[0]
    tail = sum(0.1**k / math.factorial(k) for k in range(5, 12))
    assert abs(val - math.exp(0.1)) <= tail * 1.0001


def test_eval_requires_full_assignment():
    with pytest.raises(ValueError):
        X1.eval_numeric([1.0])


def test_inv_unit():
    p = RING.one() * 2 + X1
    assert p * p.inv() == RING.one()
    with pytest.raises(ZeroDivisionError):
        X1.inv()


def test_substitute_even_square():
    pr = PolyRing(3, 8, names=("X1", "X2", "Y"))
    x1, x2, y = pr.gens()
    p = x2**2 * x1**2 + x2**4
    repl = y * y * 3 - x1 * x1
    got = p.substitute_even_square(1, repl)
    assert got == repl * x1**2 + repl**2
    with pytest.raises(ValueError):
        (x2 * x1).substitute_even_square(1, repl)
