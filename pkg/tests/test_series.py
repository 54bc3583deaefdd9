from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oddgenus.series import QQ, QSeries, RingMismatchError, TruncationError, poly_series_ring


def qq(coeffs, order=8):
    return QSeries(QQ, coeffs, order)


def test_add_cancellation():
    one_plus_q = qq({0: 1, 2: 1})
    one_minus_q = qq({0: 1, 2: -1})
    assert one_plus_q + one_minus_q == qq({0: 2})


def test_add_identity():
    e4ish = qq({0: 1, 2: 240, 4: 2160})
    assert e4ish + qq({}) == e4ish


def test_add_delta2_eps2_u1():
    # -3 + 1 at the q^(1/2) slot
    d2 = qq({0: F(-1, 8), 1: -3})
    e2 = qq({1: 1})
    assert (d2 + e2).coeff(1) == -2


def test_mul_difference_of_squares():
    assert qq({0: 1, 2: 1}) * qq({0: 1, 2: -1}) == qq({0: 1, 4: -1})


def test_mul_truncates_to_min_order():
    a = qq({0: 1, 1: 1}, order=5)
    b = qq({0: 1}, order=3)
    assert (a * b).order == 3


def test_mul_convolution_against_bruteforce():
    # independent oracle: direct double loop on dense lists
    a = qq({0: 2, 1: F(1, 3), 3: -5, 6: 7})
    b = qq({0: 1, 2: F(-2, 7), 5: 11})
    prod = a * b
    for e in range(8):
        expect = sum(
            (a.coeffs.get(i, F(0)) * b.coeffs.get(e - i, F(0)) for i in range(e + 1)),
            F(0),
        )
        assert prod.coeff(e) == expect


def test_inv_geometric():
    inv = qq({0: 1, 2: -1}).inv()
    assert inv == qq({0: 1, 2: 1, 4: 1, 6: 1})
    assert qq({0: 1, 1: -1}, 3).inv() == qq({0: 1, 1: 1, 2: 1}, 3)


def test_inv_roundtrip():
    a = qq({0: F(3, 2), 1: 4, 2: F(-1, 5), 7: 2})
    assert a * a.inv() == QSeries.one(QQ, 8)


def test_inv_requires_unit():
    with pytest.raises(ZeroDivisionError):
        qq({1: 1}).inv()


def test_pow_square():
    assert qq({0: 1, 1: 1}) ** 2 == qq({0: 1, 1: 2, 2: 1})
    assert qq({0: 1, 2: 1}) ** 0 == QSeries.one(QQ, 8)


def test_pow_negative_routes_through_inv():
    a = qq({0: 2, 2: 1})
    assert a**-2 == (a.inv()) ** 2


def test_coeff_beyond_truncation_is_error():
    a = qq({0: 1}, order=4)
    with pytest.raises(TruncationError):
        a.coeff(4)
    with pytest.raises(TruncationError):
        a.coeff_q(2)


def test_ring_mismatch():
    pr = poly_series_ring(1, 4)
    with pytest.raises(RingMismatchError):
        qq({0: 1}) + QSeries.one(pr, 8)


def test_tau_shift_negates_odd_powers():
    a = qq({0: 1, 1: 1, 2: 3, 3: F(1, 2)})
    sh = a.tau_shift()
    assert sh == qq({0: 1, 1: -1, 2: 3, 3: F(-1, 2)})


def test_tau_shift_fixes_integer_powers():
    e4ish = qq({0: 1, 2: 240, 4: 2160})
    assert e4ish.tau_shift() == e4ish


def test_json_shape():
    obj = qq({0: F(1, 4), 1: -3}, 4).to_json_obj()
    assert obj == {"order_half": 4, "terms": [[0, "1/4"], [1, "-3"]]}


small_fracs = st.fractions(
    min_value=-4, max_value=4, max_denominator=6
)
series_strategy = st.builds(
    lambda d: qq({e: c for e, c in d.items() if c != 0}, order=6),
    st.dictionaries(st.integers(min_value=0, max_value=5), small_fracs, max_size=4),
)


@settings(max_examples=60, deadline=None)
@given(series_strategy, series_strategy, series_strategy)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=40, deadline=None)
@given(series_strategy, series_strategy)
def test_tau_shift_is_ring_hom_and_involution(a, b):
    assert a.tau_shift().tau_shift() == a
    assert (a * b).tau_shift() == a.tau_shift() * b.tau_shift()
    assert (a + b).tau_shift() == a.tau_shift() + b.tau_shift()


@settings(max_examples=40, deadline=None)
@given(series_strategy)
def test_inv_property(a):
    if a.coeffs.get(0, F(0)) != 0:
        assert a * a.inv() == QSeries.one(QQ, a.order)
