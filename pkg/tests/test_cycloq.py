from fractions import Fraction as F

import pytest

from modunits.cycloq import Cyclotomic, CyclotomicDivisionError, e_of


def test_e_of_half_turn():
    assert e_of(F(1, 2)) == -1


def test_e_of_multiplicative():
    assert e_of(F(1, 4)) * e_of(F(1, 4)) == e_of(F(1, 2))


def test_fifth_roots_sum_to_zero():
    total = sum((e_of(F(a, 5)) for a in range(5)), Cyclotomic.zero())
    assert total.is_zero()


@pytest.mark.parametrize(
    "x,y",
    [
        (F(1, 3), F(1, 4)),
        (F(2, 5), F(3, 7)),
        (F(5, 8), F(7, 12)),
        (F(1, 2), F(1, 2)),
    ],
)
def test_e_of_is_a_homomorphism(x, y):
    assert e_of(x + y) == e_of(x) * e_of(y)


def test_product_of_conjugates():
    # (1 + i)(1 - i) = 2
    i = e_of(F(1, 4))
    assert (1 + i) * (1 - i) == 2


def test_primitive_cube_roots_sum():
    z = e_of(F(1, 3))
    assert z + z * z == -1


def test_division_round_trip():
    a = Cyclotomic.one() + e_of(F(1, 8))
    inv = Cyclotomic.one() / a
    assert inv * a == 1


@pytest.mark.parametrize("order", [3, 5, 8, 12])
def test_mul_div_cancel(order):
    a = Cyclotomic(order, [F(1), F(2), F(-1)])
    c = Cyclotomic(order, [F(0), F(1), F(3)])
    assert (a * c) / c == a


def test_division_by_zero_is_distinct_error():
    with pytest.raises(CyclotomicDivisionError):
        Cyclotomic.one() / Cyclotomic.zero()


def test_lift_and_reduce_is_identity():
    a = Cyclotomic(5, [F(1), F(-2), F(3), F(0)])
    lifted = Cyclotomic(15, a.lifted_coeffs(15))
    assert lifted == a


def test_compositum_arithmetic():
    # zeta_3 * zeta_4 is a primitive 12th root of unity
    assert e_of(F(1, 3)) * e_of(F(1, 4)) == e_of(F(7, 12))


def test_constant_shrinks_to_rational():
    z = e_of(F(1, 4))
    sq = z * z  # = -1
    assert sq.is_rational()
    assert sq.rational_value() == -1


def test_to_complex():
    val = e_of(F(1, 8)).to_complex()
    assert abs(val - complex(2**-0.5, 2**-0.5)) < 1e-14
