from fractions import Fraction as F

import pytest

from levintype.numeric import (FLOAT, RATIONAL, Polynomial, SingularError, binomial_row, field_named,
                               finite_difference, infer_field, pochhammer, poly_eval, series_divide,
                               series_multiply)


@pytest.mark.parametrize("p, z, expected", [
    ([1], 5, 1),
    ([0, 1], 3, 3),
    ([1, 1, F(1, 2)], 1, F(5, 2)),
])
def test_poly_eval(p, z, expected):
    assert poly_eval(p, z) == expected
    assert Polynomial(p)(z) == expected


@pytest.mark.parametrize("num, den, order, expected", [
    ([1], [1, -1], 3, [1, 1, 1, 1]),
    ([2, 1], [2, -1], 3, [1, 1, F(1, 2), F(1, 4)]),
    ([0], [1, 7], 2, [0, 0, 0]),
])
def test_series_divide(num, den, order, expected):
    num = [F(x) for x in num]
    den = [F(x) for x in den]
    assert series_divide(num, den, order) == expected


def test_series_divide_rejects_zero_constant_term():
    with pytest.raises(SingularError):
        series_divide([F(1)], [F(0), F(1)], 3)


def test_series_divide_inverts_multiplication():
    a = [F(3), F(-1, 2), F(7), F(1, 9)]
    b = [F(2), F(5), F(-1, 3)]
    prod = series_multiply(a, b, 3)
    assert series_divide(prod, b, 3) == a


@pytest.mark.parametrize("f, k, n, expected", [
    (lambda n: n * n, 2, 0, 2),
    (lambda n: 7, 1, 4, 0),
    (lambda n: n * (n + 1), 3, 0, 0),
])
def test_finite_difference(f, k, n, expected):
    assert finite_difference(f, k, n) == expected


def test_finite_difference_on_list_and_short_input():
    assert finite_difference([0, 1, 4, 9], 2, 1) == 2
    with pytest.raises(IndexError):
        finite_difference([0, 1, 4], 3, 0)


def test_finite_difference_annihilates_polynomials():
    p = Polynomial([F(3), F(-2, 7), F(5), F(1, 3)])
    for k in range(4, 8):
        for n in range(5):
            assert finite_difference(p, k, n) == 0


def test_binomials_and_pochhammer():
    assert binomial_row(5) == [1, 5, 10, 10, 5, 1]
    assert sum(binomial_row(60)) == 2 ** 60
    assert pochhammer(3, 0) == 1
    assert pochhammer(F(1, 2), 3) == F(1, 2) * F(3, 2) * F(5, 2)


def test_polynomial_degree_ignores_trailing_zeros():
    assert Polynomial([F(1), F(2), F(0), F(0)]).degree() == 1
    assert Polynomial([1.0, 2.0, 1e-20]).degree(FLOAT) == 1
    assert Polynomial([0]).degree() == -1


def test_fields():
    assert field_named("rational") is RATIONAL and field_named("f64") is FLOAT
    with pytest.raises(ValueError):
        field_named("decimal")
    assert RATIONAL.convert("3/7") == F(3, 7)
    assert RATIONAL.convert(0.5) == F(1, 2)
    assert RATIONAL.ratio(1, 3) == F(1, 3)
    assert isinstance(FLOAT.ratio(1, 3), float)
    assert infer_field([1, F(1, 2)]) is RATIONAL
    assert infer_field([1, 0.5]) is FLOAT
    assert FLOAT.is_zero(1e-15) and not RATIONAL.is_zero(F(1, 10 ** 30))
