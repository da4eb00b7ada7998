import cmath
import math

import numpy as np

from qknots.scalars import DELTA, LaurentPoly, Quaternion, RationalFn

A = LaurentPoly.monomial(1)


def test_arithmetic_and_zero_pruning():
    p = LaurentPoly({2: 1, -1: 3})
    q = LaurentPoly({2: -1, 0: 4})
    assert (p + q).terms == {-1: 3, 0: 4}
    assert (p - p).is_zero()
    assert p * LaurentPoly.constant(0) == LaurentPoly.constant(0)
    assert (A * A.invert_variable()) == LaurentPoly.constant(1)


def test_delta_is_minus_a2_minus_am2():
    assert DELTA == -(A * A) - (A * A).invert_variable()


def test_invert_variable_and_shift():
    p = LaurentPoly({3: 2, -1: 1})
    assert p.invert_variable() == LaurentPoly({-3: 2, 1: 1})
    assert p.scale_shift(2) == LaurentPoly({5: 2, 1: 1})


def test_evaluate_matches_python():
    p = LaurentPoly({5: -1, -3: -1, -7: 1})
    a = cmath.exp(0.3j)
    assert abs(p.evaluate(a) - (-a ** 5 - a ** -3 + a ** -7)) < 1e-13


def test_json_round_trip_sorted_descending():
    p = LaurentPoly({-7: 1, 5: -1, -3: -1})
    data = p.to_json()
    assert list(data) == ["5", "-3", "-7"]
    assert LaurentPoly.from_json(data) == p


def test_exact_division():
    p = (A + LaurentPoly.constant(1)) * (A * A - LaurentPoly.constant(3))
    q, r = p.divmod_exact(A + LaurentPoly.constant(1))
    assert r.is_zero()
    assert q == A * A - LaurentPoly.constant(3)


def test_rational_function_reduces():
    num = (A + LaurentPoly.constant(1)) * (A - LaurentPoly.constant(2))
    f = RationalFn(num, A + LaurentPoly.constant(1))
    assert f == RationalFn(A - LaurentPoly.constant(2))
    assert f.to_laurent() == A - LaurentPoly.constant(2)


def test_rational_arithmetic_evaluates_consistently():
    x = RationalFn(LaurentPoly.constant(1), DELTA)
    y = x * RationalFn(DELTA) - RationalFn(1)
    assert y.is_zero()
    a = cmath.exp(0.2j)
    d = -a * a - 1 / (a * a)
    assert abs((x + x).evaluate(a) - 2 / d) < 1e-12


def test_quaternion_algebra():
    i, j, k = Quaternion(0, 1, 0, 0), Quaternion(0, 0, 1, 0), Quaternion(0, 0, 0, 1)
    assert (i * j).close_to(k)
    assert (j * i).close_to(Quaternion(0, 0, 0, -1))
    assert (i * i).close_to(Quaternion(-1))
    q = Quaternion(1, 2, 3, 4)
    assert (q * q.inverse()).close_to(Quaternion(1), 1e-12)
    assert math.isclose(q.norm(), math.sqrt(30))


def test_quaternion_matrix_is_homomorphism():
    rng = np.random.default_rng(1)
    p = Quaternion(*rng.standard_normal(4))
    q = Quaternion(*rng.standard_normal(4))
    assert np.allclose((p * q).as_matrix(), p.as_matrix() @ q.as_matrix())
    u = q.normalized()
    assert Quaternion.from_matrix(u.as_matrix()).close_to(u, 1e-12)
