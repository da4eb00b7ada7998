import math

import numpy as np
import pytest

from qknots.fibmodel import fib_b3_generators
from qknots.scalars import Quaternion
from qknots.su2reps import (
    ConstraintRejected,
    density_probe,
    euler_decompose,
    fibonacci_b3_quaternions,
    is_su2,
    pair_word_image,
    rotate,
    su2_distance,
    theorem1_construct,
)
from qknots.su2reps import _euler_product

I, J, K = (Quaternion.pure(v) for v in np.eye(3))


def test_rotate_matches_conjugation():
    rng = np.random.default_rng(0)
    for _ in range(20):
        g = Quaternion(*rng.standard_normal(4)).normalized()
        P = Quaternion.pure(rng.standard_normal(3))
        assert (rotate(g, P) - g * P * g.conj()).norm() < 1e-12


def test_rotate_quarter_turn_about_k():
    g = Quaternion.exp_pure(math.pi / 4, K)
    assert rotate(g, I).close_to(J, 1e-12)


def test_theorem_accepts_valid_constraint():
    a, b = math.cos(1.1), math.sin(1.1)
    target = (a * a - b * b) / (2 * b * b)
    v = Quaternion.pure([target, math.sqrt(1 - target ** 2), 0])
    pair = theorem1_construct(a, b, I, v)
    assert pair.braid_residual() < 1e-12


def test_theorem_rejects_and_allows_equal_axes():
    a, b = math.cos(0.4), math.sin(0.4)
    with pytest.raises(ConstraintRejected):
        theorem1_construct(a, b, I, J)
    assert theorem1_construct(a, b, I, I).braid_residual() < 1e-12
    with pytest.raises(ValueError):
        theorem1_construct(1.0, 0.0, I, J)


def test_euler_orthogonal_axes_round_trip():
    rng = np.random.default_rng(2)
    for _ in range(30):
        q = Quaternion(*rng.standard_normal(4)).normalized()
        angles = euler_decompose(q, I, J)
        assert su2_distance(_euler_product(angles, I, J).as_matrix(), q.as_matrix()) < 1e-9


def test_euler_unreachable_for_close_axes():
    v = Quaternion.pure([math.cos(0.1), math.sin(0.1), 0])
    with pytest.raises(ValueError):
        euler_decompose(Quaternion.exp_pure(1.3, K), I, v)


def test_fibonacci_pair_is_phase_of_anyonic_generators():
    pair = fibonacci_b3_quaternions()
    assert pair.braid_residual() < 1e-12
    S1, S2 = fib_b3_generators()
    g, h = pair.matrices()
    assert is_su2(g) and is_su2(h)
    phase = np.exp(1j * math.pi / 10)
    assert np.allclose(np.sort_complex(np.linalg.eigvals(phase * g)), np.sort_complex(np.linalg.eigvals(S1)))
    assert abs(np.trace(phase * h) - np.trace(S2)) < 1e-12


def test_word_image_inverse_letters():
    pair = fibonacci_b3_quaternions()
    assert pair_word_image(pair, [1, 2, -2, -1]).close_to(Quaternion(1), 1e-12)


def test_density_probe_decreases_and_abelian_pair_stalls():
    pair = fibonacci_b3_quaternions()
    assert density_probe(pair, 6, 100) < density_probe(pair, 2, 100)
    a, b = math.cos(0.7), math.sin(0.7)
    abelian = theorem1_construct(a, b, I, I)
    assert density_probe(abelian, 8, 100) > 1.0
