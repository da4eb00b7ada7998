import math

import numpy as np

from qknots.fibmodel import FIB, FibConstants, fib_b3_generators, fib_braid_rep, fib_F, fibonacci_number, process_basis


def test_golden_loop_and_expansions():
    assert abs(FIB.Delta - (1 + math.sqrt(5)) / 2) < 1e-12
    assert abs(FIB.loop_by_expansion() - FIB.Delta) < 1e-10
    assert abs(FIB.theta_by_expansion() - FIB.theta) < 1e-10


def test_symmetrization_removes_asymmetry():
    raw = FIB.pre_symmetric_F()
    assert abs(raw[0, 1] - raw[1, 0]) > 0.1
    assert np.allclose(FIB.symmetrized_F(), fib_F())


def test_conjugate_root_is_distinct():
    other = FibConstants(root=-1)
    assert abs(other.delta - (1 - math.sqrt(5)) / 2) < 1e-12


def test_fibonacci_numbers():
    assert [fibonacci_number(k) for k in range(7)] == [1, 1, 2, 3, 5, 8, 13]


def test_three_particle_charge_one_matches_generators():
    S1, S2 = fib_b3_generators()
    rep = fib_braid_rep(3, 1)
    assert np.allclose(rep.generators[0], S1)
    assert np.allclose(rep.generators[1], S2)


def test_process_basis_charges():
    basis = process_basis(5, 0)
    assert len(basis) == fibonacci_number(3)
    assert all(s[-1] == 1 for s in basis)


def test_word_image_unitary():
    rep = fib_braid_rep(5)
    m = rep.word_image((1, -2, 3, 4, -1))
    assert np.allclose(m.conj().T @ m, np.eye(rep.dim))


def test_level_five_matrix_matches_f_up_to_signs():
    from qknots.recoupling import RecouplingContext

    m = np.asarray(RecouplingContext(5).recoupling_matrix(2, 2, 2, 2).matrix)
    d = np.diag([1.0, -1.0])
    assert np.allclose(m, d @ fib_F() @ d)
