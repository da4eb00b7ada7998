import cmath
import math

import numpy as np
import pytest

from qknots.recoupling import AdmissibilityError, RecouplingContext, braid_phase, pentagon_hexagon_check


def test_quantum_integers_standard_root():
    ctx = RecouplingContext(5)
    assert abs(ctx.quantum_int(2) - 2 * math.cos(math.pi / 5)) < 1e-12
    assert abs(ctx.delta_n(ctx.r - 1)) < 1e-12


def test_admissibility_rules():
    ctx = RecouplingContext(5)
    assert ctx.is_admissible(1, 1, 2)
    assert not ctx.is_admissible(1, 1, 1)      # parity
    assert not ctx.is_admissible(0, 1, 3)      # triangle
    assert not ctx.is_admissible(3, 3, 2)      # sum above 2r - 4
    with pytest.raises(AdmissibilityError):
        ctx.require(3, 3, 2)


def test_theta_symmetric():
    ctx = RecouplingContext(7)
    vals = {ctx.theta_net(*p) for p in [(1, 2, 3), (3, 1, 2), (2, 3, 1)]}
    assert max(vals) - min(vals) < 1e-12


def test_tet_symmetry_and_cache():
    ctx = RecouplingContext(6)
    a = ctx.tet_net(1, 1, 2, 1, 1, 0)
    n = ctx.tet_evaluations
    # same tetrahedron with vertices relabelled
    b = ctx.tet_net(1, 1, 0, 1, 1, 2)
    assert abs(a - b) < 1e-12
    assert ctx.tet_evaluations == n


def test_matrix_orthogonal_and_trivial_cases():
    ctx = RecouplingContext(6)
    m = ctx.recoupling_matrix(1, 1, 1, 1)
    assert m.orthogonality_residual() < 1e-12
    assert m.rows == (0, 2) and m.cols == (0, 2)
    one = ctx.recoupling_matrix(0, 2, 0, 2)
    assert np.allclose(np.abs(one.matrix), 1)


def test_braid_phase_values():
    A = cmath.exp(0.17j)
    assert abs(braid_phase(A, 1, 1, 0) - (-A ** 3)) < 1e-12
    assert abs(braid_phase(A, 1, 1, 2) - 1 / A) < 1e-12


def test_braid_rep_is_unitary():
    ctx = RecouplingContext(6)
    rep = ctx.braid_rep(4, 1)
    assert rep.dim == 2
    assert rep.unitarity_residual() < 1e-10
    assert rep.braid_relation_residual() < 1e-10


def test_pentagon_hexagon_at_level_6():
    res = pentagon_hexagon_check(RecouplingContext(6), {0, 2, 4})
    assert max(res["pentagon"], res["hexagon"], res["hexagon_inverse"]) < 1e-9


def test_table_is_json_ready():
    import json

    t = RecouplingContext(4).table()
    assert json.loads(json.dumps(t))["r"] == 4
