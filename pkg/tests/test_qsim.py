import cmath
import math

import numpy as np
import pytest

from qknots.braids import BraidWord, parse_braid
from qknots.bracket import bracket_tl
from qknots.fibmodel import FIB
from qknots.qsim import (
    RegimeError,
    bracket_via_trace,
    colored_bracket_plat,
    hadamard_circuit_probability,
    hadamard_test,
    hadamard_trace,
    three_strand_rep,
    wrt_invariant,
)
from qknots.recoupling import AdmissibilityError, RecouplingContext


@pytest.mark.parametrize("theta", [0.0, 0.2, -0.45, math.pi / 6])
def test_three_strand_relations(theta):
    rep = three_strand_rep(cmath.exp(1j * theta))
    assert max(rep.relation_residuals().values()) < 1e-12


def test_non_unitary_regime_refused():
    with pytest.raises(RegimeError):
        three_strand_rep(cmath.exp(0.7j))
    rep = three_strand_rep(cmath.exp(0.7j), allow_nonunitary=True)
    assert rep.relation_residuals()["braid"] < 1e-12


def test_trace_formula_trefoil_in_b3():
    b = parse_braid("1 1 1", 3)
    a = cmath.exp(0.1j)
    assert abs(bracket_via_trace(b, a) - bracket_tl(b).evaluate(a)) < 1e-12


def test_trace_formula_needs_three_strands():
    with pytest.raises(ValueError):
        bracket_via_trace(parse_braid("1", 2), 1)


@pytest.mark.parametrize("part", ["real", "imaginary"])
def test_sampler_probability_matches_circuit(part):
    rng = np.random.default_rng(4)
    q, _ = np.linalg.qr(rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3)))
    psi = rng.standard_normal(3) + 1j * rng.standard_normal(3)
    psi /= np.linalg.norm(psi)
    h = hadamard_test(q, psi, 10, part, 0)
    assert abs(hadamard_circuit_probability(q, psi, part) - (0.5 + 0.5 * h.exact)) < 1e-12


def test_sampler_is_seeded():
    u = np.diag([1j, -1.0])
    a = hadamard_test(u, [1, 0], 1000, "im", seed=3)
    b = hadamard_test(u, [1, 0], 1000, "im", seed=3)
    assert a == b
    assert a.zero_count == 1000 and a.estimate == 1.0


def test_unnormalized_state_warns():
    with pytest.warns(UserWarning):
        hadamard_test(np.eye(2), [2, 0], 10)


def test_trace_estimate():
    u = three_strand_rep(cmath.exp(0.3j)).word_image(parse_braid("1 -2 1", 3))
    est, err = hadamard_trace(u, 200_000, seed=1)
    assert abs(est - np.trace(u)) < 5 * err


def test_colored_plat_color_one_is_bracket():
    ctx = RecouplingContext(7)
    b = parse_braid("2 2 2", 4)
    value = colored_bracket_plat(b, 1, ctx)
    # unnormalized: color 1 is delta times the ordinary bracket
    assert abs(value - ctx.delta_n(1) * bracket_tl(b, "plat").evaluate(ctx.A)) < 1e-9


def test_fibonacci_model_only_color_two():
    with pytest.raises(AdmissibilityError):
        colored_bracket_plat(BraidWord(2, ()), 1, FIB)


def test_wrt_unknot_and_unlink():
    r = 5
    ctx = RecouplingContext(r)
    unlink = wrt_invariant(BraidWord(4, ()), r, ctx=ctx)
    assert abs(unlink - sum(ctx.delta_n(a) ** 3 for a in range(r - 1))) < 1e-9
