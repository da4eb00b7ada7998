import cmath

import pytest

from qknots.scalars import DELTA, RationalFn
from qknots.tl import (
    SingularProjectorError,
    TLElement,
    catalan,
    closure_value,
    compose_pairings,
    delta_sequence,
    enumerate_diagrams,
    is_planar_matching,
    jones_wenzl,
    tl_generator,
)

@pytest.mark.parametrize("n", range(0, 6))
def test_diagram_count_is_catalan(n):
    diagrams = enumerate_diagrams(n)
    assert len(diagrams) == catalan(n)
    assert all(is_planar_matching(d.pairing, n) for d in diagrams)

def test_generator_squares_to_one_loop():
    u = tl_generator(3, 1)
    _, loops = compose_pairings(u.pairing, u.pairing)
    assert loops == 1

def test_identity_is_unit():
    x = TLElement.generator(4, 2)
    one = TLElement.identity(4)
    assert x * one == x and one * x == x

def test_closures_of_identity():
    one = TLElement.identity(3)
    assert closure_value(one, "trace") == DELTA ** 3
    assert closure_value(TLElement.identity(4), "plat") == DELTA ** 2

def test_markov_trace_of_generator():
    # closing U_1 on two strands leaves a single loop
    assert closure_value(TLElement.generator(2, 1), "trace") == DELTA

def test_delta_sequence_chebyshev():
    d = delta_sequence(4, DELTA)
    assert d[0] == 1 and d[1] == DELTA
    assert d[2] == DELTA * DELTA - 1
    assert d[4] == DELTA * d[3] - d[2]

def test_jones_wenzl_trace_is_delta_n():
    p = jones_wenzl(3)
    expected = delta_sequence(3, DELTA)[3]
    assert closure_value(p, "trace") == RationalFn(expected)

def test_numeric_projector_is_idempotent():
    a = cmath.exp(0.37j)
    d = -a * a - 1 / (a * a)
    p = jones_wenzl(3, delta=d)
    assert (p * p).close_to(p, 1e-10)

def test_singular_projector_is_refused():
    # at r = 3, Delta_2 = 0 so P_3 does not exist
    a = cmath.exp(1j * cmath.pi / 6)
    d = -a * a - 1 / (a * a)
    jones_wenzl(2, delta=d)
    with pytest.raises(SingularProjectorError):
        jones_wenzl(3, delta=d)
