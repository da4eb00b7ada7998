import cmath
import pytest

from qknots.networks import Network, NetworkError, evaluate_closed_network, loop_network, tet_network, theta_network
from qknots.recoupling import RecouplingContext


def test_loop_is_delta_n():
    ctx = RecouplingContext(7)
    for a in range(4):
        assert abs(evaluate_closed_network(loop_network(a), ctx.A) - ctx.delta_n(a)) < 1e-10


def test_theta_matches_closed_form():
    ctx = RecouplingContext(6)
    assert abs(evaluate_closed_network(theta_network(2, 2, 2), ctx.A) - ctx.theta_net(2, 2, 2)) < 1e-10


def test_tet_with_two_vacuum_edges_is_a_loop():
    ctx = RecouplingContext(7)
    direct = evaluate_closed_network(tet_network(1, 1, 0, 1, 1, 0), ctx.A)
    assert abs(direct - ctx.delta_n(1)) < 1e-10
    assert abs(direct - ctx.tet_net(1, 1, 0, 1, 1, 0)) < 1e-10


def test_inadmissible_network_rejected():
    with pytest.raises(NetworkError):
        evaluate_closed_network(theta_network(1, 1, 1), cmath.exp(0.1j)).real


def test_label_cap():
    with pytest.raises(NetworkError):
        evaluate_closed_network(loop_network(9), cmath.exp(0.1j), max_label=8)


def test_non_trivalent_graph_rejected():
    net = Network(edges=((0, 1, 1), (0, 1, 1)), rotation={0: (0, 1), 1: (1, 0)})
    with pytest.raises(NetworkError):
        net.validate()
