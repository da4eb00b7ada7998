"""The Fibonacci model at ``A = exp(3 pi i / 5)``.

Labels are ``0`` (the vacuum) and ``1`` (the particle ``P``, realized in the
diagrammatics as the 2-projector).  The local braiding matrix is
``R = diag(A^8, -A^4)`` on channels ``(0, P)``, and the recoupling matrix is
``F = [[tau, sqrt(tau)], [sqrt(tau), -tau]]``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .networks import evaluate_closed_network, tet_network, theta_network
from .treereps import BraidRep, build_tree_rep

__all__ = [
    "FibConstants",
    "FIB",
    "fib_F",
    "fib_R",
    "fib_b3_generators",
    "process_basis",
    "fib_braid_rep",
    "fibonacci_number",
]


@dataclass(frozen=True)
class FibConstants:
    """Scalars of the model.  ``root=+1`` takes the golden root
    ``Delta = (1+sqrt5)/2``; ``root=-1`` the conjugate root (no golden values
    are claimed for it)."""

    root: int = 1

    @property
    def A(self) -> complex:
        return cmath.exp(3j * math.pi / 5) if self.root > 0 else cmath.exp(1j * math.pi / 5)

    @property
    def delta(self) -> float:
        return (1 + self.root * math.sqrt(5)) / 2

    @property
    def Delta(self) -> float:
        # the 2-projector loop: delta^2 - 1, equal to delta at this root
        return self.delta ** 2 - 1

    @property
    def tau(self) -> float:
        return 1 / self.Delta

    @property
    def theta(self) -> float:
        return self.delta - 1

    @property
    def tet(self) -> float:
        return 3 * self.delta - 5

    @property
    def alpha_sq(self) -> float:
        return math.sqrt(abs(self.Delta) ** 3) / self.theta

    def pre_symmetric_F(self) -> np.ndarray:
        D, T, Th = self.Delta, self.tet, self.theta
        return np.array([[1 / D, D / Th], [Th / D ** 2, T * D / Th ** 2]])

    def symmetrized_F(self) -> np.ndarray:
        """Conjugate the raw matrix by ``diag(1, alpha^2)``."""
        d = np.diag([1.0, self.alpha_sq])
        return d @ self.pre_symmetric_F() @ np.linalg.inv(d)

    def theta_by_expansion(self) -> complex:
        return evaluate_closed_network(theta_network(2, 2, 2), self.A)

    def tet_by_expansion(self) -> complex:
        return evaluate_closed_network(tet_network(2, 2, 2, 2, 2, 2), self.A)

    def loop_by_expansion(self) -> complex:
        return evaluate_closed_network(theta_network(2, 2, 0), self.A)


FIB = FibConstants()


def fib_F() -> np.ndarray:
    tau = (math.sqrt(5) - 1) / 2
    s = math.sqrt(tau)
    return np.array([[tau, s], [s, -tau]])


def fib_R() -> np.ndarray:
    A = FIB.A
    return np.diag([A ** 8, -(A ** 4)])


def fib_b3_generators() -> tuple[np.ndarray, np.ndarray]:
    """``(S1, S2) = (R, F R F)``."""
    F, R = fib_F(), fib_R()
    return R, F @ R @ F


def fibonacci_number(k: int) -> int:
    """``f_0 = f_1 = 1``, ``f_{k+1} = f_k + f_{k-1}``."""
    a, b = 1, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def _admissible(x: int, y: int, z: int) -> bool:
    # P x P = 1 + P; the vacuum fuses trivially
    if x == 0:
        return y == z
    if y == 0:
        return x == z
    return x == 1 and y == 1


def _recouple(left: int, top: int):
    rows = tuple(e for e in (0, 1) if _admissible(left, 1, e) and _admissible(e, 1, top))
    cols = tuple(y for y in (0, 1) if _admissible(1, 1, y) and _admissible(left, y, top))
    if len(rows) == 2:
        return rows, cols, fib_F()
    # one-dimensional moves are trivial
    return rows, cols, np.ones((1, 1))


def process_basis(n: int, total_charge: int = 0) -> tuple[tuple[int, ...], ...]:
    """Internal labels ``(x_1..x_{n-2})`` of the left-associated tree, sorted."""
    if n < 3:
        raise ValueError("process spaces start at three strands")
    return fib_braid_rep(n, total_charge).states


@lru_cache(maxsize=None)
def fib_braid_rep(n: int, total_charge: int = 0) -> BraidRep:
    """Unitary representation of ``B_n`` on the fusion space of ``n``
    particles with the given total charge.

    ``total_charge=0`` has dimension ``f_{n-2}``.  For ``n = 3`` and
    ``total_charge=1`` the generators are exactly ``(S1, S2)``.
    """
    if n < 2:
        raise ValueError("need at least two strands")
    if total_charge not in (0, 1):
        raise ValueError("total charge is 0 or 1")
    R = fib_R()
    return build_tree_rep(
        n, 1, (0, 1), _admissible, _recouple, lambda y: R[y, y], total_charge
    )
