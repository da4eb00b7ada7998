"""Simulated quantum evaluation of link invariants.

* ``ThreeStrandRep``: a 2x2 representation of B_3 through which the bracket
  of any 3-strand closure is a trace plus a correction term.
* ``hadamard_test``: the one-ancilla estimator of Re or Im of a diagonal
  matrix element, sampled at the probability level with a seeded RNG.
* ``colored_bracket_plat``: a single matrix entry of a fusion-tree braid
  representation times ``Delta_a^{n/2}``.
* ``wrt_invariant``: the unnormalized sum over colors of ``Delta_a <L>_a``.

The fusion-tree generators carry the phase convention of the twist formula
in ``recoupling.braid_phase``.  In this package's crossing convention that
is the image of the inverse generator, so plat values are read from the
mirrored word.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass

import numpy as np

from .braids import BraidWord, exponent_sum
from .fibmodel import FibConstants, fib_braid_rep
from .recoupling import AdmissibilityError, RecouplingContext

__all__ = [
    "RegimeError",
    "ThreeStrandRep",
    "three_strand_rep",
    "bracket_via_trace",
    "HadamardEstimate",
    "hadamard_test",
    "hadamard_circuit_probability",
    "hadamard_trace",
    "cap_state",
    "colored_bracket_plat",
    "wrt_invariant",
]


class RegimeError(ValueError):
    """Parameters outside the regime where the construction is valid."""


@dataclass(frozen=True)
class ThreeStrandRep:
    A: complex
    d: complex
    U1: np.ndarray
    U2: np.ndarray

    def phi(self, letter: int) -> np.ndarray:
        if abs(letter) not in (1, 2):
            raise ValueError("three-strand braids use generators 1 and 2")
        U = self.U1 if abs(letter) == 1 else self.U2
        I = np.eye(2)
        if letter > 0:
            return self.A * I + U / self.A
        return I / self.A + self.A * U

    def word_image(self, b: BraidWord) -> np.ndarray:
        out = np.eye(2, dtype=complex)
        for x in b.letters:
            out = out @ self.phi(x)
        return out

    def relation_residuals(self) -> dict[str, float]:
        U1, U2, d = self.U1, self.U2, self.d
        s1, s2 = self.phi(1), self.phi(2)
        return {
            "U1^2-dU1": float(np.max(np.abs(U1 @ U1 - d * U1))),
            "U2^2-dU2": float(np.max(np.abs(U2 @ U2 - d * U2))),
            "U1U2U1-U1": float(np.max(np.abs(U1 @ U2 @ U1 - U1))),
            "U2U1U2-U2": float(np.max(np.abs(U2 @ U1 @ U2 - U2))),
            "braid": float(np.max(np.abs(s1 @ s2 @ s1 - s2 @ s1 @ s2))),
            "unitarity": max(float(np.max(np.abs(s.conj().T @ s - np.eye(2)))) for s in (s1, s2)),
        }


def three_strand_rep(A: complex, allow_nonunitary: bool = False) -> ThreeStrandRep:
    """``U1 = [[d, 0], [0, 0]]`` and
    ``U2 = [[1/d, s], [s, d - 1/d]]`` with ``s = sqrt(1 - d^-2)``.

    Refuses ``|d| < 1`` (where ``s`` is not real) unless ``allow_nonunitary``."""
    A = complex(A)
    d = -A * A - 1 / (A * A)
    if abs(d) < 1 and not allow_nonunitary:
        raise RegimeError(f"|d| = {abs(d):.4f} < 1: the representation is not unitary here")
    if abs(d) < 1e-12:
        raise RegimeError("d = 0 makes U2 undefined")
    if abs(d.imag) < 1e-12 and abs(d.real) >= 1:
        # real d: clamp rounding so that d = -1 gives s = 0 exactly
        d = d.real
        x = 1 - 1 / (d * d)
        s = math.sqrt(x) if x > 1e-12 else 0.0
    else:
        s = cmath.sqrt(1 - 1 / (d * d))
    U1 = np.array([[d, 0], [0, 0]], dtype=complex)
    U2 = np.array([[1 / d, s], [s, d - 1 / d]], dtype=complex)
    return ThreeStrandRep(A, d, U1, U2)


def bracket_via_trace(b: BraidWord, A: complex, rep: ThreeStrandRep | None = None) -> complex:
    """Bracket of the closure of a 3-strand braid:
    ``tr Phi(b) + A^{I(b)} (d^2 - 2)`` with ``I`` the exponent sum."""
    if b.strands != 3:
        raise ValueError(f"the trace formula needs 3 strands, got {b.strands}")
    rep = rep or three_strand_rep(A)
    d = rep.d
    return complex(np.trace(rep.word_image(b)) + rep.A ** exponent_sum(b) * (d * d - 2))


# ------------------------------------------------------------ Hadamard test


@dataclass(frozen=True)
class HadamardEstimate:
    shots: int
    zero_count: int
    part: str
    seed: int
    exact: float

    @property
    def estimate(self) -> float:
        return 2 * self.zero_count / self.shots - 1

    @property
    def stderr(self) -> float:
        """Standard error of ``estimate`` from the sampled frequency."""
        p = self.zero_count / self.shots
        return 2 * math.sqrt(max(p * (1 - p), 0.0) / self.shots)

    def to_dict(self) -> dict:
        return {
            "shots": self.shots,
            "zero_count": self.zero_count,
            "part": self.part,
            "seed": self.seed,
            "estimate": self.estimate,
            "stderr": self.stderr,
            "exact": self.exact,
        }


def _prepare(U, psi):
    U = np.asarray(U, dtype=complex)
    psi = np.asarray(psi, dtype=complex).ravel()
    if U.ndim != 2 or U.shape[0] != U.shape[1] or U.shape[0] != psi.shape[0]:
        raise ValueError(f"dimension mismatch: U {U.shape}, psi {psi.shape}")
    norm = np.linalg.norm(psi)
    if norm == 0:
        raise ValueError("state vector is zero")
    if abs(norm - 1) > 1e-10:
        warnings.warn("state vector was not normalized; normalizing", stacklevel=3)
        psi = psi / norm
    return U, psi


def _part(part: str) -> str:
    p = part.lower()
    if p in ("re", "real"):
        return "real"
    if p in ("im", "imag", "imaginary"):
        return "imaginary"
    raise ValueError(f"part must be real or imaginary, not {part!r}")


def hadamard_test(U, psi, shots: int, part: str = "real", seed: int = 0) -> HadamardEstimate:
    """Sample the ancilla of the Hadamard test ``shots`` times.

    The probability of reading 0 is ``1/2 + Re<psi|U|psi>/2`` (or the
    imaginary part when the ancilla carries an extra ``-i`` phase)."""
    if shots < 1:
        raise ValueError("shots must be positive")
    part = _part(part)
    U, psi = _prepare(U, psi)
    amp = np.vdot(psi, U @ psi)
    exact = float(amp.real if part == "real" else amp.imag)
    p = min(max(0.5 + 0.5 * exact, 0.0), 1.0)
    rng = np.random.default_rng(seed)
    zeros = int(rng.binomial(shots, p))
    return HadamardEstimate(shots, zeros, part, seed, exact)


def hadamard_circuit_probability(U, psi, part: str = "real") -> float:
    """Probability of ancilla 0 from a full statevector run of the circuit
    H, controlled-U (with the ``-i`` phase for the imaginary part), H."""
    part = _part(part)
    U, psi = _prepare(U, psi)
    dim = psi.shape[0]
    state = np.zeros(2 * dim, dtype=complex)
    state[:dim] = psi
    h = np.array([[1, 1], [1, -1]]) / math.sqrt(2)
    H = np.kron(h, np.eye(dim))
    state = H @ state
    phase = -1j if part == "imaginary" else 1.0
    cu = np.block([[np.eye(dim), np.zeros((dim, dim))], [np.zeros((dim, dim)), phase * U]])
    state = H @ (cu @ state)
    return float(np.sum(np.abs(state[:dim]) ** 2))


def hadamard_trace(U, shots: int, seed: int = 0) -> tuple[complex, float]:
    """Estimate ``tr U`` by Hadamard tests on each basis vector; returns the
    estimate and its standard error.  Seeds are derived from ``seed`` per basis vector and part."""
    U = np.asarray(U, dtype=complex)
    dim = U.shape[0]
    total = 0j
    var = 0.0
    for k in range(dim):
        e = np.zeros(dim)
        e[k] = 1
        re = hadamard_test(U, e, shots, "real", seed + 2 * k)
        im = hadamard_test(U, e, shots, "imaginary", seed + 2 * k + 1)
        total += complex(re.estimate, im.estimate)
        var += re.stderr ** 2 + im.stderr ** 2
    return total, math.sqrt(var)


# ----------------------------------------------------------- colored plats


def cap_state(n: int, color) -> tuple:
    """Internal labels of the tree whose strands are capped in pairs."""
    return tuple(0 if k % 2 == 0 else color for k in range(n - 2))


def colored_bracket_plat(b: BraidWord, a: int, model: RecouplingContext | FibConstants) -> complex:
    """``<P b>_a`` for the plat closure: ``B(cap, cap) * Delta_a^{n/2}``.

    With a ``FibConstants`` model only ``a = 2`` (the particle P) is
    available; a ``RecouplingContext`` supports every admissible color."""
    n = b.strands
    if n % 2:
        raise ValueError("plat closure needs an even number of strands")
    if isinstance(model, FibConstants):
        if a != 2:
            raise AdmissibilityError("the Fibonacci model carries only color 2")
        if model.root != 1:
            raise ValueError("the Fibonacci representation is built at the golden root")
        rep = fib_braid_rep(n, 0)
        cap = cap_state(n, 1)
        dim_a = model.Delta
    else:
        rep = model.braid_rep(n, a, 0)
        cap = cap_state(n, a)
        dim_a = model.delta_n(a)
    v = np.zeros(rep.dim, dtype=complex)
    idx = rep.states.index(cap)
    v[idx] = 1
    w = rep.apply(b.mirror(), v)
    return complex(w[idx] * dim_a ** (n // 2))


def wrt_invariant(b: BraidWord, r: int, closure: str = "plat", ctx: RecouplingContext | None = None) -> complex:
    """``sum_{a=0}^{r-2} Delta_a <L>_a`` for the plat closure of ``b``."""
    if closure != "plat":
        raise ValueError("only plat closures are supported")
    ctx = ctx or RecouplingContext(r)
    return sum(ctx.delta_n(a) * colored_bracket_plat(b, a, ctx) for a in range(r - 1))
