"""Quaternionic representations of the three-strand braid group.

A unit quaternion ``g = a + b u`` (``u`` a unit pure quaternion) acts on pure
quaternions by ``P -> g P g^dagger``, a rotation about ``u`` by ``2 theta``
where ``a = cos theta``.  Two unit quaternions ``g, h`` give a representation
of B_3 exactly when ``g h g = h g h``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .scalars import Quaternion

__all__ = [
    "B3Pair",
    "ConstraintRejected",
    "is_su2",
    "su2_distance",
    "rotate",
    "theorem1_construct",
    "euler_decompose",
    "fibonacci_b3_quaternions",
    "pair_word_image",
    "density_probe",
]


class ConstraintRejected(ValueError):
    """The data do not satisfy the braid-relation constraint."""


@dataclass(frozen=True)
class B3Pair:
    g: Quaternion
    h: Quaternion

    def braid_residual(self) -> float:
        g, h = self.g, self.h
        return (g * h * g - h * g * h).norm()

    def matrices(self) -> tuple[np.ndarray, np.ndarray]:
        return self.g.as_matrix(), self.h.as_matrix()


def is_su2(m, tol: float = 1e-10) -> bool:
    m = np.asarray(m, dtype=complex)
    return (
        m.shape == (2, 2)
        and np.max(np.abs(m.conj().T @ m - np.eye(2))) < tol
        and abs(np.linalg.det(m) - 1) < tol
    )


def su2_distance(m, n) -> float:
    """Frobenius distance up to the sign ``+-1``."""
    m, n = np.asarray(m), np.asarray(n)
    return float(min(np.linalg.norm(m - n), np.linalg.norm(m + n)))


def _vec(q: Quaternion) -> np.ndarray:
    return np.array(q.vector)


def rotate(g: Quaternion, P: Quaternion) -> Quaternion:
    """``g P g^dagger`` by the closed formula
    ``(a^2 - b^2) P + 2ab (u x P) + 2 (P.u) b^2 u``."""
    if not g.is_unit(1e-10):
        raise ValueError("rotation needs a unit quaternion")
    if not P.is_pure(1e-12):
        raise ValueError("rotation acts on pure quaternions")
    a = g.a
    w = _vec(g)
    b = float(np.linalg.norm(w))
    if b == 0:
        return P
    u = w / b
    p = _vec(P)
    out = (a * a - b * b) * p + 2 * a * b * np.cross(u, p) + 2 * float(p @ u) * b * b * u
    return Quaternion.pure(out)


def theorem1_construct(a: float, b: float, u: Quaternion, v: Quaternion, tol: float = 1e-10) -> B3Pair:
    """``(g, h) = (a + b u, a + b v)``, accepted only when ``u = v`` or
    ``u . v = (a^2 - b^2) / (2 b^2)``."""
    if abs(a * a + b * b - 1) > tol:
        raise ValueError("need a^2 + b^2 = 1")
    if abs(b) < tol:
        raise ValueError("b = 0 makes g real; the construction is degenerate")
    for q in (u, v):
        if not (q.is_pure(tol) and q.is_unit(1e-9)):
            raise ValueError("u and v must be unit pure quaternions")
    pair = B3Pair(Quaternion.from_axis(a, b, u), Quaternion.from_axis(a, b, v))
    if (u - v).norm() <= tol:
        return pair
    target = (a * a - b * b) / (2 * b * b)
    dot = float(_vec(u) @ _vec(v))
    if abs(dot - target) > tol:
        raise ConstraintRejected(f"u.v = {dot:.12g} but the relation needs {target:.12g}")
    return pair


def _frame(u: np.ndarray, v: np.ndarray) -> tuple[np.ndarray, float]:
    """Rotation matrix taking ``u`` to x and ``v`` into the xy-plane, and
    the angle between ``u`` and ``v``."""
    e1 = u / np.linalg.norm(u)
    w = v - (v @ e1) * e1
    nw = np.linalg.norm(w)
    if nw < 1e-12:
        raise ValueError("u and v are parallel")
    e2 = w / nw
    e3 = np.cross(e1, e2)
    beta = math.atan2(nw / np.linalg.norm(v), (v @ e1) / np.linalg.norm(v))
    return np.vstack([e1, e2, e3]), beta


def _wrap(x: float) -> float:
    return (x + math.pi) % (2 * math.pi) - math.pi


def euler_decompose(M, u: Quaternion, v: Quaternion) -> tuple[float, float, float]:
    """Angles ``(a, b, c)`` with ``e^{au} e^{bv} e^{cu} = M`` (or ``-M``).

    When ``u`` and ``v`` are not orthogonal some rotations are unreachable
    by a single middle factor; those raise ``ValueError``."""
    q = M if isinstance(M, Quaternion) else Quaternion.from_matrix(M)
    R, beta = _frame(_vec(u), _vec(v))
    # conjugating by the frame rotation fixes the scalar part
    r = R @ _vec(q)
    w1 = complex(q.a, r[0])
    w2 = complex(r[1], r[2])
    s = abs(w2) / math.sin(beta)
    if s > 1 + 1e-12:
        raise ValueError("target is not reachable with these axes")
    b0 = math.asin(min(s, 1.0))
    best = None
    for b in (b0, math.pi - b0):
        psi = math.atan2(math.sin(b) * math.cos(beta), math.cos(b))
        plus = math.atan2(w1.imag, w1.real) - psi if abs(w1) > 1e-15 else 0.0
        minus = math.atan2(w2.imag, w2.real) if abs(w2) > 1e-15 else 0.0
        a = _wrap((plus + minus) / 2)
        c = _wrap((plus - minus) / 2)
        cand = (a, b, c)
        err = (_euler_product(cand, u, v) - q).norm()
        err = min(err, (_euler_product(cand, u, v) + q).norm())
        score = (err > 1e-9, abs(a) + abs(c))
        if best is None or score < best[0]:
            best = (score, cand)
    return best[1]


def _euler_product(angles, u: Quaternion, v: Quaternion) -> Quaternion:
    a, b, c = angles
    return Quaternion.exp_pure(a, u) * Quaternion.exp_pure(b, v) * Quaternion.exp_pure(c, u)


def fibonacci_b3_quaternions() -> B3Pair:
    """``g = e^{7 pi i / 10}`` and ``h = f g f^{-1}`` with
    ``f = tau i + sqrt(tau) k``, ``tau = (sqrt5 - 1) / 2``."""
    theta = 7 * math.pi / 10
    g = Quaternion(math.cos(theta), math.sin(theta), 0.0, 0.0)
    tau = (math.sqrt(5) - 1) / 2
    f = Quaternion(0.0, tau, 0.0, math.sqrt(tau))
    return B3Pair(g, f * g * f.inverse())


def pair_word_image(pair: B3Pair, letters) -> Quaternion:
    out = Quaternion(1.0)
    for x in letters:
        q = pair.g if abs(x) == 1 else pair.h
        out = out * (q if x > 0 else q.conj())
    return out


def _reduced_words(pair: B3Pair, max_len: int) -> np.ndarray:
    """Images of all freely reduced words of length <= ``max_len`` as rows
    of quaternion coordinates."""
    gens = [pair.g, pair.h, pair.g.conj(), pair.h.conj()]
    mats = [np.array(q.as_tuple()) for q in gens]

    def left_mul(q, P):
        # quaternion product q * P for each row P
        a1, b1, c1, d1 = q
        a2, b2, c2, d2 = P.T
        return np.stack([
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        ], axis=1)

    layers = [np.array([[1.0, 0, 0, 0]])]
    last_gen = [np.array([-1])]
    for _ in range(max_len):
        prev, prev_last = layers[-1], last_gen[-1]
        new, new_last = [], []
        for k, q in enumerate(mats):
            inverse_of = (k + 2) % 4
            keep = prev_last != inverse_of
            if keep.any():
                new.append(left_mul(q, prev[keep]))
                new_last.append(np.full(int(keep.sum()), k))
        layers.append(np.vstack(new))
        last_gen.append(np.concatenate(new_last))
    return np.vstack(layers)


def density_probe(pair: B3Pair, max_word_length: int, sample_count: int = 200, rng_seed: int = 0) -> float:
    """Covering radius estimate: the largest, over Haar-random targets, of
    the sign-insensitive Frobenius distance to the nearest word image."""
    if max_word_length < 0:
        raise ValueError("word length must be nonnegative")
    words = _reduced_words(pair, max_word_length)
    rng = np.random.default_rng(rng_seed)
    targets = rng.standard_normal((sample_count, 4))
    targets /= np.linalg.norm(targets, axis=1, keepdims=True)
    worst = 0.0
    for chunk in np.array_split(targets, max(1, len(targets) // 32)):
        best = np.max(np.abs(chunk @ words.T), axis=1)
        # ||M - N||_F = sqrt(2) |q - p| for quaternion coordinates
        dist = math.sqrt(2) * np.sqrt(np.clip(2 - 2 * best, 0, None))
        worst = max(worst, float(dist.max()))
    return worst
