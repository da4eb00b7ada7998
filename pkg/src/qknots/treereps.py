"""Braid group representations on left-associated fusion trees.

``n`` particles of one color ``c`` are fused left to right.  The running
charge after ``k+1`` particles is ``x_k`` with ``x_0 = c`` and ``x_{n-1}`` the
total charge; a basis vector lists the internal charges
``(x_1, ..., x_{n-2})``.

``s_1`` multiplies by the phase of the first pair's channel ``x_1``.  For
``i >= 2`` the pair ``(i, i+1)`` is first re-associated,
``((x_{i-2} c)_{x_{i-1}} c)_{x_i} -> (x_{i-2} (c c)_y)_{x_i}``; it is then
multiplied by the phase of ``y`` and re-associated back.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .braids import BraidWord

__all__ = ["BraidRep", "build_tree_rep"]


@dataclass(frozen=True)
class BraidRep:
    n: int
    states: tuple[tuple[int, ...], ...]
    generators: tuple[np.ndarray, ...]

    @property
    def dim(self) -> int:
        return len(self.states)

    def generator(self, letter: int) -> np.ndarray:
        g = self.generators[abs(letter) - 1]
        return g if letter > 0 else g.conj().T

    def word_image(self, b: BraidWord | Sequence[int]) -> np.ndarray:
        letters = b.letters if isinstance(b, BraidWord) else tuple(b)
        out = np.eye(self.dim, dtype=complex)
        for x in letters:
            out = out @ self.generator(x)
        return out

    def apply(self, b: BraidWord | Sequence[int], v: np.ndarray) -> np.ndarray:
        """``rho(b) v`` without forming the full matrix."""
        letters = b.letters if isinstance(b, BraidWord) else tuple(b)
        for x in reversed(letters):
            v = self.generator(x) @ v
        return v

    def unitarity_residual(self) -> float:
        if self.dim == 0:
            return 0.0
        eye = np.eye(self.dim)
        return max((float(np.max(np.abs(g.conj().T @ g - eye))) for g in self.generators), default=0.0)

    def braid_relation_residual(self) -> float:
        worst = 0.0
        if self.dim == 0:
            return worst
        gs = self.generators
        for i in range(len(gs) - 1):
            a, b = gs[i], gs[i + 1]
            worst = max(worst, float(np.max(np.abs(a @ b @ a - b @ a @ b))))
        for i, j in itertools.combinations(range(len(gs)), 2):
            if j - i > 1:
                worst = max(worst, float(np.max(np.abs(gs[i] @ gs[j] - gs[j] @ gs[i]))))
        return worst


def build_tree_rep(
    n: int,
    color: int,
    labels: Sequence[int],
    admissible: Callable[[int, int, int], bool],
    recouple: Callable[[int, int], tuple[Sequence[int], Sequence[int], np.ndarray]],
    phase: Callable[[int], complex],
    total_charge: int,
) -> BraidRep:
    """``recouple(left, top)`` returns ``(rows, cols, F)`` taking
    ``((left c)_e c)_top`` (rows ``e``) to ``(left (c c)_y)_top`` (cols ``y``).
    ``phase(y)`` is the eigenvalue of a positive half twist on channel ``y``."""
    if n < 2:
        raise ValueError("need at least two strands")
    inner = n - 2
    states = []
    for xs in itertools.product(labels, repeat=inner):
        ext = (color,) + xs + (total_charge,)
        if all(admissible(ext[k], color, ext[k + 1]) for k in range(n - 1)):
            states.append(xs)
    index = {s: k for k, s in enumerate(states)}
    dim = len(states)
    gens = []
    for i in range(1, n):
        g = np.zeros((dim, dim), dtype=complex)
        for s in states:
            ext = (color,) + s + (total_charge,)
            col = index[s]
            if i == 1:
                g[col, col] = phase(ext[1])
                continue
            left, mid, top = ext[i - 2], ext[i - 1], ext[i]
            rows, cols, F = recouple(left, top)
            r_in = list(rows).index(mid)
            for r_out, e in enumerate(rows):
                val = sum(F[r_out, y] * phase(lab) * F[r_in, y] for y, lab in enumerate(cols))
                if val == 0:
                    continue
                t = list(ext)
                t[i - 1] = e
                g[index[tuple(t[1:-1])], col] += val
        g.setflags(write=False)
        gens.append(g)
    return BraidRep(n, tuple(states), tuple(gens))
