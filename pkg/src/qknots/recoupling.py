"""Recoupling theory at a root of unity.

Everything here is numeric at a fixed ``A``.  The default is
``A = exp(i pi / 2r)``, where ``[n] = sin(n pi / r) / sin(pi / r)``.  A
different unit ``A`` may be supplied (for instance the Fibonacci value
``exp(3 pi i / 5)``), in which case quantum integers are computed as
``(A^{2n} - A^{-2n}) / (A^2 - A^{-2})``.

Matrix geometry.  ``M[a,b,c,d]`` changes basis between the two ways of
joining four legs.  With legs ``a`` (upper left), ``b`` (upper right), ``c``
(lower left) and ``d`` (lower right), rows are labels ``i`` with ``(a,b,i)``
and ``(c,d,i)`` admissible and columns are labels ``j`` with ``(a,c,j)`` and
``(b,d,j)`` admissible.  In this geometry the inverse is ``M[b,d,a,c]``.
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .networks import evaluate_closed_network, tet_network, theta_network
from .treereps import BraidRep, build_tree_rep

__all__ = [
    "RecouplingContext",
    "RecouplingMatrix",
    "AdmissibilityError",
    "braid_phase",
    "pentagon_hexagon_check",
]


class AdmissibilityError(ValueError):
    """A label triple or label set is not admissible at this level."""


@dataclass(frozen=True)
class RecouplingMatrix:
    labels: tuple[int, int, int, int]
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    matrix: np.ndarray

    def entry(self, i: int, j: int) -> float:
        if i not in self.rows or j not in self.cols:
            return 0.0
        return float(self.matrix[self.rows.index(i), self.cols.index(j)])

    def orthogonality_residual(self) -> float:
        m = self.matrix
        return float(np.max(np.abs(m @ m.T - np.eye(m.shape[0])))) if m.size else 0.0


def braid_phase(A: complex, a: int, b: int, c: int) -> complex:
    """Eigenvalue of the half twist of legs ``a``, ``b`` fused to ``c``:
    ``(-1)^{(a+b-c)/2} A^{(a(a+2) + b(b+2) - c(c+2))/2}``."""
    if (a + b + c) % 2 or c > a + b or a > b + c or b > a + c:
        raise AdmissibilityError(f"({a},{b},{c}) is not admissible")
    sign = -1 if ((a + b - c) // 2) % 2 else 1
    return sign * complex(A) ** ((a * (a + 2) + b * (b + 2) - c * (c + 2)) // 2)


_TET_EDGES = ((0, 2), (0, 3), (0, 1), (1, 2), (1, 3), (2, 3))  # a b i c d j


def _tet_key(labels: tuple[int, ...]) -> tuple[int, ...]:
    edge = {frozenset(p): x for p, x in zip(_TET_EDGES, labels)}
    best = None
    for perm in itertools.permutations(range(4)):
        key = tuple(edge[frozenset((perm[u], perm[v]))] for u, v in _TET_EDGES)
        if best is None or key < best:
            best = key
    return best


@dataclass
class RecouplingContext:
    r: int
    A: complex | None = None
    _theta: dict = field(default_factory=dict, repr=False)
    _tet: dict = field(default_factory=dict, repr=False)
    _mat: dict = field(default_factory=dict, repr=False)
    _rep: dict = field(default_factory=dict, repr=False)
    tet_evaluations: int = 0

    def __post_init__(self):
        if self.r < 3:
            raise ValueError("level r must be at least 3")
        if self.A is None:
            self.A = cmath.exp(1j * math.pi / (2 * self.r))
        self.A = complex(self.A)
        self._standard = abs(self.A - cmath.exp(1j * math.pi / (2 * self.r))) < 1e-14

    # scalars

    @property
    def delta(self) -> float:
        return self.delta_n(1)

    def quantum_int(self, n: int) -> float:
        if self._standard:
            return math.sin(n * math.pi / self.r) / math.sin(math.pi / self.r)
        q = self.A ** 2
        return ((q ** n - q ** -n) / (q - 1 / q)).real

    def delta_n(self, n: int) -> float:
        if n < 0:
            raise ValueError("label must be nonnegative")
        return (-1) ** n * self.quantum_int(n + 1)

    def qfactorial(self, n: int) -> float:
        out = 1.0
        for k in range(2, n + 1):
            out *= self.quantum_int(k)
        return out

    def labels(self) -> range:
        """Labels that can appear in some admissible triple."""
        return range(self.r - 1)

    def is_admissible(self, a: int, b: int, c: int) -> bool:
        return (
            min(a, b, c) >= 0
            and (a + b + c) % 2 == 0
            and abs(a - b) <= c <= a + b
            and a + b + c <= 2 * self.r - 4
        )

    def require(self, a: int, b: int, c: int) -> None:
        if not self.is_admissible(a, b, c):
            raise AdmissibilityError(f"({a},{b},{c}) is not admissible at r={self.r}")

    # networks

    def theta_net(self, a: int, b: int, c: int) -> float:
        self.require(a, b, c)
        key = tuple(sorted((a, b, c)))
        if key not in self._theta:
            m = (a + b - c) // 2
            n = (b + c - a) // 2
            p = (a + c - b) // 2
            f = self.qfactorial
            val = (-1) ** (m + n + p) * f(m + n + p + 1) * f(n) * f(m) * f(p) / (
                f(m + n) * f(n + p) * f(p + m)
            )
            self._theta[key] = val
        return self._theta[key]

    def theta_by_expansion(self, a: int, b: int, c: int) -> complex:
        self.require(a, b, c)
        return evaluate_closed_network(theta_network(a, b, c), self.A)

    def theta_hat(self, a: int, b: int, c: int) -> float:
        return (-1) ** ((a + b + c) // 2) * self.theta_net(a, b, c)

    def tet_net(self, a: int, b: int, i: int, c: int, d: int, j: int) -> float:
        """Tetrahedron with vertices (a,b,i), (c,d,i), (a,c,j), (b,d,j)."""
        for t in ((a, b, i), (c, d, i), (a, c, j), (b, d, j)):
            self.require(*t)
        key = _tet_key((a, b, i, c, d, j))
        if key not in self._tet:
            self.tet_evaluations += 1
            val = evaluate_closed_network(tet_network(*key), self.A)
            self._tet[key] = val.real
        return self._tet[key]

    def vertex_factor(self, a: int, b: int, c: int) -> float:
        self.require(a, b, c)
        dims = self.quantum_int(a + 1) * self.quantum_int(b + 1) * self.quantum_int(c + 1)
        th = self.theta_hat(a, b, c)
        if dims <= 0 or th <= 0:
            raise AdmissibilityError(f"vertex ({a},{b},{c}) has no positive normalization")
        return math.sqrt(math.sqrt(dims) / th)

    def sqrt_delta(self, n: int) -> complex:
        """The square root of Delta_n taken as ``i^n sqrt([n+1])``."""
        return 1j ** n * math.sqrt(self.quantum_int(n + 1))

    # recoupling

    def internal_labels(self, a: int, b: int, c: int, d: int) -> tuple[int, ...]:
        return tuple(i for i in self.labels() if self.is_admissible(a, b, i) and self.is_admissible(c, d, i))

    def recoupling_matrix(self, a: int, b: int, c: int, d: int) -> RecouplingMatrix:
        key = (a, b, c, d)
        if key in self._mat:
            return self._mat[key]
        rows = self.internal_labels(a, b, c, d)
        cols = self.internal_labels(a, c, b, d)
        if not rows or not cols:
            raise AdmissibilityError(f"M[{a},{b},{c},{d}] has an empty index set")
        sign = -1 if ((a + b + c + d) // 2) % 2 else 1
        norm = sign * math.sqrt(
            self.quantum_int(a + 1) * self.quantum_int(b + 1)
            * self.quantum_int(c + 1) * self.quantum_int(d + 1)
        )
        m = np.empty((len(rows), len(cols)))
        vf = self.vertex_factor
        for x, i in enumerate(rows):
            for y, j in enumerate(cols):
                mod_tet = self.tet_net(a, b, i, c, d, j) * vf(a, b, i) * vf(c, d, i) * vf(a, c, j) * vf(b, d, j)
                m[x, y] = mod_tet / norm
        out = RecouplingMatrix((a, b, c, d), rows, cols, m)
        self._mat[key] = out
        return out

    def F(self, x: int, y: int, z: int, w: int) -> RecouplingMatrix:
        """Re-association ``((x y)_e z)_w -> (x (y z)_f)_w`` with rows ``e`` and columns ``f``."""
        return self.recoupling_matrix(x, y, w, z)

    def braid_phase(self, a: int, b: int, c: int) -> complex:
        self.require(a, b, c)
        return braid_phase(self.A, a, b, c)

    def braid_rep(self, n: int, color: int, total_charge: int = 0) -> BraidRep:
        """Representation of ``B_n`` on fusion trees of ``n`` strands of
        ``color`` with the given total charge, built from ``M`` and the
        braid phases."""
        if not self.is_admissible(color, color, 0):
            raise AdmissibilityError(f"color {color} is not admissible at r={self.r}")
        key = (n, color, total_charge)
        if key not in self._rep:

            def recouple(left, top):
                m = self.F(left, color, color, top)
                return m.rows, m.cols, m.matrix

            self._rep[key] = build_tree_rep(
                n, color, tuple(self.labels()), self.is_admissible, recouple,
                lambda y: self.braid_phase(color, color, y), total_charge,
            )
        return self._rep[key]

    def all_matrices(self, max_label: int | None = None):
        """Every nonempty M[a,b,c,d] with external labels up to ``max_label``."""
        top = self.r - 2 if max_label is None else max_label
        for a, b, c, d in itertools.product(range(top + 1), repeat=4):
            if (a + b + c + d) % 2:
                continue
            if self.internal_labels(a, b, c, d) and self.internal_labels(a, c, b, d):
                yield self.recoupling_matrix(a, b, c, d)

    def table(self, max_label: int | None = None) -> dict:
        """Theta, Tet and M values keyed by label strings (for JSON output)."""
        top = self.r - 2 if max_label is None else max_label
        thetas = {}
        for a, b, c in itertools.combinations_with_replacement(range(top + 1), 3):
            if self.is_admissible(a, b, c):
                thetas[f"{a},{b},{c}"] = self.theta_net(a, b, c)
        mats = {}
        for m in self.all_matrices(top):
            mats[",".join(map(str, m.labels))] = {
                "rows": list(m.rows),
                "cols": list(m.cols),
                "matrix": m.matrix.tolist(),
            }
        tets = {",".join(map(str, k)): v for k, v in sorted(self._tet.items())}
        return {"r": self.r, "theta": thetas, "tet": tets, "M": mats}


def pentagon_hexagon_check(ctx: RecouplingContext, label_set) -> dict:
    """Largest deviation in the pentagon and both hexagon identities over
    external labels drawn from ``label_set``."""
    labels = sorted(set(label_set))
    for a, b in itertools.product(labels, repeat=2):
        for c in ctx.labels():
            if ctx.is_admissible(a, b, c) and c not in labels:
                raise AdmissibilityError(f"label set not closed: {a} x {b} contains {c}")

    def F(x, y, z, w, e, f):
        try:
            return ctx.F(x, y, z, w).entry(e, f)
        except AdmissibilityError:
            return 0.0

    def Finv(x, y, z, w, f, e):
        # orthogonal, so the inverse is the transpose
        return F(x, y, z, w, e, f)

    pent = 0.0
    for a, b, c, d, e in itertools.product(labels, repeat=5):
        for f, g, k, l in itertools.product(labels, repeat=4):
            lhs = sum(F(a, b, c, g, f, h) * F(a, h, d, e, g, k) * F(b, c, d, k, h, l) for h in labels)
            rhs = F(f, c, d, e, g, l) * F(a, b, l, e, f, k)
            pent = max(pent, abs(lhs - rhs))

    def lam(x, y, z, inv):
        if not ctx.is_admissible(x, y, z):
            return 0.0
        v = ctx.braid_phase(x, y, z)
        return 1 / v if inv else v

    hexes = []
    for inv in (False, True):
        worst = 0.0
        for a, b, c, d in itertools.product(labels, repeat=4):
            for f, h in itertools.product(labels, repeat=2):
                lhs = sum(
                    Finv(a, b, c, d, f, e) * lam(a, b, e, inv) * F(b, a, c, d, e, g)
                    * lam(a, c, g, inv) * Finv(b, c, a, d, g, h)
                    for e in labels for g in labels
                )
                allowed = ctx.is_admissible(b, c, f) and ctx.is_admissible(a, f, d)
                rhs = lam(a, f, d, inv) if (f == h and allowed) else 0.0
                worst = max(worst, abs(lhs - rhs))
        hexes.append(worst)
    return {"labels": labels, "pentagon": pent, "hexagon": hexes[0], "hexagon_inverse": hexes[1]}
