"""Temperley-Lieb diagram algebra TL_n.

A diagram of size ``n`` is a planar perfect matching on ``2n`` points.  Points
``0..n-1`` are the top row (left to right) and ``n..2n-1`` the bottom row
(left to right).  The matching is stored as a tuple ``partner`` with
``partner[p] == q`` iff p and q are joined.

Products are stacked top to bottom: ``x * y`` puts ``x`` above ``y``.  Every
closed loop produced by stacking is replaced by a factor of the loop value
``delta``.  Coefficients may be ``LaurentPoly``/``RationalFn`` (exact) or
``complex`` (numeric at a fixed A); both share the same diagram engine.
"""

from __future__ import annotations

import functools
from typing import Callable, Iterable, Iterator

from .scalars import DELTA, LaurentPoly, RationalFn

__all__ = [
    "TLDiagram",
    "TLElement",
    "SingularProjectorError",
    "is_planar_matching",
    "compose_pairings",
    "enumerate_diagrams",
    "catalan",
    "tl_generator",
    "tl_identity",
    "tl_mul",
    "markov_trace",
    "closure_value",
    "trace_closure_loops",
    "plat_closure_loops",
    "jones_wenzl",
    "delta_sequence",
]


class SingularProjectorError(ArithmeticError):
    """A Jones-Wenzl recursion hit a vanishing quantum dimension."""


def is_planar_matching(partner: tuple[int, ...], n: int) -> bool:
    """Balanced-parenthesis test.  Points are read around the boundary:
    top row left to right, then bottom row right to left."""
    if len(partner) != 2 * n:
        return False
    for p, q in enumerate(partner):
        if not 0 <= q < 2 * n or q == p or partner[q] != p:
            return False
    order = list(range(n)) + list(range(2 * n - 1, n - 1, -1))
    rank = {p: i for i, p in enumerate(order)}
    stack: list[int] = []
    for p in order:
        q = partner[p]
        if rank[q] > rank[p]:
            stack.append(q)
        elif not stack or stack.pop() != p:
            return False
    return not stack


@functools.lru_cache(maxsize=1 << 18)
def compose_pairings(upper: tuple[int, ...], lower: tuple[int, ...]) -> tuple[tuple[int, ...], int]:
    """Stack ``upper`` above ``lower``; return (result pairing, closed loops)."""
    n = len(upper) // 2
    result = [-1] * (2 * n)
    seen_mid = [False] * n
    for start in range(2 * n):
        if result[start] != -1:
            continue
        # walk from a boundary point of the result
        if start < n:
            side, p = 0, start  # in upper, at upper point index
        else:
            side, p = 1, start  # in lower, at lower point index (bottom)
        while True:
            if side == 0:
                q = upper[p]
                if q < n:
                    end = q
                    break
                m = q - n
                seen_mid[m] = True
                side, p = 1, m
            else:
                q = lower[p]
                if q >= n:
                    end = q
                    break
                seen_mid[q] = True
                side, p = 0, q + n
        result[start] = end
        result[end] = start
    loops = 0
    for m in range(n):
        if seen_mid[m]:
            continue
        loops += 1
        # trace the loop through the middle row
        p = m
        while True:
            seen_mid[p] = True
            q = lower[p]  # lower top point p -> another lower top point
            seen_mid[q] = True
            p = upper[q + n] - n  # upper bottom q -> upper bottom point
            if p == m:
                break
    return tuple(result), loops


class TLDiagram:
    """A single planar diagram; ``closed_loops`` counts floating loops."""

    __slots__ = ("size", "pairing", "closed_loops")

    def __init__(self, size: int, pairing: Iterable[int], closed_loops: int = 0, check: bool = True):
        self.size = size
        self.pairing = tuple(pairing)
        self.closed_loops = closed_loops
        if check and not is_planar_matching(self.pairing, size):
            raise ValueError(f"not a planar matching of size {size}: {self.pairing}")

    def __mul__(self, other: "TLDiagram") -> "TLDiagram":
        if other.size != self.size:
            raise ValueError("diagram sizes differ")
        pairing, loops = compose_pairings(self.pairing, other.pairing)
        return TLDiagram(self.size, pairing, self.closed_loops + other.closed_loops + loops, check=False)

    def __eq__(self, other):
        return (isinstance(other, TLDiagram) and self.size == other.size
                and self.pairing == other.pairing and self.closed_loops == other.closed_loops)

    def __hash__(self):
        return hash((self.size, self.pairing, self.closed_loops))

    def __repr__(self):
        return f"TLDiagram({self.size}, {self.pairing}, loops={self.closed_loops})"


def _identity_pairing(n: int) -> tuple[int, ...]:
    return tuple(list(range(n, 2 * n)) + list(range(n)))


def _generator_pairing(n: int, i: int) -> tuple[int, ...]:
    p = list(_identity_pairing(n))
    a, b = i - 1, i  # 0-based strands joined by the cap/cup
    p[a], p[b] = b, a
    p[n + a], p[n + b] = n + b, n + a
    return tuple(p)


def tl_generator(n: int, i: int) -> TLDiagram:
    """U_i: cap joining top points i, i+1 and cup joining the bottom ones."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"U_{i} does not exist in TL_{n}")
    return TLDiagram(n, _generator_pairing(n, i), check=False)


def tl_identity(n: int) -> TLDiagram:
    return TLDiagram(n, _identity_pairing(n), check=False)


def catalan(n: int) -> int:
    from math import comb

    return comb(2 * n, n) // (n + 1)


def _noncrossing_matchings(points: list[int]) -> Iterator[dict[int, int]]:
    if not points:
        yield {}
        return
    first = points[0]
    for k in range(1, len(points), 2):
        inside, outside = points[1:k], points[k + 1:]
        for m1 in _noncrossing_matchings(inside):
            for m2 in _noncrossing_matchings(outside):
                m = {first: points[k], points[k]: first}
                m.update(m1)
                m.update(m2)
                yield m


def enumerate_diagrams(n: int) -> list[TLDiagram]:
    """All loopless planar diagrams of size n (there are catalan(n))."""
    order = list(range(n)) + list(range(2 * n - 1, n - 1, -1))
    out = []
    for m in _noncrossing_matchings(order):
        out.append(TLDiagram(n, tuple(m[p] for p in range(2 * n)), check=False))
    return out


def _is_zero(c) -> bool:
    if isinstance(c, (LaurentPoly, RationalFn)):
        return c.is_zero()
    return c == 0


class TLElement:
    """Finite linear combination of loopless diagrams of one size."""

    __slots__ = ("size", "terms", "delta")

    def __init__(self, size: int, terms: dict[tuple[int, ...], object] | None = None, delta=DELTA):
        self.size = size
        self.delta = delta
        self.terms = {k: v for k, v in (terms or {}).items() if not _is_zero(v)}

    @classmethod
    def from_diagram(cls, d: TLDiagram, coeff=1, delta=DELTA) -> "TLElement":
        c = coeff * delta ** d.closed_loops if d.closed_loops else coeff
        return cls(d.size, {d.pairing: c}, delta)

    @classmethod
    def identity(cls, n: int, delta=DELTA, one=1) -> "TLElement":
        return cls(n, {_identity_pairing(n): one}, delta)

    @classmethod
    def generator(cls, n: int, i: int, delta=DELTA, one=1) -> "TLElement":
        return cls(n, {tl_generator(n, i).pairing: one}, delta)

    def _like(self, terms) -> "TLElement":
        return TLElement(self.size, terms, self.delta)

    def __add__(self, other: "TLElement") -> "TLElement":
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return self._like(out)

    def __neg__(self):
        return self._like({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "TLElement") -> "TLElement":
        return self + (-other)

    def scale(self, c) -> "TLElement":
        return self._like({k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, TLElement):
            return tl_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def _check(self, other: "TLElement"):
        if other.size != self.size:
            raise ValueError(f"TL sizes differ: {self.size} vs {other.size}")

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, d: TLDiagram | tuple[int, ...]):
        key = d.pairing if isinstance(d, TLDiagram) else tuple(d)
        return self.terms.get(key, 0)

    def map_coefficients(self, fn: Callable, delta=None) -> "TLElement":
        return TLElement(self.size, {k: fn(v) for k, v in self.terms.items()},
                         self.delta if delta is None else delta)

    def evaluate_at(self, a: complex) -> "TLElement":
        """Numeric copy with every exact coefficient evaluated at ``A = a``."""
        def ev(c):
            if isinstance(c, (LaurentPoly, RationalFn)):
                return c.evaluate(a)
            return complex(c)

        return self.map_coefficients(ev, delta=ev(self.delta))

    def tensor(self, other: "TLElement") -> "TLElement":
        """Side-by-side juxtaposition, ``self`` on the left."""
        n, m = self.size, other.size
        out = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                key = _juxtapose(k1, n, k2, m)
                c = v1 * v2
                out[key] = out[key] + c if key in out else c
        return TLElement(n + m, out, self.delta)

    def close_to(self, other: "TLElement", tol: float = 1e-10) -> bool:
        keys = set(self.terms) | set(other.terms)
        return all(abs(complex(self.coefficient(k)) - complex(other.coefficient(k))) <= tol for k in keys)

    def __eq__(self, other):
        if not isinstance(other, TLElement) or other.size != self.size:
            return NotImplemented
        diff = self - other
        return diff.is_zero()

    __hash__ = None

    def __repr__(self):
        return f"TLElement(size={self.size}, terms={len(self.terms)})"


def _juxtapose(k1: tuple[int, ...], n: int, k2: tuple[int, ...], m: int) -> tuple[int, ...]:
    size = n + m

    def map1(p):
        return p if p < n else p - n + size

    def map2(p):
        return p + n if p < m else p - m + size + n

    out = [0] * (2 * size)
    for p, q in enumerate(k1):
        out[map1(p)] = map1(q)
    for p, q in enumerate(k2):
        out[map2(p)] = map2(q)
    return tuple(out)


def tl_mul(x: TLElement, y: TLElement) -> TLElement:
    x._check(y)
    delta = x.delta
    powers: dict[int, object] = {0: None}
    out: dict[tuple[int, ...], object] = {}
    for k1, v1 in x.terms.items():
        for k2, v2 in y.terms.items():
            key, loops = compose_pairings(k1, k2)
            c = v1 * v2
            if loops:
                if loops not in powers:
                    powers[loops] = delta ** loops
                c = c * powers[loops]
            out[key] = out[key] + c if key in out else c
    return TLElement(x.size, out, delta)


def trace_closure_loops(pairing: tuple[int, ...]) -> int:
    """Loops after joining top point k to bottom point k for every k."""
    n = len(pairing) // 2
    seen = [False] * (2 * n)
    loops = 0
    for s in range(2 * n):
        if seen[s]:
            continue
        loops += 1
        p = s
        while not seen[p]:
            seen[p] = True
            q = pairing[p]
            seen[q] = True
            p = q + n if q < n else q - n  # closure arc
    return loops


def plat_closure_loops(pairing: tuple[int, ...]) -> int:
    """Loops after capping (1,2),(3,4),... on top and on the bottom."""
    n = len(pairing) // 2
    if n % 2:
        raise ValueError("plat closure needs an even size")
    seen = [False] * (2 * n)
    loops = 0
    for s in range(2 * n):
        if seen[s]:
            continue
        loops += 1
        p = s
        while not seen[p]:
            seen[p] = True
            q = pairing[p]
            seen[q] = True
            p = q ^ 1 if q < n else n + ((q - n) ^ 1)
    return loops


def closure_value(x: TLElement, kind: str = "trace", normalized: bool = False):
    """Sum of ``coeff * delta^loops`` over the closed-up diagrams; with
    ``normalized`` the exponent is ``loops - 1`` so a single circle is 1."""
    count = trace_closure_loops if kind == "trace" else plat_closure_loops
    shift = 1 if normalized else 0
    total = 0
    for k, v in x.terms.items():
        total = total + v * x.delta ** (count(k) - shift)
    return total


def markov_trace(x: TLElement):
    """Normalized trace closure: sum of coeff * delta^(loops - 1)."""
    return closure_value(x, "trace", normalized=True)


def delta_sequence(n: int, delta) -> list:
    """[Delta_0, ..., Delta_n] via Delta_{k+1} = delta Delta_k - Delta_{k-1}."""
    seq = [delta ** 0, delta]
    while len(seq) <= n:
        seq.append(delta * seq[-1] - seq[-2])
    return seq[: n + 1]


def _ratio(num, den, tol: float):
    if isinstance(den, LaurentPoly):
        if den.is_zero():
            raise SingularProjectorError("quantum dimension is identically zero")
        return RationalFn(num, den)
    if isinstance(den, RationalFn):
        if den.is_zero():
            raise SingularProjectorError("quantum dimension is identically zero")
        return num / den
    if abs(den) < tol:
        raise SingularProjectorError(f"quantum dimension {den} vanishes at this A")
    return num / den


@functools.lru_cache(maxsize=None)
def _jw_cached(n: int, delta_key, exact: bool) -> TLElement:
    delta = DELTA if exact else delta_key
    return _jones_wenzl(n, delta, exact)


def _jones_wenzl(n: int, delta, exact: bool, tol: float = 1e-9) -> TLElement:
    one = RationalFn(1) if exact else 1.0 + 0j
    p = TLElement.identity(1, delta, one)
    if n == 0:
        return TLElement(0, {(): one}, delta)
    dims = delta_sequence(n, delta)
    for m in range(2, n + 1):
        prev = p.tensor(TLElement.identity(1, delta, one))
        coeff = _ratio(dims[m - 2], dims[m - 1], tol)
        u = TLElement.generator(m, m - 1, delta, one)
        p = prev - (prev * u * prev).scale(coeff)
    return p


def jones_wenzl(n: int, delta=None) -> TLElement:
    """Projector P_n by the Wenzl recursion
    P_m = P_{m-1} - (Delta_{m-2}/Delta_{m-1}) P_{m-1} U_{m-1} P_{m-1}.

    ``delta=None`` gives exact ``RationalFn`` coefficients in A; a complex
    ``delta`` gives numeric coefficients and raises
    :class:`SingularProjectorError` when a needed Delta_k vanishes.
    """
    if n < 0:
        raise ValueError("projector size must be nonnegative")
    if delta is None or isinstance(delta, LaurentPoly):
        return _jw_cached(n, None, True)
    return _jw_cached(n, complex(delta), False)
