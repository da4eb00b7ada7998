"""The bracket polynomial of braid closures.

Two independent engines compute the same polynomial:

* ``bracket_state_sum`` smooths every crossing both ways and counts loops with
  union-find (exponential, used as the oracle);
* ``bracket_tl`` multiplies ``A I + A^{-1} U_i`` (or its inverse) in the
  Temperley-Lieb algebra and closes up.

Smoothing convention at a positive letter ``s_i``: the A-smoothing keeps the
two strands vertical and the A^{-1}-smoothing is the cup-cap ``U_i``.  A
negative letter swaps the weights.  Brackets are normalized so that a single
circle is 1.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from dataclasses import dataclass

from .braids import BraidWord, Closure, exponent_sum
from .scalars import DELTA, ONE, LaurentPoly, RationalFn
from .scalars import A as VAR_A
from .tl import TLElement, jones_wenzl, trace_closure_loops

__all__ = [
    "StateSumTrace",
    "SizeCapError",
    "state_sum",
    "bracket_state_sum",
    "bracket_tl",
    "normalized_invariant",
    "jones_polynomial",
    "format_jones",
    "cable_word",
    "colored_bracket_bruteforce",
]

STATE_SUM_CAP = 24


class SizeCapError(RuntimeError):
    """The requested computation exceeds an explicit resource cap."""


@dataclass(frozen=True)
class StateSumTrace:
    crossing_count: int
    states_visited: int
    result: LaurentPoly


class _UnionFind:
    __slots__ = ("parent",)

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[rx] = ry


def state_sum(b: BraidWord, closure: Closure | str = Closure.TRACE, max_crossings: int = STATE_SUM_CAP) -> StateSumTrace:
    closure = b.check_closure(closure)
    N = len(b)
    if N > max_crossings:
        raise SizeCapError(f"{N} crossings exceeds the state-sum cap of {max_crossings}")
    n = b.strands
    # node (level, position); level 0 is above the first crossing
    node = lambda lvl, p: lvl * n + p  # noqa: E731
    size = (N + 1) * n
    if closure is Closure.TRACE:
        caps = [(node(0, p), node(N, p)) for p in range(n)]
    else:
        caps = [(node(0, p), node(0, p + 1)) for p in range(0, n, 2)]
        caps += [(node(N, p), node(N, p + 1)) for p in range(0, n, 2)]

    counts: Counter = Counter()
    for mask in range(1 << N):
        uf = _UnionFind(size)
        for x, y in caps:
            uf.union(x, y)
        a_exp = 0
        for lvl, letter in enumerate(b.letters):
            i = abs(letter) - 1
            vertical = not (mask >> lvl) & 1
            a_exp += 1 if vertical == (letter > 0) else -1
            for p in range(n):
                if p != i and p != i + 1:
                    uf.union(node(lvl, p), node(lvl + 1, p))
            if vertical:
                uf.union(node(lvl, i), node(lvl + 1, i))
                uf.union(node(lvl, i + 1), node(lvl + 1, i + 1))
            else:
                uf.union(node(lvl, i), node(lvl, i + 1))
                uf.union(node(lvl + 1, i), node(lvl + 1, i + 1))
        loops = len({uf.find(x) for x in range(size)})
        counts[(a_exp, loops)] += 1

    total = LaurentPoly()
    for (a_exp, loops), mult in counts.items():
        total = total + LaurentPoly({a_exp: mult}) * DELTA ** (loops - 1)
    return StateSumTrace(N, 1 << N, total)


def bracket_state_sum(b: BraidWord, closure: Closure | str = Closure.TRACE, max_crossings: int = STATE_SUM_CAP) -> LaurentPoly:
    """Bracket of the closure by enumerating all ``2^N`` states."""
    return state_sum(b, closure, max_crossings).result


def _phi_apply(x: TLElement, letter: int, a_val, a_inv) -> TLElement:
    i = abs(letter)
    u = TLElement.generator(x.size, i, x.delta, 1)
    xu = x * u
    if letter > 0:
        return x.scale(a_val) + xu.scale(a_inv)
    return x.scale(a_inv) + xu.scale(a_val)


def braid_tl_element(b: BraidWord) -> TLElement:
    """The exact TL image of ``b``."""
    x = TLElement.identity(b.strands, DELTA, ONE)
    for letter in b.letters:
        x = _phi_apply(x, letter, VAR_A, VAR_A ** -1)
    return x


def _closure_loops(pairing: tuple[int, ...], top: dict[int, int], bottom: dict[int, int]) -> int:
    """Loops after closing a diagram with matchings ``top`` and ``bottom``
    on its top and bottom rows."""
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
            p = top[q] if q < n else n + bottom[q - n]
    return loops


def _plat_caps(strands: int, cable: int) -> dict[int, int]:
    """Nested caps joining cable ``2m`` to cable ``2m+1``."""
    m: dict[int, int] = {}
    for c in range(0, strands, 2):
        for t in range(cable):
            x = c * cable + cable - 1 - t
            y = (c + 1) * cable + t
            m[x], m[y] = y, x
    return m


def _close(x: TLElement, closure: Closure, strands: int, cable: int, shift: int):
    caps = _plat_caps(strands, cable) if closure is Closure.PLAT else None
    total = 0
    for pairing, coeff in x.terms.items():
        if caps is None:
            loops = trace_closure_loops(pairing)
        else:
            loops = _closure_loops(pairing, caps, caps)
        total = total + coeff * x.delta ** (loops - shift)
    return total


def bracket_tl(b: BraidWord, closure: Closure | str = Closure.TRACE) -> LaurentPoly:
    """Bracket of the closure via the Temperley-Lieb representation."""
    closure = b.check_closure(closure)
    return _close(braid_tl_element(b), closure, b.strands, 1, 1)


def normalized_invariant(b: BraidWord) -> LaurentPoly:
    """``(-A^3)^{-w} <b>`` with writhe ``w`` the exponent sum."""
    w = exponent_sum(b)
    return LaurentPoly({-3 * w: (-1) ** (w % 2)}) * bracket_tl(b)


def jones_polynomial(b: BraidWord) -> LaurentPoly:
    """Jones polynomial with exponents counted in units of ``t^{1/4}``."""
    return normalized_invariant(b).invert_variable()


def format_jones(v: LaurentPoly) -> str:
    """Render a quarter-unit polynomial in ``t`` (e.g. ``-t^1/2 - t^5/2``)."""
    if v.is_zero():
        return "0"
    out = ""
    for idx, (e, c) in enumerate(sorted(v.items(), reverse=True)):
        mag = abs(c)
        frac = Fraction(e, 4)
        if e == 0:
            body = str(mag)
        else:
            body = ("" if mag == 1 else str(mag)) + "t" + ("" if frac == 1 else f"^{frac}")
        if idx == 0:
            out = ("-" if c < 0 else "") + body
        else:
            out += (" - " if c < 0 else " + ") + body
    return out


# ------------------------------------------------------------------ cabling


def cable_word(b: BraidWord, a: int) -> BraidWord:
    """Replace each strand by ``a`` parallel strands (blackboard framing)."""
    if a < 1:
        raise ValueError("cable width must be positive")
    letters = []
    for x in b.letters:
        c = abs(x) - 1
        sign = 1 if x > 0 else -1
        for s in range(a):
            for t in range(a):
                letters.append(sign * (c * a + a - 1 - s + t + 1))
    return BraidWord(b.strands * a, tuple(letters))


def _cap_compose(state: tuple[int, ...], diag: tuple[int, ...]) -> tuple[tuple[int, ...], int]:
    """Hang diagram ``diag`` below a cap state; returns the cap state on its
    bottom row and the number of loops closed off."""
    m = len(state)
    new = [-1] * m
    seen = [False] * m  # top-row points of diag
    for b in range(m):
        if new[b] >= 0:
            continue
        p = diag[m + b]
        while p < m:
            seen[p] = True
            q = state[p]
            seen[q] = True
            p = diag[q]
        new[b], new[p - m] = p - m, b
    loops = 0
    for t in range(m):
        if seen[t]:
            continue
        loops += 1
        p = t
        while not seen[p]:
            seen[p] = True
            q = state[p]
            seen[q] = True
            p = diag[q]
    return tuple(new), loops


def _glue_loops(upper: tuple[int, ...], lower: tuple[int, ...]) -> int:
    """Loops formed by a cap state above and a cup state below one row."""
    m = len(upper)
    seen = [False] * m
    loops = 0
    for s in range(m):
        if seen[s]:
            continue
        loops += 1
        p = s
        while not seen[p]:
            seen[p] = True
            q = upper[p]
            seen[q] = True
            p = lower[q]
    return loops


def _vec_times(vec: dict, x: TLElement) -> dict:
    out: dict = {}
    delta = x.delta
    for state, c0 in vec.items():
        for diag, c in x.terms.items():
            new, loops = _cap_compose(state, diag)
            v = c0 * c * delta ** loops if loops else c0 * c
            out[new] = out[new] + v if new in out else v
    return out


def _vec_letter(vec: dict, letter: int, a_val, a_inv, delta) -> dict:
    i = abs(letter) - 1
    out: dict = {}
    w_id, w_u = (a_val, a_inv) if letter > 0 else (a_inv, a_val)
    for state, c in vec.items():
        v = w_id * c
        out[state] = out[state] + v if state in out else v
        if state[i] == i + 1:
            new, v = state, w_u * c * delta
        else:
            # U_i joins the partners of i and i+1 and caps i, i+1
            lst = list(state)
            p, q = lst[i], lst[i + 1]
            lst[p], lst[q] = q, p
            lst[i], lst[i + 1] = i + 1, i
            new, v = tuple(lst), w_u * c
        out[new] = out[new] + v if new in out else v
    return out


def _plat_cabled(b: BraidWord, a: int, proj: TLElement, a_val, a_inv, delta, one):
    """Plat closure of the cabled braid computed on cap states."""
    m = b.strands * a
    caps = _plat_caps(b.strands, a)
    cap_state = tuple(caps[k] for k in range(m))
    vec = _vec_times({cap_state: one}, proj)
    for letter in cable_word(b, a).letters:
        vec = _vec_letter(vec, letter, a_val, a_inv, delta)
    vec = _vec_times(vec, proj)
    total = 0
    for state, c in vec.items():
        total = total + c * delta ** _glue_loops(state, cap_state)
    return total


def colored_bracket_bruteforce(
    b: BraidWord,
    a: int,
    closure: Closure | str = Closure.PLAT,
    A: complex | None = None,
    max_size: int = 8,
):
    """Unnormalized bracket of the ``a``-cabled closure with ``P_a`` on every
    cable at the top and the bottom.

    Exact (``LaurentPoly`` when the result is polynomial, else ``RationalFn``)
    when ``A`` is None, otherwise a complex number.  The unknot has value
    ``Delta_a``; for ``a = 1`` this is ``delta`` times the normalized bracket.
    """
    closure = b.check_closure(closure)
    if a < 0:
        raise ValueError("color must be nonnegative")
    if a == 0:
        return ONE if A is None else complex(1.0)
    size = b.strands * a
    if size > max_size:
        raise SizeCapError(f"cabled size {size} exceeds the cap of {max_size}")
    if A is None:
        delta = DELTA
        p = jones_wenzl(a)
        a_val, a_inv, one = RationalFn(VAR_A), RationalFn(VAR_A ** -1), RationalFn(1)
    else:
        A = complex(A)
        delta = -A * A - 1 / (A * A)
        p = jones_wenzl(a, delta=delta)
        a_val, a_inv, one = A, 1 / A, 1.0 + 0j
    proj = p
    for _ in range(b.strands - 1):
        proj = proj.tensor(p)
    if closure is Closure.PLAT:
        value = _plat_cabled(b, a, proj, a_val, a_inv, delta, one)
        if A is None:
            return _exact_result(value)
        return complex(value)
    x = proj
    for letter in cable_word(b, a).letters:
        x = _phi_apply(x, letter, a_val, a_inv)
    x = x * proj
    value = _close(x, closure, b.strands, a, 0)
    if A is None:
        return _exact_result(value)
    return complex(value)


def _exact_result(value):
    value = value if isinstance(value, RationalFn) else RationalFn(LaurentPoly.coerce(value))
    try:
        return value.to_laurent()
    except ValueError:
        return value
