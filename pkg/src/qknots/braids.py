"""Braid words in the Artin group B_n and the moves used for invariance testing.

Letters are signed generator indices: ``k`` is s_k and ``-k`` is s_k^{-1}.
Words are read top to bottom, so ``BraidWord(3, (1, 2))`` places s_1 above s_2.
Every matrix or diagram representation in this package multiplies in the
same order: rep(w1 w2) = rep(w1) @ rep(w2).

Plat closure caps strands (1,2), (3,4), ... at the top and the same pairs at
the bottom.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

__all__ = [
    "BraidWord",
    "BraidParseError",
    "MoveError",
    "Closure",
    "parse_braid",
    "format_braid",
    "exponent_sum",
    "braid_permutation",
    "insert_cancel",
    "braid_relation",
    "far_commute",
    "conjugate",
    "stabilize",
    "equivalence_moves",
    "random_braid",
    "random_move",
]


class BraidParseError(ValueError):
    """Malformed braid text.  ``position`` is the 0-based token index."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message if position is None else f"token {position}: {message}")
        self.position = position


class MoveError(ValueError):
    """An equivalence move was requested where it does not apply."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message if position is None else f"position {position}: {message}")
        self.position = position


class Closure(str, Enum):
    TRACE = "trace"
    PLAT = "plat"


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        for pos, x in enumerate(self.letters):
            if x == 0 or abs(x) > self.strands - 1:
                raise ValueError(
                    f"letter {x} at position {pos} out of range for B_{self.strands}"
                )

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if other.strands != self.strands:
            raise ValueError("cannot multiply braids on different strand counts")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-x for x in reversed(self.letters)))

    def mirror(self) -> "BraidWord":
        """Switch every crossing."""
        return BraidWord(self.strands, tuple(-x for x in self.letters))

    def check_closure(self, closure: Closure | str) -> Closure:
        closure = Closure(closure)
        if closure is Closure.PLAT and self.strands % 2:
            raise ValueError("plat closure needs an even number of strands")
        return closure

    def __str__(self):
        return format_braid(self)


def parse_braid(text: str | Sequence[str] | Sequence[int], strands: int | None = None) -> BraidWord:
    """Parse whitespace-separated nonzero integers, optionally preceded by a
    header token ``n=<strands>``.

    Without an explicit strand count (argument or header) the count is
    ``max|index| + 1``.
    """
    if isinstance(text, str):
        tokens: list = text.replace(",", " ").split()
    else:
        tokens = list(text)
    header_n = None
    letters: list[int] = []
    for pos, tok in enumerate(tokens):
        if isinstance(tok, str) and tok.lower().startswith("n="):
            if pos != 0:
                raise BraidParseError("strand header must come first", pos)
            try:
                header_n = int(tok[2:])
            except ValueError:
                raise BraidParseError(f"bad strand header {tok!r}", pos) from None
            if header_n < 1:
                raise BraidParseError("strand count must be positive", pos)
            continue
        try:
            x = int(tok)
        except (TypeError, ValueError):
            raise BraidParseError(f"not an integer: {tok!r}", pos) from None
        if x == 0:
            raise BraidParseError("generator index 0 is not allowed", pos)
        letters.append(x)
    if strands is not None and header_n is not None and strands != header_n:
        raise BraidParseError(f"header says n={header_n} but strands={strands}", 0)
    n = strands if strands is not None else header_n
    if n is None:
        n = max((abs(x) for x in letters), default=0) + 1
    offset = 1 if header_n is not None else 0
    for pos, x in enumerate(letters):
        if abs(x) > n - 1:
            raise BraidParseError(f"index {x} out of range for {n} strands", pos + offset)
    return BraidWord(n, tuple(letters))


def format_braid(b: BraidWord, header: bool = True) -> str:
    body = " ".join(str(x) for x in b.letters)
    if not header:
        return body
    return f"n={b.strands} {body}".rstrip()


def exponent_sum(b: BraidWord) -> int:
    return sum(1 if x > 0 else -1 for x in b.letters)


def braid_permutation(b: BraidWord) -> tuple[int, ...]:
    """Image in S_n as a tuple ``perm`` with strand starting at top position
    ``i`` ending at bottom position ``perm[i]`` (0-based)."""
    pos = list(range(b.strands))  # pos[strand] = current position
    where = list(range(b.strands))  # where[position] = strand
    for x in b.letters:
        k = abs(x) - 1
        s, t = where[k], where[k + 1]
        where[k], where[k + 1] = t, s
        pos[s], pos[t] = k + 1, k
    return tuple(pos)


# ---------------------------------------------------------------- moves


def insert_cancel(b: BraidWord, i: int, pos: int, sign: int = 1) -> BraidWord:
    """Insert ``s_i^{sign} s_i^{-sign}`` before letter ``pos`` (Reidemeister II)."""
    if not 1 <= i <= b.strands - 1:
        raise MoveError(f"generator {i} out of range for B_{b.strands}", pos)
    if not 0 <= pos <= len(b):
        raise MoveError("insertion point outside the word", pos)
    s = 1 if sign > 0 else -1
    letters = b.letters[:pos] + (s * i, -s * i) + b.letters[pos:]
    return BraidWord(b.strands, letters)


def braid_relation(b: BraidWord, pos: int) -> BraidWord:
    """Rewrite ``s_i^e s_j^e s_i^e -> s_j^e s_i^e s_j^e`` at ``pos`` with |i-j| = 1
    and a common sign ``e`` (Reidemeister III)."""
    w = b.letters
    if pos < 0 or pos + 3 > len(w):
        raise MoveError("no three letters at this position", pos)
    x, y, z = w[pos:pos + 3]
    if not (x == z and abs(abs(x) - abs(y)) == 1 and (x > 0) == (y > 0)):
        raise MoveError(f"letters {x} {y} {z} do not form a braid relation", pos)
    return BraidWord(b.strands, w[:pos] + (y, x, y) + w[pos + 3:])


def far_commute(b: BraidWord, pos: int) -> BraidWord:
    """Swap letters ``pos`` and ``pos+1`` when their generators are far apart."""
    w = b.letters
    if pos < 0 or pos + 2 > len(w):
        raise MoveError("no letter pair at this position", pos)
    x, y = w[pos], w[pos + 1]
    if abs(abs(x) - abs(y)) <= 1:
        raise MoveError(f"letters {x} {y} do not commute", pos)
    return BraidWord(b.strands, w[:pos] + (y, x) + w[pos + 2:])


def conjugate(b: BraidWord, g: int) -> BraidWord:
    """``s_g^{-1} b s_g`` (g signed); the trace closure is unchanged."""
    if g == 0 or abs(g) > b.strands - 1:
        raise MoveError(f"generator {g} out of range for B_{b.strands}")
    return BraidWord(b.strands, (-g,) + b.letters + (g,))


def stabilize(b: BraidWord, sign: int = 1) -> BraidWord:
    """Markov stabilization: append ``s_n^{+-1}`` on ``n+1`` strands."""
    s = 1 if sign > 0 else -1
    return BraidWord(b.strands + 1, b.letters + (s * b.strands,))


def equivalence_moves(b: BraidWord, move: str, *args, **kwargs) -> BraidWord:
    """Dispatch by name: insert_cancel, braid_relation, far_commute,
    conjugate, stabilize."""
    table = {
        "insert_cancel": insert_cancel,
        "braid_relation": braid_relation,
        "far_commute": far_commute,
        "conjugate": conjugate,
        "stabilize": stabilize,
    }
    try:
        fn = table[move]
    except KeyError:
        raise MoveError(f"unknown move {move!r}") from None
    return fn(b, *args, **kwargs)


# ------------------------------------------------------- random sampling


def random_braid(rng: random.Random, strands: int, length: int) -> BraidWord:
    letters = [
        rng.choice((1, -1)) * rng.randint(1, strands - 1) for _ in range(length)
    ] if strands > 1 else []
    return BraidWord(strands, tuple(letters))


def _applicable_positions(b: BraidWord, move: str) -> list[int]:
    w = b.letters
    if move == "braid_relation":
        return [p for p in range(len(w) - 2)
                if w[p] == w[p + 2] and abs(abs(w[p]) - abs(w[p + 1])) == 1
                and (w[p] > 0) == (w[p + 1] > 0)]
    if move == "far_commute":
        return [p for p in range(len(w) - 1) if abs(abs(w[p]) - abs(w[p + 1])) > 1]
    raise ValueError(move)


def random_move(
    rng: random.Random,
    b: BraidWord,
    moves: Iterable[str] = ("insert_cancel", "braid_relation", "far_commute", "conjugate", "stabilize"),
) -> tuple[str, BraidWord]:
    """Apply one randomly chosen applicable move; returns (move name, result)."""
    moves = list(moves)
    rng.shuffle(moves)
    for move in moves:
        if move in ("braid_relation", "far_commute"):
            spots = _applicable_positions(b, move)
            if not spots:
                continue
            return move, equivalence_moves(b, move, rng.choice(spots))
        if move in ("insert_cancel", "conjugate") and b.strands < 2:
            continue
        if move == "insert_cancel":
            i = rng.randint(1, b.strands - 1)
            return move, insert_cancel(b, i, rng.randint(0, len(b)), rng.choice((1, -1)))
        if move == "conjugate":
            return move, conjugate(b, rng.choice((1, -1)) * rng.randint(1, b.strands - 1))
        if move == "stabilize":
            return move, stabilize(b, rng.choice((1, -1)))
    raise MoveError("no applicable move")
