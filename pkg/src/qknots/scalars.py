"""Scalar domains: exact Laurent polynomials in ``A``, rational functions of
``A``, and double-precision quaternions.

Laurent polynomials keep arbitrary-precision integer coefficients and are
always stored in canonical form (no zero coefficients).  Rational functions
are reduced by an integer polynomial GCD on construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from numbers import Integral
from typing import Iterable, Mapping

__all__ = [
    "LaurentPoly",
    "RationalFn",
    "Quaternion",
    "A",
    "ONE",
    "ZERO",
    "DELTA",
    "poly_arith",
    "poly_invert_variable",
    "poly_eval_complex",
    "quat_mul",
]


class LaurentPoly:
    """Immutable Laurent polynomial in a single variable ``A`` with integer
    coefficients.

    >>> (A + A**-1) * (A - A**-1)
    LaurentPoly('A^2 - A^-2')
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] | None = None):
        cleaned: dict[int, int] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for exp, coeff in items:
                if not isinstance(exp, Integral) or not isinstance(coeff, Integral):
                    raise TypeError("exponents and coefficients must be integers")
                cleaned[int(exp)] = cleaned.get(int(exp), 0) + int(coeff)
        self._terms = {e: c for e, c in sorted(cleaned.items()) if c != 0}
        self._hash = None

    # construction helpers

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def coerce(cls, value) -> "LaurentPoly":
        if isinstance(value, LaurentPoly):
            return value
        if isinstance(value, Integral):
            return cls({0: int(value)})
        raise TypeError(f"cannot coerce {type(value).__name__} to LaurentPoly")

    # accessors

    @property
    def terms(self) -> dict[int, int]:
        """Copy of the exponent -> coefficient mapping, ascending exponents."""
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    @property
    def min_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return next(iter(self._terms))

    @property
    def max_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return next(reversed(self._terms))

    # arithmetic

    def __add__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, RationalFn):
            return NotImplemented
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, Integral):
            return NotImplemented
        if n < 0:
            if not self.is_monomial():
                raise ValueError("only monomials have Laurent-polynomial inverses")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("monomial with non-unit coefficient is not invertible")
            return LaurentPoly({e * n: c ** (-n)})
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (LaurentPoly, Integral)):
            return RationalFn(self, LaurentPoly.coerce(other))
        if isinstance(other, RationalFn):
            return RationalFn(self) / other
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, Integral):
            return RationalFn(LaurentPoly.coerce(other), self)
        return NotImplemented

    def divmod_exact(self, divisor: "LaurentPoly") -> tuple["LaurentPoly", "LaurentPoly"]:
        """Long division in the Laurent ring.  Returns (quotient, remainder);
        the remainder is zero iff ``divisor`` divides ``self`` with integer
        coefficients."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return ZERO, ZERO
        lead_e = divisor.max_degree
        lead_c = divisor.coefficient(lead_e)
        low_e = divisor.min_degree
        rem = dict(self._terms)
        quot: dict[int, int] = {}
        while rem:
            top = max(rem)
            if top - lead_e < min(rem) - low_e:
                break
            c = rem[top]
            if c % lead_c:
                break
            q = c // lead_c
            shift = top - lead_e
            quot[shift] = q
            for e, dc in divisor._terms.items():
                k = e + shift
                v = rem.get(k, 0) - q * dc
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return LaurentPoly(quot), LaurentPoly(rem)

    # substitution / evaluation

    def invert_variable(self) -> "LaurentPoly":
        """Substitute ``A -> A^{-1}`` (mirror image for the bracket)."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def scale_shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``A^k``."""
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def scale_exponents(self, k: int) -> "LaurentPoly":
        """Substitute ``A -> A^k``."""
        return LaurentPoly({k * e: c for e, c in self._terms.items()})

    def evaluate(self, a: complex) -> complex:
        return poly_eval_complex(self, a)

    __call__ = evaluate

    # comparison / hashing

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, Integral):
            return self._terms == LaurentPoly.constant(other)._terms
        if isinstance(other, RationalFn):
            return other == self
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # formatting

    def to_json(self) -> dict[str, int]:
        """Exponent keys as strings, highest exponent first."""
        return {str(e): c for e, c in sorted(self._terms.items(), reverse=True)}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> "LaurentPoly":
        return cls({int(e): int(c) for e, c in data.items()})

    def format(self, var: str = "A") -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (e, c) in enumerate(sorted(self._terms.items(), reverse=True)):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                body = var if e == 1 else f"{var}^{e}"
                if mag != 1:
                    body = f"{mag}{body}"
            if i == 0:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"LaurentPoly('{self.format()}')"


ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})
A = LaurentPoly({1: 1})
#: loop value of the bracket, -A^2 - A^-2
DELTA = LaurentPoly({2: -1, -2: -1})


class RationalFn:
    """Quotient of two Laurent polynomials.  Not reduced to lowest terms."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = LaurentPoly.coerce(num)
        den = ONE if den is None else LaurentPoly.coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("RationalFn with zero denominator")
        if den != ONE:
            num, den = _reduce_fraction(num, den)
        self.num = num
        self.den = den

    @staticmethod
    def coerce(value) -> "RationalFn":
        if isinstance(value, RationalFn):
            return value
        return RationalFn(LaurentPoly.coerce(value))

    def __add__(self, other):
        try:
            other = RationalFn.coerce(other)
        except TypeError:
            return NotImplemented
        if self.den == other.den:
            return RationalFn(self.num + other.num, self.den)
        return RationalFn(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFn(-self.num, self.den)

    def __sub__(self, other):
        try:
            other = RationalFn.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        try:
            other = RationalFn.coerce(other)
        except TypeError:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        try:
            other = RationalFn.coerce(other)
        except TypeError:
            return NotImplemented
        return RationalFn(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            other = RationalFn.coerce(other)
        except TypeError:
            return NotImplemented
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFn(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        try:
            other = RationalFn.coerce(other)
        except TypeError:
            return NotImplemented
        return other / self

    def __pow__(self, n: int):
        if n < 0:
            return RationalFn(self.den, self.num) ** (-n)
        return RationalFn(self.num ** n, self.den ** n)

    def __eq__(self, other):
        try:
            other = RationalFn.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None  # equality is by cross-multiplication; no canonical form

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def evaluate(self, a: complex) -> complex:
        den = poly_eval_complex(self.den, a)
        if den == 0:
            raise ZeroDivisionError(f"denominator vanishes at A={a}")
        return poly_eval_complex(self.num, a) / den

    __call__ = evaluate

    def to_laurent(self) -> LaurentPoly:
        """Exact quotient; raises ValueError if the denominator does not divide."""
        q, r = self.num.divmod_exact(self.den)
        if not r.is_zero():
            raise ValueError("rational function is not a Laurent polynomial")
        return q

    def __repr__(self):
        if self.den == ONE:
            return f"RationalFn({self.num.format()})"
        return f"RationalFn(({self.num.format()}) / ({self.den.format()}))"


def _to_dense(p: LaurentPoly) -> list[int]:
    """Coefficients ascending from the lowest exponent."""
    lo, hi = p.min_degree, p.max_degree
    return [p.coefficient(e) for e in range(lo, hi + 1)]


def _content(c: list[int]) -> int:
    g = 0
    for x in c:
        g = math.gcd(g, x)
    return g


def _primitive(c: list[int]) -> list[int]:
    g = _content(c)
    sign = -1 if c[-1] < 0 else 1
    return [sign * (x // g) for x in c]


def _dense_gcd(a: list[int], b: list[int]) -> list[int]:
    """Primitive GCD in Z[x] by the primitive pseudo-remainder sequence."""
    a, b = _primitive(a), _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while len(b) > 1 or (len(b) == 1 and b[0] != 0):
        if len(b) == 1:
            return [1]
        r = list(a)
        lb = b[-1]
        while len(r) >= len(b) and any(r):
            lr = r[-1]
            shift = len(r) - len(b)
            r = [lb * x for x in r]
            for i, x in enumerate(b):
                r[i + shift] -= lr * x
            while r and r[-1] == 0:
                r.pop()
        if not r:
            return b
        a, b = b, _primitive(r)
    return a


def _reduce_fraction(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Cancel the common factor of ``num/den``; the result has a monomial-free
    denominator with positive leading coefficient."""
    # strip monomial factors of the denominator
    shift = den.min_degree
    den = den.scale_shift(-shift)
    num = num.scale_shift(-shift)
    if num.is_zero():
        return ZERO, ONE
    g_dense = _dense_gcd(_to_dense(num), _to_dense(den))
    if len(g_dense) > 1:
        g = LaurentPoly(dict(enumerate(g_dense)))
        num, r1 = num.divmod_exact(g)
        den, r2 = den.divmod_exact(g)
        assert r1.is_zero() and r2.is_zero()
    cn, cd = _content(_to_dense(num)), _content(_to_dense(den))
    c = math.gcd(cn, cd)
    if den.coefficient(den.max_degree) < 0:
        c = -c
    if c != 1:
        num = LaurentPoly({e: v // c for e, v in num.items()})
        den = LaurentPoly({e: v // c for e, v in den.items()})
    shift = den.min_degree
    if den.is_monomial() and den.coefficient(shift) == 1:
        return num.scale_shift(-shift), ONE
    return num, den


def poly_arith(p: LaurentPoly, q: LaurentPoly, op: str) -> LaurentPoly:
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown operation {op!r}")


def poly_invert_variable(p: LaurentPoly) -> LaurentPoly:
    return p.invert_variable()


def poly_eval_complex(p: LaurentPoly, a: complex) -> complex:
    """Horner evaluation of a Laurent polynomial at a nonzero complex ``a``."""
    if a == 0:
        raise ZeroDivisionError("Laurent polynomial evaluated at A = 0")
    if p.is_zero():
        return 0j
    a = complex(a)
    lo, hi = p.min_degree, p.max_degree
    acc = 0j
    for e in range(hi, lo - 1, -1):
        acc = acc * a + p.coefficient(e)
    return acc * a ** lo


@dataclass(frozen=True)
class Quaternion:
    """``a + b i + c j + d k`` in double precision."""

    a: float
    b: float = 0.0
    c: float = 0.0
    d: float = 0.0

    @classmethod
    def pure(cls, v) -> "Quaternion":
        x, y, z = v
        return cls(0.0, float(x), float(y), float(z))

    @classmethod
    def from_axis(cls, scalar: float, axis_coeff: float, u: "Quaternion") -> "Quaternion":
        """``scalar + axis_coeff * u`` for a pure quaternion ``u``."""
        return cls(scalar, axis_coeff * u.b, axis_coeff * u.c, axis_coeff * u.d)

    @classmethod
    def exp_pure(cls, angle: float, u: "Quaternion") -> "Quaternion":
        """``e^{angle u} = cos(angle) + sin(angle) u`` for unit pure ``u``."""
        return cls.from_axis(math.cos(angle), math.sin(angle), u)

    @property
    def scalar(self) -> float:
        return self.a

    @property
    def vector(self) -> tuple[float, float, float]:
        return (self.b, self.c, self.d)

    def __add__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d)

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d)

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.a, -self.b, -self.c, -self.d)

    def scale(self, s: float) -> "Quaternion":
        return Quaternion(s * self.a, s * self.b, s * self.c, s * self.d)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return quat_mul(self, other)
        if isinstance(other, (int, float)):
            return self.scale(float(other))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return self.scale(float(other))
        return NotImplemented

    def conj(self) -> "Quaternion":
        return Quaternion(self.a, -self.b, -self.c, -self.d)

    dagger = conj

    def norm(self) -> float:
        return math.sqrt(self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d)

    def normalized(self) -> "Quaternion":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("cannot normalize the zero quaternion")
        return self.scale(1.0 / n)

    def inverse(self) -> "Quaternion":
        n2 = self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d
        if n2 == 0:
            raise ZeroDivisionError("zero quaternion has no inverse")
        return self.conj().scale(1.0 / n2)

    def is_pure(self, tol: float = 1e-12) -> bool:
        return abs(self.a) <= tol

    def is_unit(self, tol: float = 1e-12) -> bool:
        return abs(self.norm() - 1.0) <= tol

    def close_to(self, other: "Quaternion", tol: float = 1e-12) -> bool:
        return (self - other).norm() <= tol

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.a, self.b, self.c, self.d)

    def as_matrix(self):
        """2x2 complex matrix ``a*1 + b*i + c*j + d*k`` with
        i = diag(i, -i), j = [[0, 1], [-1, 0]], k = [[0, i], [i, 0]]."""
        import numpy as np

        return np.array(
            [[complex(self.a, self.b), complex(self.c, self.d)],
             [complex(-self.c, self.d), complex(self.a, -self.b)]],
            dtype=complex,
        )

    @classmethod
    def from_matrix(cls, m) -> "Quaternion":
        """Inverse of :meth:`as_matrix` for matrices of the form
        [[z, w], [-conj(w), conj(z)]]."""
        z, w = complex(m[0][0]), complex(m[0][1])
        return cls(z.real, z.imag, w.real, w.imag)


def quat_mul(q: Quaternion, p: Quaternion) -> Quaternion:
    """Hamilton product with ij = k, jk = i, ki = j."""
    a1, b1, c1, d1 = q.a, q.b, q.c, q.d
    a2, b2, c2, d2 = p.a, p.b, p.c, p.d
    return Quaternion(
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )
