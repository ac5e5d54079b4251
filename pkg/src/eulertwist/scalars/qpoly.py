"""Univariate polynomials with rational coefficients.

Used both for coefficients in the central parameter ``q`` and for the
moduli of simple field extensions.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction]


def _trim(coeffs: Sequence[Fraction]) -> tuple:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class QPoly:
    """Immutable polynomial ``sum(c[i] * var**i)`` over the rationals."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[Number] = ()):
        self.coeffs = _trim(Fraction(c) for c in coeffs)
        self._hash = None

    @classmethod
    def constant(cls, c: Number) -> "QPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: Number = 1) -> "QPoly":
        return cls([0] * degree + [c])

    @classmethod
    def coerce(cls, x) -> "QPoly":
        if isinstance(x, QPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return cls((x,))
        raise TypeError(f"cannot coerce {type(x).__name__} to QPoly")

    # -- basic queries --------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_term(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QPoly.constant(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("QPoly", self.coeffs))
        return self._hash

    def __bool__(self):
        return bool(self.coeffs)

    # -- ring operations ------------------------------------------------
    def __add__(self, other):
        try:
            other = QPoly.coerce(other)
        except TypeError:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return QPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return QPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        try:
            other = QPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return QPoly.coerce(other) - self

    def __mul__(self, other):
        try:
            other = QPoly.coerce(other)
        except TypeError:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return QPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result, base = QPoly.constant(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other: "QPoly") -> tuple:
        """Euclidean division ``self = quotient * other + remainder``."""
        other = QPoly.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.leading()
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            c = c / lead
            quot[k - dq] = c
            for j, b in enumerate(other.coeffs):
                rem[k - dq + j] -= c * b
        return QPoly(quot), QPoly(rem[:dq] if dq > 0 else [])

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __call__(self, x):
        """Evaluate by Horner's rule; ``x`` may be any ring element."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "QPoly":
        return QPoly(i * c for i, c in enumerate(self.coeffs) if i)

    # -- text -------------------------------------------------------------
    def to_text(self, var: str = "q") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = str(a)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"QPoly({self.to_text()})"


def poly_gcdex(a: QPoly, b: QPoly) -> tuple:
    """Extended Euclid: return ``(g, s, t)`` with ``s*a + t*b = g``, ``g`` monic."""
    r0, r1 = a, b
    s0, s1 = QPoly.constant(1), QPoly()
    t0, t1 = QPoly(), QPoly.constant(1)
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    lead = r0.leading()
    return (QPoly(c / lead for c in r0.coeffs),
            QPoly(c / lead for c in s0.coeffs),
            QPoly(c / lead for c in t0.coeffs))
