"""Exact ground fields: the rationals and simple extensions ``Q[x]/(p)``.

Rational elements are plain :class:`fractions.Fraction` values.  Elements
of an extension are :class:`ExtElement` residues of degree ``< deg p``.
Both support the arithmetic operators, so matrix code is field-agnostic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..errors import FieldMismatch, InversionOfNoninvertible
from .qpoly import QPoly, poly_gcdex


def parse_rational(text) -> Fraction:
    """Parse ``"a"`` or ``"a/b"`` (ints are accepted as well)."""
    if isinstance(text, bool):
        raise ValueError("booleans are not scalars")
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    if isinstance(text, str):
        s = text.strip()
        if not s or any(ch not in "0123456789-+/ " for ch in s):
            raise ValueError(f"not a rational literal: {text!r}")
        return Fraction(s.replace(" ", ""))
    raise ValueError(f"not a rational literal: {text!r}")


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class Rationals:
    """The field Q.  Use the module-level singleton :data:`QQ`."""

    kind = "rationals"
    degree = 1

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"

    def zero(self) -> Fraction:
        return Fraction(0)

    def one(self) -> Fraction:
        return Fraction(1)

    def coerce(self, x) -> Fraction:
        if isinstance(x, ExtElement):
            raise FieldMismatch("extension element used over the rationals")
        if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
            return Fraction(x)
        if isinstance(x, str):
            return parse_rational(x)
        raise FieldMismatch(f"cannot interpret {x!r} as a rational")

    def contains(self, x) -> bool:
        return isinstance(x, (int, Fraction)) and not isinstance(x, bool)

    def inv(self, a) -> Fraction:
        a = self.coerce(a)
        if a == 0:
            raise InversionOfNoninvertible("inverse of zero")
        return 1 / a

    def to_text(self, a):
        return format_rational(self.coerce(a))

    def from_text(self, t):
        return self.coerce(t)

    def to_json(self) -> dict:
        return {"kind": "rationals"}


QQ = Rationals()


class Extension:
    """The ring ``Q[x]/(modulus)`` with a monic modulus of degree >= 1.

    Irreducibility of the modulus is not checked; inverting a zero divisor
    raises :class:`InversionOfNoninvertible`.
    """

    kind = "extension"

    def __init__(self, modulus, name: str = "x"):
        p = QPoly.coerce(modulus) if isinstance(modulus, QPoly) else QPoly(
            parse_rational(c) for c in modulus)
        if p.degree < 1:
            raise ValueError("extension modulus must have degree >= 1")
        if p.leading() != 1:
            raise ValueError("extension modulus must be monic")
        self.modulus = p
        self.degree = p.degree
        self.name = name

    def __eq__(self, other):
        return isinstance(other, Extension) and other.modulus == self.modulus

    def __hash__(self):
        return hash(("ext", self.modulus.coeffs))

    def __repr__(self):
        return f"Q[{self.name}]/({self.modulus.to_text(self.name)})"

    def element(self, coeffs) -> "ExtElement":
        return ExtElement(self, QPoly(coeffs) % self.modulus)

    def gen(self) -> "ExtElement":
        return self.element([0, 1])

    def zero(self) -> "ExtElement":
        return ExtElement(self, QPoly())

    def one(self) -> "ExtElement":
        return self.element([1])

    def coerce(self, x) -> "ExtElement":
        if isinstance(x, ExtElement):
            if x.field != self:
                raise FieldMismatch(f"element of {x.field} used in {self}")
            return x
        if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
            return ExtElement(self, QPoly((x,)))
        if isinstance(x, str):
            return ExtElement(self, QPoly((parse_rational(x),)))
        if isinstance(x, (list, tuple)):
            return self.element([parse_rational(c) for c in x])
        raise FieldMismatch(f"cannot interpret {x!r} in {self}")

    def contains(self, x) -> bool:
        return isinstance(x, ExtElement) and x.field == self

    def inv(self, a) -> "ExtElement":
        a = self.coerce(a)
        if a.poly.is_zero():
            raise InversionOfNoninvertible("inverse of zero")
        g, s, _ = poly_gcdex(a.poly, self.modulus)
        if g.degree != 0:
            raise InversionOfNoninvertible(
                f"{a} is a zero divisor in {self} (gcd {g.to_text(self.name)})")
        return ExtElement(self, s % self.modulus)

    def to_text(self, a) -> list:
        a = self.coerce(a)
        return [format_rational(a.poly[i]) for i in range(self.degree)]

    def from_text(self, t):
        return self.coerce(t)

    def to_json(self) -> dict:
        return {"kind": "extension",
                "modulus": [format_rational(c) for c in self.modulus.coeffs]}


class ExtElement:
    """Residue class in ``Q[x]/(p)``; immutable."""

    __slots__ = ("field", "poly")

    def __init__(self, field: Extension, poly: QPoly):
        self.field = field
        self.poly = poly

    def _other(self, other):
        if isinstance(other, ExtElement):
            if other.field != self.field:
                raise FieldMismatch(f"{other.field} vs {self.field}")
            return other.poly
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return QPoly((other,))
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return ExtElement(self.field, self.poly + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return ExtElement(self.field, self.poly - o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return ExtElement(self.field, o - self.poly)

    def __neg__(self):
        return ExtElement(self.field, -self.poly)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return ExtElement(self.field, (self.poly * o) % self.field.modulus)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, ExtElement):
            return self * self.field.inv(other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                raise InversionOfNoninvertible("division by zero")
            return ExtElement(self.field, self.poly * QPoly((Fraction(1) / other,)))
        return NotImplemented

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return ExtElement(self.field, o) * self.field.inv(self)

    def __pow__(self, n: int):
        if n < 0:
            return self.field.inv(self) ** (-n)
        result, base = self.field.one(), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, ExtElement):
            return other.field == self.field and other.poly == self.poly
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.poly == QPoly((other,))
        return NotImplemented

    def __hash__(self):
        if self.poly.is_constant():
            return hash(self.poly.constant_term())
        return hash((self.field, self.poly))

    def __bool__(self):
        return not self.poly.is_zero()

    def __repr__(self):
        return self.poly.to_text(self.field.name)


def field_from_json(spec) -> "Rationals | Extension":
    """Build a field from its JSON description (``None`` means Q)."""
    if spec is None or spec == "rationals":
        return QQ
    if isinstance(spec, dict):
        kind = spec.get("kind", "rationals")
        if kind == "rationals":
            return QQ
        if kind == "extension":
            return Extension(spec["modulus"], spec.get("name", "x"))
        if kind == "quadratic":
            return quadratic_field(int(spec["d"]))
    raise ValueError(f"unknown field description {spec!r}")


def quadratic_field(d: int) -> Extension:
    """``Q[x]/(x^2 - d)``, so that ``x`` plays the role of ``sqrt(d)``."""
    return Extension(QPoly((-d, 0, 1)))


def field_arith(a, b, op: str, field):
    """Exact ``add``/``mul``/``inv`` (``b`` is ignored for ``inv``)."""
    a = field.coerce(a)
    if op == "inv":
        return field.inv(a)
    b = field.coerce(b)
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def common_field(values: Sequence) -> "Rationals | Extension":
    """The field the given scalars live in (Q when all are rational)."""
    field = QQ
    for v in values:
        if isinstance(v, ExtElement):
            if field == QQ:
                field = v.field
            elif field != v.field:
                raise FieldMismatch(f"{field} vs {v.field}")
    return field
