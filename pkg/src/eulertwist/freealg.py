"""Noncommutative polynomials in ``x1..xN`` over ``Q[q]``.

A polynomial is a map from words (tuples of generator indices) to
:class:`QPoly` coefficients in the central variable ``q``.  Words multiply
by concatenation.  Canonical serialization orders words by length, then
lexicographically.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Callable, Dict, Iterable, Mapping, Sequence, Tuple, Union

from .errors import AmbientMismatch, ShapeMismatch, UnspecializedParameter
from .scalars import QQ, Mat, QPoly, format_rational, parse_rational

Word = Tuple[int, ...]


def word_key(w: Word):
    return (len(w), w)


class NCPoly:
    """Element of ``Q[q]<x1, ..., xN>``; ``ambient`` is ``N``."""

    __slots__ = ("ambient", "terms", "_hash")

    def __init__(self, ambient: int, terms: Mapping[Word, object] = ()):
        self.ambient = ambient
        clean: Dict[Word, QPoly] = {}
        for w, c in dict(terms).items():
            w = tuple(w)
            for i in w:
                if not 1 <= i <= ambient:
                    raise AmbientMismatch(f"generator x{i} outside x1..x{ambient}")
            c = QPoly.coerce(c) if not isinstance(c, QPoly) else c
            if not c.is_zero():
                clean[w] = c
        self.terms = dict(sorted(clean.items(), key=lambda t: word_key(t[0])))
        self._hash = None

    # -- constructors ---------------------------------------------------
    @classmethod
    def zero(cls, ambient: int) -> "NCPoly":
        return cls(ambient)

    @classmethod
    def one(cls, ambient: int) -> "NCPoly":
        return cls(ambient, {(): QPoly.constant(1)})

    @classmethod
    def gen(cls, i: int, ambient: int) -> "NCPoly":
        return cls(ambient, {(i,): QPoly.constant(1)})

    @classmethod
    def q(cls, ambient: int) -> "NCPoly":
        return cls(ambient, {(): QPoly.monomial(1)})

    @classmethod
    def monomial(cls, word: Sequence[int], ambient: int, coeff=1) -> "NCPoly":
        return cls(ambient, {tuple(word): QPoly.coerce(coeff)})

    # -- basics ---------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self.ambient == other.ambient and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ambient, tuple(self.terms.items())))
        return self._hash

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def coefficient(self, word: Sequence[int]) -> QPoly:
        return self.terms.get(tuple(word), QPoly())

    def is_q_free(self) -> bool:
        return all(c.is_constant() for c in self.terms.values())

    def _check(self, other: "NCPoly"):
        if other.ambient != self.ambient:
            raise AmbientMismatch(f"ambient {self.ambient} vs {other.ambient}")

    def _lift(self, other) -> "NCPoly":
        if isinstance(other, NCPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, QPoly)):
            return NCPoly(self.ambient, {(): QPoly.coerce(other)})
        raise TypeError(f"cannot combine NCPoly with {type(other).__name__}")

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, QPoly()) + c
        return NCPoly(self.ambient, out)

    __radd__ = __add__

    def __neg__(self):
        return NCPoly(self.ambient, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        out: Dict[Word, QPoly] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                out[w] = out.get(w, QPoly()) + c1 * c2
        return NCPoly(self.ambient, out)

    def __rmul__(self, other):
        return self._lift(other) * self

    def __pow__(self, n: int):
        result = NCPoly.one(self.ambient)
        for _ in range(n):
            result = result * self
        return result

    def __repr__(self):
        return f"NCPoly({self.to_text()!r}, N={self.ambient})"

    # -- serialization --------------------------------------------------
    def to_text(self) -> str:
        """Render with longest words first, e.g. ``x1*x2*x3 - x1 - x3``."""
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda t: (-len(t[0]), t[0]))
        out = ""
        for n, (w, c) in enumerate(items):
            sign, body = _coeff_text(c)
            mono = "*".join(f"x{i}" for i in w)
            if mono:
                body = mono if body == "1" else f"{body}*{mono}"
            if n == 0:
                out = ("-" if sign < 0 else "") + body
            else:
                out += (" - " if sign < 0 else " + ") + body
        return out

    def to_json(self) -> dict:
        return {
            "ambient": self.ambient,
            "terms": [{"word": list(w),
                       "coeff": [format_rational(a) for a in c.coeffs]}
                      for w, c in self.terms.items()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "NCPoly":
        out: Dict[Word, QPoly] = {}
        for t in data["terms"]:
            w = tuple(int(i) for i in t["word"])
            out[w] = out.get(w, QPoly()) + QPoly(parse_rational(a) for a in t["coeff"])
        return cls(int(data["ambient"]), out)

    @classmethod
    def from_text(cls, text: str, ambient: int | None = None) -> "NCPoly":
        return _Parser(text, ambient).parse()


def _coeff_text(c: QPoly) -> Tuple[int, str]:
    """Sign and magnitude text of a coefficient; multi-term ones get parens."""
    nz = [i for i, a in enumerate(c.coeffs) if a != 0]
    if len(nz) == 1:
        i = nz[0]
        a = c.coeffs[i]
        sign = -1 if a < 0 else 1
        mag = QPoly.monomial(i, abs(a)).to_text("q")
        return sign, mag
    return 1, f"({c.to_text('q')})"


_TOKEN = re.compile(r"\s*(?:(x)(\d+)|(q)|(\d+(?:/\d+)?)|(\^)|([-+*()]))")


class _Parser:
    """Recursive-descent parser for the text form (``q`` is central)."""

    def __init__(self, text: str, ambient: int | None):
        self.text = text
        self.tokens = []
        pos = 0
        text = text.rstrip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ValueError(f"unexpected character at position {pos}: {text[pos:pos + 10]!r}")
            if m.group(1):
                self.tokens.append(("x", int(m.group(2))))
            elif m.group(3):
                self.tokens.append(("q", None))
            elif m.group(4):
                self.tokens.append(("num", Fraction(m.group(4))))
            elif m.group(5):
                self.tokens.append(("op", "^"))
            else:
                self.tokens.append(("op", m.group(6)))
            pos = m.end()
        if ambient is None:
            ambient = max([v for k, v in self.tokens if k == "x"], default=0)
        self.ambient = ambient
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def parse(self) -> NCPoly:
        if not self.tokens:
            raise ValueError("empty polynomial text")
        p = self.expr()
        if self.i != len(self.tokens):
            raise ValueError(f"trailing tokens after term {self.i}")
        return p

    def expr(self) -> NCPoly:
        sign = 1
        if self.peek() in (("op", "-"), ("op", "+")):
            sign = -1 if self.take()[1] == "-" else 1
        acc = self.term() * sign
        while self.peek() in (("op", "-"), ("op", "+")):
            op = self.take()[1]
            t = self.term()
            acc = acc - t if op == "-" else acc + t
        return acc

    def term(self) -> NCPoly:
        acc = self.power()
        while self.peek() == ("op", "*"):
            self.take()
            acc = acc * self.power()
        return acc

    def power(self) -> NCPoly:
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, val = self.take()
            if kind != "num" or val.denominator != 1 or val < 0:
                raise ValueError("exponent must be a nonnegative integer")
            base = base ** int(val)
        return base

    def atom(self) -> NCPoly:
        kind, val = self.take()
        N = self.ambient
        if kind == "x":
            return NCPoly.gen(val, N)
        if kind == "q":
            return NCPoly.q(N)
        if kind == "num":
            return NCPoly(N, {(): QPoly.constant(val)})
        if (kind, val) == ("op", "("):
            p = self.expr()
            if self.take() != ("op", ")"):
                raise ValueError("unbalanced parenthesis")
            return p
        if (kind, val) == ("op", "-"):
            return -self.power()
        raise ValueError(f"unexpected token {val!r}")


# -- module-level operations ---------------------------------------------

def nc_add(p1: NCPoly, p2: NCPoly) -> NCPoly:
    return p1 + p2


def nc_mul(p1: NCPoly, p2: NCPoly) -> NCPoly:
    return p1 * p2


def nc_substitute(p: NCPoly, index_map: Union[Mapping[int, int], Callable[[int], int]],
                  ambient: int | None = None) -> NCPoly:
    """Rename generators ``x_i -> x_{index_map(i)}`` into ambient ``ambient``."""
    f = index_map if callable(index_map) else index_map.__getitem__
    ambient = p.ambient if ambient is None else ambient
    out: Dict[Word, QPoly] = {}
    for w, c in p.terms.items():
        nw = tuple(f(i) for i in w)
        out[nw] = out.get(nw, QPoly()) + c
    return NCPoly(ambient, out)


def nc_shift(p: NCPoly, offset: int, ambient: int) -> NCPoly:
    return nc_substitute(p, lambda i: i + offset, ambient)


def specialize_q(p: NCPoly, q0) -> NCPoly:
    q0 = parse_rational(q0)
    return NCPoly(p.ambient, {w: QPoly.constant(c(q0)) for w, c in p.terms.items()})


def _as_mat(op) -> Mat:
    return op.matrix if hasattr(op, "matrix") else op


def nc_eval(p: NCPoly, ops: Sequence, identity_shape: Tuple[int, int] | None = None) -> Mat:
    """Evaluate ``p`` at operators, ``x_i -> ops[i-1]``.

    A word ``x_a x_b`` becomes the matrix product ``ops[a-1] @ ops[b-1]``.
    ``ops`` may hold :class:`Mat` values or anything with a ``matrix``.
    """
    mats = [_as_mat(o) for o in ops]
    field = mats[0].field if mats else QQ
    ident = tuple(identity_shape) if identity_shape is not None else None
    shape = None
    result = None
    for w, c in p.terms.items():
        if not c.is_constant():
            raise UnspecializedParameter("evaluate after specializing q")
        coeff = c.constant_term()
        if not w:
            if ident is None or ident[0] != ident[1]:
                raise ShapeMismatch("empty word needs a square identity_shape")
            term = Mat.identity(ident[0], field)
        else:
            if max(w) > len(mats):
                raise ShapeMismatch(f"word uses x{max(w)} but only {len(mats)} operators given")
            term = mats[w[0] - 1]
            for i in w[1:]:
                nxt = mats[i - 1]
                if term.cols != nxt.rows:
                    raise ShapeMismatch(f"word {w} is not composable")
                term = term @ nxt
        if shape is None:
            shape = term.shape
        elif term.shape != shape:
            raise ShapeMismatch(f"word {w} has shape {term.shape}, expected {shape}")
        term = term.scale(coeff)
        result = term if result is None else result + term
    if result is None:
        if ident is None:
            raise ShapeMismatch("zero polynomial needs identity_shape")
        return Mat.zeros(ident[0], ident[1], field)
    return result
