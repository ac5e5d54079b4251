"""Two-variable Fibonacci polynomials and Chebyshev polynomials of the
second kind in the normalization ``p_N(x) = U_N(x/2)``."""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Dict, Tuple

from ..report import Report
from ..scalars import QPoly

BiPoly = Dict[Tuple[int, int], int]


def fibonacci_poly(N: int) -> BiPoly:
    """``Phi_N(x, q)`` as ``{(deg_x, deg_q): coeff}``."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    return {(N - 2 * k, k): comb(N - k, k) for k in range(N // 2 + 1)}


def bipoly_text(p: BiPoly) -> str:
    parts = []
    for (a, b), c in sorted(p.items(), reverse=True):
        mono = "*".join(s for s in (("x" if a == 1 else f"x^{a}") if a else "",
                                    ("q" if b == 1 else f"q^{b}") if b else "") if s)
        mag = abs(c)
        body = mono if mono and mag == 1 else (f"{mag}*{mono}" if mono else str(mag))
        parts.append(("-" if c < 0 else "+", body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for s, b in parts[1:]:
        out += f" {s} {b}"
    return out


def fibonacci_at(N: int, q0) -> QPoly:
    """``Phi_N(x, q0)`` as a polynomial in ``x``."""
    q0 = Fraction(q0)
    coeffs = [Fraction(0)] * (N + 1)
    for (a, b), c in fibonacci_poly(N).items():
        coeffs[a] += c * q0 ** b
    return QPoly(coeffs)


def fibonacci_value(N: int, x, q=-1):
    """``Phi_N(x, q)`` for ``x`` in any commutative ring (field element)."""
    # Phi_N = x Phi_{N-1} + q Phi_{N-2}, Phi_0 = 1, Phi_1 = x
    a, b = 1, x
    if N == 0:
        return x * 0 + 1
    for _ in range(N - 1):
        a, b = b, x * b + q * a
    return b


def chebyshev_u(N: int) -> QPoly:
    """``p_0 = 1``, ``p_1 = x``, ``p_{N+1} = x p_N - p_{N-1}``."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    x = QPoly.monomial(1)
    a, b = QPoly.constant(1), x
    if N == 0:
        return a
    for _ in range(N - 1):
        a, b = b, x * b - a
    return b


def verify_chebyshev_bridge(N_max: int = 50) -> Report:
    rep = Report("chebyshev_bridge", {"N_max": N_max})
    for N in range(N_max + 1):
        lhs, rhs = fibonacci_at(N, -1), chebyshev_u(N)
        if lhs == rhs:
            rep.add(f"N={N:02d}", True)
        else:
            rep.add(f"N={N:02d}", False, lhs=lhs.to_text("x"), rhs=rhs.to_text("x"))
    return rep
