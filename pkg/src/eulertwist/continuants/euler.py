"""Euler polynomials (noncommutative continuants) and their identities."""

from __future__ import annotations

from typing import List, Sequence

from ..freealg import NCPoly
from ..report import Report
from ..scalars import QPoly
from .cotwinned import _cot_members


def euler_in(indices: Sequence[int], ambient: int, q_value=None) -> NCPoly:
    """``E_n(x_{indices[0]}, ..., x_{indices[n-1]})`` inside ambient ``ambient``.

    With ``q_value`` given, the central parameter is specialized.
    """
    n = len(indices)
    terms = {}
    for members in _cot_members(n):
        depth = (n - len(members)) // 2
        coeff = QPoly.monomial(depth) if q_value is None else QPoly.constant(
            QPoly.monomial(depth)(q_value))
        word = tuple(indices[m - 1] for m in members)
        terms[word] = terms.get(word, QPoly()) + coeff
    return NCPoly(ambient, terms)


def euler_poly(N: int) -> NCPoly:
    """Parametric ``E_N(x_1, ..., x_N; q)``; ``E_0 = 1``."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    return euler_in(range(1, N + 1), N)


def euler_alt(N: int) -> NCPoly:
    """The alternating polynomial ``E_N(x_1, ..., x_N; -1)``."""
    return euler_in(range(1, N + 1), N, q_value=-1)


def _up(a: int, b: int) -> List[int]:
    """``[a, a+1, ..., b]``, empty when ``b < a``."""
    return list(range(a, b + 1))


def _down(a: int, b: int) -> List[int]:
    """``[a, a-1, ..., b]``, empty when ``a < b``."""
    return list(range(a, b - 1, -1))


def first_difference(lhs: NCPoly, rhs: NCPoly):
    """A word where the two sides disagree, with both coefficients."""
    words = sorted(set(lhs.terms) | set(rhs.terms), key=lambda w: (len(w), w))
    for w in words:
        a, b = lhs.coefficient(w), rhs.coefficient(w)
        if a != b:
            return {"word": list(w), "lhs": a.to_text(), "rhs": b.to_text()}
    return None


def _record(report: Report, name: str, lhs: NCPoly, rhs: NCPoly) -> bool:
    diff = first_difference(lhs, rhs)
    if diff is None:
        return report.add(name, True)
    return report.add(name, False, counterexample=diff)


def verify_recursions(N_max: int) -> Report:
    """Both first-order recursions for ``2 <= N <= N_max``."""
    if N_max < 2:
        raise ValueError("N_max must be at least 2")
    rep = Report("recursions", {"N_max": N_max})
    for N in range(2, N_max + 1):
        EN = euler_poly(N)
        x1 = NCPoly.gen(1, N)
        xN = NCPoly.gen(N, N)
        q = NCPoly.q(N)
        left = x1 * euler_in(_up(2, N), N) + q * euler_in(_up(3, N), N)
        right = euler_in(_up(1, N - 1), N) * xN + q * euler_in(_up(1, N - 2), N)
        _record(rep, f"left[N={N:02d}]", EN, left)
        _record(rep, f"right[N={N:02d}]", EN, right)
    return rep


def _u_matrix(i: int, N: int):
    one, zero = NCPoly.one(N), NCPoly.zero(N)
    x = NCPoly.gen(i, N) * (-1 if i % 2 else 1)
    return [[zero, one], [one, x]]


def _mul2(A, B):
    return [[A[r][0] * B[0][c] + A[r][1] * B[1][c] for c in range(2)] for r in range(2)]


def matrix_product_expected(N: int):
    """The signed continuant block matrix predicted for ``U_1 ... U_N``."""
    def signed(sign_arg: int, idx: List[int]) -> NCPoly:
        return euler_in(idx, N, q_value=-1) * (-1) ** (sign_arg // 2)

    return [[signed(N - 2, _up(2, N - 1)), signed(N - 1, _up(2, N))],
            [signed(N, _up(1, N - 1)), signed(N + 1, _up(1, N))]]


def verify_matrix_identity(N: int) -> Report:
    """``U_1 ... U_N`` against the signed continuant matrix, entrywise."""
    if N < 2:
        raise ValueError("N must be at least 2")
    rep = Report("matrix_identity", {"N": N})
    P = _u_matrix(1, N)
    for i in range(2, N + 1):
        P = _mul2(P, _u_matrix(i, N))
    exp = matrix_product_expected(N)
    for r in range(2):
        for c in range(2):
            _record(rep, f"entry[{r}{c}]", P[r][c], exp[r][c])
    return rep


def verify_determinant_identity(N: int) -> Report:
    """The determinant-type identity and its reversed renumbering."""
    if N < 1:
        raise ValueError("N must be at least 1")
    M = N + 1
    rep = Report("determinant_identity", {"N": N})
    target = NCPoly(M, {(): QPoly.monomial(N, (-1) ** N)})
    lhs = (euler_in(_up(1, N), M) * euler_in(_down(N + 1, 2), M)
           - euler_in(_up(1, N + 1), M) * euler_in(_down(N, 2), M))
    _record(rep, "forward", lhs, target)
    lhs2 = (euler_in(_down(N + 1, 2), M) * euler_in(_up(1, N), M)
            - euler_in(_down(N + 1, 1), M) * euler_in(_up(2, N), M))
    _record(rep, "reversed", lhs2, target)
    return rep
