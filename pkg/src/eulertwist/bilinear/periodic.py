"""Orthogonal chains, the continuant criterion for periodicity, and the
product of coordinate-change matrices along a chain."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from ..continuants import euler_in
from ..errors import DegenerateSubspace, Inapplicable
from ..freealg import nc_eval
from ..report import Report
from ..scalars import Mat, mat_solve
from .spaces import (BilinearSpace, BlockOp2x2, Operator, Subspace, adjoint,
                     adjoint_string, glue, gluing_operator, is_isometry,
                     is_nondegenerate, mutation, orthogonal)


def orthogonal_chain(A: Subspace, max_steps: int) -> Tuple[List[Subspace], Optional[int]]:
    """``[A^{perp(0)}, ..., A^{perp(max_steps)}]`` and the least period found."""
    if not is_nondegenerate(A):
        raise DegenerateSubspace("chain start must be nondegenerate")
    chain = [A]
    period = None
    for i in range(1, max_steps + 1):
        nxt = orthogonal(chain[-1], "right")
        if not is_nondegenerate(nxt):  # cannot happen for nondegenerate A
            raise DegenerateSubspace(f"orthogonal {i} is degenerate")
        chain.append(nxt)
        if period is None and nxt == A:
            period = i
    return chain, period


def least_period(A: Subspace, bound: int) -> Optional[int]:
    return orthogonal_chain(A, bound)[1]


def continuant_at(ops: List[Operator], start: int, stop: int, identity_space: BilinearSpace) -> Operator:
    """``E(ops[start-1], ..., ops[stop-1])`` at ``q = -1`` as an operator.

    ``identity_space`` is where the empty word (identity) lives and fixes the
    source/target when the range is empty.
    """
    n = stop - start + 1
    if n <= 0:
        return identity_space.identity()
    sub = ops[start - 1:stop]
    poly = euler_in(list(range(1, n + 1)), n, q_value=-1)
    mat = nc_eval(poly, sub, (identity_space.dim, identity_space.dim))
    return Operator(sub[-1].source, sub[0].target, mat)


@dataclass
class CriterionReport:
    N: int
    status: str
    continuant_vanishes: Optional[bool] = None
    chain_periodic: Optional[bool] = None
    biconditional: Optional[bool] = None
    isometry_E_N_minus_2: Optional[bool] = None
    isometry_E_N: Optional[bool] = None
    period: Optional[int] = None
    chain: List[Subspace] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        if self.status != "ok":
            return False
        ok = bool(self.biconditional)
        if self.continuant_vanishes and self.chain_periodic:
            ok = ok and bool(self.isometry_E_N_minus_2) and bool(self.isometry_E_N)
        return ok

    def to_json(self) -> dict:
        return {
            "N": self.N,
            "status": self.status,
            "continuant_vanishes": self.continuant_vanishes,
            "chain_periodic": self.chain_periodic,
            "biconditional": self.biconditional,
            "isometry_E_N_minus_2": self.isometry_E_N_minus_2,
            "isometry_E_N": self.isometry_E_N,
            "least_period": self.period,
            "chain": [s.basis.to_json() for s in self.chain],
            "passed": self.passed,
        }


def periodicity_criterion(A_space: BilinearSpace, B_space: BilinearSpace, f: Operator, N: int,
                          keep_chain: bool = False) -> CriterionReport:
    """Compare vanishing of ``E_{N-1}(f*, ..., f^{(N-1)})`` with ``A^{perp(N)} = A``."""
    if N < 2:
        raise ValueError("N must be at least 2")
    if N % 2 and A_space.dim != B_space.dim:
        raise Inapplicable("odd N needs dim A = dim B")
    f = Operator(A_space, B_space, f.matrix)
    string = adjoint_string(f, N)
    E_mid = continuant_at(string, 1, N - 1, A_space)
    vanishes = E_mid.is_zero()
    C, A, _ = glue(A_space, B_space, f)
    chain, period = orthogonal_chain(A, N)
    periodic = chain[N] == A
    rep = CriterionReport(N, "ok", vanishes, periodic, vanishes == periodic, period=period,
                          chain=chain if keep_chain else [])
    if vanishes and periodic:
        rep.isometry_E_N_minus_2 = is_isometry(continuant_at(string, 2, N - 1, B_space))
        rep.isometry_E_N = is_isometry(continuant_at(string, 1, N, A_space))
    return rep


# -- coordinate-change matrices along the chain -----------------------------

def chain_mutations(A: Subspace, N: int):
    """Chain ``X_i = A^{perp(i)}`` for ``-1 <= i <= N`` with its mutations.

    Returns ``(X, M, mu)``: ``M[j]: X_{j+1} -> X_{j-1}`` for ``0 <= j < N``
    and the composites ``mu[i]: X_i -> X_0`` (``i`` even) or ``X_{-1}`` (odd).
    """
    X: Dict[int, Subspace] = {-1: orthogonal(A, "left"), 0: A}
    for i in range(1, N + 1):
        X[i] = orthogonal(X[i - 1], "right")
    M = {j: mutation(X[j]) for j in range(0, N)}
    mu: Dict[int, Operator] = {-1: X[-1].space().identity(), 0: A.space().identity()}
    for i in range(1, N + 1):
        mu[i] = mu[i - 2] @ M[i - 1]
    return X, M, mu


def _sign(k: int) -> int:
    return -1 if (k // 2) % 2 else 1


def mutation_matrix_product(A: Subspace, N: int) -> Tuple[BlockOp2x2, Report]:
    """Multiply ``W_1 ... W_N`` built from the actual chain of ``A``.

    ``W_i`` maps ``X_{i-1} + X_i -> X_{i-2} + X_{i-1}``, ``X_i = A^{perp(i)}``.
    The report compares the product with the genuine coordinate change, tests
    block-triangularity against periodicity, and matches each block with the
    signed continuant of the adjoint string of ``f`` transported by the
    composite mutations ``mu_i: X_i -> X_0`` (``i`` even) or ``X_{-1}`` (odd).
    """
    if not is_nondegenerate(A):
        raise DegenerateSubspace("A must be nondegenerate")
    if N < 1:
        raise ValueError("N must be at least 1")
    field_ = A.ambient.field
    X, M, mu = chain_mutations(A, N)
    spaces = {i: X[i].space() for i in X}
    gl = {i: gluing_operator(X[i - 1], X[i - 2]) for i in range(1, N + 1)}  # X_{i-1} -> X_{i-2}
    W = []
    for i in range(1, N + 1):
        m = M[i - 1].matrix
        fstar = adjoint(gl[i], "right").matrix
        a, b = X[i - 1].dim, X[i].dim
        r, s = X[i - 2].dim, X[i - 1].dim
        blocks = ((Mat.zeros(r, a, field_), m),
                  (Mat.identity(s, field_), -(fstar @ m)))
        W.append(BlockOp2x2(blocks, (a, b), (r, s), field_))
    P = W[0]
    for w in W[1:]:
        P = P @ w

    rep = Report("mutation_matrix_product", {"N": N})
    frame = X[-1].basis.hstack(A.basis)
    genuine = BlockOp2x2.from_mat(
        mat_solve(frame, X[N - 1].basis.hstack(X[N].basis)),
        (X[N - 1].dim, X[N].dim), (X[-1].dim, X[0].dim))
    rep.add("product_equals_coordinate_change", genuine == P)

    periodic = X[N] == A
    triangular = P.block(1, 0).is_zero()
    rep.add("triangular_iff_periodic", triangular == periodic,
            triangular=triangular, periodic=periodic)
    rep.add("off_diagonal_iff_periodic", P.off_diagonal_zero() == periodic)
    if periodic:
        d11 = Operator(spaces[N - 1], spaces[-1], P.block(0, 0))
        d22 = Operator(spaces[N], spaces[0], P.block(1, 1))
        rep.add("diagonal_blocks_isometric", is_isometry(d11) and is_isometry(d22))

    # transport along composite mutations
    f = gl[1]                                   # gluing operator of (A, ^perp A)
    string = adjoint_string(f, N)
    transported_ok = True
    for i in range(1, N + 1):
        g = mu[i - 1] @ adjoint(gl[i], "right") @ mu[i - 2].inverse()
        sign = 1 if i % 2 else -1                # g_i = (-1)^{i+1} f^{(i)}
        if g.matrix != string[i - 1].matrix.scale(sign):
            transported_ok = False
    rep.add("transported_gluing_adjoints", transported_ok)

    # (block, sign argument, first and last adjoint index, identity side, mu)
    layout = [((0, 0), N - 2, 2, N - 1, -1, N - 1), ((0, 1), N - 1, 2, N, -1, N),
              ((1, 0), N, 1, N - 1, 0, N - 1), ((1, 1), N + 1, 1, N, 0, N)]
    for (r, c), k, lo, hi, side, j in layout:
        blk = P.block(r, c)
        if hi - lo + 1 < 0:
            predicted = Mat.zeros(blk.rows, blk.cols, field_)
        else:
            cont = continuant_at(string, lo, hi, spaces[side])
            predicted = (cont.matrix @ mu[j].matrix).scale(_sign(k))
        rep.add(f"block[{r}{c}]_matches_continuant", blk == predicted)
    rep.data["bottom_left_zero"] = triangular
    rep.data["periodic"] = periodic
    return P, rep

