"""Bilinear spaces, subspaces and operators in Gram-matrix coordinates.

Conventions: ``gram[i][j] = beta(e_i, e_j)`` so ``beta(x, y) = x^T G y``.
A subspace is a column span stored in reduced column echelon form.  An
operator ``A -> B`` is a ``dim B x dim A`` matrix in the bases of ``A``, ``B``.
"""

from __future__ import annotations

from typing import Optional

from ..errors import (DegenerateSubspace, FieldMismatch, NotAnSOD,
                      ShapeMismatch)
from ..scalars import (QQ, Mat, block_matrix, det, mat_inverse,
                       mat_nullspace, mat_rank, mat_rref, mat_solve)


class BilinearSpace:
    """``(k^n, beta)`` with a nonsingular Gram matrix."""

    __slots__ = ("gram", "dim", "field", "label")

    def __init__(self, gram: Mat, label: str = "", check: bool = True):
        if not gram.is_square():
            raise ShapeMismatch("Gram matrix must be square")
        if check and gram.rows and det(gram) == 0:
            raise DegenerateSubspace("Gram matrix is singular")
        self.gram = gram
        self.dim = gram.rows
        self.field = gram.field
        self.label = label

    @classmethod
    def from_rows(cls, rows, field=None, label: str = "") -> "BilinearSpace":
        return cls(Mat.from_rows(rows, field), label)

    @classmethod
    def standard(cls, n: int, field=QQ, label: str = "") -> "BilinearSpace":
        return cls(Mat.identity(n, field), label)

    def __eq__(self, other):
        return isinstance(other, BilinearSpace) and self.gram == other.gram

    def __hash__(self):
        return hash(self.gram)

    def __repr__(self):
        return f"BilinearSpace(dim={self.dim}{', ' + self.label if self.label else ''})"

    def beta(self, x, y):
        return sum((a * b for a, b in zip(x, self.gram.apply(y))), self.field.zero())

    def identity(self) -> "Operator":
        return Operator(self, self, Mat.identity(self.dim, self.field))

    def whole(self) -> "Subspace":
        return Subspace(self, Mat.identity(self.dim, self.field))

    def zero_subspace(self) -> "Subspace":
        return Subspace(self, Mat(self.dim, 0, [], self.field))


class Subspace:
    """Column span inside an ambient :class:`BilinearSpace`, canonical basis."""

    __slots__ = ("ambient", "basis")

    def __init__(self, ambient: BilinearSpace, basis: Mat):
        if basis.rows != ambient.dim:
            raise ShapeMismatch("basis vectors must live in the ambient space")
        if basis.field != ambient.field:
            raise FieldMismatch("subspace and ambient fields differ")
        self.ambient = ambient
        self.basis = mat_rref(basis)[0]

    @classmethod
    def span(cls, ambient: BilinearSpace, vectors) -> "Subspace":
        vectors = list(vectors)
        if not vectors:
            return ambient.zero_subspace()
        return cls(ambient, Mat.from_columns(vectors, ambient.dim, ambient.field))

    @property
    def dim(self) -> int:
        return self.basis.cols

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.ambient == other.ambient
                and self.basis == other.basis)

    def __hash__(self):
        return hash(self.basis)

    def __repr__(self):
        return f"Subspace(dim={self.dim}, basis={self.basis.to_json()})"

    def restricted_gram(self) -> Mat:
        return self.basis.T @ self.ambient.gram @ self.basis

    def space(self) -> BilinearSpace:
        """The restricted form in the canonical basis of this subspace."""
        return BilinearSpace(self.restricted_gram(), check=False)

    def contains(self, vec) -> bool:
        return mat_rank(self.basis.hstack(Mat.from_columns([vec], self.ambient.dim, self.ambient.field))) == self.dim

    def coordinates(self, vectors: Mat) -> Mat:
        """Coordinates of the columns of ``vectors`` in this basis."""
        return mat_solve(self.basis, vectors)


class Operator:
    """Linear map between bilinear spaces; ``matrix`` is ``dim target x dim source``."""

    __slots__ = ("source", "target", "matrix")

    def __init__(self, source: BilinearSpace, target: BilinearSpace, matrix: Mat):
        if matrix.shape != (target.dim, source.dim):
            raise ShapeMismatch(
                f"operator matrix {matrix.shape} does not match {target.dim}x{source.dim}")
        self.source = source
        self.target = target
        self.matrix = matrix

    def __eq__(self, other):
        return (isinstance(other, Operator) and self.source == other.source
                and self.target == other.target and self.matrix == other.matrix)

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"Operator({self.source.dim}->{self.target.dim}, {self.matrix.to_json()})"

    def __matmul__(self, other: "Operator") -> "Operator":
        if other.target.dim != self.source.dim:
            raise ShapeMismatch("operators are not composable")
        return Operator(other.source, self.target, self.matrix @ other.matrix)

    def __add__(self, other: "Operator") -> "Operator":
        return Operator(self.source, self.target, self.matrix + other.matrix)

    def __sub__(self, other: "Operator") -> "Operator":
        return Operator(self.source, self.target, self.matrix - other.matrix)

    def __neg__(self) -> "Operator":
        return Operator(self.source, self.target, -self.matrix)

    def inverse(self) -> "Operator":
        return Operator(self.target, self.source, mat_inverse(self.matrix))

    def is_zero(self) -> bool:
        return self.matrix.is_zero()


def serre(space: BilinearSpace) -> Operator:
    """The isometry ``S = G^{-1} G^T`` with ``beta(x, y) = beta(y, S x)``."""
    G = space.gram
    return Operator(space, space, mat_inverse(G) @ G.T)


def adjoint(f: Operator, side: str = "right") -> Operator:
    """Right adjoint ``beta_B(f a, b) = beta_A(a, f* b)`` or its left twin."""
    GA, GB = f.source.gram, f.target.gram
    if side == "right":
        return Operator(f.target, f.source, mat_inverse(GA) @ f.matrix.T @ GB)
    if side == "left":
        return Operator(f.target, f.source, mat_inverse(GA.T) @ f.matrix.T @ GB.T)
    raise ValueError(f"side must be 'right' or 'left', not {side!r}")


def iterated_adjoint(f: Operator, i: int) -> Operator:
    """``f^{(i)}``: ``i`` right adjoints for ``i > 0``, ``|i|`` left ones for ``i < 0``."""
    side = "right" if i > 0 else "left"
    for _ in range(abs(i)):
        f = adjoint(f, side)
    return f


def adjoint_string(f: Operator, n: int):
    """``[f^{(1)}, ..., f^{(n)}]``."""
    out = []
    g = f
    for _ in range(n):
        g = adjoint(g, "right")
        out.append(g)
    return out


def is_isometry(f: Operator) -> bool:
    M = f.matrix
    if not M.is_square() or mat_rank(M) != M.rows:
        return False
    return M.T @ f.target.gram @ M == f.source.gram


def orthogonal(A: Subspace, side: str = "right") -> Subspace:
    """``A^perp = {c : beta(a, c) = 0}`` (right) or ``{c : beta(c, a) = 0}`` (left)."""
    G = A.ambient.gram
    if side == "right":
        return Subspace(A.ambient, mat_nullspace(A.basis.T @ G))
    if side == "left":
        return Subspace(A.ambient, mat_nullspace(A.basis.T @ G.T))
    raise ValueError(f"side must be 'right' or 'left', not {side!r}")


def orthogonal_at(A: Subspace, i: int) -> Subspace:
    """``A^{perp(i)}``; negative ``i`` iterates left orthogonals."""
    side = "right" if i > 0 else "left"
    for _ in range(abs(i)):
        A = orthogonal(A, side)
    return A


def is_nondegenerate(A: Subspace) -> bool:
    return A.dim == 0 or det(A.restricted_gram()) != 0


def intersection_trivial(A: Subspace, B: Subspace) -> bool:
    return mat_rank(A.basis.hstack(B.basis)) == A.dim + B.dim


def is_sod(A: Subspace, B: Subspace) -> bool:
    if A.ambient != B.ambient:
        raise ValueError("subspaces of different ambient spaces")
    if A.dim + B.dim != A.ambient.dim or not intersection_trivial(A, B):
        return False
    return (B.basis.T @ A.ambient.gram @ A.basis).is_zero()


def glue(A: BilinearSpace, B: BilinearSpace, f: Operator):
    """The space ``A + B`` with ``beta(a, b) = beta_B(f a, b)`` and ``beta(b, a) = 0``.

    Returns ``(C, embedA, embedB)`` with coordinate-subspace embeddings.
    """
    if f.source.dim != A.dim or f.target.dim != B.dim:
        raise ShapeMismatch("f must map A to B")
    field = A.field
    cross = f.matrix.T @ B.gram
    G = block_matrix([[A.gram, cross], [Mat.zeros(B.dim, A.dim, field), B.gram]])
    C = BilinearSpace(G, check=False)
    n = A.dim + B.dim
    I = Mat.identity(n, field)
    return C, Subspace(C, I.block(0, n, 0, A.dim)), Subspace(C, I.block(0, n, A.dim, n))


def gluing_operator(A: Subspace, B: Subspace) -> Operator:
    """The ``f: A -> B`` encoding ``beta(a, b) = beta_B(f a, b)`` for an SOD."""
    if not is_sod(A, B):
        raise NotAnSOD("(A, B) is not a semi-orthogonal decomposition")
    G = A.ambient.gram
    GB = B.restricted_gram()
    F = mat_inverse(GB.T) @ B.basis.T @ G.T @ A.basis
    return Operator(A.space(), B.space(), F)


def _require_nondegenerate(A: Subspace):
    if not is_nondegenerate(A):
        raise DegenerateSubspace("the restricted form on A is degenerate")


def mutation(A: Subspace) -> Operator:
    """``M_A: A^perp -> ^perp A``, projection along ``A``."""
    _require_nondegenerate(A)
    R, L = orthogonal(A, "right"), orthogonal(A, "left")
    frame = A.basis.hstack(L.basis)
    coords = mat_solve(frame, R.basis)
    return Operator(R.space(), L.space(), coords.block(A.dim, A.dim + L.dim, 0, R.dim))


def mutation_inverse(A: Subspace) -> Operator:
    """``M_A^{-1}: ^perp A -> A^perp``, projection along ``A`` the other way."""
    _require_nondegenerate(A)
    R, L = orthogonal(A, "right"), orthogonal(A, "left")
    coords = mat_solve(R.basis.hstack(A.basis), L.basis)
    return Operator(L.space(), R.space(), coords.block(0, R.dim, 0, L.dim))


class BlockOp2x2:
    """A map ``P + Q -> R + S`` given by blocks ``[[RP, RQ], [SP, SQ]]``."""

    __slots__ = ("blocks", "source_dims", "target_dims", "field")

    def __init__(self, blocks, source_dims, target_dims, field=QQ):
        (a, b), (c, d) = blocks
        p, q = source_dims
        r, s = target_dims
        for m, shape in ((a, (r, p)), (b, (r, q)), (c, (s, p)), (d, (s, q))):
            if m.shape != shape:
                raise ShapeMismatch(f"block shape {m.shape}, expected {shape}")
        self.blocks = ((a, b), (c, d))
        self.source_dims = (p, q)
        self.target_dims = (r, s)
        self.field = field

    @classmethod
    def from_mat(cls, M: Mat, source_dims, target_dims) -> "BlockOp2x2":
        p, q = source_dims
        r, s = target_dims
        return cls(((M.block(0, r, 0, p), M.block(0, r, p, p + q)),
                    (M.block(r, r + s, 0, p), M.block(r, r + s, p, p + q))),
                   source_dims, target_dims, M.field)

    def to_mat(self) -> Mat:
        return block_matrix([list(self.blocks[0]), list(self.blocks[1])])

    def __matmul__(self, other: "BlockOp2x2") -> "BlockOp2x2":
        if other.target_dims != self.source_dims:
            raise ShapeMismatch("block operators are not composable")
        return BlockOp2x2.from_mat(self.to_mat() @ other.to_mat(), other.source_dims, self.target_dims)

    def __eq__(self, other):
        return isinstance(other, BlockOp2x2) and self.blocks == other.blocks

    def block(self, i: int, j: int) -> Mat:
        return self.blocks[i][j]

    def off_diagonal_zero(self) -> bool:
        return self.blocks[0][1].is_zero() and self.blocks[1][0].is_zero()

    def to_json(self) -> dict:
        return {"blocks": [[m.to_json() for m in row] for row in self.blocks],
                "source_dims": list(self.source_dims),
                "target_dims": list(self.target_dims)}


def coordinate_change(A: Subspace, f: Optional[Operator] = None) -> BlockOp2x2:
    """Predicted change of coordinates ``A + A^perp -> ^perp A + A``.

    Blocks ``[[0, M_A], [1, -f* M_A]]`` with ``f`` the gluing operator of
    ``(A, ^perp A)``.
    """
    _require_nondegenerate(A)
    L = orthogonal(A, "left")
    R = orthogonal(A, "right")
    if f is None:
        f = gluing_operator(A, L)
    M = mutation(A)
    fstar = adjoint(f, "right")
    field = A.ambient.field
    blocks = ((Mat.zeros(L.dim, A.dim, field), M.matrix),
              (Mat.identity(A.dim, field), (-(fstar @ M)).matrix))
    return BlockOp2x2(blocks, (A.dim, R.dim), (L.dim, A.dim), field)


def actual_coordinate_change(A: Subspace) -> BlockOp2x2:
    """The genuine basis change ``A + A^perp -> C -> ^perp A + A``."""
    _require_nondegenerate(A)
    L = orthogonal(A, "left")
    R = orthogonal(A, "right")
    M = mat_solve(L.basis.hstack(A.basis), A.basis.hstack(R.basis))
    return BlockOp2x2.from_mat(M, (A.dim, R.dim), (L.dim, A.dim))


def subspace_of(C: BilinearSpace, rows) -> Subspace:
    """Subspace spanned by the columns of the row-major ``rows``."""
    return Subspace(C, Mat.from_rows(rows, C.field, None))


__all__ = [
    "BilinearSpace", "Subspace", "Operator", "BlockOp2x2", "serre", "adjoint",
    "iterated_adjoint", "adjoint_string", "is_isometry", "orthogonal",
    "orthogonal_at", "is_nondegenerate", "intersection_trivial", "is_sod",
    "glue", "gluing_operator", "mutation", "mutation_inverse",
    "coordinate_change", "actual_coordinate_change", "subspace_of",
]
