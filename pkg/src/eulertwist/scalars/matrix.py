"""Dense exact matrices over a :mod:`fields` field.

Subspaces are stored as column spans, so the canonical form used here is
the *reduced column echelon form*: the transpose of the reduced row echelon
form of the transpose, with zero columns dropped.
"""

from __future__ import annotations

from typing import Iterable, List, Sequence, Tuple

from ..errors import FieldMismatch, ShapeMismatch, SingularMatrix
from .fields import QQ, common_field


class Mat:
    """Immutable ``rows x cols`` matrix with row-major ``entries``."""

    __slots__ = ("rows", "cols", "entries", "field", "_hash")

    def __init__(self, rows: int, cols: int, entries: Iterable, field=QQ):
        entries = tuple(field.coerce(e) for e in entries)
        if len(entries) != rows * cols:
            raise ShapeMismatch(
                f"{len(entries)} entries for a {rows}x{cols} matrix")
        self.rows = rows
        self.cols = cols
        self.entries = entries
        self.field = field
        self._hash = None

    # -- constructors ---------------------------------------------------
    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], field=None, cols: int | None = None) -> "Mat":
        rows = [list(r) for r in rows]
        if field is None:
            field = common_field(e for r in rows for e in r)
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ShapeMismatch("ragged rows")
        return cls(len(rows), cols, (e for r in rows for e in r), field)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int, field=QQ) -> "Mat":
        k = len(columns)
        return cls(rows, k, (columns[j][i] for i in range(rows) for j in range(k)), field)

    @classmethod
    def zeros(cls, rows: int, cols: int, field=QQ) -> "Mat":
        z = field.zero()
        return cls(rows, cols, [z] * (rows * cols), field)

    @classmethod
    def identity(cls, n: int, field=QQ) -> "Mat":
        z, o = field.zero(), field.one()
        return cls(n, n, (o if i == j else z for i in range(n) for j in range(n)), field)

    @classmethod
    def scalar(cls, x, field=QQ) -> "Mat":
        return cls(1, 1, [x], field)

    # -- access ---------------------------------------------------------
    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def column(self, j: int) -> list:
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def to_rows(self) -> List[list]:
        return [self.row(i) for i in range(self.rows)]

    def columns(self) -> List[list]:
        return [self.column(j) for j in range(self.cols)]

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self.entries))
        return self._hash

    def __repr__(self):
        return f"Mat({self.to_rows()!r})"

    def is_zero(self) -> bool:
        return all(e == 0 for e in self.entries)

    def is_square(self) -> bool:
        return self.rows == self.cols

    # -- algebra --------------------------------------------------------
    def _check_field(self, other: "Mat"):
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __add__(self, other: "Mat") -> "Mat":
        self._check_field(other)
        if self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} + {other.shape}")
        return Mat(self.rows, self.cols, (a + b for a, b in zip(self.entries, other.entries)), self.field)

    def __sub__(self, other: "Mat") -> "Mat":
        self._check_field(other)
        if self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} - {other.shape}")
        return Mat(self.rows, self.cols, (a - b for a, b in zip(self.entries, other.entries)), self.field)

    def __neg__(self) -> "Mat":
        return Mat(self.rows, self.cols, (-a for a in self.entries), self.field)

    def scale(self, c) -> "Mat":
        c = self.field.coerce(c)
        return Mat(self.rows, self.cols, (c * a for a in self.entries), self.field)

    def __matmul__(self, other: "Mat") -> "Mat":
        self._check_field(other)
        if self.cols != other.rows:
            raise ShapeMismatch(f"{self.shape} @ {other.shape}")
        n, m, p = self.rows, self.cols, other.cols
        A, B = self.entries, other.entries
        zero = self.field.zero()
        out = []
        for i in range(n):
            arow = A[i * m:(i + 1) * m]
            for j in range(p):
                acc = zero
                for k in range(m):
                    a = arow[k]
                    if a:
                        b = B[k * p + j]
                        if b:
                            acc = acc + a * b
                out.append(acc)
        return Mat(n, p, out, self.field)

    @property
    def T(self) -> "Mat":
        return Mat(self.cols, self.rows,
                   (self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
                   self.field)

    def block(self, r0: int, r1: int, c0: int, c1: int) -> "Mat":
        """Submatrix of rows ``r0:r1`` and columns ``c0:c1``."""
        return Mat(r1 - r0, c1 - c0,
                   (self.entries[i * self.cols + j] for i in range(r0, r1) for j in range(c0, c1)),
                   self.field)

    def hstack(self, other: "Mat") -> "Mat":
        self._check_field(other)
        if self.rows != other.rows:
            raise ShapeMismatch("hstack row mismatch")
        return Mat.from_rows([self.row(i) + other.row(i) for i in range(self.rows)],
                             self.field, self.cols + other.cols)

    def vstack(self, other: "Mat") -> "Mat":
        self._check_field(other)
        if self.cols != other.cols:
            raise ShapeMismatch("vstack column mismatch")
        return Mat(self.rows + other.rows, self.cols, self.entries + other.entries, self.field)

    def apply(self, vec: Sequence) -> list:
        if len(vec) != self.cols:
            raise ShapeMismatch("vector length mismatch")
        zero = self.field.zero()
        out = []
        for i in range(self.rows):
            acc = zero
            for j, v in enumerate(vec):
                acc = acc + self.entries[i * self.cols + j] * v
            out.append(acc)
        return out

    def __pow__(self, n: int) -> "Mat":
        if not self.is_square():
            raise ShapeMismatch("power of a non-square matrix")
        if n < 0:
            return mat_inverse(self) ** (-n)
        result, base = Mat.identity(self.rows, self.field), self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def to_json(self) -> list:
        return [[self.field.to_text(e) for e in r] for r in self.to_rows()]


def block_matrix(blocks: Sequence[Sequence[Mat]]) -> Mat:
    """Assemble a matrix from a grid of blocks with compatible shapes."""
    rows = []
    for brow in blocks:
        height = brow[0].rows
        for b in brow:
            if b.rows != height:
                raise ShapeMismatch("block row heights differ")
        for i in range(height):
            rows.append([e for b in brow for e in b.row(i)])
    field = blocks[0][0].field
    width = sum(b.cols for b in blocks[0])
    return Mat.from_rows(rows, field, width) if rows else Mat(0, width, [], field)


def row_echelon(M: Mat) -> Tuple[List[list], List[int]]:
    """Reduced row echelon form as a list of nonzero rows, plus pivot columns."""
    field = M.field
    rows = [M.row(i) for i in range(M.rows)]
    pivots = []
    r = 0
    for c in range(M.cols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = field.inv(rows[r][c])
        rows[r] = [inv * x for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def mat_rref(M: Mat) -> Tuple[Mat, List[int]]:
    """Reduced column echelon form of ``M`` and its (row) pivot indices.

    The result depends only on the column span of ``M``.
    """
    rows, pivots = row_echelon(M.T)
    if not rows:
        return Mat(M.rows, 0, [], M.field), []
    return Mat.from_rows(rows, M.field, M.rows).T, pivots


def mat_rank(M: Mat) -> int:
    return len(row_echelon(M)[1])


def mat_nullspace(M: Mat) -> Mat:
    """Canonical basis (reduced column echelon) of ``{v : M v = 0}``."""
    field = M.field
    rows, pivots = row_echelon(M)
    free = [c for c in range(M.cols) if c not in set(pivots)]
    basis = []
    for fc in free:
        v = [field.zero()] * M.cols
        v[fc] = field.one()
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][fc]
        basis.append(v)
    if not basis:
        return Mat(M.cols, 0, [], field)
    return mat_rref(Mat.from_columns(basis, M.cols, field))[0]


def mat_inverse(M: Mat) -> Mat:
    if not M.is_square():
        raise SingularMatrix(f"non-square {M.shape} matrix has no inverse")
    n = M.rows
    aug = M.hstack(Mat.identity(n, M.field))
    rows, pivots = row_echelon(aug)
    if pivots[:n] != list(range(n)) or len(rows) < n:
        raise SingularMatrix("matrix is singular")
    return Mat.from_rows([r[n:] for r in rows[:n]], M.field, n)


def mat_solve(A: Mat, B: Mat) -> Mat:
    """Unique ``X`` with ``A X = B``; ``A`` must have independent columns.

    Raises :class:`SingularMatrix` if no solution or not unique.
    """
    if A.rows != B.rows:
        raise ShapeMismatch("solve: row mismatch")
    n = A.cols
    rows, pivots = row_echelon(A.hstack(B))
    if pivots[:n] != list(range(n)) or any(p >= n for p in pivots[n:]):
        raise SingularMatrix("system has no unique solution")
    if len(pivots) > n:
        raise SingularMatrix("system is inconsistent")
    return Mat.from_rows([r[n:] for r in rows[:n]], A.field, B.cols) if n else Mat(0, B.cols, [], A.field)


def det(M: Mat):
    """Determinant by fraction-preserving elimination."""
    if not M.is_square():
        raise ShapeMismatch("determinant of a non-square matrix")
    field = M.field
    rows = M.to_rows()
    n = M.rows
    result = field.one()
    for c in range(n):
        piv = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if piv is None:
            return field.zero()
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            result = -result
        result = result * rows[c][c]
        inv = field.inv(rows[c][c])
        for i in range(c + 1, n):
            if rows[i][c] != 0:
                f = rows[i][c] * inv
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
    return result
