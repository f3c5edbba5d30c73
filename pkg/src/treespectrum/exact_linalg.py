"""Dense matrices of Python integers and fraction-free determinants."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

from treespectrum.continuants import as_word


@dataclass(frozen=True)
class IntMatrix:
    """Immutable dense integer matrix, stored row-major."""

    rows: int
    cols: int
    entries: Tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative dimension")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, tuple(int(x) for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list[int]:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def tolist(self) -> list[list[int]]:
        return [self.row(i) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        e, c = self.entries, self.cols
        return IntMatrix(
            self.cols, self.rows,
            tuple(e[i * c + j] for j in range(self.cols) for i in range(self.rows)),
        )

    def scale(self, k: int) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(k * x for x in self.entries))

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "IntMatrix":
        return IntMatrix(
            len(row_idx),
            len(col_idx),
            tuple(self[i, j] for i in row_idx for j in col_idx),
        )

    def permute(self, order: Sequence[int]) -> "IntMatrix":
        """Apply the same permutation to rows and columns.

        Row/column ``k`` of the result is row/column ``order[k]`` of ``self``.
        """
        if sorted(order) != list(range(self.rows)) or not self.is_square:
            raise ValueError("order must be a permutation of a square matrix's indices")
        return self.submatrix(order, order)

    def __repr__(self):
        return f"IntMatrix({self.tolist()!r})"


def block(grid: Sequence[Sequence[IntMatrix | None]]) -> IntMatrix:
    """Assemble a block matrix; ``None`` stands for a zero block.

    Every block row needs at least one concrete block to fix its height, and
    likewise for block columns.
    """
    heights = []
    for r in grid:
        hs = {b.rows for b in r if b is not None}
        if len(hs) != 1:
            raise ValueError("inconsistent or undetermined block row height")
        heights.append(hs.pop())
    widths = []
    for c in range(len(grid[0])):
        ws = {r[c].cols for r in grid if r[c] is not None}
        if len(ws) != 1:
            raise ValueError("inconsistent or undetermined block column width")
        widths.append(ws.pop())

    out = []
    for r, h in zip(grid, heights):
        for i in range(h):
            line = []
            for b, w in zip(r, widths):
                line.extend(b.row(i) if b is not None else [0] * w)
            out.append(line)
    return IntMatrix.from_rows(out)


def block_diag(*blocks: IntMatrix) -> IntMatrix:
    return block([
        [b if i == j else IntMatrix.zeros(blocks[i].rows, b.cols) for j, b in enumerate(blocks)]
        for i in range(len(blocks))
    ])


def tridiagonal_matrix(word: Iterable[int]) -> IntMatrix:
    """Diagonal ``x_1..x_r`` with ``-1`` on both off-diagonals."""
    word = as_word(word)
    r = len(word)
    rows = [[0] * r for _ in range(r)]
    for i, x in enumerate(word):
        rows[i][i] = x
        if i + 1 < r:
            rows[i][i + 1] = rows[i + 1][i] = -1
    return IntMatrix.from_rows(rows)


def det(matrix: IntMatrix) -> int:
    """Exact determinant by Bareiss fraction-free elimination.

    Every division is exact, so the working array stays in the integers.
    """
    if not matrix.is_square:
        raise ValueError(f"determinant of non-square {matrix.rows}x{matrix.cols} matrix")
    n = matrix.rows
    if n == 0:
        return 1
    a = matrix.tolist()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for p in range(k + 1, n):
                if a[p][k] != 0:
                    a[k], a[p] = a[p], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            aik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def delete_row_col(matrix: IntMatrix, index: int) -> IntMatrix:
    if not matrix.is_square:
        raise ValueError("delete_row_col needs a square matrix")
    if not 0 <= index < matrix.rows:
        raise IndexError(f"index {index} out of range for {matrix.rows}x{matrix.rows}")
    keep = [i for i in range(matrix.rows) if i != index]
    return matrix.submatrix(keep, keep)


def two_copy_identity_sides(
    A: IntMatrix, E: IntMatrix, G: IntMatrix, H: IntMatrix
) -> tuple[int, int]:
    """Both sides of the twin-block identity

        det [[A, 0, E], [0, A, E], [G, G, H]] == det(A) * det [[A, E], [2G, H]]

    for A s-by-s, E s-by-t, G t-by-s, H t-by-t.
    """
    s, t = A.rows, H.rows
    if not (A.shape == (s, s) and E.shape == (s, t) and G.shape == (t, s)
            and H.shape == (t, t)) or s < 1 or t < 1:
        raise ValueError(
            f"block shapes A{A.shape} E{E.shape} G{G.shape} H{H.shape} do not fit"
        )
    lhs = det(block([[A, None, E], [None, A, E], [G, G, H]]))
    rhs = det(A) * det(block([[A, E], [G.scale(2), H]]))
    return lhs, rhs
