"""Exact integer matrices and Smith Normal Form.

Entries are Python ints, so nothing ever overflows.  The reduction is the
textbook one: move the smallest nonzero entry to the pivot, clear its row and
column by Euclidean steps, and when the pivot does not divide the rest of the
block, fold an offending row into the pivot row and repeat.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged matrix rows")
        return cls(len(rows), cols, tuple(int(x) for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def diagonal(cls, diag: Sequence[int], rows: int | None = None, cols: int | None = None) -> IntMatrix:
        rows = len(diag) if rows is None else rows
        cols = len(diag) if cols is None else cols
        out = [[0] * cols for _ in range(rows)]
        for i, d in enumerate(diag):
            out[i][i] = d
        return cls.from_rows(out, cols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        a = self.to_rows()
        bt = list(zip(*other.to_rows())) if other.rows else [()] * other.cols
        return IntMatrix.from_rows(
            [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a],
            other.cols,
        )

    def transpose(self) -> IntMatrix:
        return IntMatrix.from_rows([list(c) for c in zip(*self.to_rows())], self.rows) \
            if self.rows else IntMatrix(self.cols, 0, ())

    def diag(self) -> list[int]:
        return [self[i, i] for i in range(min(self.rows, self.cols))]

    def is_diagonal(self) -> bool:
        return all(self[i, j] == 0 for i in range(self.rows) for j in range(self.cols) if i != j)

    def det(self) -> int:
        """Determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        m = self.to_rows()
        sign, prev = 1, 1
        for k in range(n - 1):
            if m[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
                if swap is None:
                    return 0
                m[k], m[swap] = m[swap], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            prev = m[k][k]
        return sign * m[n - 1][n - 1] if n else 1


@dataclass(frozen=True)
class SnfResult:
    """``U @ A @ V == D`` with U, V unimodular and D in Smith form."""

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    @property
    def invariants(self) -> list[int]:
        return self.D.diag()


def smith_normal_form(A: IntMatrix) -> SnfResult:
    m, n = A.rows, A.cols
    if m == 0 or n == 0:
        raise ValueError("smith_normal_form needs at least one row and one column")
    D = A.to_rows()
    U = IntMatrix.identity(m).to_rows()
    V = IntMatrix.identity(n).to_rows()

    def swap_rows(i, j):
        if i != j:
            D[i], D[j] = D[j], D[i]
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        if i != j:
            for M in (D, V):
                for row in M:
                    row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row[dst] += q * row[src]
        for M in (D, U):
            rs, rd = M[src], M[dst]
            for c in range(len(rd)):
                rd[c] += q * rs[c]

    def add_col(dst, src, q):
        for M in (D, V):
            for row in M:
                row[dst] += q * row[src]

    for t in range(min(m, n)):
        while True:
            pivot = None
            for i in range(t, m):
                for j in range(t, n):
                    v = D[i][j]
                    if v and (pivot is None or abs(v) < abs(D[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                break
            swap_rows(t, pivot[0])
            swap_cols(t, pivot[1])
            p = D[t][t]

            dirty = False
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // p))
                    dirty = dirty or D[i][t] != 0
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // p))
                    dirty = dirty or D[t][j] != 0
            if dirty:
                continue

            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)

        if D[t][t] < 0:
            for M in (D, U):
                M[t] = [-x for x in M[t]]

    return SnfResult(
        IntMatrix.from_rows(U, m),
        IntMatrix.from_rows(D, n),
        IntMatrix.from_rows(V, n),
    )


@dataclass(frozen=True)
class QuotientMap:
    """Coordinates on ``(Z/m_1 x ... x Z/m_r) / <relations>``.

    ``project`` sends an ambient element to its class, written in the
    invariant-factor coordinates ``Z/d_1 x ... x Z/d_s`` (unit factors dropped).
    """

    ambient_moduli: tuple[int, ...]
    invariant_factors: tuple[int, ...]
    transform: tuple[tuple[int, ...], ...]  # rows of U that survive

    def project(self, x: Sequence[int]) -> tuple[int, ...]:
        if len(x) != len(self.ambient_moduli):
            raise ValueError(f"expected {len(self.ambient_moduli)} coordinates, got {len(x)}")
        return tuple(
            sum(u * xi for u, xi in zip(row, x)) % d
            for row, d in zip(self.transform, self.invariant_factors)
        )

    @property
    def order(self) -> int:
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out


def quotient_invariants(
    ambient_moduli: Sequence[int], relation_generators: Iterable[Sequence[int]] = ()
) -> QuotientMap:
    """Structure of a finite abelian group modulo a subgroup given by generators.

    >>> quotient_invariants([4, 2], [(2, 1)]).invariant_factors
    (4,)
    """
    moduli = tuple(int(m) for m in ambient_moduli)
    if any(m < 1 for m in moduli):
        raise ValueError(f"moduli must be positive, got {moduli}")
    gens = [tuple(int(c) for c in g) for g in relation_generators]
    r = len(moduli)
    for g in gens:
        if len(g) != r:
            raise ValueError(f"relation {g} has {len(g)} coordinates, ambient has {r}")
    if r == 0:
        return QuotientMap((), (), ())

    cols = [[m if i == j else 0 for i in range(r)] for j, m in enumerate(moduli)]
    cols += [list(g) for g in gens]
    A = IntMatrix.from_rows([[c[i] for c in cols] for i in range(r)], len(cols))
    res = smith_normal_form(A)
    # diag(m) has full row rank, so every diagonal entry is nonzero.
    keep = [i for i, d in enumerate(res.invariants) if d != 1]
    U = res.U.to_rows()
    return QuotientMap(
        moduli,
        tuple(res.invariants[i] for i in keep),
        tuple(tuple(U[i]) for i in keep),
    )
