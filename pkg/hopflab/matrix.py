"""Exact integer matrices, Smith and Hermite normal forms.

The Smith reduction works on Python integers, so intermediate entries never
overflow. Hermite forms come from sympy over ZZ. Smith pivot selection is
deterministic: the nonzero entry of smallest absolute value wins, ties
broken row-major, which makes the transforms reproducible across runs.
"""

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from sympy import Matrix
from sympy.matrices.normalforms import hermite_normal_form as _sympy_hnf

Row = Tuple[int, ...]


@dataclass(frozen=True)
class IntMatrix:
    """IntMatrix.
    Immutable rows x cols integer matrix, entries stored row-major.
    """
    rows: int
    cols: int
    entries: Tuple[Row, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError('Matrix dimensions must be nonnegative')
        if len(self.entries) != self.rows or \
                any(len(r) != self.cols for r in self.entries):
            raise ValueError(
                f'Entry count does not match shape {self.rows}x{self.cols}')

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]],
                  cols: Optional[int] = None) -> 'IntMatrix':
        """from_rows.

        Args:
            rows (Iterable[Sequence[int]]): rows of the matrix
            cols (Optional[int]): column count, required for zero rows
        """
        entries = tuple(tuple(int(v) for v in r) for r in rows)
        if cols is None:
            if not entries:
                raise ValueError('Column count needed for an empty matrix')
            cols = len(entries[0])
        return cls(len(entries), cols, entries)

    @classmethod
    def identity(cls, n: int) -> 'IntMatrix':
        return cls(n, n, tuple(
            tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def zero(cls, rows: int, cols: int) -> 'IntMatrix':
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    def __getitem__(self, ij: Tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def transpose(self) -> 'IntMatrix':
        return IntMatrix(self.cols, self.rows, tuple(
            tuple(self.entries[i][j] for i in range(self.rows))
            for j in range(self.cols)))

    def __matmul__(self, other: 'IntMatrix') -> 'IntMatrix':
        return matmul(self, other)

    def diagonal(self) -> Tuple[int, ...]:
        return tuple(self.entries[i][i]
                     for i in range(min(self.rows, self.cols)))

    def is_diagonal(self) -> bool:
        return all(v == 0
                   for i, r in enumerate(self.entries)
                   for j, v in enumerate(r) if i != j)

    def to_list(self) -> List[List[int]]:
        return [list(r) for r in self.entries]


@dataclass(frozen=True)
class SnfResult:
    """SnfResult.
    Transforms of a Smith normal form, U * M * V = D.
    """
    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self) -> Tuple[int, ...]:
        return self.D.diagonal()


def matmul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if a.cols != b.rows:
        raise ValueError(
            f'Shape mismatch {a.rows}x{a.cols} @ {b.rows}x{b.cols}')
    bt = b.transpose().entries
    return IntMatrix(a.rows, b.cols, tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt)
        for row in a.entries))


class _Reducer:
    """Working state of one Smith reduction: the matrix and both transforms."""

    def __init__(self, m: IntMatrix):
        self.a = m.to_list()
        self.u = IntMatrix.identity(m.rows).to_list()
        self.v = IntMatrix.identity(m.cols).to_list()
        self.nrows = m.rows
        self.ncols = m.cols

    def swap_rows(self, i: int, j: int) -> None:
        if i != j:
            self.a[i], self.a[j] = self.a[j], self.a[i]
            self.u[i], self.u[j] = self.u[j], self.u[i]

    def swap_cols(self, i: int, j: int) -> None:
        if i != j:
            for r in self.a:
                r[i], r[j] = r[j], r[i]
            for r in self.v:
                r[i], r[j] = r[j], r[i]

    def add_row(self, dst: int, src: int, q: int) -> None:
        """row[dst] += q * row[src]"""
        if q:
            ra, sa = self.a[dst], self.a[src]
            for c in range(self.ncols):
                ra[c] += q * sa[c]
            ru, su = self.u[dst], self.u[src]
            for c in range(self.nrows):
                ru[c] += q * su[c]

    def add_col(self, dst: int, src: int, q: int) -> None:
        """col[dst] += q * col[src]"""
        if q:
            for r in self.a:
                r[dst] += q * r[src]
            for r in self.v:
                r[dst] += q * r[src]

    def negate_row(self, i: int) -> None:
        self.a[i] = [-x for x in self.a[i]]
        self.u[i] = [-x for x in self.u[i]]

    def smallest(self, t: int) -> Optional[Tuple[int, int]]:
        best = None
        best_abs = 0
        for i in range(t, self.nrows):
            row = self.a[i]
            for j in range(t, self.ncols):
                v = row[j]
                if v and (best is None or abs(v) < best_abs):
                    best, best_abs = (i, j), abs(v)
        return best

    def clear_cross(self, t: int) -> bool:
        """Eliminate row t and column t outside the pivot.

        Returns False when a remainder survived and a new pivot is needed.
        """
        p = self.a[t][t]
        clean = True
        for i in range(t + 1, self.nrows):
            if self.a[i][t]:
                self.add_row(i, t, -(self.a[i][t] // p))
                if self.a[i][t]:
                    clean = False
        for j in range(t + 1, self.ncols):
            if self.a[t][j]:
                self.add_col(j, t, -(self.a[t][j] // p))
                if self.a[t][j]:
                    clean = False
        return clean

    def run(self) -> SnfResult:
        t = 0
        while t < min(self.nrows, self.ncols):
            pivot = self.smallest(t)
            if pivot is None:
                break
            self.swap_rows(t, pivot[0])
            self.swap_cols(t, pivot[1])
            while True:
                if not self.clear_cross(t):
                    # A remainder is smaller than the pivot; move it in.
                    i, j = self._smallest_in_cross(t)
                    self.swap_rows(t, i)
                    self.swap_cols(t, j)
                    continue
                bad = self._non_divisible(t)
                if bad is None:
                    break
                self.add_row(t, bad, 1)
            if self.a[t][t] < 0:
                self.negate_row(t)
            t += 1
        return SnfResult(
            U=IntMatrix.from_rows(self.u, self.nrows),
            D=IntMatrix.from_rows(self.a, self.ncols),
            V=IntMatrix.from_rows(self.v, self.ncols))

    def _smallest_in_cross(self, t: int) -> Tuple[int, int]:
        cands = [(i, t) for i in range(t, self.nrows) if self.a[i][t]]
        cands += [(t, j) for j in range(t + 1, self.ncols) if self.a[t][j]]
        return min(cands, key=lambda ij: (abs(self.a[ij[0]][ij[1]]), ij))

    def _non_divisible(self, t: int) -> Optional[int]:
        p = self.a[t][t]
        for i in range(t + 1, self.nrows):
            if any(v % p for v in self.a[i][t + 1:]):
                return i
        return None


def smith_normal_form(m: IntMatrix) -> SnfResult:
    """smith_normal_form.
    Total on every rectangular integer matrix, including empty ones.

    Args:
        m (IntMatrix): input matrix M

    Returns:
        SnfResult: U, D, V with U * M * V = D, U and V unimodular, D
            diagonal with nonnegative entries d_i | d_(i+1).
    """
    return _Reducer(m).run()


def hermite_normal_form(rows: Sequence[Sequence[int]],
                        ncols: int) -> Tuple[Row, ...]:
    """hermite_normal_form.
    Row Hermite form of a lattice of full rank ncols.

    The result is square upper triangular with positive diagonal and every
    entry above a pivot reduced into [0, pivot). Two generating sets span
    the same lattice iff their forms are equal.

    sympy reduces columns from the last coordinate up, so coordinates are
    reversed on the way in and the basis is read back bottom to top.

    Args:
        rows (Sequence[Sequence[int]]): generators of the lattice
        ncols (int): lattice dimension

    Raises:
        ValueError: if the lattice is not of full rank
    """
    if ncols == 0:
        return ()
    gens = [list(r)[::-1] for r in rows if any(r)]
    if not gens:
        raise ValueError('Lattice is not of full rank (no generators)')
    W = _sympy_hnf(Matrix(gens).T)
    if W.cols != ncols:
        raise ValueError(f'Lattice is not of full rank ({W.cols} < {ncols})')
    return tuple(tuple(int(v) for v in list(W[:, j])[::-1])
                 for j in reversed(range(ncols)))
