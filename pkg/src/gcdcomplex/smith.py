"""Exact integer matrices and Smith normal form with unimodular transforms.

Entries are Python ints, so intermediate growth can never overflow.
"""

from __future__ import annotations

from dataclasses import dataclass


class IntMatrix:
    """Dense integer matrix that remembers its shape even when a side is 0."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data, rows: int | None = None, cols: int | None = None):
        data = [[int(x) for x in row] for row in data]
        if rows is None:
            rows = len(data)
        if cols is None:
            cols = len(data[0]) if data else 0
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ValueError(f"ragged or mis-sized matrix for shape {rows}x{cols}")
        self.rows, self.cols, self.data = rows, cols, data

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls([[0] * cols for _ in range(rows)], rows, cols)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        m = cls.zeros(n, n)
        for i in range(n):
            m.data[i][i] = 1
        return m

    @classmethod
    def from_columns(cls, columns, rows: int) -> "IntMatrix":
        columns = list(columns)
        return cls([[c[i] for c in columns] for i in range(rows)], rows, len(columns))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def copy(self) -> "IntMatrix":
        return IntMatrix([row[:] for row in self.data], self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.shape == other.shape and self.data == other.data

    def __repr__(self):
        return f"IntMatrix({self.data!r}, rows={self.rows}, cols={self.cols})"

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols_of_other = list(zip(*other.data)) if other.rows else [()] * other.cols
        out = [[sum(a * b for a, b in zip(row, col)) for col in cols_of_other] for row in self.data]
        return IntMatrix(out, self.rows, other.cols)

    def apply(self, vec) -> list[int]:
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        return [sum(a * b for a, b in zip(row, vec)) for row in self.data]

    def transpose(self) -> "IntMatrix":
        return IntMatrix([list(c) for c in zip(*self.data)] if self.rows else [], self.cols, self.rows)

    def column(self, j: int) -> list[int]:
        return [row[j] for row in self.data]

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.data for x in row)

    def tolist(self) -> list[list[int]]:
        return [row[:] for row in self.data]


def determinant(A: IntMatrix) -> int:
    """Fraction-free (Bareiss) determinant of a square matrix."""
    if A.rows != A.cols:
        raise ValueError("determinant of a non-square matrix")
    n = A.rows
    if n == 0:
        return 1
    M = [row[:] for row in A.data]
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


@dataclass
class SNFResult:
    """``U @ A @ V == D`` with ``U``, ``V`` unimodular; inverses are kept too."""

    D: IntMatrix
    U: IntMatrix
    V: IntMatrix
    U_inv: IntMatrix
    V_inv: IntMatrix

    @property
    def diagonal(self) -> list[int]:
        return [self.D[i, i] for i in range(min(self.D.shape))]

    @property
    def invariant_factors(self) -> list[int]:
        return [d for d in self.diagonal if d != 0]

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)


class _Reducer:
    # Row ops act on D and U (U_inv updated by the inverse column op);
    # column ops act on D and V (V_inv updated by the inverse row op).

    def __init__(self, A: IntMatrix):
        self.m, self.n = A.shape
        self.D = [row[:] for row in A.data]
        self.U = IntMatrix.identity(self.m).data
        self.Ui = IntMatrix.identity(self.m).data
        self.V = IntMatrix.identity(self.n).data
        self.Vi = IntMatrix.identity(self.n).data

    def swap_rows(self, i, j):
        if i == j:
            return
        for M in (self.D, self.U):
            M[i], M[j] = M[j], M[i]
        for row in self.Ui:
            row[i], row[j] = row[j], row[i]

    def swap_cols(self, i, j):
        if i == j:
            return
        for M in (self.D, self.V):
            for row in M:
                row[i], row[j] = row[j], row[i]
        self.Vi[i], self.Vi[j] = self.Vi[j], self.Vi[i]

    def add_row(self, dst, src, c):
        """row[dst] += c * row[src]"""
        for M in (self.D, self.U):
            rd, rs = M[dst], M[src]
            for k, x in enumerate(rs):
                if x:
                    rd[k] += c * x
        for row in self.Ui:
            row[src] -= c * row[dst]

    def add_col(self, dst, src, c):
        """col[dst] += c * col[src]"""
        for M in (self.D, self.V):
            for row in M:
                if row[src]:
                    row[dst] += c * row[src]
        rd, rs = self.Vi[src], self.Vi[dst]
        for k, x in enumerate(rs):
            if x:
                rd[k] -= c * x

    def negate_row(self, i):
        for M in (self.D, self.U):
            M[i] = [-x for x in M[i]]
        for row in self.Ui:
            row[i] = -row[i]


def _smallest_entry(D, t, m, n):
    best = None
    for i in range(t, m):
        for j in range(t, n):
            x = D[i][j]
            if x and (best is None or abs(x) < best[0]):
                best = (abs(x), i, j)
    return best


def smith_normal_form(A: IntMatrix) -> SNFResult:
    """Smith normal form by pivoting on the smallest nonzero |entry|.

    Ties are broken by row-major position. The result has nonnegative
    diagonal entries ``d_1 | d_2 | ... | d_r`` followed by zeros.
    """
    if not isinstance(A, IntMatrix):
        A = IntMatrix(A)
    r = _Reducer(A)
    D, m, n = r.D, r.m, r.n
    for t in range(min(m, n)):
        best = _smallest_entry(D, t, m, n)
        if best is None:
            break
        _, i, j = best
        r.swap_rows(t, i)
        r.swap_cols(t, j)
        while True:
            p = D[t][t]
            for i in range(t + 1, m):
                if D[i][t]:
                    r.add_row(i, t, -(D[i][t] // p))
            for j in range(t + 1, n):
                if D[t][j]:
                    r.add_col(j, t, -(D[t][j] // p))
            # remainders smaller than the pivot: move the smallest one in
            rest = [(abs(D[i][t]), 0, i) for i in range(t + 1, m) if D[i][t]]
            rest += [(abs(D[t][j]), 1, j) for j in range(t + 1, n) if D[t][j]]
            if rest:
                _, is_col, k = min(rest)
                if is_col:
                    r.swap_cols(t, k)
                else:
                    r.swap_rows(t, k)
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % p),
                None,
            )
            if bad is None:
                break
            r.add_row(t, bad, 1)
        if D[t][t] < 0:
            r.negate_row(t)
    return SNFResult(
        IntMatrix(D, m, n),
        IntMatrix(r.U, m, m),
        IntMatrix(r.V, n, n),
        IntMatrix(r.Ui, m, m),
        IntMatrix(r.Vi, n, n),
    )


def cokernel(relations: IntMatrix):
    """Structure of ``Z^rows / column_span(relations)``.

    Returns ``(torsion, betti, basis, coords)``: ``basis`` lists one vector of
    Z^rows per nontrivial summand (torsion summands first), and ``coords``
    maps a vector of Z^rows to its class as a tuple aligned with ``basis``
    (torsion entries reduced modulo their order).
    """
    snf = smith_normal_form(relations)
    factors = snf.invariant_factors
    size = relations.rows
    kept = [i for i, d in enumerate(factors) if d > 1] + list(range(len(factors), size))
    torsion = [factors[i] for i in kept if i < len(factors)]
    moduli = torsion + [0] * (len(kept) - len(torsion))
    basis = [snf.U_inv.column(i) for i in kept]
    U = snf.U

    def coords(vec) -> tuple[int, ...]:
        y = U.apply(list(vec))
        return tuple(y[i] % d if d else y[i] for i, d in zip(kept, moduli))

    return torsion, len(kept) - len(torsion), basis, coords
