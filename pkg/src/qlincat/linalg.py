"""Dense exact linear algebra over the rationals.

Every scalar is a ``fractions.Fraction``; there is no floating point
anywhere in this package.  Vectors are tuples of Fractions, matrices are
immutable grids.  Two independent elimination strategies (plain rational
pivoting and fraction-free Bareiss) are provided so ranks can be
cross-checked.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Scalar = Fraction
Vector = tuple[Fraction, ...]


class NotComplementary(Exception):
    """The given subspaces do not form a direct-sum decomposition."""


def frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class Matrix:
    """Immutable dense matrix of Fractions."""

    __slots__ = ("data", "rows", "cols")

    def __init__(self, data: Iterable[Iterable]):
        self.data: tuple[tuple[Fraction, ...], ...] = tuple(
            tuple(frac(x) for x in row) for row in data
        )
        self.rows = len(self.data)
        self.cols = len(self.data[0]) if self.rows else 0
        if any(len(row) != self.cols for row in self.data):
            raise ValueError("ragged rows")

    @classmethod
    def _wrap(cls, data: tuple[tuple[Fraction, ...], ...]) -> "Matrix":
        """Internal constructor for rows already made of Fractions."""
        m = cls.__new__(cls)
        m.data = data
        m.rows = len(data)
        m.cols = len(data[0]) if data else 0
        return m

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        one, zero = Fraction(1), Fraction(0)
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        zero = Fraction(0)
        return cls([[zero] * cols for _ in range(rows)])

    def entry(self, i: int, j: int) -> Fraction:
        return self.data[i][j]

    def row(self, i: int) -> Vector:
        return self.data[i]

    def col(self, j: int) -> Vector:
        return tuple(r[j] for r in self.data)

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self.data)) if self.rows else Matrix([])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in product")
        zero = Fraction(0)
        out = []
        for row in self.data:
            acc = [zero] * other.cols
            for a, orow in zip(row, other.data):
                if a:
                    for j, b in enumerate(orow):
                        if b:
                            acc[j] += a * b
            out.append(tuple(acc))
        return Matrix._wrap(tuple(out))

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise ValueError("shape mismatch in apply")
        return tuple(sum(a * frac(b) for a, b in zip(row, v)) for row in self.data)

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)]
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)]
        )

    def scale(self, c) -> "Matrix":
        c = frac(c)
        return Matrix([[c * a for a in row] for row in self.data])

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self.data == other.data

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self.data)
        return f"Matrix[{self.rows}x{self.cols}: {body}]"


def hstack(a: Matrix, b: Matrix) -> Matrix:
    if a.rows != b.rows:
        raise ValueError("row count mismatch")
    return Matrix([ra + rb for ra, rb in zip(a.data, b.data)])


def vstack(a: Matrix, b: Matrix) -> Matrix:
    if a.cols != b.cols and a.rows and b.rows:
        raise ValueError("column count mismatch")
    return Matrix(list(a.data) + list(b.data))


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form and pivot columns, by rational pivoting."""
    rows = [list(r) for r in m.data]
    nr, nc = m.rows, m.cols
    pivots: list[int] = []
    r = 0
    for c in range(nc):
        if r == nr:
            break
        p = next((i for i in range(r, nr) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = Fraction(1) / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nr):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return Matrix(rows) if nr else m, tuple(pivots)


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def rank_bareiss(m: Matrix) -> int:
    """Rank by fraction-free (Bareiss) elimination over the integers."""
    rows = []
    for row in m.data:
        den = 1
        for x in row:
            den = den * x.denominator // gcd(den, x.denominator)
        rows.append([int(x * den) for x in row])
    nr, nc = m.rows, m.cols
    r = 0
    prev = 1
    for c in range(nc):
        if r == nr:
            break
        p = next((i for i in range(r, nr) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        for i in range(r + 1, nr):
            f = rows[i][c]
            rows[i] = [(piv * a - f * b) // prev for a, b in zip(rows[i], rows[r])]
        prev = piv
        r += 1
    return r


def kernel_basis(m: Matrix) -> list[Vector]:
    """Basis of the right null space {v : m v = 0}; checks rank-nullity."""
    red, pivots = rref(m)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [Fraction(0)] * m.cols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red.data[r][fc]
        basis.append(tuple(v))
    assert len(basis) == m.cols - len(pivots), "rank-nullity violated"
    for v in basis:
        assert all(x == 0 for x in m.apply(v)), "kernel vector not annihilated"
    return basis


def inverse(m: Matrix) -> Matrix:
    if m.rows != m.cols:
        raise ValueError("inverse of non-square matrix")
    red, pivots = rref(hstack(m, Matrix.identity(m.rows)))
    if len(pivots) != m.rows:
        raise ValueError("singular matrix")
    return Matrix([row[m.cols:] for row in red.data])


def solve(m: Matrix, b: Sequence) -> Vector | None:
    """One exact solution of m x = b, or None if inconsistent."""
    aug, pivots = rref(hstack(m, Matrix([[x] for x in b])))
    for i in range(m.rows):
        if all(aug.data[i][j] == 0 for j in range(m.cols)) and aug.data[i][m.cols] != 0:
            return None
    x = [Fraction(0)] * m.cols
    for r, pc in enumerate(pivots):
        if pc < m.cols:
            x[pc] = aug.data[r][m.cols]
        elif aug.data[r][m.cols] != 0:
            return None
    return tuple(x)


def row_basis(vectors: Sequence[Sequence]) -> list[Vector]:
    """Deterministic basis of the row span of the given vectors."""
    if not vectors:
        return []
    red, pivots = rref(Matrix(vectors))
    return [red.data[i] for i in range(len(pivots))]


def row_space_contains(vectors: Sequence[Vector], v: Sequence) -> bool:
    if not vectors:
        return all(frac(x) == 0 for x in v)
    base = Matrix(vectors)
    return rank(base) == rank(vstack(base, Matrix([v])))


def row_spans_equal(a: Sequence[Vector], b: Sequence[Vector]) -> bool:
    if not a and not b:
        return True
    if not a:
        return rank(Matrix(b)) == 0
    if not b:
        return rank(Matrix(a)) == 0
    ra, rb = rank(Matrix(a)), rank(Matrix(b))
    return ra == rb == rank(vstack(Matrix(a), Matrix(b)))


def annihilator(
    spanning: Sequence[Sequence],
    dim: int,
    gram: Matrix | None = None,
) -> list[Vector]:
    """Basis of {g : <g, f> = 0 for all f in the span}.

    The pairing is <g, f> = sum_u g[u] * gram[u][u'] * f[u']; by default the
    gram matrix is the identity (standard dual pairing).
    """
    vecs = [tuple(frac(x) for x in f) for f in spanning]
    for f in vecs:
        if len(f) != dim:
            raise ValueError("vector length mismatch")
    if not vecs:
        return [tuple(Fraction(1) if i == j else Fraction(0) for i in range(dim)) for j in range(dim)]
    if gram is None:
        rows = vecs
    else:
        rows = [gram.apply(f) for f in vecs]
    return kernel_basis(Matrix(rows))


def projectors(components: Sequence[Sequence[Sequence]], dim: int) -> list[Matrix]:
    """Projectors P_k onto each component along the others.

    Raises NotComplementary unless the component spans form a direct-sum
    decomposition of the dim-dimensional ambient space.  The returned
    projectors satisfy P_k P_l = delta_kl P_k and sum_k P_k = 1 exactly.
    """
    bases = [row_basis(comp) for comp in components]
    total = sum(len(b) for b in bases)
    if total != dim:
        raise NotComplementary(
            f"component dimensions sum to {total}, ambient dimension is {dim}"
        )
    cols: list[Vector] = [v for b in bases for v in b]
    c = Matrix(cols).transpose()
    if rank(c) != dim:
        raise NotComplementary("joint spanning matrix is rank-deficient")
    ci = inverse(c)
    out = []
    start = 0
    for b in bases:
        stop = start + len(b)
        if start == stop:
            out.append(Matrix.zeros(dim, dim))
        else:
            block = Matrix([row[start:stop] for row in c.data])
            out.append(block @ Matrix(ci.data[start:stop]))
        start = stop
    return out


def kron(a: Matrix, b: Matrix) -> Matrix:
    out = []
    for i in range(a.rows):
        for k in range(b.rows):
            out.append(
                tuple(
                    a.data[i][j] * b.data[k][l]
                    for j in range(a.cols)
                    for l in range(b.cols)
                )
            )
    return Matrix._wrap(tuple(out))
