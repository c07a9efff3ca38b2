"""Exact matrices over cyclotomic fields.

Matrix products go through :func:`hopftwist.kernels.matmul`: both factors
are written over a common conductor and a common denominator, multiplied
as integer polynomial matrices, and converted back.
"""

from __future__ import annotations

from . import elim, kernels
from .cyclo import ONE, ZERO, CycNumber, _lcm, cyc, cyclotomic_poly
from .errors import DimensionMismatch, OrderBoundExceeded, SingularMatrix


def _pack(rows, n):
    """Flatten entries at conductor ``n`` to integer numerators over one denominator."""
    den = 1
    for row in rows:
        for x in row:
            if x._den != 1:
                den = _lcm(den, x._den)
    flat = []
    for row in rows:
        for x in row:
            x = x.embed(n)
            f = den // x._den
            flat.extend(x._num if f == 1 else [c * f for c in x._num])
    return flat, den


def _conductor(*mats):
    n = 1
    for m in mats:
        for row in m.rows:
            for x in row:
                if x._n != n:
                    n = _lcm(n, x._n)
    return n


class Matrix:
    """Immutable matrix of :class:`CycNumber`; ``rows[i][j]`` is entry (i, j).

    Used as a linear map with column ``j`` the image of basis vector ``j``.
    """

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows):
        self.rows = tuple(tuple(cyc(x) for x in r) for r in rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        if any(len(r) != self.ncols for r in self.rows):
            raise DimensionMismatch("ragged matrix rows")

    @classmethod
    def _wrap(cls, rows, ncols=None):
        obj = object.__new__(cls)
        obj.rows = tuple(tuple(r) for r in rows)
        obj.nrows = len(obj.rows)
        obj.ncols = len(obj.rows[0]) if obj.rows else (ncols or 0)
        return obj

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls._wrap([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        return cls._wrap([[ZERO] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def from_columns(cls, cols) -> "Matrix":
        cols = [tuple(c) for c in cols]
        return cls._wrap([[c[i] for c in cols] for i in range(len(cols[0]))])

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[tuple]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> "Matrix":
        return Matrix._wrap(list(zip(*self.rows)), self.nrows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    __hash__ = None

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} + {other.shape}")
        return Matrix._wrap(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)]
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + other.scale(-1)

    def scale(self, c) -> "Matrix":
        c = cyc(c)
        return Matrix._wrap([[c * x if x else x for x in r] for r in self.rows], self.ncols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"{self.shape} @ {other.shape}")
        n = _conductor(self, other)
        phi = cyclotomic_poly(n)
        d = len(phi) - 1
        a, da = _pack(self.rows, n)
        b, db = _pack(other.rows, n)
        flat = kernels.matmul(a, b, self.nrows, self.ncols, other.ncols, phi)
        den = da * db
        rows = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                o = (i * other.ncols + j) * d
                chunk = flat[o:o + d]
                row.append(CycNumber._raw(n, chunk, den) if any(chunk) else ZERO)
            rows.append(row)
        return Matrix._wrap(rows, other.ncols)

    def apply(self, vec) -> tuple:
        """Matrix times a column vector (tuple of CycNumber)."""
        if len(vec) != self.ncols:
            raise DimensionMismatch(f"{self.shape} applied to vector of length {len(vec)}")
        out = []
        for r in self.rows:
            acc = ZERO
            for a, x in zip(r, vec):
                if a and x:
                    acc = acc + a * x
            out.append(acc)
        return tuple(out)

    def power(self, k: int) -> "Matrix":
        if k < 0:
            return self.inverse().power(-k)
        result = Matrix.identity(self.nrows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            k >>= 1
            if k:
                base = base @ base
        return result

    def inverse(self) -> "Matrix":
        if self.nrows != self.ncols:
            raise DimensionMismatch("only square matrices are invertible")
        return Matrix._wrap(elim.inverse(self.rows, ZERO, ONE))

    def is_invertible(self) -> bool:
        try:
            self.inverse()
        except SingularMatrix:
            return False
        return True

    def nullspace(self) -> list[tuple]:
        return [tuple(v) for v in elim.nullspace(self.rows, self.ncols, ZERO, ONE)]

    def rank(self) -> int:
        return len(elim.rref(self.rows, self.ncols)[1])

    def trace(self) -> CycNumber:
        acc = ZERO
        for i in range(min(self.nrows, self.ncols)):
            acc = acc + self.rows[i][i]
        return acc

    def is_identity(self) -> bool:
        if self.nrows != self.ncols:
            return False
        for i, r in enumerate(self.rows):
            for j, x in enumerate(r):
                if (x != 1) if i == j else bool(x):
                    return False
        return True

    def kron(self, other: "Matrix") -> "Matrix":
        rows = []
        for r in self.rows:
            for s in other.rows:
                rows.append([a * b if a and b else ZERO for a in r for b in s])
        return Matrix._wrap(rows, self.ncols * other.ncols)

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in r) for r in self.rows)
        return f"Matrix([{body}])"


def map_order(f: Matrix, bound: int) -> int:
    """Least ``k <= bound`` with ``f^k`` the identity.

    Raises :class:`OrderBoundExceeded` when no such ``k`` exists, which
    means the order is larger than ``bound`` or infinite.
    """
    if f.nrows != f.ncols:
        raise DimensionMismatch("order of a non-square matrix")
    p = f
    for k in range(1, bound + 1):
        if p.is_identity():
            return k
        if k < bound:
            p = p @ f
    raise OrderBoundExceeded(bound)


def vec_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vec_scale(c, a):
    return tuple(c * x if x else x for x in a)


def zero_vec(n: int):
    return (ZERO,) * n


def basis_vec(n: int, i: int):
    return tuple(ONE if j == i else ZERO for j in range(n))
