"""Exact dense linear algebra: matrices, canonical subspaces, lattice ops.

A :class:`Subspace` keeps its basis in reduced row echelon form, so two
subspaces are equal exactly when their stored representations are equal.
Meets use the Zassenhaus block reduction, joins are stack-and-reduce, and
quotient dimensions are plain differences guarded by a containment check.
"""
from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .fields import FieldSpec


class DimensionMismatch(ValueError):
    """Operands live over different ambient spaces or fields."""


class NotASubspace(ValueError):
    """A claimed subspace containment does not hold."""


class Matrix:
    """Dense exact matrix over a :class:`FieldSpec`."""

    __slots__ = ("field", "data")

    def __init__(self, field: FieldSpec, data: np.ndarray):
        if data.ndim != 2:
            raise ValueError("matrix data must be 2-dimensional")
        self.field = field
        self.data = data

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Iterable], cols: int | None = None) -> "Matrix":
        rows = [list(r) for r in rows]
        if not rows:
            if cols is None:
                raise ValueError("an empty row list needs an explicit column count")
            return cls(field, field.zeros(0, cols))
        ncols = len(rows[0]) if cols is None else cols
        a = field.zeros(len(rows), ncols)
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise ValueError("rows have differing lengths")
            for j, x in enumerate(row):
                a[i, j] = field.coerce(x)
        return cls(field, a)

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> "Matrix":
        return cls(field, field.zeros(rows, cols))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "Matrix":
        a = field.zeros(n, n)
        one = field.one()
        for i in range(n):
            a[i, i] = one
        return cls(field, a)

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.data.shape == other.data.shape
            and bool(np.equal(self.data, other.data).all())
        )

    __hash__ = None

    def __repr__(self):
        return f"Matrix({self.field.token()}, {self.data.tolist()!r})"


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if a.field != b.field:
        raise DimensionMismatch("matrix product over different fields")
    if a.cols != b.rows:
        raise DimensionMismatch(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    f = a.field
    x, y = a.data, b.data
    # Large residues could overflow int64 when inner products accumulate.
    if f.is_prime_field and f.characteristic > 2**15:
        x = x.astype(object)
        y = y.astype(object)
    return Matrix(f, f.normalize(x.dot(y)))


def _row_reduce(field: FieldSpec, a: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form (copy) and the list of pivot columns."""
    a = a.copy()
    nrows, ncols = a.shape
    one = field.one()
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = None
        for i in range(r, nrows):
            if a[i, c] != 0:
                pr = i
                break
        if pr is None:
            continue
        if pr != r:
            a[[r, pr]] = a[[pr, r]]
        if a[r, c] != one:
            a[r] = field.normalize(a[r] * field.inv(a[r, c]))
        col = a[:, c].copy()
        col[r] = 0
        if np.any(col != 0):
            a = field.normalize(a - np.outer(col, a[r]))
        pivots.append(c)
        r += 1
    return a, pivots


def rref(m: Matrix) -> tuple[Matrix, int]:
    """Reduced row echelon form and rank.  Idempotent."""
    red, pivots = _row_reduce(m.field, m.data)
    return Matrix(m.field, red), len(pivots)


class Subspace:
    """Subspace of a fixed ambient coordinate space, in canonical form.

    The basis matrix is in reduced row echelon form with full row rank,
    so span equality is representation equality.
    """

    __slots__ = ("field", "ambient_dim", "basis", "pivots")

    def __init__(self, field: FieldSpec, ambient_dim: int, basis: Matrix, pivots: tuple[int, ...]):
        # Trusts its arguments; use the classmethods to canonicalize.
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = basis
        self.pivots = pivots

    @classmethod
    def from_array(cls, field: FieldSpec, arr: np.ndarray) -> "Subspace":
        red, pivots = _row_reduce(field, arr)
        basis = Matrix(field, red[: len(pivots)])
        return cls(field, arr.shape[1], basis, tuple(pivots))

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Iterable], ambient_dim: int | None = None) -> "Subspace":
        m = Matrix.from_rows(field, rows, cols=ambient_dim)
        return cls.from_array(field, m.data)

    @classmethod
    def zero(cls, field: FieldSpec, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim, Matrix.zeros(field, 0, ambient_dim), ())

    @classmethod
    def full(cls, field: FieldSpec, ambient_dim: int) -> "Subspace":
        return cls(
            field,
            ambient_dim,
            Matrix.identity(field, ambient_dim),
            tuple(range(ambient_dim)),
        )

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.field == other.field
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    __hash__ = None

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, basis={self.basis.data.tolist()!r})"


def _check_pair(a: Subspace, b: Subspace) -> None:
    if a.field != b.field:
        raise DimensionMismatch("subspaces over different fields")
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch(
            f"ambient dimensions differ: {a.ambient_dim} vs {b.ambient_dim}"
        )


def kernel(m: Matrix) -> Subspace:
    """Subspace of the domain annihilated by ``m``."""
    red, pivots = _row_reduce(m.field, m.data)
    n = m.cols
    f = m.field
    pivot_set = set(pivots)
    free = [c for c in range(n) if c not in pivot_set]
    if not free:
        return Subspace.zero(f, n)
    rows = f.zeros(len(free), n)
    one = f.one()
    for k, fc in enumerate(free):
        rows[k, fc] = one
        for i, pc in enumerate(pivots):
            rows[k, pc] = f.neg(red[i, fc])
    return Subspace.from_array(f, rows)


def column_space(m: Matrix) -> Subspace:
    """Subspace of the codomain spanned by the columns of ``m``."""
    return Subspace.from_array(m.field, m.data.T.copy())


def meet(a: Subspace, b: Subspace) -> Subspace:
    """Largest subspace contained in both operands (Zassenhaus block trick)."""
    _check_pair(a, b)
    f = a.field
    n = a.ambient_dim
    if a.dim == 0 or b.dim == 0:
        return Subspace.zero(f, n)
    if a.dim == n:
        return b
    if b.dim == n:
        return a
    top = np.hstack([a.basis.data, a.basis.data])
    bot = np.hstack([b.basis.data, f.zeros(b.dim, n)])
    red, pivots = _row_reduce(f, np.vstack([top, bot]))
    rows = [red[i, n:] for i, pc in enumerate(pivots) if pc >= n]
    if not rows:
        return Subspace.zero(f, n)
    return Subspace.from_array(f, np.vstack(rows))


def join(a: Subspace, b: Subspace) -> Subspace:
    """Smallest subspace containing both operands (sum of subspaces)."""
    _check_pair(a, b)
    if a.dim == 0:
        return b
    if b.dim == 0:
        return a
    return Subspace.from_array(a.field, np.vstack([a.basis.data, b.basis.data]))


def contains(a: Subspace, b: Subspace) -> bool:
    """True iff ``b`` is contained in ``a``."""
    _check_pair(a, b)
    if b.dim == 0:
        return True
    if a.dim == 0:
        return False
    f = a.field
    res = b.basis.data.copy()
    for i, pc in enumerate(a.pivots):
        col = res[:, pc].copy()
        if np.any(col != 0):
            res = f.normalize(res - np.outer(col, a.basis.data[i]))
    return not np.any(res != 0)


def quotient_dim(big: Subspace, small: Subspace) -> int:
    """dim(big) - dim(small), requiring small to be contained in big."""
    if not contains(big, small):
        raise NotASubspace("the second operand is not contained in the first")
    return big.dim - small.dim


def complement_basis(big: Subspace, small: Subspace) -> Matrix:
    """Rows extending ``small`` to ``big``; representatives of the quotient.

    No canonicity is promised beyond determinism.
    """
    if not contains(big, small):
        raise NotASubspace("the second operand is not contained in the first")
    f = big.field
    current = small
    out = []
    for row in big.basis.data:
        extended = join(current, Subspace.from_array(f, row[None, :].copy()))
        if extended.dim > current.dim:
            out.append(row)
            current = extended
        if current.dim == big.dim:
            break
    return Matrix.from_rows(f, out, cols=big.ambient_dim)
