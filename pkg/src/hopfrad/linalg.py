"""Exact dense linear algebra: RREF matrices and canonical subspaces.

Vectors are tuples of scalars, matrices are tuples of row tuples.  A
:class:`Subspace` stores its reduced row-echelon basis, so two subspaces are
equal iff their representations are equal; it is the universal currency for
ideals and radicals in the rest of the library.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .fields import FieldSpec, Scalar

Vector = tuple


@dataclass(frozen=True)
class Matrix:
    field: FieldSpec
    rows: int
    cols: int
    entries: tuple  # tuple of row tuples, canonical scalars

    @staticmethod
    def from_rows(field: FieldSpec, rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        rows = [tuple(field.coerce(x) for x in r) for r in rows]
        if rows:
            ncols = len(rows[0])
            if any(len(r) != ncols for r in rows):
                raise ValueError("ragged rows")
        else:
            if cols is None:
                raise ValueError("empty matrix needs explicit column count")
            ncols = cols
        if cols is not None and rows and ncols != cols:
            raise ValueError(f"expected {cols} columns, got {ncols}")
        return Matrix(field, len(rows), ncols, tuple(rows))

    def row(self, i: int) -> Vector:
        return self.entries[i]


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row-echelon form and pivot columns; row space is preserved."""
    F = m.field
    rows = [list(r) for r in m.entries]
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        pr = next((i for i in range(r, len(rows)) if not F.is_zero(rows[i][c])), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = F.inv(rows[r][c])
        rows[r] = [F.mul(inv, x) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not F.is_zero(rows[i][c]):
                f = rows[i][c]
                rows[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    out = Matrix(F, len(rows), m.cols, tuple(tuple(x) for x in rows))
    return out, tuple(pivots)


@dataclass(frozen=True)
class Subspace:
    """A subspace of k^n given by its RREF basis with no zero rows."""

    field: FieldSpec
    ambient_dim: int
    basis: tuple  # tuple of row tuples, RREF, strictly increasing pivots
    pivots: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def basis_vectors(self) -> tuple:
        return self.basis


def span(field: FieldSpec, vectors: Iterable[Sequence], ambient_dim: int) -> Subspace:
    """Canonical subspace spanned by ``vectors`` inside k^ambient_dim."""
    vecs = [tuple(field.coerce(x) for x in v) for v in vectors]
    for v in vecs:
        if len(v) != ambient_dim:
            raise ValueError(f"vector length {len(v)} != ambient dim {ambient_dim}")
    m = Matrix(field, len(vecs), ambient_dim, tuple(vecs))
    red, piv = rref(m)
    rows = red.entries[: len(piv)]
    return Subspace(field, ambient_dim, rows, piv)


def zero_subspace(field: FieldSpec, ambient_dim: int) -> Subspace:
    return Subspace(field, ambient_dim, (), ())


def full_subspace(field: FieldSpec, ambient_dim: int) -> Subspace:
    one, zero = field.one(), field.zero()
    rows = tuple(tuple(one if i == j else zero for j in range(ambient_dim)) for i in range(ambient_dim))
    return Subspace(field, ambient_dim, rows, tuple(range(ambient_dim)))


def _check_ambient(a: Subspace, b: Subspace) -> None:
    if a.ambient_dim != b.ambient_dim or a.field != b.field:
        raise ValueError("ambient space mismatch")


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_ambient(a, b)
    return span(a.field, a.basis + b.basis, a.ambient_dim)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """Intersection via the Zassenhaus block construction."""
    _check_ambient(a, b)
    F, n = a.field, a.ambient_dim
    zero = F.zero()
    block = [tuple(v) + tuple(v) for v in a.basis]
    block += [tuple(v) + (zero,) * n for v in b.basis]
    red, piv = rref(Matrix(F, len(block), 2 * n, tuple(block)))
    rows = []
    for r, row in enumerate(red.entries):
        if r < len(piv) and piv[r] >= n:
            rows.append(row[n:])
        elif r >= len(piv):
            break
    return span(F, rows, n)


def reduce_vector(s: Subspace, v: Sequence) -> Vector:
    """Residue of ``v`` after elimination against the RREF basis of ``s``."""
    F = s.field
    v = [F.coerce(x) for x in v]
    if len(v) != s.ambient_dim:
        raise ValueError("vector length mismatch")
    for row, p in zip(s.basis, s.pivots):
        c = v[p]
        if not F.is_zero(c):
            v = [F.sub(x, F.mul(c, y)) for x, y in zip(v, row)]
    return tuple(v)


def contains(s: Subspace, v: Sequence) -> bool:
    return all(s.field.is_zero(x) for x in reduce_vector(s, v))


def is_subspace_of(a: Subspace, b: Subspace) -> bool:
    _check_ambient(a, b)
    return all(contains(b, v) for v in a.basis)


def coordinates_in(s: Subspace, v: Sequence) -> Vector:
    """Coefficients of ``v`` in the RREF basis of ``s``; requires membership."""
    F = s.field
    v = tuple(F.coerce(x) for x in v)
    if not contains(s, v):
        raise ValueError("vector not in subspace")
    return tuple(v[p] for p in s.pivots)


def nullspace(m: Matrix) -> Subspace:
    """Solution space of m x^T = 0, i.e. vectors x with sum_j m[i][j] x[j] = 0."""
    F = m.field
    red, piv = rref(m)
    pivset = set(piv)
    free = [c for c in range(m.cols) if c not in pivset]
    basis = []
    for f in free:
        v = [F.zero()] * m.cols
        v[f] = F.one()
        for r, p in enumerate(piv):
            v[p] = F.neg(red.entries[r][f])
        basis.append(tuple(v))
    return span(F, basis, m.cols)


def solve(m: Matrix, rhs: Sequence) -> Vector | None:
    """One solution x of sum_j m[i][j] x[j] = rhs[i], or None."""
    F = m.field
    rhs = [F.coerce(x) for x in rhs]
    aug = Matrix(F, m.rows, m.cols + 1, tuple(r + (b,) for r, b in zip(m.entries, rhs)))
    red, piv = rref(aug)
    if m.cols in piv:
        return None
    x = [F.zero()] * m.cols
    for r, p in enumerate(piv):
        x[p] = red.entries[r][m.cols]
    return tuple(x)


DEFAULT_ENUM_CAP = 10_000


def enumerate_subspaces(n: int, field: FieldSpec, cap: int = DEFAULT_ENUM_CAP) -> Iterator[Subspace]:
    """Every subspace of F_p^n exactly once, in canonical RREF form.

    Walks all pivot-column sets and all free entries of the corresponding
    echelon patterns.  Guarded by ``p^n <= cap``.
    """
    if not field.is_prime_field:
        raise ValueError("subspace enumeration requires a prime field")
    p = field.p
    if p**n > cap:
        raise ValueError(f"enumeration cap exceeded: {p}^{n} > {cap}")
    yield zero_subspace(field, n)
    for k in range(1, n + 1):
        for piv in itertools.combinations(range(n), k):
            pivset = set(piv)
            # free positions: right of the row's pivot, not in a pivot column
            free = [
                (i, j)
                for i in range(k)
                for j in range(piv[i] + 1, n)
                if j not in pivset
            ]
            for vals in itertools.product(range(p), repeat=len(free)):
                rows = [[0] * n for _ in range(k)]
                for i in range(k):
                    rows[i][piv[i]] = 1
                for (i, j), v in zip(free, vals):
                    rows[i][j] = v
                yield Subspace(field, n, tuple(tuple(r) for r in rows), piv)


def gaussian_binomial(n: int, k: int, p: int) -> int:
    num = den = 1
    for i in range(k):
        num *= p ** (n - i) - 1
        den *= p ** (i + 1) - 1
    return num // den


def count_subspaces(n: int, p: int) -> int:
    return sum(gaussian_binomial(n, k, p) for k in range(n + 1))


def enumerate_vectors(n: int, field: FieldSpec, cap: int = DEFAULT_ENUM_CAP) -> Iterator[Vector]:
    """All vectors of F_p^n; guarded by ``p^n <= cap``."""
    if not field.is_prime_field:
        raise ValueError("vector enumeration requires a prime field")
    if field.p**n > cap:
        raise ValueError(f"enumeration cap exceeded: {field.p}^{n} > {cap}")
    for t in itertools.product(range(field.p), repeat=n):
        yield t


def enumerate_projective_vectors(n: int, field: FieldSpec, cap: int = DEFAULT_ENUM_CAP) -> Iterator[Vector]:
    """One representative per nonzero vector up to scalar (first nonzero = 1)."""
    for v in enumerate_vectors(n, field, cap):
        lead = next((x for x in v if x != 0), None)
        if lead == 1:
            yield v
