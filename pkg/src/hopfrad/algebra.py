"""Structure-constant algebras, Hopf algebra data, smash products, integrals.

A finite-dimensional algebra is a multiplication tensor ``c[i][j][k]`` with
``e_i e_j = sum_k c[i][j][k] e_k``.  Elements are coordinate tuples in the
fixed basis.  Hopf data adds a comultiplication tensor, counit vector and
antipode matrix, all validated axiom by axiom on basis elements.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dfield
from typing import Sequence

from .fields import FieldSpec, Scalar
from .linalg import Matrix, Vector, nullspace, span, Subspace


@dataclass
class ValidationReport:
    """Collected axiom failures; empty means valid."""

    failures: list = dfield(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def add(self, message: str) -> None:
        self.failures.append(message)

    def extend(self, other: "ValidationReport") -> None:
        self.failures.extend(other.failures)

    def __str__(self) -> str:
        return "valid" if self.ok else "; ".join(self.failures)


def _coerce_tensor(field: FieldSpec, mult, dim: int):
    out = []
    for i in range(dim):
        row = []
        for j in range(dim):
            row.append(tuple(field.coerce(x) for x in mult[i][j]))
            if len(row[-1]) != dim:
                raise ValueError("structure tensor has wrong shape")
        out.append(tuple(row))
    return tuple(out)


@dataclass(frozen=True)
class FiniteDimAlgebra:
    """An algebra given by structure constants, optionally with a unit."""

    field: FieldSpec
    dim: int
    mult: tuple  # mult[i][j] = coordinate vector of e_i * e_j
    unit: Vector | None = None

    @staticmethod
    def create(field: FieldSpec, dim: int, mult, unit=None) -> "FiniteDimAlgebra":
        tensor = _coerce_tensor(field, mult, dim)
        u = tuple(field.coerce(x) for x in unit) if unit is not None else None
        return FiniteDimAlgebra(field, dim, tensor, u)

    def zero(self) -> Vector:
        return (self.field.zero(),) * self.dim

    def basis_vector(self, i: int) -> Vector:
        return tuple(self.field.one() if j == i else self.field.zero() for j in range(self.dim))

    def basis(self) -> list:
        return [self.basis_vector(i) for i in range(self.dim)]


def vec_add(field: FieldSpec, u: Sequence, v: Sequence) -> Vector:
    return tuple(field.add(a, b) for a, b in zip(u, v))


def vec_sub(field: FieldSpec, u: Sequence, v: Sequence) -> Vector:
    return tuple(field.sub(a, b) for a, b in zip(u, v))


def vec_scale(field: FieldSpec, c: Scalar, v: Sequence) -> Vector:
    return tuple(field.mul(c, x) for x in v)


def vec_is_zero(field: FieldSpec, v: Sequence) -> bool:
    return all(field.is_zero(x) for x in v)


def multiply(A: FiniteDimAlgebra, u: Sequence, v: Sequence) -> Vector:
    """Bilinear product of coordinate vectors via the structure constants."""
    F = A.field
    if len(u) != A.dim or len(v) != A.dim:
        raise ValueError("element dimension mismatch")
    out = [F.zero()] * A.dim
    for i, ui in enumerate(u):
        if F.is_zero(ui):
            continue
        for j, vj in enumerate(v):
            if F.is_zero(vj):
                continue
            c = F.mul(ui, vj)
            row = A.mult[i][j]
            for k in range(A.dim):
                if not F.is_zero(row[k]):
                    out[k] = F.add(out[k], F.mul(c, row[k]))
    return tuple(out)


def validate_algebra(A: FiniteDimAlgebra) -> ValidationReport:
    """Check associativity on all basis triples and the declared unit."""
    report = ValidationReport()
    basis = A.basis()
    for i in range(A.dim):
        for j in range(A.dim):
            ij = A.mult[i][j]
            for k in range(A.dim):
                left = multiply(A, ij, basis[k])
                right = multiply(A, basis[i], A.mult[j][k])
                if left != right:
                    report.add(f"associativity fails on basis triple ({i},{j},{k})")
    if A.unit is not None:
        for i in range(A.dim):
            if multiply(A, A.unit, basis[i]) != basis[i]:
                report.add(f"declared unit fails as left unit on basis {i}")
            if multiply(A, basis[i], A.unit) != basis[i]:
                report.add(f"declared unit fails as right unit on basis {i}")
    return report


def find_unit(A: FiniteDimAlgebra) -> Vector | None:
    """Solve e*e_i = e_i = e_i*e for all i; unique solution or None."""
    F = A.field
    rows, rhs = [], []
    # unknowns u_j; conditions sum_j u_j (e_j e_i) = e_i and sum_j u_j (e_i e_j) = e_i
    for i in range(A.dim):
        for k in range(A.dim):
            rows.append(tuple(A.mult[j][i][k] for j in range(A.dim)))
            rhs.append(F.one() if k == i else F.zero())
            rows.append(tuple(A.mult[i][j][k] for j in range(A.dim)))
            rhs.append(F.one() if k == i else F.zero())
    from .linalg import solve

    m = Matrix(F, len(rows), A.dim, tuple(rows))
    return solve(m, rhs)


def tensor_index(dimB: int, i: int, a: int) -> int:
    """Flat index of e_i (x) f_a with the second factor fastest."""
    return i * dimB + a


@dataclass(frozen=True)
class HopfAlgebraData:
    """A finite-dimensional Hopf algebra in a fixed basis.

    ``comult[i]`` lists Delta(e_i) as a dim x dim coefficient matrix over
    basis pairs, ``counit`` is the vector of eps values, ``antipode`` is the
    matrix with row i the coordinates of S(e_i).
    """

    algebra: FiniteDimAlgebra
    comult: tuple  # comult[i][j][k] : coefficient of e_j (x) e_k in Delta(e_i)
    counit: Vector
    antipode: tuple  # antipode[i] = coordinates of S(e_i)

    @staticmethod
    def create(algebra: FiniteDimAlgebra, comult, counit, antipode) -> "HopfAlgebraData":
        F, d = algebra.field, algebra.dim
        cm = _coerce_tensor(F, comult, d)
        cu = tuple(F.coerce(x) for x in counit)
        S = tuple(tuple(F.coerce(x) for x in row) for row in antipode)
        if len(cu) != d or len(S) != d or any(len(r) != d for r in S):
            raise ValueError("Hopf tensors have wrong shape")
        return HopfAlgebraData(algebra, cm, cu, S)

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def field(self) -> FieldSpec:
        return self.algebra.field

    def comult_of(self, h: Sequence) -> tuple:
        """Delta(h) as a dim x dim coefficient matrix over basis pairs."""
        F, d = self.field, self.dim
        out = [[F.zero()] * d for _ in range(d)]
        for i, hi in enumerate(h):
            if F.is_zero(hi):
                continue
            for j in range(d):
                for k in range(d):
                    c = self.comult[i][j][k]
                    if not F.is_zero(c):
                        out[j][k] = F.add(out[j][k], F.mul(hi, c))
        return tuple(tuple(r) for r in out)

    def counit_of(self, h: Sequence) -> Scalar:
        F = self.field
        out = F.zero()
        for hi, ei in zip(h, self.counit):
            out = F.add(out, F.mul(hi, ei))
        return out

    def antipode_of(self, h: Sequence) -> Vector:
        F, d = self.field, self.dim
        out = [F.zero()] * d
        for i, hi in enumerate(h):
            if F.is_zero(hi):
                continue
            for k in range(d):
                out[k] = F.add(out[k], F.mul(hi, self.antipode[i][k]))
    # note: S is stored row-wise, so this is plain row-vector application
        return tuple(out)


def _tensor2_apply_mult(H: HopfAlgebraData, coeffs: tuple) -> Vector:
    """m applied to an element of H (x) H given by a coefficient matrix."""
    F, d = H.field, H.dim
    out = [F.zero()] * d
    for j in range(d):
        for k in range(d):
            c = coeffs[j][k]
            if F.is_zero(c):
                continue
            row = H.algebra.mult[j][k]
            for t in range(d):
                if not F.is_zero(row[t]):
                    out[t] = F.add(out[t], F.mul(c, row[t]))
    return tuple(out)


def validate_hopf(H: HopfAlgebraData) -> ValidationReport:
    """Coassociativity, counit axiom, bialgebra compatibility, antipode axiom."""
    F, d, A = H.field, H.dim, H.algebra
    report = ValidationReport()
    if A.unit is None:
        report.add("Hopf algebra lacks a unit")
        return report

    # coassociativity: (Delta (x) id)Delta = (id (x) Delta)Delta on e_i
    for i in range(d):
        lhs = {}
        rhs = {}
        for j in range(d):
            for k in range(d):
                c = H.comult[i][j][k]
                if F.is_zero(c):
                    continue
                for a in range(d):
                    for b in range(d):
                        cj = H.comult[j][a][b]
                        if not F.is_zero(cj):
                            key = (a, b, k)
                            lhs[key] = F.add(lhs.get(key, F.zero()), F.mul(c, cj))
                        ck = H.comult[k][a][b]
                        if not F.is_zero(ck):
                            key = (j, a, b)
                            rhs[key] = F.add(rhs.get(key, F.zero()), F.mul(c, ck))
        keys = set(lhs) | set(rhs)
        if any(lhs.get(t, F.zero()) != rhs.get(t, F.zero()) for t in keys):
            report.add(f"coassociativity fails on basis {i}")

    # counit: (eps (x) id)Delta = id = (id (x) eps)Delta
    for i in range(d):
        left = [F.zero()] * d
        right = [F.zero()] * d
        for j in range(d):
            for k in range(d):
                c = H.comult[i][j][k]
                if F.is_zero(c):
                    continue
                left[k] = F.add(left[k], F.mul(c, H.counit[j]))
                right[j] = F.add(right[j], F.mul(c, H.counit[k]))
        e_i = A.basis_vector(i)
        if tuple(left) != e_i:
            report.add(f"counit axiom (eps x id) fails on basis {i}")
        if tuple(right) != e_i:
            report.add(f"counit axiom (id x eps) fails on basis {i}")

    # Delta is an algebra map: Delta(e_i e_j) = Delta(e_i) Delta(e_j)
    for i in range(d):
        for j in range(d):
            want = H.comult_of(A.mult[i][j])
            got = [[F.zero()] * d for _ in range(d)]
            for a in range(d):
                for b in range(d):
                    ci = H.comult[i][a][b]
                    if F.is_zero(ci):
                        continue
                    for c_ in range(d):
                        for e in range(d):
                            cj = H.comult[j][c_][e]
                            if F.is_zero(cj):
                                continue
                            coeff = F.mul(ci, cj)
                            rowl = A.mult[a][c_]
                            rowr = A.mult[b][e]
                            for s in range(d):
                                if F.is_zero(rowl[s]):
                                    continue
                                for t in range(d):
                                    if not F.is_zero(rowr[t]):
                                        got[s][t] = F.add(got[s][t], F.mul(coeff, F.mul(rowl[s], rowr[t])))
            if tuple(tuple(r) for r in got) != want:
                report.add(f"comultiplication not multiplicative on basis pair ({i},{j})")
    # Delta(1) = 1 (x) 1
    unit_cm = H.comult_of(A.unit)
    want_unit = tuple(
        tuple(F.mul(A.unit[j], A.unit[k]) for k in range(d)) for j in range(d)
    )
    if unit_cm != want_unit:
        report.add("comultiplication does not preserve the unit")

    # eps is an algebra map
    for i in range(d):
        for j in range(d):
            if H.counit_of(A.mult[i][j]) != F.mul(H.counit[i], H.counit[j]):
                report.add(f"counit not multiplicative on basis pair ({i},{j})")
    if H.counit_of(A.unit) != F.one():
        report.add("counit does not preserve the unit")

    # antipode: m(S x id)Delta = u eps = m(id x S)Delta
    for i in range(d):
        left = {}
        right = {}
        lvec = [F.zero()] * d
        rvec = [F.zero()] * d
        for j in range(d):
            for k in range(d):
                c = H.comult[i][j][k]
                if F.is_zero(c):
                    continue
                sj = H.antipode[j]
                prod = multiply(A, sj, A.basis_vector(k))
                for t in range(d):
                    lvec[t] = F.add(lvec[t], F.mul(c, prod[t]))
                sk = H.antipode[k]
                prod = multiply(A, A.basis_vector(j), sk)
                for t in range(d):
                    rvec[t] = F.add(rvec[t], F.mul(c, prod[t]))
        want = vec_scale(F, H.counit[i], A.unit)
        if tuple(lvec) != want:
            report.add(f"antipode axiom m(S x id)Delta fails on basis {i}")
        if tuple(rvec) != want:
            report.add(f"antipode axiom m(id x S)Delta fails on basis {i}")
    return report


def trivial_hopf(field: FieldSpec) -> HopfAlgebraData:
    """The one-dimensional Hopf algebra k."""
    one = field.one()
    A = FiniteDimAlgebra.create(field, 1, [[[one]]], unit=[one])
    return HopfAlgebraData.create(A, [[[one]]], [one], [[one]])


def left_integrals(H: HopfAlgebraData) -> Subspace:
    """Solution space of h t = eps(h) t for every basis h."""
    F, d, A = H.field, H.dim, H.algebra
    rows = []
    # unknown t: for each basis h_i and output coord k:
    #   sum_j t_j (e_i e_j)_k - eps(e_i) t_k = 0
    for i in range(d):
        for k in range(d):
            row = []
            for j in range(d):
                c = A.mult[i][j][k]
                if j == k:
                    c = F.sub(c, H.counit[i])
                row.append(c)
            rows.append(tuple(row))
    return nullspace(Matrix(F, len(rows), d, tuple(rows)))


def normalized_integral(H: HopfAlgebraData) -> Vector | None:
    """A left integral with eps(t) = 1, or None if eps kills the integrals."""
    F = H.field
    for t in left_integrals(H).basis:
        e = H.counit_of(t)
        if not F.is_zero(e):
            return vec_scale(F, F.inv(e), t)
    return None


def structure_constants_equal(A: FiniteDimAlgebra, B: FiniteDimAlgebra) -> bool:
    return A.field == B.field and A.dim == B.dim and A.mult == B.mult
