"""Hopf module algebras: action tensors, validation, colon ideals, quotients,
the smash product and its conjugation identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .fields import FieldSpec, Scalar
from .algebra import (
    FiniteDimAlgebra,
    HopfAlgebraData,
    ValidationReport,
    _coerce_tensor,
    multiply,
    vec_add,
    vec_scale,
    vec_is_zero,
    tensor_index,
)
from .linalg import (
    Matrix,
    Subspace,
    Vector,
    contains,
    nullspace,
    reduce_vector,
    span,
    subspace_sum,
    zero_subspace,
    full_subspace,
)

#: validation severity levels, weakest to strongest
LEVELS = ("weak", "module", "unital")


@dataclass(frozen=True)
class HModuleAlgebra:
    """An algebra R together with a Hopf algebra H acting on it.

    ``action[i][j]`` is the coordinate vector of ``e_i^H . e_j^R``.
    """

    R: FiniteDimAlgebra
    H: HopfAlgebraData
    action: tuple

    @staticmethod
    def create(R: FiniteDimAlgebra, H: HopfAlgebraData, action) -> "HModuleAlgebra":
        if R.field != H.field:
            raise ValueError("R and H must share a base field")
        F = R.field
        act = []
        for i in range(H.dim):
            row = []
            for j in range(R.dim):
                v = tuple(F.coerce(x) for x in action[i][j])
                if len(v) != R.dim:
                    raise ValueError("action tensor has wrong shape")
                row.append(v)
            act.append(tuple(row))
        return HModuleAlgebra(R, H, tuple(act))

    @property
    def field(self) -> FieldSpec:
        return self.R.field

    def act(self, h: Sequence, r: Sequence) -> Vector:
        """h . r for coordinate vectors h in H, r in R."""
        F = self.field
        out = [F.zero()] * self.R.dim
        for i, hi in enumerate(h):
            if F.is_zero(hi):
                continue
            for j, rj in enumerate(r):
                if F.is_zero(rj):
                    continue
                c = F.mul(hi, rj)
                row = self.action[i][j]
                for k in range(self.R.dim):
                    if not F.is_zero(row[k]):
                        out[k] = F.add(out[k], F.mul(c, row[k]))
        return tuple(out)

    def act_basis(self, i: int, r: Sequence) -> Vector:
        return self.act(self.H.algebra.basis_vector(i), r)


def validate_action(M: HModuleAlgebra, level: str = "module") -> ValidationReport:
    """Check the action axioms at the requested severity level.

    ``weak``   : 1_H acts as identity and the measuring axiom holds.
    ``module`` : additionally (h h').r = h.(h'.r) on basis triples.
    ``unital`` : additionally h.1_R = eps(h) 1_R (requires R to have a unit).
    """
    if level not in LEVELS:
        raise ValueError(f"unknown validation level {level!r}")
    F, R, H = M.field, M.R, M.H
    report = ValidationReport()
    if H.algebra.unit is None:
        report.add("H lacks a unit")
        return report

    rbasis = R.basis()
    for j in range(R.dim):
        if M.act(H.algebra.unit, rbasis[j]) != rbasis[j]:
            report.add(f"1_H does not act as identity on basis {j}")

    # measuring: h.(rs) = sum (h1.r)(h2.s)
    for i in range(H.dim):
        for j in range(R.dim):
            for k in range(R.dim):
                lhs = M.act_basis(i, R.mult[j][k])
                rhs = [F.zero()] * R.dim
                for a in range(H.dim):
                    for b in range(H.dim):
                        c = H.comult[i][a][b]
                        if F.is_zero(c):
                            continue
                        prod = multiply(R, M.action[a][j], M.action[b][k])
                        for t in range(R.dim):
                            rhs[t] = F.add(rhs[t], F.mul(c, prod[t]))
                if lhs != tuple(rhs):
                    report.add(f"measuring axiom fails at (h={i}; r={j}, s={k})")

    if level in ("module", "unital"):
        for i in range(H.dim):
            for j in range(H.dim):
                hh = H.algebra.mult[i][j]
                for k in range(R.dim):
                    lhs = M.act(hh, rbasis[k])
                    rhs = M.act_basis(i, M.action[j][k])
                    if lhs != rhs:
                        report.add(f"module axiom fails at (h={i}, h'={j}; r={k})")

    if level == "unital":
        if R.unit is None:
            report.add("unital level requested but R has no unit")
        else:
            for i in range(H.dim):
                want = vec_scale(F, H.counit[i], R.unit)
                if M.act_basis(i, R.unit) != want:
                    report.add(f"unital axiom h.1_R = eps(h) 1_R fails at h={i}")
    return report


def act_image(M: HModuleAlgebra, L: Sequence, S: Subspace) -> Subspace:
    """span{ h.v : h in L, v in basis(S) } for a list L of H-elements."""
    if not L:
        raise ValueError("L must be non-empty")
    vecs = [M.act(h, v) for h in L for v in S.basis]
    return span(M.field, vecs, M.R.dim)


def h_basis(M: HModuleAlgebra) -> list:
    return M.H.algebra.basis()


def is_ideal(A: FiniteDimAlgebra, S: Subspace) -> bool:
    basis = A.basis()
    for v in S.basis:
        for b in basis:
            if not contains(S, multiply(A, b, v)):
                return False
            if not contains(S, multiply(A, v, b)):
                return False
    return True


def colon_ideal(M: HModuleAlgebra, I: Subspace) -> Subspace:
    """(I : H) = { x in R | h.x in I for all h }, the largest H-ideal inside I."""
    if not is_ideal(M.R, I):
        raise ValueError("colon_ideal requires an ideal of R")
    F, n = M.field, M.R.dim
    rows = []
    # x mapsto residue of h_i.x against I must vanish, for every basis h_i
    for i in range(M.H.dim):
        cols = [reduce_vector(I, M.action[i][j]) for j in range(n)]
        for k in range(n):
            rows.append(tuple(cols[j][k] for j in range(n)))
    result = nullspace(Matrix(F, len(rows), n, tuple(rows)))
    if not is_ideal(M.R, result):
        raise AssertionError("(I:H) failed to be an ideal; action not a module algebra?")
    return result


def quotient_maps(field: FieldSpec, I: Subspace):
    """Projection/section pair for k^n -> k^n / I in the complement basis.

    The complement basis is the non-pivot coordinates of I's RREF basis, so
    quotient structure constants are reproducible bit for bit.
    """
    n = I.ambient_dim
    pivset = set(I.pivots)
    comp = [j for j in range(n) if j not in pivset]

    def proj(v: Sequence) -> Vector:
        w = reduce_vector(I, v)
        return tuple(w[j] for j in comp)

    def lift(c: Sequence) -> Vector:
        v = [field.zero()] * n
        for x, j in zip(c, comp):
            v[j] = x
        return tuple(v)

    return comp, proj, lift


def quotient_action(M: HModuleAlgebra, I: Subspace) -> HModuleAlgebra:
    """The induced H-module algebra on R/I for an H-ideal I."""
    from .ideals import is_h_ideal

    ok, witness = is_h_ideal(M, I)
    if not ok:
        raise ValueError(f"not an H-ideal: {witness}")
    F, n = M.field, M.R.dim
    comp, proj, lift = quotient_maps(F, I)
    q = len(comp)

    qbasis = [lift(tuple(F.one() if t == s else F.zero() for t in range(q))) for s in range(q)]
    qmult = tuple(
        tuple(proj(multiply(M.R, u, v)) for v in qbasis) for u in qbasis
    )
    qunit = None
    if M.R.unit is not None and q > 0:
        qunit = proj(M.R.unit)
    qR = FiniteDimAlgebra(F, q, qmult, qunit)
    qact = tuple(
        tuple(proj(M.act_basis(i, v)) for v in qbasis) for i in range(M.H.dim)
    )
    return HModuleAlgebra(qR, M.H, qact)


def restrict_action(M: HModuleAlgebra, S: Subspace) -> HModuleAlgebra:
    """The H-module algebra structure on an H-stable subalgebra S of R."""
    from .linalg import coordinates_in

    F = M.field
    basis = list(S.basis)
    d = len(basis)
    mult = tuple(
        tuple(coordinates_in(S, multiply(M.R, u, v)) for v in basis) for u in basis
    )
    sub = FiniteDimAlgebra(F, d, mult, None)
    act = tuple(
        tuple(coordinates_in(S, M.act_basis(i, v)) for v in basis)
        for i in range(M.H.dim)
    )
    return HModuleAlgebra(sub, M.H, act)


def smash_product(M: HModuleAlgebra) -> FiniteDimAlgebra:
    """The smash product R # H with (a#h)(b#g) = sum a(h1.b) # h2 g.

    Basis order is e_i # f_a with the H index fastest; requires R unital so
    that a |-> a # 1_H embeds R.
    """
    if M.R.unit is None:
        raise ValueError("smash product requires R to have a unit")
    F, R, H = M.field, M.R, M.H
    n, m = R.dim, H.dim
    dim = n * m
    zero = F.zero()
    mult = [[None] * dim for _ in range(dim)]
    for i in range(n):
        for a in range(m):
            for j in range(n):
                for b in range(m):
                    out = [zero] * dim
                    for c in range(m):
                        for d in range(m):
                            gamma = H.comult[a][c][d]
                            if F.is_zero(gamma):
                                continue
                            w = multiply(R, R.basis_vector(i), M.action[c][j])
                            z = H.algebra.mult[d][b]
                            for k in range(n):
                                if F.is_zero(w[k]):
                                    continue
                                coeff = F.mul(gamma, w[k])
                                for t in range(m):
                                    if not F.is_zero(z[t]):
                                        idx = tensor_index(m, k, t)
                                        out[idx] = F.add(out[idx], F.mul(coeff, z[t]))
                    mult[tensor_index(m, i, a)][tensor_index(m, j, b)] = tuple(out)
    unit = [zero] * dim
    for i in range(n):
        for a in range(m):
            unit[tensor_index(m, i, a)] = F.mul(R.unit[i], H.algebra.unit[a])
    return FiniteDimAlgebra(F, dim, tuple(tuple(row) for row in mult), tuple(unit))


def embed_r(M: HModuleAlgebra, a: Sequence) -> Vector:
    """a # 1_H inside the smash product."""
    F, m = M.field, M.H.dim
    out = [F.zero()] * (M.R.dim * m)
    for i, ai in enumerate(a):
        for t in range(m):
            out[tensor_index(m, i, t)] = F.mul(ai, M.H.algebra.unit[t])
    return tuple(out)


def embed_h(M: HModuleAlgebra, h: Sequence) -> Vector:
    """1_R # h inside the smash product."""
    F, m = M.field, M.H.dim
    out = [F.zero()] * (M.R.dim * m)
    for i, ri in enumerate(M.R.unit):
        for t, ht in enumerate(h):
            out[tensor_index(m, i, t)] = F.add(out[tensor_index(m, i, t)], F.mul(ri, ht))
    return tuple(out)


def smash_r_component(M: HModuleAlgebra, v: Sequence) -> Vector | None:
    """Coordinates a with v = a # 1_H, or None if v is not in the embedded R."""
    F, m = M.field, M.H.dim
    cand = None
    target = [list(v[tensor_index(m, i, t)] for t in range(m)) for i in range(M.R.dim)]
    # solve a_i * unit_H = row_i for each i
    a = []
    for i in range(M.R.dim):
        row = target[i]
        coeff = None
        for t in range(m):
            u = M.H.algebra.unit[t]
            if not F.is_zero(u):
                coeff = F.div(row[t], u)
                break
        if coeff is None:
            return None
        for t in range(m):
            if row[t] != F.mul(coeff, M.H.algebra.unit[t]):
                return None
        a.append(coeff)
    return tuple(a)


def check_conjugation_identity(M: HModuleAlgebra) -> ValidationReport:
    """Verify (h.a) # 1 = sum (1 # h1) (a # 1) (1 # S(h2)) inside R # H."""
    if M.R.unit is None:
        raise ValueError("conjugation identity needs R unital")
    F, R, H = M.field, M.R, M.H
    A = smash_product(M)
    report = ValidationReport()
    for i in range(H.dim):
        for j in range(R.dim):
            lhs = embed_r(M, M.action[i][j])
            rhs = [F.zero()] * A.dim
            aj = embed_r(M, R.basis_vector(j))
            for c in range(H.dim):
                for d in range(H.dim):
                    gamma = H.comult[i][c][d]
                    if F.is_zero(gamma):
                        continue
                    left = embed_h(M, H.algebra.basis_vector(c))
                    right = embed_h(M, H.antipode[d])
                    term = multiply(A, multiply(A, left, aj), right)
                    for t in range(A.dim):
                        rhs[t] = F.add(rhs[t], F.mul(gamma, term[t]))
            if lhs != tuple(rhs):
                report.add(f"conjugation identity fails at (h={i}, a={j})")
    return report
