"""Radical computations and theorem cross-checks for Hopf module algebras.

Covers the nilradical of plain algebras (trace form and finite-field
backends), the ascending chain defining the H-Baer radical, m-sequence
membership, the H-Jacobson radical through the smash product, the integral
based radical and the H-Brown-McCoy radical, the colon-ideal family, and a
structured comparison report over all of them.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field as dfield

from .fields import FieldSpec
from .algebra import (
    FiniteDimAlgebra,
    find_unit,
    multiply,
    normalized_integral,
    vec_add,
    vec_is_zero,
    vec_scale,
)
from .action import (
    HModuleAlgebra,
    act_image,
    colon_ideal,
    embed_r,
    h_basis,
    is_ideal,
    quotient_action,
    quotient_maps,
    smash_product,
)
from .ideals import (
    DEFAULT_SEED,
    enumerate_h_ideals,
    h_ideal_generated,
    is_h_ideal,
    is_h_simple,
    nilpotency_index,
    subspace_product,
    _sweep_vectors,
)
from .linalg import (
    DEFAULT_ENUM_CAP,
    Matrix,
    Subspace,
    contains,
    enumerate_projective_vectors,
    enumerate_vectors,
    full_subspace,
    intersect,
    is_subspace_of,
    nullspace,
    reduce_vector,
    span,
    subspace_sum,
    zero_subspace,
)


class Unsupported(RuntimeError):
    """A computation whose preconditions (field, cap, splitness) fail."""


class TheoremViolation(RuntimeError):
    """Two routes that a theorem forces to agree disagreed; a bug, not data."""


@dataclass
class RadicalResult:
    name: str
    space: Subspace
    method: str
    certificates: list = dfield(default_factory=list)


@dataclass
class MSequence:
    """A recorded m-sequence a_{n+1} = (h_n.a_n) b_n (h'_n.a_n)."""

    start: tuple
    steps: list  # list of (h, b, h') coordinate triples
    values: list  # a_1, a_2, ...


# ---------------------------------------------------------------------------
# nilradical of a plain finite-dimensional algebra


def _unitalize(A: FiniteDimAlgebra) -> FiniteDimAlgebra:
    """Adjoin a unit: coordinate 0 is the new unit, 1..dim the old basis."""
    F, n = A.field, A.dim
    z, o = F.zero(), F.one()
    d = n + 1
    mult = [[None] * d for _ in range(d)]
    for i in range(d):
        for j in range(d):
            out = [z] * d
            if i == 0:
                out[j] = o
            elif j == 0:
                out[i] = o
            else:
                row = A.mult[i - 1][j - 1]
                for k in range(n):
                    out[k + 1] = row[k]
            mult[i][j] = tuple(out)
    unit = tuple([o] + [z] * n)
    return FiniteDimAlgebra(F, d, tuple(tuple(r) for r in mult), unit)


def _algebra_subspace_product(A: FiniteDimAlgebra, S: Subspace, T: Subspace) -> Subspace:
    vecs = [multiply(A, s, t) for s in S.basis for t in T.basis]
    return span(A.field, vecs, A.dim)


def _subspace_nilpotent(A: FiniteDimAlgebra, S: Subspace) -> bool:
    cur = S
    for _ in range(A.dim + 2):
        if cur.is_zero():
            return True
        nxt = _algebra_subspace_product(A, cur, S)
        if nxt == cur:
            return False
        cur = nxt
    return cur.is_zero()


def _generated_ideal(A: FiniteDimAlgebra, S: Subspace) -> Subspace:
    full = full_subspace(A.field, A.dim)
    out = S
    out = subspace_sum(out, _algebra_subspace_product(A, full, S))
    out = subspace_sum(out, _algebra_subspace_product(A, S, full))
    out = subspace_sum(out, _algebra_subspace_product(A, _algebra_subspace_product(A, full, S), full))
    return out


def _nilradical_trace(A: FiniteDimAlgebra) -> Subspace:
    """Dickson's criterion: rad = { x : tr(L_{x b}) = 0 for every basis b }."""
    F = A.field
    work = A if A.unit is not None else _unitalize(A)
    n = work.dim
    if F.is_prime_field and F.p <= n:
        raise Unsupported(f"trace backend needs p > {n}, got p = {F.p}")
    # tr(L_v) is linear: tr(L_v) = sum_j v_j tau_j
    tau = [F.zero()] * n
    for j in range(n):
        for i in range(n):
            tau[j] = F.add(tau[j], work.mult[j][i][i])
    rows = []
    for b in range(n):
        row = []
        for a in range(n):
            acc = F.zero()
            prod = work.mult[a][b]
            for j in range(n):
                acc = F.add(acc, F.mul(prod[j], tau[j]))
            row.append(acc)
        rows.append(tuple(row))
    sol = nullspace(Matrix(F, n, n, tuple(rows)))
    if work is not A:
        # solutions live inside the old algebra; drop the adjoined coordinate
        for v in sol.basis:
            if not F.is_zero(v[0]):
                raise AssertionError("trace radical escaped the original algebra")
        sol = span(F, [v[1:] for v in sol.basis], A.dim)
    if not _subspace_nilpotent(A, sol):
        raise AssertionError("trace-form radical is not nilpotent")
    return sol


def _nilpotent_element_filter(A: FiniteDimAlgebra, cap: int):
    """All nonzero nilpotent elements of A over F_p, one per scalar line."""
    import numpy as np

    F, n = A.field, A.dim
    p = F.p
    if p**n > cap:
        raise Unsupported(f"enumeration cap exceeded: {p}^{n} > {cap}")
    C = np.array(
        [[[int(A.mult[i][j][k]) for k in range(n)] for j in range(n)] for i in range(n)],
        dtype=np.int64,
    )
    vecs = np.array(list(itertools.product(range(p), repeat=n)), dtype=np.int64)
    X = vecs
    e = 1
    while e <= n:  # element nilpotency index is at most n + 1
        X = np.einsum("ni,nj,ijk->nk", X, X, C) % p
        e *= 2
    nil = vecs[(X == 0).all(axis=1)]
    out = []
    for v in nil.tolist():
        lead = next((x for x in v if x != 0), None)
        if lead == 1:
            out.append(tuple(v))
    return out


def _nilradical_enum(A: FiniteDimAlgebra, cap: int) -> Subspace:
    """Largest nilpotent ideal over a small prime field.

    Uses the fact that J is exactly the set of x whose generated ideal is
    nilpotent; candidates are prefiltered to nilpotent elements in bulk.
    """
    F, n = A.field, A.dim
    if not F.is_prime_field:
        raise Unsupported("enumeration backend needs a prime field")
    N = zero_subspace(F, n)
    for v in _nilpotent_element_filter(A, cap):
        if contains(N, v):
            continue
        gen = _generated_ideal(A, span(F, [v], n))
        if _subspace_nilpotent(A, gen):
            N = subspace_sum(N, gen)
    return N


def nilradical(A: FiniteDimAlgebra, cap: int = DEFAULT_ENUM_CAP):
    """The largest nilpotent two-sided ideal and the backend(s) used.

    Runs the trace-form backend when the characteristic allows it and the
    finite-field enumeration backend when the algebra is small enough; when
    both run their answers are asserted equal.
    Returns (subspace, method-string).
    """
    results = {}
    errors = []
    try:
        results["trace"] = _nilradical_trace(A)
    except Unsupported as exc:
        errors.append(str(exc))
    if A.field.is_prime_field:
        try:
            results["enumeration"] = _nilradical_enum(A, cap)
        except Unsupported as exc:
            errors.append(str(exc))
    if not results:
        raise Unsupported("; ".join(errors))
    if len(results) == 2 and results["trace"] != results["enumeration"]:
        raise TheoremViolation("nilradical backends disagree")
    method = "+".join(sorted(results))
    return next(iter(results.values())), method


# ---------------------------------------------------------------------------
# the ascending chain and the H-Baer radical


def baer_chain(M: HModuleAlgebra, cap: int = DEFAULT_ENUM_CAP):
    """The chain N_0 = 0 < N_1 < ... up to stabilization, N_{a+1}/N_a being
    the sum of all nilpotent H-ideals of R/N_a.

    In finite dimension that sum equals (J:H) for J the largest nilpotent
    ideal of the quotient: every nilpotent H-ideal lies inside J, and (J:H)
    is itself a nilpotent H-ideal.
    """
    F, n = M.field, M.R.dim
    chain = [zero_subspace(F, n)]
    while True:
        N = chain[-1]
        if N.is_full():
            break
        Q = quotient_action(M, N)
        J, _ = nilradical(Q.R, cap)
        step = colon_ideal(Q, J)
        if step.is_zero():
            break
        _, _, lift = quotient_maps(F, N)
        lifted = [lift(v) for v in step.basis]
        chain.append(span(F, list(N.basis) + lifted, n))
    return chain, chain[-1]


def h_baer_radical(
    M: HModuleAlgebra,
    cap: int = DEFAULT_ENUM_CAP,
    cross_check: bool = True,
) -> RadicalResult:
    """N_tau of the chain; over small prime fields also recomputed as the
    intersection of all H-semiprime H-ideals, with disagreement a hard error.
    """
    chain, ntau = baer_chain(M, cap)
    certificates = [f"chain length {len(chain)}"]
    method = "chain"
    F, n = M.field, M.R.dim
    if cross_check and F.is_prime_field and F.p**n <= cap:
        inter = full_subspace(F, n)
        for I in enumerate_h_ideals(M, cap=cap):
            Q = quotient_action(M, I)
            if _is_h_semiprime_by_enumeration(Q, cap):
                inter = intersect(inter, I)
        if inter != ntau:
            raise TheoremViolation("N_tau != intersection of H-semiprime H-ideals")
        method = "chain+enumeration"
    return RadicalResult("h_baer", ntau, method, certificates)


def _is_h_semiprime_by_enumeration(M: HModuleAlgebra, cap: int) -> bool:
    for I in enumerate_h_ideals(M, cap=cap):
        if I.is_zero():
            continue
        nil, _ = nilpotency_index(M, I)
        if nil:
            return False
    return True


def is_h_semiprime(M: HModuleAlgebra, cap: int = DEFAULT_ENUM_CAP) -> bool:
    return h_baer_radical(M, cap, cross_check=False).space.is_zero()


def is_h_prime(M: HModuleAlgebra, cap: int = DEFAULT_ENUM_CAP, seed: int = DEFAULT_SEED):
    """(H.a) R (H.b) = 0 must force a = 0 or b = 0.

    Exact over a prime field within cap; over the rationals a sweep searches
    for a witness and H-simplicity certifies the positive case.
    Returns (verdict, witness) with verdict in {True, False, "unknown"}.
    """
    F, n = M.field, M.R.dim
    full = full_subspace(F, n)
    L = h_basis(M)

    def orbit_product_zero(a, b) -> bool:
        Ta = act_image(M, L, span(F, [a], n))
        Tb = act_image(M, L, span(F, [b], n))
        mid = subspace_product(M.R, Ta, full)
        return subspace_product(M.R, mid, Tb).is_zero()

    if F.is_prime_field and F.p**n <= cap:
        points = list(enumerate_projective_vectors(n, F, cap))
        for a in points:
            for b in points:
                if orbit_product_zero(a, b):
                    return False, (a, b)
        return True, None
    for a in _sweep_vectors(M, seed, trials=16):
        for b in _sweep_vectors(M, seed + 1, trials=16):
            if orbit_product_zero(a, b):
                return False, (a, b)
    simple, _ = is_h_simple(M, cap=cap, seed=seed)
    if simple is True:
        return True, None
    return "unknown", None


# ---------------------------------------------------------------------------
# m-sequences and W_H membership


def wh_membership(
    M: HModuleAlgebra,
    a,
    L=None,
    cap: int = DEFAULT_ENUM_CAP,
    seed: int = DEFAULT_SEED,
    trials: int = 64,
):
    """Decide whether every m-sequence starting at ``a`` dies.

    Three verdict sources: a shrinking-subspace over-approximation, a seeded
    randomized search for a surviving periodic sequence, and the chain oracle
    (membership in N_tau).  The oracle wins; the other two must not
    contradict it.  Returns (verdict, detail, trace) with verdict in
    {"nilpotent", "not-nilpotent"}; detail is the nilpotency bound or the
    certificate sequence.
    """
    F, R, n = M.field, M.R, M.R.dim
    a = tuple(F.coerce(x) for x in a)
    if L is None:
        L = h_basis(M)
    else:
        L = [tuple(F.coerce(x) for x in h) for h in L]
        if span(F, L, M.H.dim) != full_subspace(F, M.H.dim):
            raise ValueError("L must span H")

    # source 1: V_{n+1} = (L.V_n) R (L.V_n); any sequence value a_n lies in V_n
    over_bound = None
    V = span(F, [a], n)
    full = full_subspace(F, n)
    seen = set()
    for k in range(2, 2 * n + 4):
        if V.is_zero():
            over_bound = k - 1
            break
        if V in seen:
            break
        seen.add(V)
        LV = act_image(M, L, V)
        V = subspace_product(M.R, subspace_product(M.R, LV, full), LV)

    # source 2: randomized search for a surviving sequence with a repeat
    certificate = None
    best_trace = MSequence(a, [], [a])
    rng = random.Random(seed)
    depth = 2 * n
    if not vec_is_zero(F, a):
        for _ in range(trials):
            cur = a
            steps, values = [], [a]
            seen_vals = {a}
            for _ in range(depth):
                h = rng.choice(L)
                h2 = rng.choice(L)
                b = rng.choice(R.basis() + [cur])
                nxt = multiply(R, multiply(R, M.act(h, cur), b), M.act(h2, cur))
                steps.append((h, b, h2))
                values.append(nxt)
                cur = nxt
                if vec_is_zero(F, cur):
                    break
                if cur in seen_vals:
                    certificate = MSequence(a, steps, values)
                    break
                seen_vals.add(cur)
            if len(values) > len(best_trace.values):
                best_trace = MSequence(a, steps, values)
            if certificate:
                break

    # source 3: the oracle, via r_Hb = W_H
    ntau = h_baer_radical(M, cap, cross_check=False).space
    oracle_nilpotent = contains(ntau, a)

    if over_bound is not None and not oracle_nilpotent:
        raise TheoremViolation("over-approximation says nilpotent, oracle disagrees")
    if certificate is not None and oracle_nilpotent:
        raise TheoremViolation("periodic surviving sequence found inside N_tau")

    if oracle_nilpotent:
        return "nilpotent", over_bound, best_trace
    return "not-nilpotent", certificate, certificate or best_trace


# ---------------------------------------------------------------------------
# Wedderburn blocks (split case) and the H-Jacobson radical


def _quotient_algebra(A: FiniteDimAlgebra, I: Subspace):
    """A/I in the complement basis; returns (Q, proj, lift)."""
    F = A.field
    comp, proj, lift = quotient_maps(F, I)
    q = len(comp)
    qbasis = [lift(tuple(F.one() if t == s else F.zero() for t in range(q))) for s in range(q)]
    qmult = tuple(tuple(proj(multiply(A, u, v)) for v in qbasis) for u in qbasis)
    qunit = proj(A.unit) if A.unit is not None and q > 0 else None
    return FiniteDimAlgebra(F, q, qmult, qunit), proj, lift


def _minimal_polynomial(F: FieldSpec, T):
    """Monic minimal polynomial of a square matrix, low degree first."""
    d = len(T)

    def matmul(X, Y):
        return [
            [
                _dot(F, [X[i][k] for k in range(d)], [Y[k][j] for k in range(d)])
                for j in range(d)
            ]
            for i in range(d)
        ]

    powers = [[[F.one() if i == j else F.zero() for j in range(d)] for i in range(d)]]
    for _ in range(d):
        powers.append(matmul(powers[-1], T))
    flat = [tuple(x for row in P for x in row) for P in powers]
    for deg in range(1, d + 1):
        # solve c_0 I + ... + c_{deg-1} T^{deg-1} + T^deg = 0
        rows = []
        rhs = []
        for pos in range(d * d):
            rows.append(tuple(flat[k][pos] for k in range(deg)))
            rhs.append(F.neg(flat[deg][pos]))
        from .linalg import solve

        sol = solve(Matrix(F, len(rows), deg, tuple(rows)), rhs)
        if sol is not None:
            return list(sol) + [F.one()]
    raise AssertionError("minimal polynomial search failed")


def _dot(F: FieldSpec, u, v):
    acc = F.zero()
    for a, b in zip(u, v):
        acc = F.add(acc, F.mul(a, b))
    return acc


def _poly_roots(F: FieldSpec, coeffs):
    """All roots in F of a monic polynomial; raises Unsupported on a
    non-linear residual factor (non-split input)."""

    def horner(cs, x):
        acc = F.zero()
        for c in reversed(cs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def deflate(cs, r):
        # divide by (x - r); cs low-first, monic
        out = [F.zero()] * (len(cs) - 1)
        carry = F.zero()
        for i in range(len(cs) - 1, 0, -1):
            carry = F.add(cs[i], F.mul(carry, r))
            out[i - 1] = carry
        return out

    roots = []
    cs = list(coeffs)
    while len(cs) > 1:
        root = None
        if F.is_prime_field:
            for x in F.elements():
                if F.is_zero(horner(cs, x)):
                    root = x
                    break
        else:
            from fractions import Fraction

            # rational root theorem on the integer-cleared polynomial
            from math import lcm

            den = lcm(*[c.denominator for c in cs]) if cs else 1
            ints = [int(c * den) for c in cs]
            lead, const = ints[-1], ints[0]
            if const == 0:
                root = Fraction(0)
            else:
                def divisors(m):
                    m = abs(m)
                    out = set()
                    i = 1
                    while i * i <= m:
                        if m % i == 0:
                            out.add(i)
                            out.add(m // i)
                        i += 1
                    return out

                for p_ in divisors(const):
                    for q_ in divisors(lead):
                        for cand in (Fraction(p_, q_), Fraction(-p_, q_)):
                            if F.is_zero(horner(cs, cand)):
                                root = cand
                                break
                        if root is not None:
                            break
                    if root is not None:
                        break
        if root is None:
            raise Unsupported("minimal polynomial has a non-linear factor (non-split)")
        roots.append(root)
        cs = deflate(cs, root)
    return roots


def central_primitive_idempotents(A: FiniteDimAlgebra):
    """Primitive central idempotents of a split semisimple unital algebra.

    Splits the center along eigenspaces of multiplication by its basis
    elements; raises Unsupported when the center does not split over the
    base field.
    """
    F, n = A.field, A.dim
    if A.unit is None:
        raise Unsupported("central idempotents need a unit")
    if n == 0:
        return []
    rows = []
    for b in range(n):
        for k in range(n):
            rows.append(
                tuple(F.sub(A.mult[a][b][k], A.mult[b][a][k]) for a in range(n))
            )
    Z = nullspace(Matrix(F, len(rows), n, tuple(rows)))
    blocks = [Z]
    for zi in range(Z.dim):
        z = Z.basis[zi]
        new_blocks = []
        for W in blocks:
            if W.dim == 1:
                new_blocks.append(W)
                continue
            basis = list(W.basis)
            from .linalg import coordinates_in

            T = [coordinates_in(W, multiply(A, z, w)) for w in basis]
            # rows of T: image of each basis vector; operator acts row-wise
            minpoly = _minimal_polynomial(F, [list(r) for r in T])
            roots = _poly_roots(F, minpoly)
            for lam in sorted(set(roots), key=str):
                d = W.dim
                rows2 = []
                for k in range(d):
                    rows2.append(
                        tuple(
                            F.sub(T[j][k], lam if j == k else F.zero()) for j in range(d)
                        )
                    )
                ker = nullspace(Matrix(F, d, d, tuple(rows2)))
                vecs = []
                for c in ker.basis:
                    v = [F.zero()] * n
                    for cj, w in zip(c, basis):
                        for t in range(n):
                            v[t] = F.add(v[t], F.mul(cj, w[t]))
                    vecs.append(tuple(v))
                if vecs:
                    new_blocks.append(span(F, vecs, n))
        blocks = new_blocks
    idems = []
    for W in blocks:
        if W.dim != 1:
            raise Unsupported("center did not split into one-dimensional blocks")
        w = W.basis[0]
        w2 = multiply(A, w, w)
        from .linalg import coordinates_in

        if vec_is_zero(F, w2):
            raise Unsupported("central block is not semisimple")
        c = coordinates_in(W, w2)[0]
        idems.append(vec_scale(F, F.inv(c), w))
    for e in idems:
        if multiply(A, e, e) != e:
            raise AssertionError("central idempotent candidate is not idempotent")
    return idems


def h_jacobson_radical(M: HModuleAlgebra, cap: int = DEFAULT_ENUM_CAP) -> RadicalResult:
    """Pull the radical of R # H back to R through the simple blocks of the
    semisimple quotient; blocks on which R acts as zero are discarded.
    """
    if M.R.unit is None:
        raise Unsupported("H-Jacobson route needs R unital")
    F, n = M.field, M.R.dim
    A = smash_product(M)
    J, method = nilradical(A, cap)
    Q, proj, lift = _quotient_algebra(A, J)
    if Q.dim == 0:
        space = full_subspace(F, n)
        return RadicalResult("h_jacobson", space, f"smash[{method}]", ["R#H is nilpotent"])
    idems = central_primitive_idempotents(Q)
    anns = []
    for e in idems:
        rows = []
        for k in range(Q.dim):
            rows.append(tuple(multiply(Q, e, Q.basis_vector(j))[k] for j in range(Q.dim)))
        ann_q = nullspace(Matrix(F, len(rows), Q.dim, tuple(rows)))
        pullback = span(
            F, list(J.basis) + [lift(v) for v in ann_q.basis], A.dim
        )
        r_acts_zero = all(contains(pullback, embed_r(M, b)) for b in M.R.basis())
        if not r_acts_zero:
            anns.append(pullback)
    if not anns:
        inter = full_subspace(F, A.dim)
    else:
        inter = anns[0]
        for P in anns[1:]:
            inter = intersect(inter, P)
    # cut down to R through the embedding a |-> a # 1
    rows = []
    for k in range(A.dim):
        rows.append(
            tuple(reduce_vector(inter, embed_r(M, M.R.basis_vector(j)))[k] for j in range(n))
        )
    space = nullspace(Matrix(F, len(rows), n, tuple(rows)))
    return RadicalResult(
        "h_jacobson", space, f"smash[{method}]", [f"{len(idems)} simple blocks"]
    )


def smash_radical_restricted(M: HModuleAlgebra, cap: int = DEFAULT_ENUM_CAP) -> Subspace:
    """rad(R # H) intersected with the embedded copy of R, in R coordinates."""
    if M.R.unit is None:
        raise Unsupported("needs R unital for the embedding")
    F, n = M.field, M.R.dim
    A = smash_product(M)
    J, _ = nilradical(A, cap)
    rows = []
    for k in range(A.dim):
        rows.append(
            tuple(reduce_vector(J, embed_r(M, M.R.basis_vector(j)))[k] for j in range(n))
        )
    return nullspace(Matrix(F, len(rows), n, tuple(rows)))


# ---------------------------------------------------------------------------
# the integral-based radical and H-Brown-McCoy


def _check_normalized_integral(M: HModuleAlgebra, t) -> tuple:
    F = M.field
    t = tuple(F.coerce(x) for x in t)
    H = M.H
    for i in range(H.dim):
        want = vec_scale(F, H.counit[i], t)
        if multiply(H.algebra, H.algebra.basis_vector(i), t) != want:
            raise ValueError("t is not a left integral")
    if H.counit_of(t) != F.one():
        raise ValueError("t is not normalized: eps(t) != 1")
    return t


def gt_subspace(M: HModuleAlgebra, t, a) -> Subspace:
    """G_t(a) = { x + (t.a)x + sum_i (x_i (t.a) y_i + x_i y_i) }."""
    F, R, n = M.field, M.R, M.R.dim
    t = _check_normalized_integral(M, t)
    a = tuple(F.coerce(x) for x in a)
    ta = M.act(t, a)
    vecs = []
    for j in range(n):
        x = R.basis_vector(j)
        vecs.append(vec_add(F, x, multiply(R, ta, x)))
    for u in R.basis():
        for v in R.basis():
            uv = multiply(R, u, v)
            vecs.append(vec_add(F, multiply(R, multiply(R, u, ta), v), uv))
    return span(F, vecs, n)


def gt_member(M: HModuleAlgebra, t, a) -> bool:
    return contains(gt_subspace(M, t, a), tuple(M.field.coerce(x) for x in a))


def gt_radical(M: HModuleAlgebra, t, cap: int = DEFAULT_ENUM_CAP) -> RadicalResult:
    """Sum of the H-ideals all of whose elements a satisfy a in G_t(a);
    elementwise over enumerated ideals, so prime fields only.
    """
    F, n = M.field, M.R.dim
    t = _check_normalized_integral(M, t)
    if not F.is_prime_field or F.p**n > cap:
        raise Unsupported("gt radical needs a prime field within the enumeration cap")
    total = zero_subspace(F, n)
    kept = 0
    for I in enumerate_h_ideals(M, cap=cap):
        good = True
        for coeffs in itertools.product(list(F.elements()), repeat=I.dim):
            a = [F.zero()] * n
            for c, v in zip(coeffs, I.basis):
                for k in range(n):
                    a[k] = F.add(a[k], F.mul(c, v[k]))
            if not gt_member(M, t, tuple(a)):
                good = False
                break
        if good:
            total = subspace_sum(total, I)
            kept += 1
    return RadicalResult("gt", total, "ideal enumeration", [f"{kept} qualifying ideals"])


def _maximal_ideals(A: FiniteDimAlgebra, cap: int):
    """Maximal two-sided ideals with simple unital quotient, via the blocks
    of A / nilradical."""
    F, n = A.field, A.dim
    J, _ = nilradical(A, cap)
    Q, proj, lift = _quotient_algebra(A, J)
    if Q.dim == 0:
        return []
    out = []
    for e in central_primitive_idempotents(Q):
        rows = []
        for k in range(Q.dim):
            rows.append(tuple(multiply(Q, e, Q.basis_vector(j))[k] for j in range(Q.dim)))
        ann_q = nullspace(Matrix(F, len(rows), Q.dim, tuple(rows)))
        out.append(span(F, list(J.basis) + [lift(v) for v in ann_q.basis], n))
    return out


def h_brown_mccoy_radical(
    M: HModuleAlgebra, cap: int = DEFAULT_ENUM_CAP, seed: int = DEFAULT_SEED
) -> RadicalResult:
    """Intersection of the maximal H-ideals whose quotients are H-simple
    module algebras with unit; candidates are (P:H) over maximal ideals P.
    """
    F, n = M.field, M.R.dim
    candidates = []
    for P in _maximal_ideals(M.R, cap):
        cand = colon_ideal(M, P)
        if cand not in candidates:
            candidates.append(cand)
    kept = []
    for cand in candidates:
        if cand.is_full():
            continue
        Q = quotient_action(M, cand)
        simple, _ = is_h_simple(Q, cap=cap, seed=seed)
        if simple not in (True, "true-uncertified"):
            continue
        if find_unit(Q.R) is None:
            continue
        kept.append((cand, simple))
    if not kept:
        space = full_subspace(F, n)
    else:
        space = kept[0][0]
        for cand, _ in kept[1:]:
            space = intersect(space, cand)
    certs = [f"{len(kept)} maximal H-ideals kept"]
    if any(s == "true-uncertified" for _, s in kept):
        certs.append("some quotients certified only by sweep")
    return RadicalResult("h_brown_mccoy", space, "maximal-H-ideal", certs)


def brown_mccoy_by_enumeration(M: HModuleAlgebra, cap: int = DEFAULT_ENUM_CAP) -> Subspace:
    """Oracle route over a prime field: intersect every H-ideal whose
    quotient is H-simple with unit."""
    F, n = M.field, M.R.dim
    space = full_subspace(F, n)
    for I in enumerate_h_ideals(M, cap=cap):
        if I.is_full():
            continue
        Q = quotient_action(M, I)
        simple, _ = is_h_simple(Q, cap=cap)
        if simple is True and find_unit(Q.R) is not None:
            space = intersect(space, I)
    return space


# ---------------------------------------------------------------------------
# the colon-ideal family and the locally nilpotent collapse


def _classical_radical(A: FiniteDimAlgebra, base: str, cap: int) -> Subspace:
    if base in ("baer", "jacobson", "locnil"):
        space, _ = nilradical(A, cap)
        return space
    if base == "brownmccoy":
        maxima = _maximal_ideals(A, cap)
        if not maxima:
            return full_subspace(A.field, A.dim)
        space = maxima[0]
        for P in maxima[1:]:
            space = intersect(space, P)
        return space
    raise ValueError(f"unknown base radical {base!r}")


def fisher_radical(M: HModuleAlgebra, base: str, cap: int = DEFAULT_ENUM_CAP) -> RadicalResult:
    """(r(R) : H) for a classical radical r; the largest H-ideal inside it."""
    r = _classical_radical(M.R, base, cap)
    space = colon_ideal(M, r)
    return RadicalResult(f"fisher:{base}", space, "colon ideal", [])


def h_locally_nilpotent_radical(M: HModuleAlgebra, cap: int = DEFAULT_ENUM_CAP) -> RadicalResult:
    """In finite dimension the locally nilpotent radical collapses to the
    nilradical, so this is (nilradical : H); asserted equal to N_1.
    """
    J, method = nilradical(M.R, cap)
    space = colon_ideal(M, J)
    chain, _ = baer_chain(M, cap)
    n1 = chain[1] if len(chain) > 1 else chain[0]
    if space != n1:
        raise TheoremViolation("(J:H) differs from N_1 of the chain")
    return RadicalResult("h_locally_nilpotent", space, f"colon[{method}]", [])


# ---------------------------------------------------------------------------
# comparison report


def comparison_report(
    M: HModuleAlgebra, cap: int = DEFAULT_ENUM_CAP, seed: int = DEFAULT_SEED
) -> dict:
    """Compute every available radical, the smash-radical restriction, the
    containment matrix, and the theorem equality checks.  Unavailable
    entries carry the blocking precondition instead of being skipped.
    """
    entries: dict = {}

    def run(name, fn):
        try:
            res = fn()
            if isinstance(res, RadicalResult):
                entries[name] = {"status": "ok", "space": res.space, "method": res.method}
            else:
                entries[name] = {"status": "ok", "space": res, "method": ""}
        except Unsupported as exc:
            entries[name] = {"status": "unsupported", "reason": str(exc)}

    run("h_baer", lambda: h_baer_radical(M, cap))
    run("h_locally_nilpotent", lambda: h_locally_nilpotent_radical(M, cap))
    run("h_jacobson", lambda: h_jacobson_radical(M, cap))
    run("h_brown_mccoy", lambda: h_brown_mccoy_radical(M, cap, seed))
    for base in ("baer", "jacobson", "locnil", "brownmccoy"):
        run(f"fisher:{base}", lambda base=base: fisher_radical(M, base, cap))
    run("classical_nilradical", lambda: nilradical(M.R, cap)[0])
    run("smash_radical_restricted", lambda: smash_radical_restricted(M, cap))

    t = normalized_integral(M.H)
    if t is None:
        entries["gt"] = {"status": "unsupported", "reason": "no normalized left integral"}
    else:
        run("gt", lambda: gt_radical(M, t, cap))

    computed = {k: v["space"] for k, v in entries.items() if v["status"] == "ok"}
    names = sorted(computed)
    containments = {
        a: {b: is_subspace_of(computed[a], computed[b]) for b in names} for a in names
    }

    checks = {}
    chain_order = ["fisher:baer", "h_baer", "h_locally_nilpotent", "h_jacobson", "h_brown_mccoy"]
    ok = True
    for x, y in zip(chain_order, chain_order[1:]):
        if x in computed and y in computed:
            ok = ok and is_subspace_of(computed[x], computed[y])
    checks["containment_chain"] = "pass" if ok else "fail"
    if "gt" in computed and "h_brown_mccoy" in computed:
        checks["gt_equals_brown_mccoy"] = (
            "pass" if computed["gt"] == computed["h_brown_mccoy"] else "fail"
        )
    else:
        checks["gt_equals_brown_mccoy"] = "unavailable"
    chain, ntau = baer_chain(M, cap)
    checks["chain_stabilizes_at_one_step"] = "pass" if len(chain) <= 2 else "fail"
    for name, entry in entries.items():
        if entry["status"] == "ok":
            ok_inv, _ = is_h_ideal(M, entry["space"])
            if name in ("classical_nilradical",):
                continue
            checks[f"{name}_is_h_stable"] = "pass" if ok_inv else "fail"

    return {
        "entries": entries,
        "containments": containments,
        "checks": checks,
        "h_semiprime": ntau.is_zero(),
    }
