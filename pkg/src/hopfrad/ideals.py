"""H-ideal predicates and constructions: generated H-ideals, products and
nilpotency, the two-sided annihilator, H-simplicity, and exhaustive H-ideal
enumeration over small prime fields (the brute-force oracle).
"""

from __future__ import annotations

import random

from .algebra import FiniteDimAlgebra, multiply, vec_is_zero
from .action import HModuleAlgebra, act_image, h_basis
from .linalg import (
    DEFAULT_ENUM_CAP,
    Matrix,
    Subspace,
    contains,
    enumerate_subspaces,
    full_subspace,
    is_subspace_of,
    nullspace,
    span,
    subspace_sum,
    zero_subspace,
)

DEFAULT_SEED = 0xA1CEB


def is_h_ideal(M: HModuleAlgebra, S: Subspace):
    """True iff RS, SR and H.S all land in S; otherwise a violating witness."""
    R = M.R
    for v in S.basis:
        for i, b in enumerate(R.basis()):
            if not contains(S, multiply(R, b, v)):
                return False, f"e_{i} * v escapes S for v={v}"
            if not contains(S, multiply(R, v, b)):
                return False, f"v * e_{i} escapes S for v={v}"
        for i in range(M.H.dim):
            if not contains(S, M.act_basis(i, v)):
                return False, f"h_{i} . v escapes S for v={v}"
    return True, None


def subspace_product(A: FiniteDimAlgebra, S: Subspace, T: Subspace) -> Subspace:
    """span{ s t : s in basis(S), t in basis(T) }."""
    vecs = [multiply(A, s, t) for s in S.basis for t in T.basis]
    return span(A.field, vecs, A.dim)


def ideal_product(M: HModuleAlgebra, I: Subspace, J: Subspace) -> Subspace:
    return subspace_product(M.R, I, J)


def ideal_power(M: HModuleAlgebra, I: Subspace, n: int) -> Subspace:
    if n < 1:
        raise ValueError("power must be >= 1")
    out = I
    for _ in range(n - 1):
        out = subspace_product(M.R, out, I)
    return out


def nilpotency_index(M: HModuleAlgebra, I: Subspace):
    """(True, k) with I^k = 0 minimal, else (False, None).

    Stops after dim R + 1 steps: dimensions of the powers strictly decrease
    until they stabilize.
    """
    if I.is_zero():
        return True, 1
    cur = I
    for k in range(2, M.R.dim + 3):
        nxt = subspace_product(M.R, cur, I)
        if nxt.is_zero():
            return True, k
        if nxt == cur:
            return False, None
        cur = nxt
    return False, None


def h_ideal_generated(M: HModuleAlgebra, E: Subspace) -> Subspace:
    """The H-ideal generated by E: H.E + R(H.E) + (H.E)R + R(H.E)R."""
    R = M.R
    HE = act_image(M, h_basis(M), E) if not E.is_zero() else E
    full = full_subspace(M.field, R.dim)
    out = HE
    out = subspace_sum(out, subspace_product(R, full, HE))
    out = subspace_sum(out, subspace_product(R, HE, full))
    out = subspace_sum(out, subspace_product(R, subspace_product(R, full, HE), full))
    ok, witness = is_h_ideal(M, out)
    if not ok:
        raise AssertionError(f"generated set is not an H-ideal: {witness}")
    if not is_subspace_of(E, out):
        raise AssertionError("generated H-ideal does not contain the generators")
    return out


def h_annihilator_star(M: HModuleAlgebra, I: Subspace) -> Subspace:
    """I* = { a | (H.a) I = 0 = I (H.a) }, an H-ideal whenever I is one."""
    ok, witness = is_h_ideal(M, I)
    if not ok:
        raise ValueError(f"I* needs an H-ideal: {witness}")
    F, R, n = M.field, M.R, M.R.dim
    rows = []
    # conditions linear in a: for each basis h_i, y in basis(I), coordinate k:
    #   (h_i.a) y = 0 and y (h_i.a) = 0
    for i in range(M.H.dim):
        for y in I.basis:
            for k in range(n):
                rows.append(tuple(multiply(R, M.action[i][j], y)[k] for j in range(n)))
                rows.append(tuple(multiply(R, y, M.action[i][j])[k] for j in range(n)))
    if not rows:
        return full_subspace(F, n)
    result = nullspace(Matrix(F, len(rows), n, tuple(rows)))
    ok, witness = is_h_ideal(M, result)
    if not ok:
        raise AssertionError(f"I* failed to be an H-ideal: {witness}")
    return result


def enumerate_h_ideals(M: HModuleAlgebra, cap: int = DEFAULT_ENUM_CAP) -> list:
    """All H-ideals of R over a prime field, via full subspace enumeration."""
    out = []
    for S in enumerate_subspaces(M.R.dim, M.field, cap=cap):
        ok, _ = is_h_ideal(M, S)
        if ok:
            out.append(S)
    return out


def _sweep_vectors(M: HModuleAlgebra, seed: int, trials: int = 64):
    """Basis vectors, all {0, +-1} vectors, and seeded pseudorandom vectors."""
    import itertools

    F, n = M.field, M.R.dim
    vals = [F.zero(), F.one(), F.neg(F.one())]
    seen = set()
    for v in itertools.product(vals, repeat=n):
        if any(not F.is_zero(x) for x in v) and v not in seen:
            seen.add(v)
            yield v
    rng = random.Random(seed)
    for _ in range(trials):
        v = tuple(F.coerce(rng.randint(-9, 9)) for _ in range(n))
        if any(not F.is_zero(x) for x in v) and v not in seen:
            seen.add(v)
            yield v


def is_h_simple(M: HModuleAlgebra, cap: int = DEFAULT_ENUM_CAP, seed: int = DEFAULT_SEED):
    """H-simplicity: only H-ideals are 0 and R, and R^2 != 0.

    Over a prime field within cap the answer is exact.  Over the rationals a
    deterministic sweep of basis, {0,+-1} and seeded random vectors is used;
    generation is homogeneous in the vector, so for dim <= 2 the sweep is
    exhaustive up to scalar and the positive answer is certified.  Above that
    a clean sweep yields only "true-uncertified".
    Returns (verdict, detail) with verdict in {True, "true-uncertified", False}.
    """
    F, R, n = M.field, M.R, M.R.dim
    full = full_subspace(F, n)
    r2 = subspace_product(R, full, full)
    if r2.is_zero():
        return False, "R^2 = 0"
    if n == 0:
        return False, "R = 0"
    if F.is_prime_field and F.p**n <= cap:
        for I in enumerate_h_ideals(M, cap=cap):
            if not I.is_zero() and not I.is_full():
                return False, I
        return True, None
    for v in _sweep_vectors(M, seed):
        gen = h_ideal_generated(M, span(F, [v], n))
        if not gen.is_full():
            return False, gen
    if n <= 2:
        return True, None
    return "true-uncertified", "sweep exhausted without a witness"
