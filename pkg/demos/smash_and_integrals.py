"""Smash products and integrals, concretely.

Builds R # H for the C2 sign action on the dual numbers over F_5, verifies
the conjugation identity that embeds the action into inner conjugation,
and uses the normalized integral t = 3(1 + g) to compute the integral
radical, which agrees with the H-Brown-McCoy radical.
"""

from hopfrad import (
    check_conjugation_identity,
    fixture_by_name,
    normalized_integral,
    smash_product,
    validate_algebra,
)
from hopfrad.radicals import gt_radical, gt_subspace, h_brown_mccoy_radical

if __name__ == "__main__":
    M = fixture_by_name("e2-f5").M
    A = smash_product(M)
    print(f"R # H has dimension {A.dim}, unit {A.unit}")
    print(f"associativity: {'ok' if validate_algebra(A).ok else 'BROKEN'}")
    print(f"conjugation identity: {'ok' if check_conjugation_identity(M).ok else 'BROKEN'}")

    t = normalized_integral(M.H)
    print(f"\nnormalized left integral t = {t}  (that is 3 + 3g, eps(t) = 1)")
    for a in [(0, 1), (1, 0)]:
        G = gt_subspace(M, t, a)
        print(f"G_t({a}) has dimension {G.dim}, basis {G.basis}")

    gt = gt_radical(M, t)
    bm = h_brown_mccoy_radical(M)
    print(f"\nintegral radical:      {gt.space.basis}")
    print(f"H-Brown-McCoy radical: {bm.space.basis}")
    print("equal" if gt.space == bm.space else "DIFFERENT (bug!)")
