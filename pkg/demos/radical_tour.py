"""A walking tour of the H-radicals on two small module algebras.

The first example is k[x]/(x^2) with the sign action of C2, where every
H-radical agrees with the classical nilradical span{x}.  The second swaps
in Sweedler's four-dimensional Hopf algebra: the derivation-like generator
y sends x to 1, no nonzero H-stable ideal survives, and every H-radical
collapses to zero even though x is still classically nilpotent.
"""

from hopfrad import (
    comparison_report,
    fixture_by_name,
    nilradical,
)


def describe(name):
    fx = fixture_by_name(name)
    M = fx.M
    print(f"== {name}: R of dim {M.R.dim}, H of dim {M.H.dim} over "
          f"{'Q' if M.field.is_rational else f'F_{M.field.p}'}")
    classical, method = nilradical(M.R)
    print(f"   classical nilradical ({method}): basis {classical.basis}")
    report = comparison_report(M)
    for radical in sorted(report["entries"]):
        entry = report["entries"][radical]
        if entry["status"] == "ok":
            rows = entry["space"].basis
            print(f"   {radical:24s} -> {list(rows) or '0'}")
        else:
            print(f"   {radical:24s} -> unsupported: {entry['reason']}")
    print(f"   H-semiprime: {report['h_semiprime']}")
    print(f"   checks: { {k: v for k, v in report['checks'].items() if v != 'pass'} or 'all pass' }")
    print()


if __name__ == "__main__":
    describe("e2")
    describe("e5")
    print("The contrast: both algebras share the same underlying R, but the")
    print("larger Hopf action in e5 leaves no H-stable nilpotent ideal, so")
    print("every H-radical vanishes while the classical one does not.")
