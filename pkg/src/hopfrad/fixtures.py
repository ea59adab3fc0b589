"""Builtin corpus of Hopf module algebras used throughout the test suites.

* e1 : trivial Hopf k acting on upper-triangular 2x2 matrices
* e2 : kC2 acting on k[x]/(x^2) by g.x = -x
* e3 : kC2 acting trivially on M2(k)
* e4 : (kC2)* acting on k[x]/(x^2) through the Z2-grading, deg x = 1
* e5 : Sweedler's 4-dim Hopf algebra on k[x]/(x^2): g.x = -x, y.x = 1

plus prime-field twins used by the enumeration oracles.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import FieldSpec, GF, QQ
from .algebra import FiniteDimAlgebra, HopfAlgebraData, trivial_hopf
from .action import HModuleAlgebra


@dataclass(frozen=True)
class Fixture:
    name: str
    M: HModuleAlgebra
    expected_level: str  # validation level the fixture is expected to pass


def _zeros(field: FieldSpec, d: int):
    return [[[field.zero()] * d for _ in range(d)] for _ in range(d)]


def dual_numbers(field: FieldSpec) -> FiniteDimAlgebra:
    """k[x]/(x^2) with basis {1, x}."""
    one, zero = field.one(), field.zero()
    mult = [
        [(one, zero), (zero, one)],
        [(zero, one), (zero, zero)],
    ]
    return FiniteDimAlgebra.create(field, 2, mult, unit=(one, zero))


def upper_triangular_2x2(field: FieldSpec) -> FiniteDimAlgebra:
    """Basis {e11, e12, e22}."""
    z = field.zero()
    o = field.one()
    e11, e12, e22, zero = (o, z, z), (z, o, z), (z, z, o), (z, z, z)
    table = {
        (0, 0): e11, (0, 1): e12, (0, 2): zero,
        (1, 0): zero, (1, 1): zero, (1, 2): e12,
        (2, 0): zero, (2, 1): zero, (2, 2): e22,
    }
    mult = [[table[(i, j)] for j in range(3)] for i in range(3)]
    return FiniteDimAlgebra.create(field, 3, mult, unit=(o, z, o))


def full_matrix_2x2(field: FieldSpec) -> FiniteDimAlgebra:
    """Basis {e11, e12, e21, e22}."""
    z, o = field.zero(), field.one()
    idx = {(1, 1): 0, (1, 2): 1, (2, 1): 2, (2, 2): 3}
    pos = {v: k for k, v in idx.items()}
    mult = []
    for i in range(4):
        row = []
        a, b = pos[i]
        for j in range(4):
            c, d = pos[j]
            out = [z] * 4
            if b == c:
                out[idx[(a, d)]] = o
            row.append(tuple(out))
        mult.append(row)
    return FiniteDimAlgebra.create(field, 4, mult, unit=(o, z, z, o))


def group_algebra_c2(field: FieldSpec) -> HopfAlgebraData:
    """kC2 with basis {1, g}: grouplike g, S = id."""
    z, o = field.zero(), field.one()
    mult = [[(o, z), (z, o)], [(z, o), (o, z)]]
    A = FiniteDimAlgebra.create(field, 2, mult, unit=(o, z))
    comult = [
        [(o, z), (z, z)],   # Delta(1) = 1 (x) 1
        [(z, z), (z, o)],   # Delta(g) = g (x) g
    ]
    return HopfAlgebraData.create(A, comult, (o, o), [(o, z), (z, o)])


def dual_group_algebra_c2(field: FieldSpec) -> HopfAlgebraData:
    """(kC2)* with idempotent basis {p0, p1}; eps = evaluation at degree 0."""
    z, o = field.zero(), field.one()
    mult = [[(o, z), (z, z)], [(z, z), (z, o)]]
    A = FiniteDimAlgebra.create(field, 2, mult, unit=(o, o))
    comult = [
        [(o, z), (z, o)],   # Delta(p0) = p0 (x) p0 + p1 (x) p1
        [(z, o), (o, z)],   # Delta(p1) = p0 (x) p1 + p1 (x) p0
    ]
    return HopfAlgebraData.create(A, comult, (o, z), [(o, z), (z, o)])


def sweedler_h4(field: FieldSpec) -> HopfAlgebraData:
    """Sweedler's H4, basis {1, g, y, gy}; char != 2."""
    if field.characteristic == 2:
        raise ValueError("Sweedler's H4 needs characteristic != 2")
    z, o = field.zero(), field.one()
    n = field.neg(o)
    e = lambda i: tuple(o if j == i else z for j in range(4))
    zero4 = (z, z, z, z)
    neg = lambda v: tuple(field.neg(x) for x in v)
    mult = [
        [e(0), e(1), e(2), e(3)],          # 1 * _
        [e(1), e(0), e(3), e(2)],          # g*g=1, g*y=gy, g*gy=y
        [e(2), neg(e(3)), zero4, zero4],   # y*g=-gy, y*y=0, y*gy=0
        [e(3), neg(e(2)), zero4, zero4],   # gy*g=-y, gy*y=0, gy*gy=0
    ]
    A = FiniteDimAlgebra.create(field, 4, mult, unit=e(0))
    cm = _zeros(field, 4)
    cm[0][0][0] = o                     # Delta(1) = 1 x 1
    cm[1][1][1] = o                     # Delta(g) = g x g
    cm[2][2][0] = o                     # Delta(y) = y x 1 + g x y
    cm[2][1][2] = o
    cm[3][3][1] = o                     # Delta(gy) = gy x g + 1 x gy
    cm[3][0][3] = o
    counit = (o, o, z, z)
    antipode = [e(0), e(1), neg(e(3)), e(2)]   # S(y) = -gy, S(gy) = y
    return HopfAlgebraData.create(A, cm, counit, antipode)


def e1(field: FieldSpec = QQ) -> Fixture:
    H = trivial_hopf(field)
    R = upper_triangular_2x2(field)
    act = [[R.basis_vector(j) for j in range(R.dim)]]
    return Fixture("e1", HModuleAlgebra.create(R, H, act), "unital")


def e2(field: FieldSpec = QQ) -> Fixture:
    H = group_algebra_c2(field)
    R = dual_numbers(field)
    z, o = field.zero(), field.one()
    act = [
        [(o, z), (z, o)],                 # 1 acts as identity
        [(o, z), (z, field.neg(o))],      # g.1 = 1, g.x = -x
    ]
    return Fixture("e2", HModuleAlgebra.create(R, H, act), "unital")


def e3(field: FieldSpec = QQ) -> Fixture:
    H = group_algebra_c2(field)
    R = full_matrix_2x2(field)
    act = [[R.basis_vector(j) for j in range(4)] for _ in range(2)]
    return Fixture("e3", HModuleAlgebra.create(R, H, act), "unital")


def e4(field: FieldSpec = QQ) -> Fixture:
    H = dual_group_algebra_c2(field)
    R = dual_numbers(field)
    z, o = field.zero(), field.one()
    act = [
        [(o, z), (z, z)],   # p0 projects onto degree 0
        [(z, z), (z, o)],   # p1 projects onto degree 1
    ]
    return Fixture("e4", HModuleAlgebra.create(R, H, act), "unital")


def e5(field: FieldSpec = QQ) -> Fixture:
    H = sweedler_h4(field)
    R = dual_numbers(field)
    z, o = field.zero(), field.one()
    act = [
        [(o, z), (z, o)],               # 1
        [(o, z), (z, field.neg(o))],    # g.x = -x
        [(z, z), (o, z)],               # y.1 = 0, y.x = 1
        [(z, z), (o, z)],               # gy.x = g.(y.x) = 1
    ]
    return Fixture("e5", HModuleAlgebra.create(R, H, act), "unital")


def _twin(fn, field: FieldSpec, tag: str) -> Fixture:
    fx = fn(field)
    return Fixture(f"{fx.name}-{tag}", fx.M, fx.expected_level)


def builtin_fixtures() -> list:
    """The full corpus: rational fixtures first, then prime-field twins."""
    out = [e1(), e2(), e3(), e4(), e5()]
    out.append(_twin(e2, GF(2), "f2"))
    out.append(_twin(e3, GF(2), "f2"))
    for p in (3, 5):
        out.append(_twin(e2, GF(p), f"f{p}"))
        out.append(_twin(e4, GF(p), f"f{p}"))
        out.append(_twin(e5, GF(p), f"f{p}"))
    return out


def fixture_by_name(name: str) -> Fixture:
    for fx in builtin_fixtures():
        if fx.name == name:
            return fx
    raise KeyError(name)
