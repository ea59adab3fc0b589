import pytest

from hopfrad.action import (
    HModuleAlgebra,
    act_image,
    check_conjugation_identity,
    colon_ideal,
    embed_h,
    embed_r,
    h_basis,
    quotient_action,
    restrict_action,
    smash_product,
    smash_r_component,
    validate_action,
)
from hopfrad.algebra import multiply, validate_algebra
from hopfrad.fields import GF, QQ
from hopfrad.fixtures import fixture_by_name
from hopfrad.linalg import full_subspace, span, zero_subspace


def test_fixtures_validate_at_expected_level(corpus_fixture):
    rep = validate_action(corpus_fixture.M, level=corpus_fixture.expected_level)
    assert rep.ok, rep.failures


def test_broken_measuring_is_named():
    fx = fixture_by_name("e2")
    M = fx.M
    F = M.field
    # g.x = x instead of -x breaks nothing measuring-wise (it is the trivial
    # action), so corrupt g.1 instead: g no longer fixes the unit
    bad = ((M.action[0]), ((F.zero(), F.one()), M.action[1][1]))
    broken = HModuleAlgebra(M.R, M.H, bad)
    rep = validate_action(broken, level="unital")
    assert not rep.ok
    assert any("measuring" in msg or "unit" in msg for msg in rep.failures)


def test_module_axiom_violation_detected():
    fx = fixture_by_name("e4")
    M = fx.M
    F = M.field
    o, z = F.one(), F.zero()
    # p1 acting as identity breaks p1.p1 = p1 composed with itself
    bad = (M.action[0], ((o, z), (z, o)))
    broken = HModuleAlgebra(M.R, M.H, bad)
    rep = validate_action(broken, level="module")
    assert not rep.ok


def test_colon_ideal_known_values():
    e2 = fixture_by_name("e2").M
    x_span = span(QQ, [(0, 1)], 2)
    assert colon_ideal(e2, x_span) == x_span

    e5 = fixture_by_name("e5").M
    # y.x = 1 pushes x out of span{x}, so the largest H-stable ideal inside
    # it is zero
    assert colon_ideal(e5, x_span) == zero_subspace(QQ, 2)


def test_colon_ideal_rejects_non_ideal():
    e1 = fixture_by_name("e1").M
    not_ideal = span(QQ, [(1, 0, 0)], 3)  # span{e11} is not an ideal
    with pytest.raises(ValueError):
        colon_ideal(e1, not_ideal)


def test_act_image():
    e5 = fixture_by_name("e5").M
    L = h_basis(e5)
    img = act_image(e5, L, span(QQ, [(0, 1)], 2))
    assert img == full_subspace(QQ, 2)  # H4.x contains both x and 1


def test_quotient_action_shapes():
    e2 = fixture_by_name("e2").M
    Q = quotient_action(e2, span(QQ, [(0, 1)], 2))
    assert Q.R.dim == 1
    assert validate_action(Q, level="unital").ok


def test_restrict_action():
    e3 = fixture_by_name("e3").M
    diag = span(QQ, [(1, 0, 0, 0), (0, 0, 0, 1)], 4)
    S = restrict_action(e3, diag)
    assert S.R.dim == 2
    assert validate_action(S, level="module").ok
    from hopfrad.algebra import find_unit

    assert find_unit(S.R) == (1, 1)  # e11 + e22 in the restricted basis


def test_smash_dimensions_and_associativity(corpus_fixture):
    M = corpus_fixture.M
    A = smash_product(M)
    assert A.dim == M.R.dim * M.H.dim
    assert validate_algebra(A).ok


def test_conjugation_identity(corpus_fixture):
    rep = check_conjugation_identity(corpus_fixture.M)
    assert rep.ok, rep.failures


def test_embeddings_are_algebra_maps(corpus_fixture):
    M = corpus_fixture.M
    A = smash_product(M)
    for a in M.R.basis():
        for b in M.R.basis():
            lhs = multiply(A, embed_r(M, a), embed_r(M, b))
            assert lhs == embed_r(M, multiply(M.R, a, b))
    for h in M.H.algebra.basis():
        for g in M.H.algebra.basis():
            lhs = multiply(A, embed_h(M, h), embed_h(M, g))
            assert lhs == embed_h(M, multiply(M.H.algebra, h, g))


def test_smash_r_component():
    M = fixture_by_name("e2").M
    v = embed_r(M, (QQ.coerce(2), QQ.coerce(3)))
    assert smash_r_component(M, v) == (2, 3)
    assert smash_r_component(M, embed_h(M, (0, 1))) is None


def test_smash_unit():
    M = fixture_by_name("e5").M
    A = smash_product(M)
    assert A.unit == embed_r(M, M.R.unit)
    assert A.unit == embed_h(M, M.H.algebra.unit)
