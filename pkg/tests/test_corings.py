import pytest

from pyCoring.base import Field, QQ_FIELD, PreconditionError, ShapeError
from pyCoring.scalardicts import ScalarDict, LinearMap
from pyCoring.components import (Coalgebra, CoringOverA, TensorOverA,
    tensor_over_algebra, coopposite, induce_coring, induce_cop_coring,
    coalgebra_as_coring, ground_counit, validate_coring, verify_counit,
    solve_counit, dual_ring_product, check_unity, check_coring_morphism, eta_morphism, solve_coring_cointegral,
    solve_cointegral, build_actions, build_corpus, trivial, grouplike, matrix,
    dualnumbers)


F5 = Field.prime(5)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_grouplike_tensor_over_dual(n):
    mod = build_actions(grouplike(n))
    tensor = tensor_over_algebra(mod, mod)
    assert tensor.ambient_dim == n * n
    assert tensor.dim == n


def test_tensor_needs_both_sides():
    mod = build_actions(grouplike(2))
    one_sided = type(mod)(mod.algebra, mod.dim, mod.left, None)
    with pytest.raises(ShapeError):
        TensorOverA(one_sided, mod)


@pytest.mark.parametrize("name", ["trivial", "grouplike(2)", "grouplike(3)",
    "matrix(2)", "dualnumbers"])
def test_induced_corings_validate(name):
    cr = induce_coring(build_corpus(name), check=False)
    report = validate_coring(cr)
    assert report.passed, report.first_failure()
    assert "degenerate-zero" not in report.flags


@pytest.mark.slow
def test_induced_matrix3_coring_validates():
    assert validate_coring(induce_coring(matrix(3), check=False)).passed


def test_induce_coring_requires_counit():
    bare = Coalgebra.from_constants(QQ_FIELD, 1, {(0, 0, 0): 1})
    with pytest.raises(PreconditionError):
        induce_coring(bare)


def test_zero_comultiplication_is_flagged():
    base = coalgebra_as_coring(grouplike(2))
    cr = CoringOverA(base.carrier, LinearMap.zero(QQ_FIELD), "zero")
    report = validate_coring(cr)
    assert report.passed
    assert "degenerate-zero" in report.flags


@pytest.mark.parametrize("c", [trivial(), grouplike(2), grouplike(3)],
    ids=lambda c: c.name)
@pytest.mark.parametrize("side", ["left", "right"])
def test_counit_solver_feasible(c, side):
    cr = induce_coring(c)
    report = solve_counit(cr, side)
    assert report.feasible
    eps = report.certificate.map
    assert verify_counit(cr, side, eps).passed
    for sample in report.certificate.samples():
        assert verify_counit(cr, side, sample).passed


@pytest.mark.parametrize("field", [QQ_FIELD, F5], ids=str)
@pytest.mark.parametrize("side", ["left", "right"])
def test_dualnumbers_have_no_counit(side, field):
    report = solve_counit(induce_coring(dualnumbers(field)), side)
    assert not report.feasible
    assert report.certificate is None
    assert report.augmented_rank == report.rank + 1


def test_grouplike_dual_basis_is_left_counit():
    c = grouplike(2)
    cr = induce_coring(c)
    eps = LinearMap(QQ_FIELD, {(i,): {(i,): 1} for i in range(2)})
    assert verify_counit(cr, "left", eps).passed
    wrong = LinearMap(QQ_FIELD, {(i,): {(1 - i,): 1} for i in range(2)})
    assert not verify_counit(cr, "left", wrong).passed


def test_verify_counit_rejects_bad_side():
    with pytest.raises(ValueError):
        verify_counit(induce_coring(trivial()), "up", LinearMap.zero(QQ_FIELD))


@pytest.mark.parametrize("c", [grouplike(2), dualnumbers(), matrix(2)],
    ids=lambda c: c.name)
def test_coalgebra_as_coring(c):
    cr = coalgebra_as_coring(c)
    assert cr.algebra.dim == 1
    assert cr.tensor.dim == c.dim ** 2
    eps = ground_counit(c)
    report = validate_coring(cr, eps)
    assert report.passed, report.first_failure()
    assert report.checks["left-counit-identity"]


@pytest.mark.parametrize("c", [grouplike(2), dualnumbers()], ids=lambda c: c.name)
def test_ground_counit_is_unity_of_dual_rings(c):
    cr = coalgebra_as_coring(c)
    eps = ground_counit(c)
    left = dual_ring_product(cr, "left")
    assert len(left.maps) == c.dim
    assert check_unity(left, eps, "left").passed
    right = dual_ring_product(cr, "right")
    assert check_unity(right, eps, "right").passed
    both = dual_ring_product(cr, "two-sided")
    assert both.contains(eps)


def test_two_sided_product_on_matrix_coalgebra():
    cr = coalgebra_as_coring(matrix(2))
    ring = dual_ring_product(cr, "two-sided")
    e11 = LinearMap(QQ_FIELD, {(0,): {(0,): 1}})
    e12 = LinearMap(QQ_FIELD, {(1,): {(0,): 1}})
    # (f∗g)(c) = Σ g(c₁)f(c₂)
    assert ring.product(e11, e12) == LinearMap.zero(QQ_FIELD)
    assert ring.product(e12, e11) == e12
    left = dual_ring_product(cr, "left")
    assert left.product(e12, e11) == ring.product(e12, e11)


def test_one_sided_counits_are_unities_of_dual_rings():
    cr = induce_coring(grouplike(2))
    eps_r = solve_counit(cr, "right").certificate.map
    assert check_unity(dual_ring_product(cr, "left"), eps_r, "left").passed
    eps_l = solve_counit(cr, "left").certificate.map
    assert check_unity(dual_ring_product(cr, "right"), eps_l, "right").passed


@pytest.mark.parametrize("c", [trivial(), grouplike(2), grouplike(3), matrix(2),
    dualnumbers(), matrix(2, F5), dualnumbers(F5)],
    ids=lambda c: f"{c.name}-{c.field}")
@pytest.mark.parametrize("side", ["left", "right"])
def test_counit_sides_swap_under_coopposite(c, side):
    other = "right" if side == "left" else "left"
    assert (solve_counit(induce_coring(c), side).feasible
        == solve_counit(induce_cop_coring(c), other).feasible)


def test_dual_ring_rejects_bad_variant():
    with pytest.raises(ValueError):
        dual_ring_product(coalgebra_as_coring(trivial()), "sideways")


@pytest.mark.parametrize("c", [
        pytest.param(trivial(), id="trivial"),
        pytest.param(grouplike(2), id="grouplike(2)"),
        pytest.param(grouplike(3), id="grouplike(3)"),
        pytest.param(matrix(2), id="matrix(2)"),
        pytest.param(dualnumbers(), id="dualnumbers"),
        pytest.param(matrix(3), id="matrix(3)", marks=pytest.mark.slow),
    ])
def test_eta_is_coring_morphism(c):
    theta, gamma = eta_morphism(c)
    report = check_coring_morphism(
        theta, gamma, coalgebra_as_coring(c), induce_coring(c))
    assert report.passed, report.first_failure()


def test_zero_gamma_is_not_algebra_morphism():
    c = grouplike(2)
    theta, _ = eta_morphism(c)
    report = check_coring_morphism(
        theta, LinearMap.zero(QQ_FIELD), coalgebra_as_coring(c), induce_coring(c))
    assert not report.checks["algebra-morphism"]
    assert report.witnesses["algebra-morphism"] == "unit"


def test_morphism_shape_errors():
    c = trivial()
    src, tgt = coalgebra_as_coring(c), induce_coring(c)
    bad = LinearMap(QQ_FIELD, {(4,): {(0,): 1}})
    with pytest.raises(ShapeError):
        check_coring_morphism(bad, eta_morphism(c)[1], src, tgt)


@pytest.mark.parametrize("c", [trivial(), grouplike(2), dualnumbers(), matrix(2)],
    ids=lambda c: c.name)
def test_coring_cointegral_matches_coalgebra_cointegral(c):
    report = solve_coring_cointegral(coalgebra_as_coring(c), ground_counit(c))
    assert report.feasible == solve_cointegral(c).feasible


def test_cop_coring():
    c = matrix(2)
    cr = induce_cop_coring(c)
    assert cr.name == "(matrix(2)^cop:matrix(2)*)"
    assert validate_coring(cr).passed
    assert solve_counit(cr, "left").feasible


def test_comultiply_lands_in_complement():
    cr = induce_coring(grouplike(2))
    for i in range(2):
        v = cr.comultiply(cr.vector(i))
        assert set(v) <= set(cr.tensor.complement)
        assert v


def test_eta_morphism_into_cop_coring():
    c = matrix(2)
    theta, gamma = eta_morphism(coopposite(c))
    report = check_coring_morphism(theta, gamma,
        coalgebra_as_coring(coopposite(c)), induce_cop_coring(c))
    assert report.passed, report.first_failure()


def test_counital_morphism():
    c = grouplike(2)
    cr = coalgebra_as_coring(c)
    theta = LinearMap.identity(QQ_FIELD, c.keys())
    gamma = LinearMap.identity(QQ_FIELD, [(0,)])
    eps = ground_counit(c)
    report = check_coring_morphism(theta, gamma, cr, cr, (eps, eps))
    assert report.passed, report.first_failure()
    assert report.checks["counital"]
    report = check_coring_morphism(
        theta, gamma, cr, cr, (eps, LinearMap.zero(QQ_FIELD)))
    assert not report.checks["counital"]
    assert report.witnesses["counital"] == 0
