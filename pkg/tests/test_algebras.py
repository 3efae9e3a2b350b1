import pytest

from pyCoring.base import Field, QQ_FIELD, ShapeError, PreconditionError
from pyCoring.scalardicts import ScalarDict, LinearMap
from pyCoring.components import (FinDimAlgebra, Bimodule, validate_algebra,
    validate_bimodule, ground_algebra, dual_convolution_algebra,
    opposite_dual_algebra, unit_map_eta, build_actions, algebra_generators,
    build_corpus, trivial, grouplike, matrix, dualnumbers, CORPUS)


F5 = Field.prime(5)


def test_trivial_dual():
    alg = dual_convolution_algebra(trivial())
    assert alg.dim == 1
    assert alg.labels == ("e*",)
    e = alg.vector(0)
    assert alg.product(e, e) == e
    assert alg.unit == e


def test_grouplike_dual_is_idempotents():
    c = grouplike(2)
    alg = dual_convolution_algebra(c)
    for i in range(2):
        for j in range(2):
            expected = alg.vector(i) if i == j else ScalarDict(QQ_FIELD)
            assert alg.product(alg.vector(i), alg.vector(j)) == expected
    assert alg.unit == alg.vector(0) + alg.vector(1)


def test_matrix_dual_is_matrix_algebra():
    alg = dual_convolution_algebra(matrix(2))

    def e(i, j):
        return alg.vector(2 * i + j)

    for i in range(2):
        for j in range(2):
            for k in range(2):
                for l in range(2):
                    expected = e(i, l) if j == k else ScalarDict(QQ_FIELD)
                    assert alg.product(e(i, j), e(k, l)) == expected


@pytest.mark.parametrize("field", [QQ_FIELD, F5], ids=str)
@pytest.mark.parametrize("name", CORPUS)
def test_dual_algebras_are_unital_associative(name, field):
    c = build_corpus(name, field=field)
    for alg in (dual_convolution_algebra(c), opposite_dual_algebra(c)):
        assert validate_algebra(alg).passed


def test_opposite_dual_of_cocommutative_coalgebra():
    c = grouplike(3)
    assert opposite_dual_algebra(c).mult == dual_convolution_algebra(c).mult
    m = matrix(2)
    assert opposite_dual_algebra(m).mult != dual_convolution_algebra(m).mult


def test_unit_map_eta():
    assert unit_map_eta(trivial()).image((0,)) == ScalarDict.unit(QQ_FIELD, (0,))
    assert unit_map_eta(grouplike(2)).image((0,)) == \
        ScalarDict(QQ_FIELD, {(0,): 1, (1,): 1})
    assert unit_map_eta(matrix(2)).image((0,)) == \
        ScalarDict(QQ_FIELD, {(0,): 1, (3,): 1})


@pytest.mark.parametrize("name", CORPUS)
def test_actions_form_a_bimodule(name):
    mod = build_actions(build_corpus(name))
    report = validate_bimodule(mod)
    assert report.passed, report.first_failure()
    assert mod.algebra.name.endswith("•")


def test_dualnumber_actions():
    c = dualnumbers()
    mod = build_actions(c)
    alg = mod.algebra
    g, x = c.vector(0), c.vector(1)
    gs, xs = alg.vector(0), alg.vector(1)
    assert mod.act_left(xs, x) == g
    assert mod.act_left(gs, x) == x
    assert not mod.act_left(xs, g)
    assert mod.act_right(x, xs) == g
    assert mod.act_right(x, gs) == x


def test_ground_algebra():
    alg = ground_algebra(F5)
    assert alg.dim == 1 and alg.name == "Fp:5"
    assert validate_algebra(alg).passed
    assert algebra_generators(alg) == [alg.unit]


def test_generators_span_the_algebra():
    alg = opposite_dual_algebra(grouplike(2))
    gens = algebra_generators(alg)
    assert gens[0] == alg.unit
    assert len(gens) == 2


def test_non_associative_algebra_witness():
    one = QQ_FIELD.one
    mult = LinearMap(QQ_FIELD, {(0, 0): {(1,): one}, (1, 0): {(0,): one}})
    report = validate_algebra(FinDimAlgebra(QQ_FIELD, 2, mult))
    assert not report.passed
    assert report.witnesses["associative"] == (0, 0, 0)


def test_non_unital_algebra():
    alg = FinDimAlgebra(QQ_FIELD, 1, LinearMap.zero(QQ_FIELD))
    assert validate_algebra(alg).passed
    with pytest.raises(PreconditionError):
        alg.require_unit()


def test_shape_checks():
    with pytest.raises(ShapeError):
        FinDimAlgebra(QQ_FIELD, 1, LinearMap(QQ_FIELD, {(0, 2): {(0,): 1}}))
    with pytest.raises(ShapeError):
        Bimodule(ground_algebra(QQ_FIELD), 1,
            LinearMap(QQ_FIELD, {(0, 5): {(0,): 1}}))
    with pytest.raises(PreconditionError):
        Bimodule(ground_algebra(QQ_FIELD), 1).act_left(
            ScalarDict.unit(QQ_FIELD, (0,)), ScalarDict.unit(QQ_FIELD, (0,)))
