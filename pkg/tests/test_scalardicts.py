import pytest
from hypothesis import given, strategies as st

from pyCoring.base import Field, QQ_FIELD
from pyCoring.scalardicts import ScalarDict, LinearMap
from pyCoring import dev


F5 = Field.prime(5)

keys = st.sampled_from([(0,), (1,), (2,)])
vectors = st.dictionaries(keys, st.integers(-5, 5), max_size=3).map(
    lambda m: ScalarDict(QQ_FIELD, m))


def test_zeros_are_not_stored():
    d = ScalarDict(QQ_FIELD, {"a": 0, "b": 1})
    assert len(d) == 1 and "a" not in d
    assert d["a"] == QQ_FIELD.zero


def test_exact_rational_accumulation():
    d = ScalarDict(QQ_FIELD)
    d.accumulate("a", "1/2")
    d.accumulate("a", "1/2")
    assert d == ScalarDict(QQ_FIELD, {"a": 1})
    d.accumulate("a", -1)
    assert not d


def test_prime_field_wraps():
    assert not ScalarDict(F5, {"a": 3}) + ScalarDict(F5, {"a": 2})
    assert ScalarDict(F5, {"a": "1/2"}) == ScalarDict(F5, {"a": 3})


def test_protected_dicts_reject_mutation():
    d = ScalarDict(QQ_FIELD, {"a": 1}).protect()
    with pytest.raises(RuntimeError):
        d["a"] = 2
    copy = d.copy()
    copy["a"] = 2
    assert d["a"] == QQ_FIELD.one


def test_mixed_fields_rejected():
    with pytest.raises(ValueError):
        ScalarDict(QQ_FIELD, {"a": 1}) + ScalarDict(F5, {"a": 1})


@given(vectors, vectors)
def test_addition_and_subtraction_cancel(a, b):
    assert (a + b) - b == a
    assert not a + (-a)
    assert a + b == b + a


@given(vectors, vectors, st.integers(-4, 4))
def test_scaling_distributes(a, b, k):
    assert (a + b) * k == a * k + b * k
    assert k * a == a * k


@given(vectors, vectors)
def test_dot_is_symmetric(a, b):
    assert a.dot(b) == b.dot(a)


def test_outer_concatenates_keys():
    a = ScalarDict(QQ_FIELD, {(0,): 2})
    b = ScalarDict(QQ_FIELD, {(1, 2): 3, (0, 0): 1})
    assert a.outer(b) == ScalarDict(QQ_FIELD, {(0, 1, 2): 6, (0, 0, 0): 2})


def test_sum_by_and_transform_keys():
    d = ScalarDict(QQ_FIELD, {(0, 1): 1, (0, 2): 2, (1, 1): 3})
    assert d.sum_by(kf=dev.first) == ScalarDict(QQ_FIELD, {0: 3, 1: 3})
    assert dev.swap(d) == ScalarDict(QQ_FIELD, {(1, 0): 1, (2, 0): 2, (1, 1): 3})
    with pytest.raises(ValueError):
        d.transform_keys(kf=dev.first)


def test_expand_is_linear_extension():
    d = ScalarDict(QQ_FIELD, {"x": 2, "y": -1})
    images = {"x": ScalarDict(QQ_FIELD, {"u": 1}), "y": ScalarDict(QQ_FIELD, {"u": 1, "v": 1})}
    assert d.expand(images.__getitem__) == ScalarDict(QQ_FIELD, {"u": 1, "v": -1})


def test_curry_and_uncurry():
    d = ScalarDict(QQ_FIELD, {(0, 1): 1, (0, 2): 2, (1, 0): 3})
    curried = dev.curry(d, 1)
    assert set(curried) == {(0,), (1,)}
    images = [(k, ScalarDict(QQ_FIELD, m)) for k, m in curried.items()]
    assert dev.uncurry(images, QQ_FIELD) == d


def test_linear_map_on_slot():
    flip = LinearMap(QQ_FIELD, {(0,): {(1,): 1}, (1,): {(0,): 1}})
    v = ScalarDict.unit(QQ_FIELD, (0, 1))
    assert flip.on_slot(v, 0) == ScalarDict.unit(QQ_FIELD, (1, 1))
    assert flip.on_slot(v, 1) == ScalarDict.unit(QQ_FIELD, (0, 0))


def test_linear_map_on_two_slots():
    mult = LinearMap(QQ_FIELD, {(0, 1): {(5,): 2}})
    v = ScalarDict.unit(QQ_FIELD, (7, 0, 1, 8))
    assert mult.on_slot(v, 1, 2) == ScalarDict(QQ_FIELD, {(7, 5, 8): 2})


def test_linear_map_compose_and_identity():
    f = LinearMap(QQ_FIELD, {(0,): {(1,): 2}, (1,): {(0,): 1, (1,): 1}})
    ident = LinearMap.identity(QQ_FIELD, dev.keys1(2))
    assert f.compose(ident) == f
    assert ident.compose(f) == f
    ff = f.compose(f)
    assert ff.image((0,)) == ScalarDict(QQ_FIELD, {(0,): 2, (1,): 2})
    assert LinearMap.zero(QQ_FIELD)(ScalarDict.unit(QQ_FIELD, (0,))) == ScalarDict(QQ_FIELD)


def test_linear_map_matrix():
    f = LinearMap(QQ_FIELD, {(0,): {(1,): 2}, (1,): {(0,): 1}})
    rows = f.matrix(dev.keys1(2), dev.keys1(2))
    conv = QQ_FIELD.convert
    assert rows == [[conv(0), conv(1)], [conv(2), conv(0)]]


def test_functional_maps_to_scalars():
    eps = LinearMap.functional(ScalarDict(QQ_FIELD, {(0,): 1, (1,): 3}))
    v = ScalarDict(QQ_FIELD, {(0,): 2, (1,): 1})
    assert eps(v) == ScalarDict(QQ_FIELD, {(): 5})
