from __future__ import annotations

from . import scalardict as sd
from .utils import accumulate, coerce_scalar, same_field

from typing import Any, TypeVar


__all__ = ["neg", "add", "radd", "sub", "scale"]


T = TypeVar("T")


def neg(d: sd.ScalarDict[T]) -> sd.ScalarDict[T]:
    return sd.ScalarDict._new(d.field, {k: -v for k, v in d.items()})


def add(d1: sd.ScalarDict[T], d2: sd.ScalarDict[T]) -> sd.ScalarDict[T]:
    if not isinstance(d2, sd.ScalarDict):
        return NotImplemented
    same_field(d1, d2)
    return sd.ScalarDict._new(
        d1.field, accumulate(d1.m, d2.items(), d1.field.zero))


def radd(d: sd.ScalarDict[T], other: Any) -> sd.ScalarDict[T]:
    # Lets sum() start from 0
    if isinstance(other, int) and other == 0:
        return d.copy()
    return NotImplemented


def sub(d1: sd.ScalarDict[T], d2: sd.ScalarDict[T]) -> sd.ScalarDict[T]:
    if not isinstance(d2, sd.ScalarDict):
        return NotImplemented
    same_field(d1, d2)
    return sd.ScalarDict._new(
        d1.field, accumulate(d1.m, d2.items(), d1.field.zero, sign=-1))


@coerce_scalar
def scale(d: sd.ScalarDict[T], a: Any) -> sd.ScalarDict[T]:
    """Multiply every value of d by the scalar a."""
    if a == d.field.zero:
        return sd.ScalarDict._new(d.field)
    return sd.ScalarDict._new(d.field, {k: v * a for k, v in d.items()})
