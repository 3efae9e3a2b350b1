from __future__ import annotations

from . import scalardict as sd
from .utils import accumulate, same_field

from typing import Any, Callable, Mapping, Tuple, TypeVar


__all__ = ["dot", "outer", "expand", "sum_by"]


T = TypeVar("T")
T1, T2 = TypeVar("T1"), TypeVar("T2")


def dot(d1: sd.ScalarDict[T], d2: sd.ScalarDict[T]) -> Any:
    """Return Σ d1[k]·d2[k] as a field element."""
    same_field(d1, d2)
    if len(d2) < len(d1):
        d1, d2 = d2, d1
    result = d1.field.zero
    for k, v in d1.items():
        if k in d2:
            result = result + v * d2[k]
    return result


def outer(
    d1: sd.ScalarDict[Tuple], d2: sd.ScalarDict[Tuple]
) -> sd.ScalarDict[Tuple]:
    """
    Tensor product of d1 and d2.

    Keys are concatenated: (i,) and (j, k) give (i, j, k).
    """
    same_field(d1, d2)
    return sd.ScalarDict._new(
        d1.field,
        {k1 + k2: v1 * v2 for k1, v1 in d1.items() for k2, v2 in d2.items()})


def expand(
    d: sd.ScalarDict[T1], f: Callable[[T1], Mapping[T2, Any]]
) -> sd.ScalarDict[T2]:
    """
    Linearly extend f from basis keys to d.

    Returns Σ_k d[k]·f(k), where each f(k) is a ScalarDict (or a zero-free
    mapping of field elements).
    """
    zero = d.field.zero
    m: dict = {}
    for k, v in d.items():
        accumulate(m, ((k2, v * w) for k2, w in f(k).items()), zero)
    return sd.ScalarDict._new(d.field, m)


def sum_by(
    d: sd.ScalarDict[T1], *, kf: Callable[[T1], T2]
) -> sd.ScalarDict[T2]:
    """
    Sum the values of d grouped by kf.

    The result maps each k_out to sum(d[k] for k in d if kf(k) == k_out).
    """
    return sd.ScalarDict._new(
        d.field, accumulate({}, ((kf(k), v) for k, v in d.items()),
        d.field.zero))
