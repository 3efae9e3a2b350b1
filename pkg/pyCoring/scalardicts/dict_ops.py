from __future__ import annotations

from . import scalardict as sd

from typing import Callable, TypeVar


__all__ = ["transform_keys"]


T1, T2 = TypeVar("T1"), TypeVar("T2")


def transform_keys(
    d: sd.ScalarDict[T1], *, kf: Callable[[T1], T2]
) -> sd.ScalarDict[T2]:
    """
    Rename the keys of d according to kf.

    Raises ValueError if kf identifies two keys of d; use sum_by to add
    colliding values instead.
    """
    m: dict = {}
    for k, v in d.items():
        k2 = kf(k)
        if k2 in m:
            raise ValueError(f"Key function maps two keys to {k2!r}")
        m[k2] = v
    return sd.ScalarDict._new(d.field, m)
