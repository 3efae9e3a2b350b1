from __future__ import annotations

from . import scalardict as sd

from typing import Any, Callable, Dict, Iterable, Tuple, TypeVar


T = TypeVar("T")


def coerce_scalar(
    f: Callable[["sd.ScalarDict[T]", Any], "sd.ScalarDict[T]"]
) -> Callable[["sd.ScalarDict[T]", Any], "sd.ScalarDict[T]"]:

    def wrapper(d: "sd.ScalarDict[T]", a: Any) -> "sd.ScalarDict[T]":
        if isinstance(a, sd.ScalarDict):
            return NotImplemented
        return f(d, d.field.convert(a))

    wrapper.__name__ = f.__name__
    wrapper.__qualname__ = f.__qualname__
    wrapper.__doc__ = f.__doc__

    return wrapper


def same_field(*ds: "sd.ScalarDict[Any]") -> None:
    fields = {d.field for d in ds}
    if len(fields) > 1:
        raise ValueError(f"Mixed fields in operands: {sorted(map(str, fields))}")


def accumulate(
    m: Dict[T, Any], items: Iterable[Tuple[T, Any]], zero: Any, sign: int = 1
) -> Dict[T, Any]:
    """Add (or subtract) items into m in place, dropping zeros."""
    for k, v in items:
        x = m.get(k, zero) + v if sign > 0 else m.get(k, zero) - v
        if x == zero:
            m.pop(k, None)
        else:
            m[k] = x
    return m
