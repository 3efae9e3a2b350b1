"""Tools for building new pyCoring constructions."""


from typing import Any, Dict, Iterable, List, Tuple

from .base.fields import Field
from .scalardicts import ScalarDict


__all__ = ["keys1", "keys2", "shift", "prefix", "swap", "first", "curry",
    "uncurry"]


Key = Tuple[int, ...]


def keys1(n: int) -> List[Key]:
    """Return the basis keys (0,), ..., (n-1,)."""
    return [(i,) for i in range(n)]


def keys2(n1: int, n2: int) -> List[Key]:
    """Return the keys of an n1·n2 tensor space in row-major order."""
    return [(j, k) for j in range(n1) for k in range(n2)]


def first(pair: Tuple[Any, ...]) -> Any:
    """Return the first element in a pair."""
    return pair[0]


def shift(v: ScalarDict, offset: int, slot: int = 0) -> ScalarDict:
    """Add offset to the index in the given slot of every key of v."""
    return v.transform_keys(
        kf=lambda k: k[:slot] + (k[slot] + offset,) + k[slot + 1:])


def prefix(key: Key, v: ScalarDict) -> ScalarDict:
    """Return e_key ⊗ v."""
    return v.transform_keys(kf=lambda k: key + k)


def swap(v: ScalarDict) -> ScalarDict:
    """Apply the flip τ(x⊗y) = y⊗x to a 2-tensor."""
    return v.transform_keys(kf=lambda k: (k[1], k[0]))


def curry(v: ScalarDict, n: int) -> Dict[Key, Dict[Key, Any]]:
    """Split each key of v after n slots: {k[:n]: {k[n:]: v[k]}}."""
    out: Dict[Key, Dict[Key, Any]] = {}
    for k, x in v.items():
        out.setdefault(k[:n], {})[k[n:]] = x
    return out


def uncurry(images: Iterable[Tuple[Key, ScalarDict]], field: Field) -> ScalarDict:
    """Inverse of curry: join source and image keys."""
    return ScalarDict._new(
        field, {k + k2: x for k, img in images for k2, x in img.items()})
