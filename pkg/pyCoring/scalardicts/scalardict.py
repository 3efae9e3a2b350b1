from __future__ import annotations

__all__ = ["ScalarDict"]

from . import basic_ops as bops
from . import dict_ops as dops
from . import vec_ops as vops
from ..base.fields import Field

from typing import Callable, Dict, Mapping, TypeVar, Iterator, Any, Optional
from typing_extensions import Concatenate, ParamSpec
from functools import wraps


P = ParamSpec("P")
R = TypeVar("R")
T = TypeVar("T")


def inplace(
    f: Callable[Concatenate["ScalarDict[T]", P], R]
) -> Callable[Concatenate["ScalarDict[T]", P], R]:

    @wraps(f)
    def wrapper(d: "ScalarDict[T]", *args: P.args, **kwargs: P.kwargs) -> R:
        if d.prot: raise RuntimeError("Cannot mutate protected ScalarDict.")
        return f(d, *args, **kwargs)

    return wrapper


class ScalarDict(Mapping[T, Any]):
    """
    An exact scalar dictionary.

    Represents a vector as a sparse mapping from basis keys to elements of an
    exact field, with support for linear algebra and op chaining. Keys absent
    from the map have value zero, and zeros are never stored, so two
    ScalarDicts are equal iff they represent the same vector.

    Tensor keys are tuples of basis indices: (i,) for a vector in C, (j, k)
    for C⊗C and () for a scalar.

    :param field: Ground field of the values.
    :param m: Key-value associations; values are converted into field.
    :param prot: Bool indicating whether the ScalarDict is protected. When
        True, in-place operations are disabled.
    """

    __slots__ = ("_m", "_field", "_prot")

    _m: Dict[T, Any]
    _field: Field
    _prot: bool

    def __init__(
        self,
        field: Field,
        m: Optional[Mapping[T, Any]] = None,
        prot: bool = False
    ) -> None:
        self._field = field
        self._m = {}
        if m:
            zero = field.zero
            for k, v in m.items():
                x = field.convert(v)
                if x != zero: self._m[k] = x
        self._prot = prot

    @classmethod
    def _new(
        cls,
        field: Field,
        m: Optional[Dict[T, Any]] = None,
        prot: bool = False
    ) -> "ScalarDict[T]":
        # Fast instance constructor (omits checks); m must be zero-free
        new = cls.__new__(cls)
        new._field = field
        new._m = m if m is not None else {}
        new._prot = prot
        return new

    @classmethod
    def unit(cls, field: Field, key: T) -> "ScalarDict[T]":
        """Return the basis vector at key."""
        return cls._new(field, {key: field.one})

    @property
    def field(self) -> Field:
        return self._field

    @property
    def m(self) -> Dict[T, Any]:
        return self._m.copy()

    @property
    def prot(self) -> bool:
        """Bool indicating whether self is protected."""
        return self._prot

    @prot.setter
    def prot(self, val: bool) -> None:
        self._prot = bool(val)

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, ScalarDict):
            return self._field == other._field and self._m == other._m
        else:
            return NotImplemented

    __hash__ = None # type: ignore

    def __repr__(self) -> str:
        fmt = self._field.format
        m = ", ".join(f"{k!r}: {fmt(v)}" for k, v in self._m.items())
        prot = ", prot=True" if self.prot else ""
        return f"{type(self).__name__}({{{m}}}, field={self._field}{prot})"

    def __len__(self) -> int:
        return len(self._m)

    def __iter__(self) -> Iterator[T]:
        yield from iter(self._m)

    def __contains__(self, key: Any) -> bool:
        return key in self._m

    def __getitem__(self, key: Any) -> Any:
        try:
            return self._m[key]
        except KeyError:
            return self._field.zero

    @inplace
    def __setitem__(self, key: Any, val: Any) -> None:
        x = self._field.convert(val)
        if x == self._field.zero:
            self._m.pop(key, None)
        else:
            self._m[key] = x

    @inplace
    def __delitem__(self, key: Any) -> None:
        del self._m[key]

    @inplace
    def clear(self) -> None:
        """Clear all key-value associations in self."""
        self._m = {}

    @inplace
    def accumulate(self, key: Any, val: Any) -> None:
        """Add val to the value at key."""
        self[key] = self[key] + self._field.convert(val)

    def copy(self: "ScalarDict[T]") -> "ScalarDict[T]":
        """Return an unprotected copy of self."""
        return type(self)._new(self._field, self._m.copy())

    def protect(self: "ScalarDict[T]") -> "ScalarDict[T]":
        """Protect self and return it."""
        self._prot = True
        return self

    def formatted(self) -> Dict[T, str]:
        """Return a plain dict of exact string values."""
        fmt = self._field.format
        return {k: fmt(v) for k, v in self._m.items()}

    ### Mathematical Dunder Methods ###

    __neg__ = bops.neg
    __add__ = bops.add
    __radd__ = bops.radd
    __sub__ = bops.sub
    __mul__ = bops.scale
    __rmul__ = bops.scale

    ### Mathematical Methods ###

    neg = bops.neg
    add = bops.add
    sub = bops.sub
    scale = bops.scale

    ### Dict Ops ###

    transform_keys = dops.transform_keys

    ### Vector Ops ###

    dot = vops.dot
    outer = vops.outer
    expand = vops.expand
    sum_by = vops.sum_by
