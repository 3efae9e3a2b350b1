"""Linear maps given by the images of basis keys."""


from __future__ import annotations

__all__ = ["LinearMap"]

from .scalardict import ScalarDict
from ..base.fields import Field

from typing import Any, Dict, Iterable, List, Mapping, Sequence, Tuple


Key = Tuple[int, ...]


class LinearMap:
    """
    A linear map between keyed spaces.

    Stores the image of each basis key as a protected ScalarDict; keys
    without a stored image map to zero. Maps act on ScalarDicts by linear
    extension, and on a single slot of a tensor via on_slot(), which is how
    composites such as (Δ⊗id)∘Δ are evaluated.

    :param field: Ground field.
    :param images: Basis key to image. Values may be ScalarDicts or plain
        mappings of convertible scalars.
    """

    __slots__ = ("_field", "_images")

    def __init__(self, field: Field, images: Mapping[Key, Any]) -> None:
        self._field = field
        self._images: Dict[Key, ScalarDict] = {}
        for k, img in images.items():
            if not isinstance(img, ScalarDict):
                img = ScalarDict(field, img)
            elif img.field != field:
                raise ValueError(f"Image of {k!r} lies over {img.field}")
            if img:
                self._images[k] = img.copy().protect()

    @classmethod
    def identity(cls, field: Field, keys: Iterable[Key]) -> "LinearMap":
        return cls(field, {k: ScalarDict.unit(field, k) for k in keys})

    @classmethod
    def zero(cls, field: Field) -> "LinearMap":
        return cls(field, {})

    @classmethod
    def functional(cls, values: ScalarDict) -> "LinearMap":
        """Read a vector of values as a map to scalars (key ())."""
        f = values.field
        return cls(f, {k: ScalarDict._new(f, {(): v}) for k, v in values.items()})

    @property
    def field(self) -> Field:
        return self._field

    def __repr__(self) -> str:
        return f"{type(self).__name__}({len(self._images)} images, field={self._field})"

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, LinearMap):
            return self._field == other._field and self._images == other._images
        return NotImplemented

    __hash__ = None # type: ignore

    def keys(self) -> List[Key]:
        """Keys with a nonzero image."""
        return list(self._images)

    def items(self) -> List[Tuple[Key, ScalarDict]]:
        return list(self._images.items())

    def image(self, key: Key) -> ScalarDict:
        try:
            return self._images[key]
        except KeyError:
            return ScalarDict._new(self._field)

    def __call__(self, v: ScalarDict) -> ScalarDict:
        return v.expand(self.image)

    def on_slot(self, v: ScalarDict, start: int, width: int = 1) -> ScalarDict:
        """
        Apply self to the slots start..start+width of the tensor v.

        A key (p..., m..., q...) of v, with m of the given width, contributes
        v[key]·(p..., k..., q...) for every key k of self.image(m).
        """
        stop = start + width
        field = self._field

        def f(key: Key) -> ScalarDict:
            img = self.image(key[start:stop])
            pre, post = key[:start], key[stop:]
            return ScalarDict._new(
                field, {pre + k + post: x for k, x in img.items()})

        return v.expand(f)

    def compose(self, other: "LinearMap") -> "LinearMap":
        """Return self∘other."""
        return LinearMap(
            self._field, {k: self(img) for k, img in other._images.items()})

    def matrix(self, domain: Sequence[Key], codomain: Sequence[Key]) -> List[List[Any]]:
        """Dense matrix of self: rows indexed by codomain, columns by domain."""
        zero = self._field.zero
        rows = [[zero] * len(domain) for _ in codomain]
        index = {k: r for r, k in enumerate(codomain)}
        for col, k in enumerate(domain):
            for k2, x in self.image(k).items():
                rows[index[k2]][col] = x
        return rows
