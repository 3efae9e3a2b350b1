"""Finite-dimensional coalgebras by structure constants."""


from __future__ import annotations

__all__ = ["Coalgebra", "validate_coalgebra", "coopposite", "direct_sum"]

import logging
from dataclasses import dataclass
from typing import Any, Dict, Mapping, Optional, Sequence, Tuple

from ..base import Field, ShapeError, PreconditionError, ValidationReport
from ..scalardicts import ScalarDict, LinearMap
from .. import dev


@dataclass(frozen=True, eq=True)
class Coalgebra:
    """
    A coalgebra given by structure constants.

    Δ(e_i) = Σ d[i][j][k]·e_j⊗e_k is stored as a LinearMap from (i,) to
    2-tensor keys (j, k); row-major flattening j·n+k is used only for
    serialization. The counit is optional (non-counital coalgebras are
    first-class).

    :param field: Ground field.
    :param dim: Dimension n.
    :param delta: Comultiplication.
    :param epsilon: Counit values ε(e_i) keyed by (i,), or None.
    :param labels: Basis labels, for reporting only.
    :param name: Display name.
    """

    field: Field
    dim: int
    delta: LinearMap
    epsilon: Optional[ScalarDict] = None
    labels: Tuple[str, ...] = ()
    name: str = ""

    def __post_init__(self) -> None:
        if self.dim < 0:
            raise ShapeError(f"Negative dimension {self.dim}")
        if not self.labels:
            object.__setattr__(
                self, "labels", tuple(f"e{i}" for i in range(self.dim)))
        elif len(self.labels) != self.dim:
            raise ShapeError(
                f"Expected {self.dim} basis labels, got {len(self.labels)}")
        if self.delta.field != self.field:
            raise ShapeError("Comultiplication lies over another field")
        for key, img in self.delta.items():
            if len(key) != 1 or not 0 <= key[0] < self.dim:
                raise ShapeError(f"Comultiplication defined at bad key {key!r}")
            for k in img:
                if len(k) != 2 or not all(0 <= i < self.dim for i in k):
                    raise ShapeError(f"Δ(e{key[0]}) has bad tensor key {k!r}")
        if self.epsilon is not None:
            if any(len(k) != 1 or not 0 <= k[0] < self.dim for k in self.epsilon):
                raise ShapeError("Counit defined at bad key")
            object.__setattr__(self, "epsilon", self.epsilon.copy().protect())

    @classmethod
    def from_constants(
        cls,
        field: Field,
        dim: int,
        constants: Mapping[Tuple[int, int, int], Any],
        epsilon: Optional[Sequence[Any]] = None,
        labels: Sequence[str] = (),
        name: str = ""
    ) -> "Coalgebra":
        """
        Build a coalgebra from constants {(i, j, k): d[i][j][k]}.

        :param epsilon: Optional list of counit values ε(e_0), ..., ε(e_{n-1}).
        """
        images: Dict[Tuple[int], ScalarDict] = {}
        for (i, j, k), v in constants.items():
            images.setdefault((i,), ScalarDict(field)).accumulate((j, k), v)
        eps = None
        if epsilon is not None:
            if len(epsilon) != dim:
                raise ShapeError(f"Counit of length {len(epsilon)} for dim {dim}")
            eps = ScalarDict(field, {(i,): v for i, v in enumerate(epsilon)})
        return cls(field, dim, LinearMap(field, images), eps, tuple(labels), name)

    def constant(self, i: int, j: int, k: int) -> Any:
        """Structure constant d[i][j][k]."""
        return self.delta.image((i,))[(j, k)]

    def constants(self) -> Dict[Tuple[int, int, int], Any]:
        """Nonzero structure constants keyed by (i, j, k)."""
        return {(i,) + jk: v for (i,), img in sorted(self.delta.items())
            for jk, v in sorted(img.items(), key=dev.first)}

    def keys(self):
        return dev.keys1(self.dim)

    def vector(self, i: int) -> ScalarDict:
        """Basis vector e_i."""
        return ScalarDict.unit(self.field, (i,))

    @property
    def counital(self) -> bool:
        return self.epsilon is not None

    @property
    def counit(self) -> LinearMap:
        """ε as a map to scalars (key ())."""
        return LinearMap.functional(self.require_counit())

    def require_counit(self) -> ScalarDict:
        if self.epsilon is None:
            raise PreconditionError(f"Coalgebra '{self.name}' has no counit")
        return self.epsilon


def validate_coalgebra(c: Coalgebra) -> ValidationReport:
    """
    Check coassociativity and, when ε is present, both counit identities.

    Each check records the first basis index at which it fails.
    """
    logging.debug(f"Validating coalgebra '{c.name}' of dim {c.dim}.")
    report = ValidationReport(c.name)
    delta = c.delta
    counit = c.counit if c.counital else None
    for i in range(c.dim):
        d = delta.image((i,))
        report.record(
            "coassociative", delta.on_slot(d, 0) == delta.on_slot(d, 1), i)
        if counit is not None:
            e = c.vector(i)
            report.record("counit-left", counit.on_slot(d, 0) == e, i)
            report.record("counit-right", counit.on_slot(d, 1) == e, i)
    if c.dim == 0:
        report.record("coassociative", True)
    return report


def _cop_name(name: str) -> str:
    return name[:-4] if name.endswith("^cop") else f"{name}^cop"


def coopposite(c: Coalgebra) -> Coalgebra:
    """The co-opposite coalgebra with Δ^tw = τ∘Δ."""
    delta = LinearMap(c.field, {k: dev.swap(img) for k, img in c.delta.items()})
    return Coalgebra(
        c.field, c.dim, delta, c.epsilon, c.labels, _cop_name(c.name))


def direct_sum(*cs: Coalgebra) -> Coalgebra:
    """
    Direct sum with block-diagonal Δ and concatenated ε.

    The sum is counital iff every summand is.
    """
    if not cs:
        raise ShapeError("Direct sum of no coalgebras")
    field = cs[0].field
    if any(c.field != field for c in cs):
        raise ShapeError("Summands lie over different fields")
    images, labels, offset = {}, [], 0
    eps: Optional[ScalarDict] = ScalarDict(field)
    for t, c in enumerate(cs):
        for (i,), img in c.delta.items():
            images[(i + offset,)] = dev.shift(dev.shift(img, offset, 0), offset, 1)
        if eps is not None and c.epsilon is not None:
            eps = eps + dev.shift(c.epsilon, offset)
        else:
            eps = None
        labels.extend(f"{t}.{label}" for label in c.labels)
        offset += c.dim
    name = " + ".join(c.name for c in cs)
    return Coalgebra(field, offset, LinearMap(field, images), eps, tuple(labels), name)
