"""Keyed quotients and linear systems over ScalarDict unknowns."""


from __future__ import annotations

__all__ = ["KeyedQuotient", "LinearSystem", "span_basis"]

import logging
from typing import Any, Dict, Iterable, List, Sequence, Tuple

from ..base.errors import ShapeError
from ..base.fields import Field
from ..base.reports import SolverReport
from ..scalardicts import ScalarDict, LinearMap
from .matrices import echelon, projection_images


Key = Tuple[Any, ...]


def _index_rows(
    vectors: Iterable[ScalarDict], index: Dict[Any, int]
) -> List[Dict[int, Any]]:
    rows = []
    for v in vectors:
        try:
            rows.append({index[k]: x for k, x in v.items()})
        except KeyError as e:
            raise ShapeError(f"Key {e.args[0]!r} outside the ambient space") from e
    return rows


def span_basis(
    field: Field, keys: Sequence[Any], vectors: Iterable[ScalarDict]
) -> List[ScalarDict]:
    """Echelon basis of the span of vectors, keyed like the inputs."""
    keys = list(keys)
    index = {k: t for t, k in enumerate(keys)}
    reduced, _ = echelon(_index_rows(vectors, index), len(keys), field.domain)
    return [ScalarDict._new(field, {keys[t]: x for t, x in r.items()})
        for r in reduced]


class KeyedQuotient:
    """
    Quotient of a keyed coordinate space by the span of relation vectors.

    The complement basis is the set of non-pivot keys of the echelonized
    relations; the class of a complement key k is keyed by k itself, so
    quotient coordinates stay readable as representatives.

    :param field: Ground field.
    :param keys: Ordered basis keys of the ambient space.
    :param relations: Vectors spanning the subspace to factor out.
    """

    def __init__(
        self, field: Field, keys: Sequence[Any], relations: Iterable[ScalarDict]
    ) -> None:
        self.field = field
        self.keys: Tuple[Any, ...] = tuple(keys)
        index = {k: t for t, k in enumerate(self.keys)}
        if len(index) != len(self.keys):
            raise ShapeError("Duplicate ambient keys")
        reduced, pivots = echelon(
            _index_rows(relations, index), len(self.keys), field.domain)
        complement, images = projection_images(
            reduced, pivots, len(self.keys), field.domain)
        self.complement: Tuple[Any, ...] = tuple(self.keys[t] for t in complement)
        self.relation_rows: Tuple[ScalarDict, ...] = tuple(
            ScalarDict._new(field, {self.keys[t]: x for t, x in r.items()})
            for r in reduced)
        self.projection = LinearMap(field, {
            self.keys[t]: {self.complement[q]: x for q, x in img.items()}
            for t, img in enumerate(images)})
        self._index = index

    @property
    def ambient_dim(self) -> int:
        return len(self.keys)

    @property
    def dim(self) -> int:
        return len(self.complement)

    def project(self, v: ScalarDict) -> ScalarDict:
        """Coordinates of the class of v in the complement basis."""
        for k in v:
            if k not in self._index:
                raise ShapeError(f"Key {k!r} outside the ambient space")
        return self.projection(v)

    def contains(self, v: ScalarDict) -> bool:
        """Whether v lies in the span of the relations."""
        return not self.project(v)


class LinearSystem:
    """
    An exact linear system over named unknowns.

    Equations are ScalarDicts mapping unknown keys to coefficients, each with
    a right-hand side. Equations are kept in insertion order, so solutions are
    reproducible.

    :param field: Ground field.
    :param unknowns: Ordered unknown keys.
    """

    def __init__(self, field: Field, unknowns: Sequence[Any]) -> None:
        self.field = field
        self.unknowns: Tuple[Any, ...] = tuple(unknowns)
        self._index = {k: t for t, k in enumerate(self.unknowns)}
        self._rows: List[Dict[int, Any]] = []

    def __len__(self) -> int:
        return len(self._rows)

    def add(self, eq: ScalarDict, rhs: Any = 0) -> None:
        """Add the equation Σ eq[k]·x_k = rhs."""
        rhs = self.field.convert(rhs)
        (row,) = _index_rows([eq], self._index)
        if rhs != self.field.zero:
            row[len(self.unknowns)] = rhs
        if row:
            self._rows.append(row)

    def solve(self) -> SolverReport[Any]:
        field, n = self.field, len(self.unknowns)
        logging.debug(f"Solving {len(self._rows)} equations in {n} unknowns.")
        reduced, pivots = echelon(self._rows, n + 1, field.domain)
        if pivots and pivots[-1] == n:
            rank = len(pivots) - 1
            return SolverReport(False, rank, rank + 1, n, len(self._rows))
        unknowns = self.unknowns
        particular = ScalarDict._new(field, {
            unknowns[p]: reduced[r][n]
            for r, p in enumerate(pivots) if n in reduced[r]})
        pivot_set = set(pivots)
        nullspace = []
        for f in range(n):
            if f in pivot_set:
                continue
            m = {unknowns[f]: field.one}
            for r, p in enumerate(pivots):
                c = reduced[r].get(f)
                if c is not None:
                    m[unknowns[p]] = -c
            nullspace.append(ScalarDict._new(field, m))
        return SolverReport(
            True, len(pivots), len(pivots), n, len(self._rows), particular,
            tuple(nullspace))
