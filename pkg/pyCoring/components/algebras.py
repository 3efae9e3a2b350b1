"""Finite-dimensional algebras, dual algebras and bimodule actions."""


from __future__ import annotations

__all__ = ["FinDimAlgebra", "Bimodule", "validate_algebra", "validate_bimodule",
    "ground_algebra", "dual_convolution_algebra", "opposite_dual_algebra",
    "unit_map_eta", "build_actions", "algebra_generators"]

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from ..base import (Field, ShapeError, PreconditionError, AxiomError,
    ValidationReport)
from ..linalg import span_basis
from ..scalardicts import ScalarDict, LinearMap
from .coalgebras import Coalgebra
from .. import dev


@dataclass(frozen=True)
class FinDimAlgebra:
    """
    An associative algebra given by structure constants.

    e_i·e_j = Σ_k m[i][j][k]·e_k is stored as a LinearMap from (i, j) to
    (k,). The unit is optional.

    :param field: Ground field.
    :param dim: Dimension.
    :param mult: Multiplication.
    :param unit: Unit element keyed by (i,), or None for non-unital algebras.
    :param labels: Basis labels.
    :param name: Display name.
    """

    field: Field
    dim: int
    mult: LinearMap
    unit: Optional[ScalarDict] = None
    labels: Tuple[str, ...] = ()
    name: str = ""

    def __post_init__(self) -> None:
        if not self.labels:
            object.__setattr__(
                self, "labels", tuple(f"a{i}" for i in range(self.dim)))
        elif len(self.labels) != self.dim:
            raise ShapeError(f"Expected {self.dim} labels, got {len(self.labels)}")
        for key in self.mult.keys():
            if len(key) != 2 or not all(0 <= i < self.dim for i in key):
                raise ShapeError(f"Product defined at bad key {key!r}")

    def vector(self, i: int) -> ScalarDict:
        return ScalarDict.unit(self.field, (i,))

    def product(self, x: ScalarDict, y: ScalarDict) -> ScalarDict:
        return self.mult(x.outer(y))

    def constant(self, i: int, j: int, k: int):
        """Structure constant m[i][j][k]."""
        return self.mult.image((i, j))[(k,)]

    def keys(self):
        return dev.keys1(self.dim)

    def opposite(self, name: str = "") -> "FinDimAlgebra":
        mult = LinearMap(
            self.field, {(j, i): img for (i, j), img in self.mult.items()})
        return FinDimAlgebra(
            self.field, self.dim, mult, self.unit, self.labels,
            name or f"{self.name}^op")

    def require_unit(self) -> ScalarDict:
        if self.unit is None:
            raise PreconditionError(f"Algebra '{self.name}' is not unital")
        return self.unit


@dataclass(frozen=True)
class Bimodule:
    """
    A module over a FinDimAlgebra given by action tables.

    Left action a·x is a LinearMap from (a, i) to (k,); right action x·a from
    (i, a) to (k,). Either side may be absent for one-sided modules.

    :param algebra: Acting algebra.
    :param dim: Dimension of the module.
    :param left: Left action table, or None.
    :param right: Right action table, or None.
    :param labels: Basis labels.
    """

    algebra: FinDimAlgebra
    dim: int
    left: Optional[LinearMap] = None
    right: Optional[LinearMap] = None
    labels: Tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if not self.labels:
            object.__setattr__(
                self, "labels", tuple(f"m{i}" for i in range(self.dim)))
        m = self.algebra.dim
        for side, table in (("left", self.left), ("right", self.right)):
            if table is None:
                continue
            for key in table.keys():
                a, i = key if side == "left" else key[::-1]
                if not (0 <= a < m and 0 <= i < self.dim):
                    raise ShapeError(f"{side} action defined at bad key {key!r}")

    @property
    def field(self) -> Field:
        return self.algebra.field

    def vector(self, i: int) -> ScalarDict:
        return ScalarDict.unit(self.field, (i,))

    def keys(self):
        return dev.keys1(self.dim)

    def act_left(self, a: ScalarDict, x: ScalarDict) -> ScalarDict:
        """Return a·x."""
        return self._table("left")(a.outer(x))

    def act_right(self, x: ScalarDict, a: ScalarDict) -> ScalarDict:
        """Return x·a."""
        return self._table("right")(x.outer(a))

    def _table(self, side: str) -> LinearMap:
        table = self.left if side == "left" else self.right
        if table is None:
            raise PreconditionError(f"Module has no {side} action")
        return table


def validate_algebra(alg: FinDimAlgebra) -> ValidationReport:
    """Check associativity on basis triples and the two-sided unit law."""
    report = ValidationReport(alg.name)
    vs = [alg.vector(i) for i in range(alg.dim)]
    prods = {(i, j): alg.mult.image((i, j)) for i in range(alg.dim)
        for j in range(alg.dim)}
    for (i, j), ij in prods.items():
        for k in range(alg.dim):
            lhs = alg.product(ij, vs[k])
            rhs = alg.product(vs[i], prods[(j, k)])
            report.record("associative", lhs == rhs, (i, j, k))
    if alg.unit is not None:
        for i, v in enumerate(vs):
            report.record("unit-left", alg.product(alg.unit, v) == v, i)
            report.record("unit-right", alg.product(v, alg.unit) == v, i)
    report.record("associative", True)
    return report


def validate_bimodule(mod: Bimodule) -> ValidationReport:
    """
    Check the module laws on basis triples.

    (ab)·x = a·(b·x), x·(ab) = (x·a)·b and (a·x)·b = a·(x·b) for whichever
    actions are present; the unit, when present, acts as the identity.
    """
    alg = mod.algebra
    report = ValidationReport(f"module over {alg.name}")
    avs = [alg.vector(a) for a in range(alg.dim)]
    xs = [mod.vector(i) for i in range(mod.dim)]
    ab = {(a, b): alg.mult.image((a, b)) for a in range(alg.dim)
        for b in range(alg.dim)}
    L, R = mod.left, mod.right
    for x, xv in enumerate(xs):
        if L is not None:
            bx = [L.image((b, x)) for b in range(alg.dim)]
            for (a, b), v in ab.items():
                ok = mod.act_left(v, xv) == mod.act_left(avs[a], bx[b])
                report.record("left-associative", ok, (a, b, x))
        if R is not None:
            xa = [R.image((x, a)) for a in range(alg.dim)]
            for (a, b), v in ab.items():
                ok = mod.act_right(xv, v) == mod.act_right(xa[a], avs[b])
                report.record("right-associative", ok, (x, a, b))
        if L is not None and R is not None:
            for a in range(alg.dim):
                for b in range(alg.dim):
                    lhs = mod.act_right(L.image((a, x)), avs[b])
                    rhs = mod.act_left(avs[a], R.image((x, b)))
                    report.record("compatible", lhs == rhs, (a, x, b))
        if alg.unit is not None:
            if L is not None:
                report.record("unit-left", mod.act_left(alg.unit, xv) == xv, x)
            if R is not None:
                report.record("unit-right", mod.act_right(xv, alg.unit) == xv, x)
    return report


def ground_algebra(field: Field) -> FinDimAlgebra:
    """The ground field as a 1-dimensional algebra."""
    one = ScalarDict.unit(field, (0,))
    return FinDimAlgebra(
        field, 1, LinearMap(field, {(0, 0): one}), one, ("1",), str(field))


def dual_convolution_algebra(c: Coalgebra) -> FinDimAlgebra:
    """
    The dual algebra C* with (f∗g)(c) = Σ f(c₁)g(c₂).

    In dual bases, e^i∗e^j = Σ_k d[k][i][j]·e^k; the unit is ε when present.
    """
    images: Dict[Tuple[int, int], ScalarDict] = {}
    for (k,), img in c.delta.items():
        for ij, v in img.items():
            images.setdefault(ij, ScalarDict(c.field)).accumulate((k,), v)
    labels = tuple(f"{label}*" for label in c.labels)
    return FinDimAlgebra(
        c.field, c.dim, LinearMap(c.field, images), c.epsilon, labels,
        f"{c.name}*")


def opposite_dual_algebra(c: Coalgebra) -> FinDimAlgebra:
    """C• = (C*)^op, with (f•g)(c) = Σ g(c₁)f(c₂)."""
    return dual_convolution_algebra(c).opposite(f"{c.name}•")


def unit_map_eta(c: Coalgebra) -> LinearMap:
    """η: field → C•, 1 ↦ ε."""
    return LinearMap(c.field, {(0,): c.require_counit()})


def build_actions(c: Coalgebra, check: bool = True) -> Bimodule:
    """
    C as a (C•,C•)-bimodule via f⇀c = Σ f(c₁)c₂ and c↼g = Σ c₁g(c₂).

    e^a⇀e_i = Σ_k d[i][a][k]·e_k and e_i↼e^a = Σ_j d[i][j][a]·e_j.
    """
    field = c.field
    left: Dict[Tuple[int, int], ScalarDict] = {}
    right: Dict[Tuple[int, int], ScalarDict] = {}
    for (i,), img in c.delta.items():
        for (j, k), v in img.items():
            left.setdefault((j, i), ScalarDict(field)).accumulate((k,), v)
            right.setdefault((i, k), ScalarDict(field)).accumulate((j,), v)
    mod = Bimodule(
        opposite_dual_algebra(c), c.dim, LinearMap(field, left),
        LinearMap(field, right), c.labels)
    if check:
        report = validate_bimodule(mod)
        if not report.passed:
            check_name, witness = report.first_failure() # type: ignore
            raise AxiomError(
                f"Coalgebra '{c.name}' violates the bimodule law "
                f"'{check_name}' at {witness}")
    return mod


def algebra_generators(alg: FinDimAlgebra) -> List[ScalarDict]:
    """
    A generating set of alg, chosen greedily from the unit and basis.

    Every basis element is a linear combination of products of the returned
    elements, so balancing relations need only be imposed for them.
    """
    keys = alg.keys()
    gens: List[ScalarDict] = []
    span: List[ScalarDict] = []
    if alg.unit is not None and alg.unit:
        gens.append(alg.unit)
        span = _closure(alg, gens, keys)
    for i in range(alg.dim):
        if len(span) == alg.dim:
            break
        v = alg.vector(i)
        if len(span_basis(alg.field, keys, span + [v])) > len(span):
            gens.append(v)
            span = _closure(alg, gens, keys)
    logging.debug(
        f"Algebra '{alg.name}' of dim {alg.dim} generated by {len(gens)} elements.")
    return gens


def _closure(alg: FinDimAlgebra, gens: List[ScalarDict], keys) -> List[ScalarDict]:
    span = span_basis(alg.field, keys, gens)
    while True:
        grown = span_basis(alg.field, keys,
            span + [alg.product(x, g) for x in span for g in gens])
        if len(grown) == len(span):
            return span
        span = grown
