"""Dorroh unitalization of corings, and comodules over corings."""


from __future__ import annotations

__all__ = ["DorrohCoring", "ComoduleOverCoring", "Bicomodule", "build_dorroh",
    "check_coideal_embedding", "check_unit_embedding", "check_projection",
    "regular_comodule",
    "validate_comodule", "validate_bicomodule", "lift_right_comodule",
    "lift_left_comodule", "lift_bicomodule", "forget_comodule"]

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Optional, Tuple

from ..base import (Side, ShapeError, PreconditionError, ValidationReport,
    check_side)
from ..linalg import KeyedQuotient, rank, dense
from ..scalardicts import ScalarDict, LinearMap
from .algebras import Bimodule
from .corings import CoringOverA, check_coring_morphism
from .tensors import TensorOverA, TripleTensor
from .. import dev


@dataclass(frozen=True)
class DorrohCoring:
    """
    The counital coring Ĉ = 𝒞 × A built from a coring 𝒞 over a unital A.

    Carrier keys (i,) with i < N are the basis of 𝒞 and (N + a,) the basis
    of A, where N = dim 𝒞.

    :param base: The original coring 𝒞.
    :param coring: Ĉ itself.
    :param counit: ε(c, a) = a.
    :param embedding: ι(a) = (0, a).
    :param projection: π(c, a) = c.
    """

    base: CoringOverA
    coring: CoringOverA
    counit: LinearMap
    embedding: LinearMap
    projection: LinearMap

    @property
    def offset(self) -> int:
        return self.base.dim

    @property
    def group_like(self) -> ScalarDict:
        """(0, 1_A)."""
        return dev.shift(self.base.algebra.require_unit(), self.offset)


def _dorroh_carrier(cr: CoringOverA) -> Bimodule:
    mod, alg = cr.carrier, cr.algebra
    N, field = cr.dim, cr.field
    left: Dict[Tuple[int, int], ScalarDict] = {}
    right: Dict[Tuple[int, int], ScalarDict] = {}
    for (a, i), img in mod.left.items(): # type: ignore
        left[(a, i)] = img
    for (i, a), img in mod.right.items(): # type: ignore
        right[(i, a)] = img
    for (a, b), img in alg.mult.items():
        shifted = dev.shift(img, N)
        left[(a, N + b)] = shifted
        right[(N + a, b)] = shifted
    labels = mod.labels + tuple(f"({label})" for label in alg.labels)
    return Bimodule(
        alg, N + alg.dim, LinearMap(field, left), LinearMap(field, right),
        labels)


def build_dorroh(cr: CoringOverA) -> DorrohCoring:
    """
    Build Ĉ with the bimodule structure a·(c, b)·a′ = (a·c·a′, a·b·a′) and

        Δ(c, a) = Σ(c₁, 0)⊗(c₂, 0) + (0, 1)⊗(c, a) + (c, a)⊗(0, 1) − (0, a)⊗(0, 1),
        ε(c, a) = a.

    Raises PreconditionError if A is not unital.
    """
    alg = cr.algebra
    unit = alg.require_unit()
    field, N = cr.field, cr.dim
    logging.debug(f"Building Dorroh coring of '{cr.name}'.")
    carrier = _dorroh_carrier(cr)
    u = dev.shift(unit, N)
    images: Dict[Tuple[int], ScalarDict] = {}
    for i in range(N):
        ei = carrier.vector(i)
        images[(i,)] = cr.delta.image((i,)) + u.outer(ei) + ei.outer(u)
    for a in range(alg.dim):
        images[(N + a,)] = u.outer(carrier.vector(N + a))
    coring = CoringOverA(
        carrier, LinearMap(field, images), f"{cr.name}^")
    counit = LinearMap(field, {(N + a,): {(a,): 1} for a in range(alg.dim)})
    embedding = LinearMap(field, {(a,): {(N + a,): 1} for a in range(alg.dim)})
    projection = LinearMap.identity(field, dev.keys1(N))
    return DorrohCoring(cr, coring, counit, embedding, projection)


def check_coideal_embedding(d: DorrohCoring) -> ValidationReport:
    """
    Check that K = 𝒞 × {0} is a coideal of Ĉ.

    ε(K) = 0 and Δ(K) ⊆ K⊗_A Ĉ + Ĉ⊗_A K, the latter decided inside the
    quotient Ĉ⊗_A Ĉ.
    """
    cr, N = d.coring, d.offset
    report = ValidationReport(f"coideal of {cr.name}")
    for i in range(N):
        report.record("counit-vanishes", not d.counit.image((i,)), i)
    tensor = cr.tensor
    span = [tensor.chi(ScalarDict.unit(cr.field, key))
        for key in tensor.keys if key[0] < N or key[1] < N]
    sub = KeyedQuotient(cr.field, tensor.complement, span)
    for i in range(N):
        report.record("comultiplication", sub.contains(cr.comultiply(cr.vector(i))), i)
    report.record("counit-vanishes", True)
    report.record("comultiplication", True)
    return report


def check_unit_embedding(d: DorrohCoring) -> ValidationReport:
    """Check that ι: A → Ĉ is injective, (A,A)-bilinear and split by ε."""
    alg, mod = d.base.algebra, d.coring.carrier
    report = ValidationReport(f"embedding into {d.coring.name}")
    iota = d.embedding
    rows = iota.matrix(alg.keys(), mod.keys())
    report.record("injective", rank(dense(rows, alg.field)) == alg.dim)
    for a in range(alg.dim):
        ea = alg.vector(a)
        report.record("split", d.counit(iota(ea)) == ea, a)
        for b in range(alg.dim):
            eb = alg.vector(b)
            ab = iota(alg.product(ea, eb))
            report.record("left-linear", mod.act_left(ea, iota(eb)) == ab, (a, b))
            report.record("right-linear", mod.act_right(iota(ea), eb) == ab, (a, b))
    return report


def check_projection(d: DorrohCoring) -> ValidationReport:
    """(π : id_A) as a coring morphism Ĉ → 𝒞."""
    alg = d.base.algebra
    return check_coring_morphism(
        d.projection, LinearMap.identity(alg.field, alg.keys()), d.coring,
        d.base)


### Comodules ###

class ComoduleOverCoring:
    """
    A one-sided comodule over a coring.

    A right comodule M has a right A-module structure and a coaction lifted
    into M⊗𝒞 with keys (m, c); a left comodule N has a left A-module
    structure and a coaction into 𝒞⊗N with keys (c, n).

    :param coring: The coring 𝒞.
    :param side: 'right' or 'left'.
    :param module: The module M.
    :param coaction: Lift of the coaction.
    """

    def __init__(
        self,
        coring: CoringOverA,
        side: Side,
        module: Bimodule,
        coaction: LinearMap
    ) -> None:
        check_side(side)
        if module.algebra.dim != coring.algebra.dim:
            raise ShapeError("Comodule lies over another algebra")
        self.coring = coring
        self.side = side
        self.module = module
        self.coaction = coaction

    @cached_property
    def tensor(self) -> TensorOverA:
        if self.side == "right":
            return TensorOverA(self.module, self.coring.carrier)
        return TensorOverA(self.coring.carrier, self.module)

    @cached_property
    def triple(self) -> TripleTensor:
        if self.side == "right":
            return TripleTensor(self.tensor, self.coring.tensor)
        return TripleTensor(self.coring.tensor, self.tensor)

    @property
    def dim(self) -> int:
        return self.module.dim

    def coact(self, v: ScalarDict) -> ScalarDict:
        return self.tensor.chi(self.coaction(v))


@dataclass(frozen=True)
class Bicomodule:
    """
    A module with a left coaction of 𝒟 and a right coaction of 𝒞.

    Both corings lie over the same algebra.
    """

    left: ComoduleOverCoring
    right: ComoduleOverCoring

    def __post_init__(self) -> None:
        if self.left.side != "left" or self.right.side != "right":
            raise ShapeError("Bicomodule needs a left and a right coaction")
        if self.left.module is not self.right.module:
            raise ShapeError("Coactions act on different modules")

    @property
    def module(self) -> Bimodule:
        return self.left.module


def regular_comodule(cr: CoringOverA, side: Side) -> ComoduleOverCoring:
    """𝒞 over itself via Δ."""
    return ComoduleOverCoring(cr, side, cr.carrier, cr.delta)


def validate_comodule(
    m: ComoduleOverCoring, counit: Optional[LinearMap] = None
) -> ValidationReport:
    """
    Check A-linearity and coassociativity of the coaction.

    Counitality is checked when a counit of the coring is supplied.
    """
    cr, mod, rho = m.coring, m.module, m.coaction
    report = ValidationReport(f"{m.side} comodule over {cr.name}")
    chi = m.tensor.chi
    for x in range(m.dim):
        ex, rx = mod.vector(x), rho.image((x,))
        for a in range(cr.algebra.dim):
            ea = cr.algebra.vector(a)
            if m.side == "right":
                lhs = chi(rho(mod.act_right(ex, ea)))
                rhs = chi(cr.carrier.right.on_slot(rx.outer(ea), 1, 2)) # type: ignore
            else:
                lhs = chi(rho(mod.act_left(ea, ex)))
                rhs = chi(cr.carrier.left.on_slot(ea.outer(rx), 0, 2)) # type: ignore
            report.record("linear", lhs == rhs, (x, a))
        r = m.coact(ex)
        if m.side == "right":
            lhs = m.triple.project(rho.on_slot(r, 0))
            rhs = m.triple.project(cr.delta.on_slot(r, 1))
        else:
            lhs = m.triple.project(rho.on_slot(r, 1))
            rhs = m.triple.project(cr.delta.on_slot(r, 0))
        report.record("coassociative", lhs == rhs, x)
        if counit is not None:
            if m.side == "right":
                back = mod.right.on_slot(counit.on_slot(rx, 1), 0, 2) # type: ignore
            else:
                back = mod.left.on_slot(counit.on_slot(rx, 0), 0, 2) # type: ignore
            report.record("counital", back == ex, x)
    report.record("linear", True)
    report.record("coassociative", True)
    if counit is not None:
        report.record("counital", True)
    return report


def validate_bicomodule(
    b: Bicomodule,
    counits: Optional[Tuple[LinearMap, LinearMap]] = None
) -> ValidationReport:
    """
    Validate both coactions and their compatibility

        (ρ^𝒟⊗id)∘ρ^𝒞 = (id⊗ρ^𝒞)∘ρ^𝒟  in 𝒟⊗_A M⊗_A 𝒞.

    :param counits: (ε_𝒟, ε_𝒞), to check counitality of both sides.
    """
    left_counit, right_counit = counits if counits is not None else (None, None)
    report = ValidationReport("bicomodule")
    report.merge(validate_comodule(b.left, left_counit), "left-")
    report.merge(validate_comodule(b.right, right_counit), "right-")
    triple = TripleTensor(b.left.tensor, b.right.tensor)
    rl, rr = b.left.coaction, b.right.coaction
    for x in range(b.module.dim):
        lhs = triple.project(rl.on_slot(b.right.coact(b.module.vector(x)), 0))
        rhs = triple.project(rr.on_slot(b.left.coact(b.module.vector(x)), 1))
        report.record("compatible", lhs == rhs, x)
    report.record("compatible", True)
    return report


def _require_coassociative(m: ComoduleOverCoring) -> None:
    report = validate_comodule(m)
    if not report.passed:
        check_name, witness = report.first_failure() # type: ignore
        raise PreconditionError(
            f"{m.side} comodule fails '{check_name}' at {witness}")


def lift_right_comodule(
    m: ComoduleOverCoring, d: DorrohCoring
) -> ComoduleOverCoring:
    """Lift a right 𝒞-comodule to Ĉ: ρ̂(m) = ρ(m) + m⊗(0, 1)."""
    if m.side != "right":
        raise ShapeError("Expected a right comodule")
    _require_coassociative(m)
    u, field = d.group_like, d.coring.field
    images = {(x,): m.coaction.image((x,)) + m.module.vector(x).outer(u)
        for x in range(m.dim)}
    return ComoduleOverCoring(d.coring, "right", m.module, LinearMap(field, images))


def lift_left_comodule(
    m: ComoduleOverCoring, d: DorrohCoring
) -> ComoduleOverCoring:
    """Lift a left 𝒞-comodule to Ĉ: ρ̂(n) = ρ(n) + (0, 1)⊗n."""
    if m.side != "left":
        raise ShapeError("Expected a left comodule")
    _require_coassociative(m)
    u, field = d.group_like, d.coring.field
    images = {(x,): m.coaction.image((x,)) + u.outer(m.module.vector(x))
        for x in range(m.dim)}
    return ComoduleOverCoring(d.coring, "left", m.module, LinearMap(field, images))


def forget_comodule(m: ComoduleOverCoring, d: DorrohCoring) -> LinearMap:
    """
    Recover the 𝒞-coaction from a lifted one.

    Drops the (0, 1) summand and projects the coring slot Ĉ → 𝒞.
    """
    u = d.group_like
    slot = 1 if m.side == "right" else 0
    images = {}
    for x in range(m.dim):
        ex = m.module.vector(x)
        term = ex.outer(u) if m.side == "right" else u.outer(ex)
        images[(x,)] = d.projection.on_slot(m.coaction.image((x,)) - term, slot)
    return LinearMap(m.coring.field, images)


def lift_bicomodule(
    b: Bicomodule, left: DorrohCoring, right: DorrohCoring
) -> Bicomodule:
    """
    Lift a (𝒟, 𝒞)-bicomodule to a (𝒟̂, Ĉ)-bicomodule.

    Raises PreconditionError if the input coactions are not compatible.
    """
    report = validate_bicomodule(b)
    if not report.checks.get("compatible", True):
        raise PreconditionError(
            f"Coactions not compatible at {report.witnesses['compatible']}")
    return Bicomodule(
        lift_left_comodule(b.left, left), lift_right_comodule(b.right, right))
