"""Tensor products over a finite-dimensional algebra."""


from __future__ import annotations

__all__ = ["TensorOverA", "TripleTensor", "tensor_over_algebra"]

import logging
from typing import List, Optional, Sequence, Tuple

from ..base import ShapeError
from ..linalg import KeyedQuotient
from ..scalardicts import ScalarDict, LinearMap
from .algebras import Bimodule, algebra_generators
from .. import dev


class TensorOverA:
    """
    The balanced tensor product M⊗_A N as an explicit quotient.

    The ambient space has keys (j, k) for e_j⊗e_k; it is factored by the
    balancing vectors (e_j·a)⊗e_k − e_j⊗(a·e_k). Balancing is imposed for a
    generating set of A only, which spans the same subspace as imposing it
    for every basis element.

    :param right_module: M, carrying a right A-action.
    :param left_module: N, carrying a left A-action over the same algebra.
    :param generators: Elements of A to balance over; defaults to
        algebra_generators(A).
    """

    def __init__(
        self,
        right_module: Bimodule,
        left_module: Bimodule,
        generators: Optional[Sequence[ScalarDict]] = None
    ) -> None:
        alg = right_module.algebra
        if left_module.algebra.dim != alg.dim or left_module.field != alg.field:
            raise ShapeError(
                f"Modules over algebras of dim {alg.dim} and "
                f"{left_module.algebra.dim}")
        if right_module.right is None or left_module.left is None:
            raise ShapeError("Tensor over A needs a right and a left module")
        self.right_module = right_module
        self.left_module = left_module
        self.field = alg.field
        gens = algebra_generators(alg) if generators is None else list(generators)
        self.keys = dev.keys2(right_module.dim, left_module.dim)
        relations = [
            rel for f in gens
            for rel in self._balancing(f)]
        self.quotient = KeyedQuotient(self.field, self.keys, relations)
        logging.debug(
            f"Tensor over '{alg.name}': ambient {len(self.keys)}, "
            f"quotient {self.quotient.dim}.")

    def _balancing(self, f: ScalarDict) -> List[ScalarDict]:
        M, N = self.right_module, self.left_module
        out = []
        for j in range(M.dim):
            cf = M.act_right(M.vector(j), f)
            for k in range(N.dim):
                ek = N.vector(k)
                rel = cf.outer(ek) - M.vector(j).outer(N.act_left(f, ek))
                if rel:
                    out.append(rel)
        return out

    @property
    def ambient_dim(self) -> int:
        return len(self.keys)

    @property
    def dim(self) -> int:
        return self.quotient.dim

    @property
    def complement(self) -> Tuple[Tuple[int, int], ...]:
        return self.quotient.complement

    @property
    def relation_rows(self) -> Tuple[ScalarDict, ...]:
        return self.quotient.relation_rows

    @property
    def projection(self) -> LinearMap:
        return self.quotient.projection

    def chi(self, v: ScalarDict) -> ScalarDict:
        """Class of the ambient tensor v, keyed by complement representatives."""
        return self.quotient.project(v)

    def contains(self, v: ScalarDict) -> bool:
        return self.quotient.contains(v)

    def chi_map(self, f: LinearMap) -> LinearMap:
        """Return χ∘f."""
        return self.projection.compose(f)


class TripleTensor:
    """
    The iterated quotient X⊗_A Y⊗_A Z.

    Built from first = X⊗_A Y and second = Y⊗_A Z: ambient 3-tensors are
    reduced in their first two slots by the first quotient, and the result
    is factored by the images of e_x⊗r for every relation row r of the
    second.
    """

    def __init__(self, first: TensorOverA, second: TensorOverA) -> None:
        if first.left_module.dim != second.right_module.dim:
            raise ShapeError("Middle factors of a triple tensor differ")
        self.first = first
        self.second = second
        self.field = first.field
        nz = second.left_module.dim
        keys = [q + (z,) for q in first.complement for z in range(nz)]
        relations = []
        for x in range(first.right_module.dim):
            ex = ScalarDict.unit(self.field, (x,))
            for r in second.relation_rows:
                rel = self._reduce(ex.outer(r))
                if rel:
                    relations.append(rel)
        self.quotient = KeyedQuotient(self.field, keys, relations)

    def _reduce(self, v: ScalarDict) -> ScalarDict:
        return self.first.projection.on_slot(v, 0, 2)

    @property
    def dim(self) -> int:
        return self.quotient.dim

    def project(self, v: ScalarDict) -> ScalarDict:
        """Class of the ambient 3-tensor v."""
        return self.quotient.project(self._reduce(v))


def tensor_over_algebra(
    right_module: Bimodule, left_module: Bimodule
) -> TensorOverA:
    return TensorOverA(right_module, left_module)
