"""Deterministic exact matrix algebra on sympy DomainMatrix."""


from __future__ import annotations

__all__ = ["DenseMatrix", "AffineSolutionSet", "dense", "rows_of", "rref",
    "rank", "mat_vec", "solve_affine", "quotient_basis", "echelon"]

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from ..base.fields import Field
from ..base.errors import ShapeError


DenseMatrix = DomainMatrix
Row = Dict[int, Any]


def dense(rows: Sequence[Sequence[Any]], field: Field, cols: Optional[int] = None) -> DomainMatrix:
    """Build a matrix over field from nested rows of convertible scalars."""
    ncols = len(rows[0]) if rows else (cols or 0)
    if cols is not None and rows and ncols != cols:
        raise ShapeError(f"Expected {cols} columns, got {ncols}")
    if any(len(r) != ncols for r in rows):
        raise ShapeError("Ragged rows")
    conv = field.convert
    return DomainMatrix(
        [[conv(x) for x in r] for r in rows], (len(rows), ncols), field.domain)


def _row_dicts(m: DomainMatrix) -> List[Row]:
    sdm = m.to_sparse().rep
    return [dict(sdm.get(i, {})) for i in range(m.shape[0])]


def rows_of(m: DomainMatrix) -> List[List[Any]]:
    """Dense row-major entries of m."""
    nrows, ncols = m.shape
    zero = m.domain.zero
    out = [[zero] * ncols for _ in range(nrows)]
    for i, row in enumerate(_row_dicts(m)):
        for j, x in row.items():
            out[i][j] = x
    return out


def echelon(rows: Sequence[Row], ncols: int, domain: Any) -> Tuple[List[Row], List[int]]:
    """
    Reduced row echelon form of sparse rows.

    Returns the nonzero rows of the RREF, top to bottom, and the strictly
    increasing pivot columns. The RREF is unique, so the result does not
    depend on how the elimination is scheduled.
    """
    zero = domain.zero
    packed = {}
    for r in rows:
        r = {j: x for j, x in r.items() if x != zero}
        if r:
            if any(not 0 <= j < ncols for j in r):
                raise ShapeError(f"Row index outside 0..{ncols - 1}")
            packed[len(packed)] = r
    if not packed:
        return [], []
    m = DomainMatrix(packed, (len(packed), ncols), domain)
    reduced, pivots = m.rref()
    return _row_dicts(reduced)[:len(pivots)], list(pivots)


def rref(m: DomainMatrix) -> Tuple[DomainMatrix, List[int]]:
    """
    Reduced row echelon form of m and its pivot columns.

    Zero rows are moved to the bottom.
    """
    nrows, ncols = m.shape
    rows, pivots = echelon(_row_dicts(m), ncols, m.domain)
    packed = {i: r for i, r in enumerate(rows)}
    return DomainMatrix(packed, (nrows, ncols), m.domain).to_dense(), pivots


def rank(m: DomainMatrix) -> int:
    return len(echelon(_row_dicts(m), m.shape[1], m.domain)[1])


def mat_vec(m: DomainMatrix, x: Sequence[Any]) -> List[Any]:
    """Return m·x."""
    if len(x) != m.shape[1]:
        raise ShapeError(f"Vector of length {len(x)} for {m.shape[1]} columns")
    zero = m.domain.zero
    out = []
    for row in _row_dicts(m):
        acc = zero
        for j, a in row.items():
            acc = acc + a * x[j]
        out.append(acc)
    return out


@dataclass(frozen=True)
class AffineSolutionSet:
    """
    Exact solution set of a·x = b.

    :param feasible: Whether a solution exists.
    :param particular: A solution (free coordinates zero), if feasible.
    :param nullspace_basis: Basis of the kernel of a, one vector per free
        column, with 1 at that column and 0 at the other free columns.
    :param rank: Rank of a.
    :param augmented_rank: Rank of [a|b].
    """

    feasible: bool
    particular: Optional[Tuple[Any, ...]]
    nullspace_basis: Tuple[Tuple[Any, ...], ...]
    rank: int
    augmented_rank: int

    @property
    def dimension(self) -> int:
        return len(self.nullspace_basis)


def _solve_rows(rows: List[Row], ncols: int, domain: Any):
    # rows carry the right-hand side in column ncols
    reduced, pivots = echelon(rows, ncols + 1, domain)
    if pivots and pivots[-1] == ncols:
        return reduced, pivots[:-1], False
    return reduced, pivots, True


def solve_affine(a: DomainMatrix, b: Sequence[Any]) -> AffineSolutionSet:
    """Solve a·x = b exactly."""
    nrows, ncols = a.shape
    if len(b) != nrows:
        raise ShapeError(f"Right-hand side of length {len(b)} for {nrows} rows")
    K = a.domain
    zero, one = K.zero, K.one
    rows = _row_dicts(a)
    for i, x in enumerate(b):
        x = K.convert(x)
        if x != zero:
            rows[i][ncols] = x
    reduced, pivots, feasible = _solve_rows(rows, ncols, K)
    if not feasible:
        return AffineSolutionSet(False, None, (), len(pivots), len(pivots) + 1)
    particular = [zero] * ncols
    for r, p in enumerate(pivots):
        particular[p] = reduced[r].get(ncols, zero)
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = [zero] * ncols
        v[f] = one
        for r, p in enumerate(pivots):
            c = reduced[r].get(f)
            if c is not None:
                v[p] = -c
        basis.append(tuple(v))
    return AffineSolutionSet(
        True, tuple(particular), tuple(basis), len(pivots), len(pivots))


def projection_images(
    reduced: List[Row], pivots: List[int], ambient_dim: int, domain: Any
) -> Tuple[List[int], List[Row]]:
    """
    Complement columns and the image of each ambient coordinate.

    Images are sparse rows indexed by position in the complement list.
    """
    pivot_row = {p: r for r, p in enumerate(pivots)}
    complement = [t for t in range(ambient_dim) if t not in pivot_row]
    position = {t: q for q, t in enumerate(complement)}
    images: List[Row] = []
    for t in range(ambient_dim):
        if t in position:
            images.append({position[t]: domain.one})
        else:
            row = reduced[pivot_row[t]]
            images.append({position[u]: -x for u, x in row.items() if u != t})
    return complement, images


def quotient_basis(
    ambient_dim: int, relations: Sequence[Sequence[Any]], field: Field
) -> Tuple[List[int], DomainMatrix]:
    """
    Quotient of the ambient coordinate space by the span of relations.

    Returns the complement (non-pivot) coordinates and the projection from
    ambient coordinates onto them. The projection annihilates every relation
    and restricts to the identity on the complement coordinates.
    """
    K = field.domain
    rows = []
    for rel in relations:
        if len(rel) != ambient_dim:
            raise ShapeError(f"Relation of length {len(rel)} in ambient {ambient_dim}")
        rows.append({j: field.convert(x) for j, x in enumerate(rel)})
    reduced, pivots = echelon(rows, ambient_dim, K)
    complement, images = projection_images(reduced, pivots, ambient_dim, K)
    cols: Dict[int, Row] = {}
    for t, img in enumerate(images):
        for q, x in img.items():
            cols.setdefault(q, {})[t] = x
    projection = DomainMatrix(cols, (len(complement), ambient_dim), K).to_dense()
    return complement, projection
