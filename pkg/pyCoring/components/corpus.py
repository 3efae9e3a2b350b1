"""Built-in example coalgebras."""


from __future__ import annotations

__all__ = ["CorpusEntry", "CORPUS", "trivial", "grouplike", "matrix",
    "dualnumbers", "build_corpus", "corpus", "random_direct_sum"]

import random
import re
from typing import Callable, Dict, List, NamedTuple, Optional, Sequence

from ..base import Field, QQ_FIELD, PreconditionError
from .coalgebras import Coalgebra, direct_sum


class CorpusEntry(NamedTuple):
    """
    A named member of the built-in corpus.

    :param name: Entry name, e.g. 'matrix(2)'.
    :param coalgebra: The coalgebra itself.
    """

    name: str
    coalgebra: Coalgebra


def trivial(field: Field = QQ_FIELD) -> Coalgebra:
    """Δ(e) = e⊗e, ε(e) = 1."""
    return Coalgebra.from_constants(
        field, 1, {(0, 0, 0): 1}, [1], ["e"], "trivial")


def grouplike(n: int, field: Field = QQ_FIELD) -> Coalgebra:
    """n group-like elements: Δ(g_i) = g_i⊗g_i, ε(g_i) = 1."""
    _check_size(n)
    return Coalgebra.from_constants(
        field, n, {(i, i, i): 1 for i in range(n)}, [1] * n,
        [f"g{i + 1}" for i in range(n)], f"grouplike({n})")


def matrix(n: int, field: Field = QQ_FIELD) -> Coalgebra:
    """Comatrix coalgebra: Δ(e_ij) = Σ_k e_ik⊗e_kj, ε(e_ij) = δ_ij."""
    _check_size(n)
    sep = "" if n < 10 else ","

    def idx(i: int, j: int) -> int:
        return i * n + j

    constants = {
        (idx(i, j), idx(i, k), idx(k, j)): 1
        for i in range(n) for j in range(n) for k in range(n)}
    eps = [1 if i == j else 0 for i in range(n) for j in range(n)]
    labels = [f"e{i + 1}{sep}{j + 1}" for i in range(n) for j in range(n)]
    return Coalgebra.from_constants(
        field, n * n, constants, eps, labels, f"matrix({n})")


def dualnumbers(field: Field = QQ_FIELD) -> Coalgebra:
    """Δ(g) = g⊗g, Δ(x) = g⊗x + x⊗g, ε = (1, 0)."""
    constants = {(0, 0, 0): 1, (1, 0, 1): 1, (1, 1, 0): 1}
    return Coalgebra.from_constants(
        field, 2, constants, [1, 0], ["g", "x"], "dualnumbers")


def _check_size(n: int) -> None:
    if n < 1:
        raise PreconditionError(f"Corpus size parameter must be >= 1, got {n}")


_BUILDERS: Dict[str, Callable[..., Coalgebra]] = {
    "trivial": trivial,
    "grouplike": grouplike,
    "matrix": matrix,
    "dualnumbers": dualnumbers,
}

_SIZED = {"grouplike", "matrix"}

_NAME = re.compile(r"^\s*(\w+)\s*(?:\(\s*(\d+)\s*\))?\s*$")

CORPUS = ("trivial", "grouplike(2)", "grouplike(3)", "matrix(2)", "matrix(3)",
    "dualnumbers")


def build_corpus(
    name: str, n: Optional[int] = None, field: Field = QQ_FIELD
) -> Coalgebra:
    """
    Build a corpus coalgebra by name.

    Sized entries take n either as a parameter or inline, as in 'matrix(2)'.
    """
    mo = _NAME.match(name)
    if mo is None or mo.group(1) not in _BUILDERS:
        raise ValueError(f"Unknown corpus entry '{name}'")
    base, inline = mo.groups()
    if inline is not None:
        if n is not None and n != int(inline):
            raise ValueError(f"Conflicting sizes for '{name}': n={n}")
        n = int(inline)
    if base in _SIZED:
        if n is None:
            raise PreconditionError(f"Corpus entry '{base}' needs a size n")
        return _BUILDERS[base](n, field)
    if n is not None:
        raise ValueError(f"Corpus entry '{base}' takes no size")
    return _BUILDERS[base](field)


def corpus(field: Field = QQ_FIELD, names: Sequence[str] = CORPUS) -> List[CorpusEntry]:
    return [CorpusEntry(name, build_corpus(name, field=field)) for name in names]


def random_direct_sum(
    rng: random.Random,
    field: Field = QQ_FIELD,
    pool: Sequence[str] = ("trivial", "grouplike(2)", "matrix(2)", "dualnumbers"),
    max_summands: int = 3
) -> Coalgebra:
    """Direct sum of 1..max_summands entries drawn from pool by rng."""
    k = rng.randint(1, max_summands)
    return direct_sum(*(build_corpus(rng.choice(pool), field=field) for _ in range(k)))
