"""Validation and solver reports."""


from __future__ import annotations

__all__ = ["ValidationReport", "SolverReport"]

from dataclasses import dataclass, field, replace
from typing import (Any, Dict, Generic, Iterator, List, Optional, Tuple,
    TypeVar, TYPE_CHECKING)

if TYPE_CHECKING:
    from ..scalardicts import ScalarDict


T = TypeVar("T")


@dataclass
class ValidationReport:
    """
    Outcome of a battery of exact checks.

    Failed checks never raise; each check keeps the first witness at which it
    failed.

    :param subject: Name of the object under test.
    :param checks: Check name to pass/fail, in the order checks were run.
    :param witnesses: Check name to the first failing witness.
    :param flags: Noteworthy non-failures (e.g. 'degenerate-zero').
    """

    subject: str = ""
    checks: Dict[str, bool] = field(default_factory=dict)
    witnesses: Dict[str, Any] = field(default_factory=dict)
    flags: List[str] = field(default_factory=list)

    def record(self, check: str, ok: bool, witness: Any = None) -> bool:
        """Record the outcome of one instance of check; return ok."""
        self.checks[check] = self.checks.get(check, True) and bool(ok)
        if not ok and check not in self.witnesses:
            self.witnesses[check] = witness
        return bool(ok)

    def flag(self, name: str) -> None:
        if name not in self.flags:
            self.flags.append(name)

    def merge(self, other: "ValidationReport", prefix: str = "") -> None:
        """Fold the checks of other into self, optionally prefixing names."""
        for check, ok in other.checks.items():
            self.record(prefix + check, ok, other.witnesses.get(check))
        for name in other.flags:
            self.flag(prefix + name)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    @property
    def failed(self) -> List[str]:
        return [check for check, ok in self.checks.items() if not ok]

    def first_failure(self) -> Optional[Tuple[str, Any]]:
        """Return (check, witness) for the first failing check, if any."""
        for check in self.failed:
            return check, self.witnesses.get(check)
        return None


@dataclass(frozen=True)
class SolverReport(Generic[T]):
    """
    Outcome of an exact feasibility problem.

    Solutions are keyed by the unknowns of the originating system. When the
    system is feasible, every vector particular + Σ tᵢ·nullspace[i] solves it.

    :param feasible: Whether the system has a solution.
    :param rank: Rank of the coefficient matrix.
    :param augmented_rank: Rank of the augmented matrix; exceeds rank
        exactly when the system is infeasible.
    :param unknowns: Number of unknowns.
    :param equations: Number of assembled equations.
    :param particular: A particular solution, if feasible.
    :param nullspace: Basis of the homogeneous solution space.
    :param certificate: Domain object built from the particular solution.
    """

    feasible: bool
    rank: int
    augmented_rank: int
    unknowns: int
    equations: int
    particular: Optional["ScalarDict"] = None
    nullspace: Tuple["ScalarDict", ...] = ()
    certificate: Optional[T] = None

    @property
    def dimension(self) -> int:
        """Dimension of the affine solution set (-1 if empty)."""
        return len(self.nullspace) if self.feasible else -1

    def with_certificate(self, certificate: Any) -> "SolverReport[Any]":
        return replace(self, certificate=certificate)

    def samples(self) -> Iterator["ScalarDict"]:
        """Yield the particular solution and its shift by each basis vector."""
        if self.particular is None:
            return
        yield self.particular
        for v in self.nullspace:
            yield self.particular + v
