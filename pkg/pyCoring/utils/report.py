"""Command reports with exact, string-valued certificates."""


from __future__ import annotations

__all__ = ["Report", "jsonable", "matrix_strings", "solver_summary",
    "validation_witnesses"]

import json
from dataclasses import dataclass, field, asdict
from typing import Any, Dict, List, Optional, Sequence

from ..base import Field, SolverReport, ValidationReport
from ..scalardicts import ScalarDict, LinearMap
from .load import SpecError
from .pprint import pformat


def _key(k: Any) -> str:
    if isinstance(k, tuple):
        return ",".join(str(i) for i in k)
    return str(k)


def jsonable(x: Any) -> Any:
    """Convert witnesses and exact values to plain JSON data."""
    if x is None or isinstance(x, (bool, int, str)):
        return x
    if isinstance(x, ScalarDict):
        return {_key(k): v for k, v in sorted(x.formatted().items())}
    if isinstance(x, LinearMap):
        return {_key(k): jsonable(img) for k, img in sorted(x.items())}
    if isinstance(x, dict):
        return {_key(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (tuple, list)):
        return [jsonable(v) for v in x]
    return str(x)


def matrix_strings(rows: Sequence[Sequence[Any]], f: Field) -> List[List[str]]:
    return [[f.format(x) for x in row] for row in rows]


def solver_summary(report: SolverReport[Any]) -> Dict[str, int]:
    """Rank data of a solver run."""
    return {
        "rank": report.rank,
        "augmented_rank": report.augmented_rank,
        "unknowns": report.unknowns,
        "equations": report.equations,
        "dimension": report.dimension,
    }


def validation_witnesses(report: ValidationReport, prefix: str = "") -> Dict[str, Any]:
    return {prefix + check: jsonable(report.witnesses.get(check))
        for check in report.failed}


@dataclass
class Report:
    """
    Outcome of one command.

    Every number in a certificate is an exact string, so reports survive any
    JSON reader without rounding.

    :param command: The command line that produced the report.
    :param input_hash: SHA-256 of the canonical input presentation.
    :param verdicts: Named boolean outcomes.
    :param certificates: Named matrices of exact strings.
    :param witnesses: Named first-failure witnesses.
    :param dimensions: Solver rank data per named problem.
    :param flags: Noteworthy non-failures.
    :param wall_time: Elapsed time, e.g. '0.012s'; excluded from
        comparisons of reruns.
    """

    command: str
    input_hash: str = ""
    verdicts: Dict[str, bool] = field(default_factory=dict)
    certificates: Dict[str, List[List[str]]] = field(default_factory=dict)
    witnesses: Dict[str, Any] = field(default_factory=dict)
    dimensions: Dict[str, Dict[str, int]] = field(default_factory=dict)
    flags: List[str] = field(default_factory=list)
    wall_time: Optional[str] = None

    @property
    def ok(self) -> bool:
        return all(self.verdicts.values())

    def add_validation(self, name: str, report: ValidationReport) -> bool:
        """Record the verdict, witnesses and flags of a validation run."""
        self.verdicts[name] = report.passed
        self.witnesses.update(validation_witnesses(report, f"{name}:"))
        self.flags.extend(f"{name}:{flag}" for flag in report.flags)
        return report.passed

    def add_solver(self, name: str, report: SolverReport[Any]) -> bool:
        self.verdicts[name] = report.feasible
        self.dimensions[name] = solver_summary(report)
        return report.feasible

    def to_json(self, timed: bool = True) -> str:
        """Canonical JSON; with timed unset, wall time is omitted."""
        data = asdict(self)
        if not timed:
            del data["wall_time"]
        return json.dumps(data, indent=2, sort_keys=True,
            ensure_ascii=False) + "\n"

    def to_text(self, timed: bool = True) -> str:
        lines = [f"command: {self.command}"]
        if self.input_hash:
            lines.append(f"input: {self.input_hash}")
        for name, ok in self.verdicts.items():
            lines.append(f"  {name}: {'pass' if ok else 'FAIL'}")
        for name, witness in self.witnesses.items():
            lines.append(f"  witness {name}: {witness}")
        for name, dims in self.dimensions.items():
            data = ", ".join(f"{k}={v}" for k, v in dims.items())
            lines.append(f"  solver {name}: {data}")
        for flag in self.flags:
            lines.append(f"  flag: {flag}")
        for name, rows in self.certificates.items():
            lines.append(f"certificate {name}:")
            lines.extend("  " + line for line in pformat(rows).splitlines())
        if timed and self.wall_time is not None:
            lines.append(f"time: {self.wall_time}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Report":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise SpecError(e.msg, e.lineno, e.colno) from e
        if not isinstance(data, dict) or "command" not in data:
            raise SpecError("Not a report: expected an object with 'command'")
        try:
            return cls(**data)
        except TypeError as e:
            raise SpecError(f"Malformed report: {e}") from e
