"""Reader and writer for JSON coalgebra presentations."""


from __future__ import annotations

__all__ = ["SpecError", "parse_spec", "dump_spec", "input_hash", "load",
    "dump"]

import hashlib
import json
import logging
from typing import Any, Dict, List, Mapping, Optional, Tuple

from ..base import Field
from ..scalardicts import ScalarDict
from ..components import Coalgebra, validate_coalgebra


FIELDS = ("name", "field", "dim", "basis", "delta", "epsilon")
REQUIRED = ("name", "field", "dim", "basis", "delta")
DELTA_FIELDS = ("from", "left", "right", "coeff")
EPSILON_FIELDS = ("at", "coeff")


class SpecError(RuntimeError):
    """
    A malformed or invalid coalgebra presentation.

    :param line: 1-based line of the offending text, when known.
    :param col: 1-based column of the offending text, when known.
    """

    def __init__(
        self, msg: str, line: Optional[int] = None, col: Optional[int] = None
    ) -> None:
        self.line = line
        self.col = col
        if line is not None:
            msg = f"Line {line}, column {col}: {msg}"
        super().__init__(msg)


def _position(text: str, needle: str) -> Tuple[Optional[int], Optional[int]]:
    at = text.find(needle)
    if at < 0:
        return None, None
    line = text.count("\n", 0, at) + 1
    col = at - (text.rfind("\n", 0, at) + 1) + 1
    return line, col


class _Reader:
    """Walks a decoded presentation, tracking record paths for errors."""

    def __init__(self, text: str, doc: Any) -> None:
        self.text = text
        if not isinstance(doc, dict):
            raise SpecError("Presentation must be a JSON object", 1, 1)
        self.doc = doc

    def error(self, path: str, msg: str, literal: Any = None) -> SpecError:
        line = col = None
        if isinstance(literal, str):
            line, col = _position(
                self.text, json.dumps(literal, ensure_ascii=False))
        return SpecError(f"{path}: {msg}", line, col)

    def check_fields(
        self, record: Any, path: str, allowed: Tuple[str, ...],
        required: Tuple[str, ...]
    ) -> Mapping[str, Any]:
        if not isinstance(record, dict):
            raise self.error(path, "Expected an object")
        for key in record:
            if key not in allowed:
                raise self.error(path, f"Unknown field '{key}'")
        for key in required:
            if key not in record:
                raise self.error(path, f"Missing field '{key}'")
        return record

    def integer(self, value: Any, path: str) -> int:
        if isinstance(value, bool) or not isinstance(value, int):
            raise self.error(path, f"Expected an integer, got {value!r}")
        return value

    def index(self, value: Any, path: str, dim: int) -> int:
        i = self.integer(value, path)
        if not 0 <= i < dim:
            raise self.error(path, f"Index {i} out of range for dim {dim}")
        return i

    def coefficient(self, value: Any, path: str, field: Field) -> Any:
        if isinstance(value, bool) or not isinstance(value, (int, str)):
            raise self.error(
                path, f"Coefficient must be an integer or a string, "
                f"got {value!r}")
        try:
            return field.convert(value)
        except (ValueError, ZeroDivisionError) as e:
            raise self.error(path, str(e), value) from e

    def records(self, key: str) -> List[Any]:
        value = self.doc[key]
        if not isinstance(value, list):
            raise self.error(key, "Expected a list")
        return value


def parse_spec(text: str, validate: bool = True) -> Coalgebra:
    """
    Parse a JSON coalgebra presentation.

    Duplicate (from, left, right) records and duplicate counit records are
    summed. With validate set, the coalgebra axioms are checked and the
    first failing check is reported together with its witness.

    :param text: UTF-8 JSON text.
    :param validate: Whether to run validate_coalgebra on the result.
    """

    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise SpecError(e.msg, e.lineno, e.colno) from e

    reader = _Reader(text, doc)
    reader.check_fields(doc, "<root>", FIELDS, REQUIRED)

    name = doc["name"]
    if not isinstance(name, str):
        raise reader.error("name", "Expected a string")
    raw_field = doc["field"]
    if not isinstance(raw_field, str):
        raise reader.error("field", "Expected a string")
    try:
        field = Field.parse(raw_field)
    except ValueError as e:
        raise reader.error("field", str(e), raw_field) from e
    dim = reader.integer(doc["dim"], "dim")
    if dim < 0:
        raise reader.error("dim", f"Negative dimension {dim}")
    labels = doc["basis"]
    if not isinstance(labels, list) or \
            not all(isinstance(label, str) for label in labels):
        raise reader.error("basis", "Expected a list of strings")
    if len(labels) != dim:
        raise reader.error(
            "basis", f"Expected {dim} labels, got {len(labels)}")

    constants: ScalarDict = ScalarDict(field)
    for n, record in enumerate(reader.records("delta")):
        path = f"delta[{n}]"
        reader.check_fields(record, path, DELTA_FIELDS, DELTA_FIELDS)
        key = tuple(
            reader.index(record[k], f"{path}.{k}", dim)
            for k in ("from", "left", "right"))
        constants.accumulate(
            key, reader.coefficient(record["coeff"], f"{path}.coeff", field))

    epsilon = None
    if "epsilon" in doc:
        values: ScalarDict = ScalarDict(field)
        for n, record in enumerate(reader.records("epsilon")):
            path = f"epsilon[{n}]"
            reader.check_fields(record, path, EPSILON_FIELDS, EPSILON_FIELDS)
            at = reader.index(record["at"], f"{path}.at", dim)
            values.accumulate(
                at, reader.coefficient(record["coeff"], f"{path}.coeff", field))
        epsilon = [values[i] for i in range(dim)]

    c = Coalgebra.from_constants(
        field, dim, dict(constants.items()), epsilon, labels, name)
    logging.debug(f"Parsed coalgebra '{name}' of dim {dim} over {field}.")

    if validate:
        failure = validate_coalgebra(c).first_failure()
        if failure is not None:
            check, witness = failure
            label = c.labels[witness] if isinstance(witness, int) else witness
            raise SpecError(
                f"Coalgebra '{name}' is not {check} at basis element "
                f"{label!r} (index {witness})")
    return c


def _document(c: Coalgebra) -> Dict[str, Any]:
    fmt = c.field.format
    doc: Dict[str, Any] = {
        "name": c.name,
        "field": str(c.field),
        "dim": c.dim,
        "basis": list(c.labels),
        "delta": [
            {"from": i, "left": j, "right": k, "coeff": fmt(v)}
            for (i, j, k), v in sorted(c.constants().items())],
    }
    if c.epsilon is not None:
        doc["epsilon"] = [
            {"at": i, "coeff": fmt(v)}
            for (i,), v in sorted(c.epsilon.items())]
    return doc


def dump_spec(c: Coalgebra) -> str:
    """
    Serialize c canonically.

    Keys are sorted, records are ordered by index and every coefficient is
    an exact string, so equal coalgebras dump to equal text.
    """

    return json.dumps(_document(c), indent=2, sort_keys=True,
        ensure_ascii=False) + "\n"


def input_hash(c: Coalgebra) -> str:
    """SHA-256 digest of the canonical serialization of c."""
    return hashlib.sha256(dump_spec(c).encode("utf-8")).hexdigest()


def load(path: str, validate: bool = True) -> Coalgebra:
    """Read and parse the presentation stored at path."""
    try:
        with open(path, encoding="utf-8") as f:
            text = f.read()
    except (OSError, UnicodeDecodeError) as e:
        raise SpecError(f"Cannot read '{path}': {e}") from e
    return parse_spec(text, validate=validate)


def dump(c: Coalgebra, path: str) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(dump_spec(c))
