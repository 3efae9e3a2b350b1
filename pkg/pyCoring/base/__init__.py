"""Substrate types: fields, symbols, errors and reports."""


from .fields import Field, QQ_FIELD
from .symbols import Key, Side, Variant, SIDES, VARIANTS, check_side
from .errors import (ShapeError, PreconditionError, AxiomError,
    TheoremViolation)
from .reports import ValidationReport, SolverReport


__all__ = ["Field", "QQ_FIELD", "Key", "Side", "Variant", "SIDES",
    "VARIANTS", "check_side", "ShapeError", "PreconditionError",
    "AxiomError", "TheoremViolation", "ValidationReport", "SolverReport"]
