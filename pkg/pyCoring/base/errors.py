"""Exceptions raised by pyCoring."""


__all__ = ["ShapeError", "PreconditionError", "AxiomError",
    "TheoremViolation"]


class ShapeError(ValueError):
    pass


class PreconditionError(ValueError):
    pass


class AxiomError(RuntimeError):
    pass


class TheoremViolation(AxiomError):
    pass
