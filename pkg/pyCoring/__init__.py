from .base import (Field, QQ_FIELD, ShapeError, PreconditionError,
    AxiomError, TheoremViolation, ValidationReport, SolverReport)
from .scalardicts import ScalarDict, LinearMap
from .components import (Coalgebra, validate_coalgebra, coopposite,
    direct_sum, build_corpus, corpus, CORPUS, FinDimAlgebra, Bimodule,
    build_actions, CoringOverA, induce_coring, validate_coring, solve_counit,
    dual_ring_product, check_coring_morphism, build_dorroh,
    solve_cointegral, balanced_battery, epsilon_bar_check,
    measuring_pairing_check, theorem_pipeline)
from .utils import (pprint, pformat, SpecError, parse_spec, dump_spec,
    input_hash, load, Report)

__all__ = [
    "Field", "QQ_FIELD", "ShapeError", "PreconditionError", "AxiomError",
    "TheoremViolation", "ValidationReport", "SolverReport", "ScalarDict",
    "LinearMap", "Coalgebra", "validate_coalgebra", "coopposite",
    "direct_sum", "build_corpus", "corpus", "CORPUS", "FinDimAlgebra",
    "Bimodule", "build_actions", "CoringOverA", "induce_coring",
    "validate_coring", "solve_counit", "dual_ring_product",
    "check_coring_morphism", "build_dorroh", "solve_cointegral",
    "balanced_battery", "epsilon_bar_check", "measuring_pairing_check",
    "theorem_pipeline", "pprint", "pformat", "SpecError", "parse_spec",
    "dump_spec", "input_hash", "load", "Report"
]
