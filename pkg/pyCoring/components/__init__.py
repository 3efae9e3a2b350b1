"""Coalgebras, dual algebras, corings and coseparability."""


from .coalgebras import Coalgebra, validate_coalgebra, coopposite, direct_sum
from .corpus import (CorpusEntry, CORPUS, trivial, grouplike, matrix,
    dualnumbers, build_corpus, corpus, random_direct_sum)
from .algebras import (FinDimAlgebra, Bimodule, validate_algebra,
    validate_bimodule, ground_algebra, dual_convolution_algebra,
    opposite_dual_algebra, unit_map_eta, build_actions, algebra_generators)
from .tensors import TensorOverA, TripleTensor, tensor_over_algebra
from .corings import (CoringOverA, CounitSolution, DualRing, induce_coring,
    induce_cop_coring, coalgebra_as_coring, ground_counit, validate_coring,
    verify_counit, solve_counit, dual_ring_product, check_unity,
    check_coring_morphism, eta_morphism, solve_coring_cointegral)
from .dorroh import (DorrohCoring, ComoduleOverCoring, Bicomodule,
    build_dorroh, check_coideal_embedding, check_unit_embedding,
    check_projection, regular_comodule, validate_comodule,
    validate_bicomodule, lift_right_comodule, lift_left_comodule,
    lift_bicomodule, forget_comodule)
from .cosep import (DEFAULT_SEED, DEFAULT_TRIALS, BALANCED_CONDITIONS,
    THEOREM_LEGS, Cointegral, Retraction, BalancedForm, BalancedChecker,
    BalancedReport, EpsilonBarReport, SeparabilityCertificate,
    InducedAlgebra, TheoremReport, solve_cointegral, check_cointegral,
    check_retraction, retraction_to_cointegral, cointegral_to_retraction,
    balanced_conditions, condition_one_space, random_forms, balanced_battery,
    epsilon_bar_check, check_separability, induced_multiplication,
    measuring_pairing_check, theorem_pipeline, counit_from_retraction,
    retraction_from_counit)


__all__ = ["Coalgebra", "validate_coalgebra", "coopposite", "direct_sum",
    "CorpusEntry", "CORPUS", "trivial", "grouplike", "matrix", "dualnumbers",
    "build_corpus", "corpus", "random_direct_sum", "FinDimAlgebra",
    "Bimodule", "validate_algebra", "validate_bimodule", "ground_algebra",
    "dual_convolution_algebra", "opposite_dual_algebra", "unit_map_eta",
    "build_actions", "algebra_generators", "TensorOverA", "TripleTensor",
    "tensor_over_algebra", "CoringOverA", "CounitSolution", "DualRing",
    "induce_coring", "induce_cop_coring", "coalgebra_as_coring",
    "ground_counit", "validate_coring", "verify_counit", "solve_counit",
    "dual_ring_product", "check_unity", "check_coring_morphism",
    "eta_morphism", "solve_coring_cointegral", "DorrohCoring",
    "ComoduleOverCoring", "Bicomodule", "build_dorroh",
    "check_coideal_embedding", "check_unit_embedding", "check_projection",
    "regular_comodule", "validate_comodule", "validate_bicomodule",
    "lift_right_comodule", "lift_left_comodule", "lift_bicomodule",
    "forget_comodule", "DEFAULT_SEED", "DEFAULT_TRIALS",
    "BALANCED_CONDITIONS", "THEOREM_LEGS", "Cointegral", "Retraction",
    "BalancedForm", "BalancedChecker", "BalancedReport", "EpsilonBarReport",
    "SeparabilityCertificate", "InducedAlgebra", "TheoremReport",
    "solve_cointegral", "check_cointegral", "check_retraction",
    "retraction_to_cointegral", "cointegral_to_retraction",
    "balanced_conditions", "condition_one_space", "random_forms",
    "balanced_battery", "epsilon_bar_check", "check_separability",
    "induced_multiplication", "measuring_pairing_check", "theorem_pipeline",
    "counit_from_retraction", "retraction_from_counit"]
