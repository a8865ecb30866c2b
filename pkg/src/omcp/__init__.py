"""Exact oriented-matroid tools for linear complementarity with K-matrices."""

from .classify import (
    ConditionReport,
    check_fundc,
    check_lemma_K,
    eqK_condition,
    eqP_condition,
    eqP_extension_uniqueness,
    is_k_matroid,
    is_kstar_matroid,
    is_p_matroid,
    is_z_matroid,
    z_dual_check,
)
from .matroid import (
    AbstractOM,
    ExtensionOM,
    bases,
    cocircuits,
    conformal_decompose,
    contract,
    delete,
    fundamental_circuit,
    is_basis,
    ppt_matroid,
    principal_minor,
    reflect_matroid,
    vectors_from_circuits,
    verify_circuit_axioms,
    verify_vector_axioms,
)
from .pivot import (
    LcpOracle,
    MatroidOracle,
    PivotTrace,
    RandomRule,
    brute_force_omcp,
    check_lemma_P,
    check_lemma_staysplus,
    max_index,
    min_index,
    simple_principal_pivot,
    verify_fastK,
)
from .realize import (
    LcpInstance,
    circuits_of_realization,
    fiedler_ptak_condition,
    generate_k_matrix,
    is_k_matrix,
    is_p_matrix,
    is_z_matrix,
    lcp_solution_from_sign_vector,
)
from .signvec import GroundSet, SignVector, compose, is_orthogonal, ppt_sign_vector, reflect

__version__ = "0.1.0"

__all__ = [
    "AbstractOM",
    "ConditionReport",
    "ExtensionOM",
    "GroundSet",
    "LcpInstance",
    "LcpOracle",
    "MatroidOracle",
    "PivotTrace",
    "RandomRule",
    "SignVector",
    "bases",
    "brute_force_omcp",
    "check_fundc",
    "check_lemma_K",
    "check_lemma_P",
    "check_lemma_staysplus",
    "circuits_of_realization",
    "cocircuits",
    "compose",
    "conformal_decompose",
    "contract",
    "delete",
    "eqK_condition",
    "eqP_condition",
    "eqP_extension_uniqueness",
    "fiedler_ptak_condition",
    "fundamental_circuit",
    "generate_k_matrix",
    "is_basis",
    "is_k_matrix",
    "is_k_matroid",
    "is_kstar_matroid",
    "is_orthogonal",
    "is_p_matrix",
    "is_p_matroid",
    "is_z_matrix",
    "is_z_matroid",
    "lcp_solution_from_sign_vector",
    "max_index",
    "min_index",
    "ppt_matroid",
    "ppt_sign_vector",
    "principal_minor",
    "reflect",
    "reflect_matroid",
    "simple_principal_pivot",
    "vectors_from_circuits",
    "verify_circuit_axioms",
    "verify_fastK",
    "verify_vector_axioms",
    "z_dual_check",
]
