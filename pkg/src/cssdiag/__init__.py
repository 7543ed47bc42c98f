"""CSS/stabilizer codes under diagonal gates.

Exact decision procedures for whether a diagonal physical gate preserves a
CSS code, extraction of the induced diagonal logical gate, construction of
simplex/quadratic-coset code families with divisible coset weights, and an
independent sparse brute-force oracle cross-checking every verdict.
"""

from .codes import (
    CssCode,
    SparseState,
    StabilizerStandardForm,
    code_from_json,
    code_to_json,
    css_from_standard_form,
    distance_bounds,
    encode_basis,
    ft_local_check,
    new_css,
    standard_form,
    tower_from_standard_form,
    undetectable_z_errors_bounded,
)
from .cyclotomic import Cyclotomic
from .errors import (
    CodingError,
    ContainmentError,
    EnumerationCapError,
    GateDomainError,
    NotPreservedError,
    StandardFormError,
)
from .gencoeff import (
    CosetConstraint,
    GeneratorCoefficientMatrix,
    LogicalDiagonal,
    gate_from_constraints,
    gc_matrix,
    generator_coeff,
    induced_logical,
    is_logical_identity,
    logical_pauli_expansion,
    oblivious_coherent,
    physical_constraints_for_target,
    preserves,
    preserves_norm_test,
)
from .gf2 import (
    DEFAULT_ENUM_CAP,
    BitMatrix,
    BitVector,
    LinearCode,
    bounded_codewords,
    coset_reps,
    min_weight_bounded,
)
from .gates import (
    CosetRuleGate,
    DiagonalGate,
    Factor,
    FactorProductGate,
    LinearForm,
    SymbolicPhaseGate,
    TableGate,
    WeightRuleGate,
    compose,
    from_factors,
    identity_gate,
    inverse,
    named_factor,
    pauli_coefficients,
    transversal,
)
from .kernels import BACKEND as KERNEL_BACKEND
from .oracle import (
    apply_diagonal,
    brute_force_preserves,
    completeness_check,
    verify_logical_action,
)
from .qforms import (
    EvaluationVector,
    QuadraticForm,
    all_family_pairs,
    build_family,
    coset_weights,
    decomposition_phase,
    family_gate,
    logical_decomposition,
    parity_logical,
    punctured_congruences,
    rank_symplectic,
    simplex_code,
    verify_family_code,
)

__version__ = "0.1.0"
