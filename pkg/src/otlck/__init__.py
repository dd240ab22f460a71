"""Exact number-field arithmetic, Weil heights, bounded-height enumeration
and certified unit decisions, aimed at the OT/LCK admissibility question for
unit subgroups with equal-modulus complex conjugates."""

from .errors import (
    BoundaryTie,
    BudgetExceeded,
    InputError,
    PrecisionExhausted,
    ReducibleError,
)
from .heights import (
    AlgebraicNumber,
    EnumeratedNumber,
    HeightValue,
    enumerate_bounded_height,
    height_algebraic,
    is_root_of_unity,
    mahler_measure,
    projective_height_rational,
    search_equal_modulus_units,
    unit_point_height,
)
from .numberfield import (
    FieldElement,
    NumberField,
    char_poly,
    congruence_check,
    elem_arith,
    element_ball,
    embedding_values,
    is_algebraic_integer,
    is_unit,
    min_poly,
    min_poly_int,
    new_field,
    norm_trace,
)
from .polys import (
    IntPoly,
    RatPoly,
    conjugate_product_poly,
    conjugate_ratio_poly,
    conjugate_sum_poly,
    discriminant,
    factor_int_poly,
    irreducibility_witness,
    is_irreducible,
    parse_poly,
    poly_gcd,
    resultant,
    squarefree_decomposition,
    squarefree_part,
    sturm_count,
)
from .roots import (
    DEFAULT_CTX,
    PrecisionContext,
    RootBox,
    isolate_roots,
    refine_root,
    root_separation_bound,
)
from .theorems import (
    CaseRecord,
    SignaturePair,
    dubickas_feasible,
    lck_admissible,
    main_theorem_audit,
    signature_case_analysis,
)
from .units import (
    Decision,
    UnitSubgroup,
    analyze_subgroup,
    is_equal_conjugates,
    is_equal_modulus,
    is_totally_positive,
    log_embedding,
    product_formula_defect,
    rank,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraicNumber",
    "BoundaryTie",
    "BudgetExceeded",
    "CaseRecord",
    "DEFAULT_CTX",
    "Decision",
    "EnumeratedNumber",
    "FieldElement",
    "HeightValue",
    "InputError",
    "IntPoly",
    "NumberField",
    "PrecisionContext",
    "PrecisionExhausted",
    "RatPoly",
    "ReducibleError",
    "RootBox",
    "SignaturePair",
    "UnitSubgroup",
    "analyze_subgroup",
    "char_poly",
    "congruence_check",
    "conjugate_product_poly",
    "conjugate_ratio_poly",
    "conjugate_sum_poly",
    "discriminant",
    "dubickas_feasible",
    "elem_arith",
    "element_ball",
    "embedding_values",
    "enumerate_bounded_height",
    "factor_int_poly",
    "height_algebraic",
    "irreducibility_witness",
    "is_algebraic_integer",
    "is_equal_conjugates",
    "is_equal_modulus",
    "is_irreducible",
    "is_root_of_unity",
    "is_totally_positive",
    "is_unit",
    "isolate_roots",
    "lck_admissible",
    "log_embedding",
    "mahler_measure",
    "main_theorem_audit",
    "min_poly",
    "min_poly_int",
    "new_field",
    "norm_trace",
    "parse_poly",
    "poly_gcd",
    "product_formula_defect",
    "projective_height_rational",
    "rank",
    "refine_root",
    "resultant",
    "root_separation_bound",
    "search_equal_modulus_units",
    "signature_case_analysis",
    "squarefree_decomposition",
    "squarefree_part",
    "sturm_count",
    "unit_point_height",
]
