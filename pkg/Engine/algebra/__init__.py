# Engine algebra package
from Engine.algebra.polynomial import (
    Polynomial,
    add,
    format_polynomial,
    format_rational,
    homogeneous_components,
    is_homogeneous,
    leading_form,
    linear_combination,
    mul,
    pi_n,
    product_type_split,
    scale,
)
from Engine.algebra.substitution import (
    MonomialEvaluator,
    SubstitutionMap,
    in_subalgebra,
    shape_class_evaluations,
    subalgebra_membership_slice,
    substitute,
)
