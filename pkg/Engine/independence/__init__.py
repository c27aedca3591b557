# Engine independence package
from Engine.independence.verdicts import (
    Certificate,
    IndependenceVerdict,
    VerdictStatus,
    certify,
    check_relation,
    is_reduced,
    leading_forms_independent,
    monomial_counts,
    relation_search,
    same_degree_fast_path,
)
