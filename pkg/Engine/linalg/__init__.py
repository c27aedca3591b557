# Engine linalg package
from Engine.linalg.echelon import EchelonBasis, echelonize, extend_basis, reduce
from Engine.linalg.relations import (
    RelationTracker,
    canonical_key,
    degree_descending_key,
    express_in_span,
    first_relation,
)
