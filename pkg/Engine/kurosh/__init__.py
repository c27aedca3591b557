# Engine kurosh package
from Engine.kurosh.slices import GradedSubalgebra, graded_slices, require_homogeneous
from Engine.kurosh.generators import (
    FreeGeneratorReport,
    extension_step_holds,
    extract_free_generators,
    independent_modulo,
)
from Engine.kurosh.leading_forms import LeadingFormClosure, leading_form_closure, lift_leading_forms
