"""Modules with explicit Chevalley matrices and their analysis."""
from .analysis import (
    LWeightSpace,
    SimplicityResult,
    algebra_dimension,
    highest_lweight_vectors,
    is_simple,
    spin,
)
from .drinfeld import DrinfeldMatrices, DrinfeldRelationError, drinfeld_matrices, drinfeld_residuals
from .io import dumps, load_module, loads, module_from_dict, module_to_dict, save_module
from .module import (
    GENERATORS,
    Module,
    PresentationReport,
    direct_sum,
    dual,
    tensor,
    tensor_power,
    trivial_module,
    verify_presentation,
)

__all__ = [
    "GENERATORS", "Module", "PresentationReport", "direct_sum", "dual", "tensor", "tensor_power",
    "trivial_module", "verify_presentation", "DrinfeldMatrices", "DrinfeldRelationError",
    "drinfeld_matrices", "drinfeld_residuals", "LWeightSpace", "SimplicityResult",
    "algebra_dimension", "highest_lweight_vectors", "is_simple", "spin", "dumps", "loads",
    "load_module", "save_module", "module_from_dict", "module_to_dict",
]
