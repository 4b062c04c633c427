"""Exact computations for finite-dimensional modules of the quantum loop algebra of sl2.

Everything is done over the rationals: q is a rational number other than
0 and +-1, spectral parameters are nonzero rationals, and every matrix entry
is a :class:`fractions.Fraction`.
"""
from .dpoly import DrinfeldPoly, LWeightData, lweight_data, multiply, primitive_root, proportional_h, qstring
from .qnum import QParam, Scalar, q_binom, q_factorial, q_int
from .repcore import Module, drinfeld_matrices, dual, is_simple, spin, tensor, verify_presentation
from .selfext import ExtSpace, class_of, ext1, extension_module, graded_twist, walkprop_forcing_check
from .sl2eval import check_genrel_single, check_genrel_square, eval_module, weyl_quotient_dims
from .weylalg import ALambdaAlgebra, ALambdaModule, evaluation_character, ideal_I_quotient, local_weyl

__version__ = "0.1.0"

__all__ = [
    "Scalar", "QParam", "q_int", "q_factorial", "q_binom",
    "DrinfeldPoly", "LWeightData", "qstring", "multiply", "lweight_data", "primitive_root", "proportional_h",
    "Module", "tensor", "dual", "verify_presentation", "drinfeld_matrices", "is_simple", "spin",
    "eval_module", "check_genrel_single", "check_genrel_square", "weyl_quotient_dims",
    "ExtSpace", "ext1", "graded_twist", "extension_module", "class_of", "walkprop_forcing_check",
    "ALambdaAlgebra", "ALambdaModule", "evaluation_character", "ideal_I_quotient", "local_weyl",
]
