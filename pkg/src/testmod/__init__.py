from .test_module import (
    FiltrationParam,
    GradedPiece,
    filtration_param,
    default_test_element,
    test_module,
    test_module_left,
    is_f_regular,
    gr_tau,
)
from .models import fractional_model, model_certificate, pushforward_model
from .jumps import JumpReport, JumpScanner, jumping_numbers, f_pure_threshold

__all__ = [
    "FiltrationParam",
    "GradedPiece",
    "filtration_param",
    "default_test_element",
    "test_module",
    "test_module_left",
    "is_f_regular",
    "gr_tau",
    "fractional_model",
    "model_certificate",
    "pushforward_model",
    "JumpReport",
    "JumpScanner",
    "jumping_numbers",
    "f_pure_threshold",
]
