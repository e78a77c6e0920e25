from .affine import affine_line_shriek, extend_polynomial, extend_submodule
from .kummer import (
    KummerCovering,
    KummerModuleDesc,
    kummer_shriek,
    g_invariants,
    trace,
    invariants_inside_tau,
)

__all__ = [
    "affine_line_shriek",
    "extend_polynomial",
    "extend_submodule",
    "KummerCovering",
    "KummerModuleDesc",
    "kummer_shriek",
    "g_invariants",
    "trace",
    "invariants_inside_tau",
]
