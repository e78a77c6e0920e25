from .modules import (
    FractionalSubmodule,
    CartierModuleDesc,
    CartierAlgebraSpec,
    Provenance,
    element_text,
    parse_rational,
)
from .chain import (
    kappa_once,
    scheduled_apply,
    direct_apply,
    structure_apply,
    level_union,
    algebra_plus,
    underline,
    is_f_pure,
    is_nilpotent,
)

__all__ = [
    "FractionalSubmodule",
    "CartierModuleDesc",
    "CartierAlgebraSpec",
    "Provenance",
    "element_text",
    "parse_rational",
    "kappa_once",
    "scheduled_apply",
    "direct_apply",
    "structure_apply",
    "level_union",
    "algebra_plus",
    "underline",
    "is_f_pure",
    "is_nilpotent",
]
