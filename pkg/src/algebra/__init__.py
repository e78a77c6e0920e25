from .ring import RingSpec
from .poly import Polynomial, poly_arith, grevlex_key
from .parser import parse_polynomial
from .groebner import (
    Ideal,
    ReducedGB,
    reduce_basis,
    normal_form,
    ideal_ops,
    frobenius_power,
    monomial_colon,
    monomial_intersection,
)
from .frobenius import (
    FrobeniusDecomposition,
    pth_root_decompose,
    frobenius_root,
    cartier_image,
)

__all__ = [
    "RingSpec",
    "Polynomial",
    "poly_arith",
    "grevlex_key",
    "parse_polynomial",
    "Ideal",
    "ReducedGB",
    "reduce_basis",
    "normal_form",
    "ideal_ops",
    "frobenius_power",
    "monomial_colon",
    "monomial_intersection",
    "FrobeniusDecomposition",
    "pth_root_decompose",
    "frobenius_root",
    "cartier_image",
]
