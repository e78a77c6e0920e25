"""Independent brute-force oracles used by the acceptance suite and the tests."""

import itertools
import math
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Set

import sympy
from sympy.polys.domains import GF
from sympy.polys.matrices import DomainMatrix

from ..algebra.frobenius import frobenius_root
from ..algebra.groebner import Ideal
from ..algebra.poly import Exponents, Polynomial
from ..algebra.ring import RingSpec
from ..cartier.modules import FractionalSubmodule
from ..utils.logger import get_logger


logger = get_logger("oracles")


def principal_root_oracle(ring: RingSpec, a: int, e: int) -> Ideal:
    """(x^a)^[1/p^e] as the smallest (x^b) with x^a in (x^b)^[p^e], by search."""
    x = Polynomial.filtvar_power(ring, 1)
    q = ring.characteristic ** e
    target = x ** a
    b = 0
    while Ideal.principal(x ** ((b + 1) * q)).member(target):
        b += 1
    return Ideal.principal(x ** b)


def line_tau_oracle(ring: RingSpec, t: Fraction, levels: int = 4) -> FractionalSubmodule:
    """sum_{e <= levels} kappa^e(x^{ceil(t p^e) + 1} R), one direct root per level."""
    x = Polynomial.filtvar_power(ring, 1)
    p = ring.characteristic
    total = FractionalSubmodule.zero(ring)
    for e in range(1, levels + 1):
        exponent = math.ceil(t * p ** e) + 1
        total = total + FractionalSubmodule.of(
            frobenius_root(Ideal.principal(x ** exponent), e)
        )
    return total


def nu_oracle(f: Polynomial, e: int) -> int:
    """nu_f(p^e) = max{N : f^N not in (x_1^{p^e}, ..., x_n^{p^e})}.

    Powers of f are kept truncated modulo the bracket power of the maximal
    ideal, which is a monomial ideal.
    """
    q = f.ring.characteristic ** e
    power = Polynomial.one(f.ring)
    nu = 0
    while True:
        product = power * f
        power = Polynomial(f.ring, {m: c for m, c in product.items() if max(m) < q})
        if power.is_zero():
            return nu
        nu += 1


def sympy_reduced_basis(ideal: Ideal) -> Set[Polynomial]:
    """Reduced grevlex basis from sympy.groebner over GF(p)."""
    ring = ideal.ring
    p = ring.characteristic
    symbols = [sympy.Symbol(name) for name in ring.variables]
    exprs = [_to_sympy(g, symbols) for g in ideal.generators if g]
    if not exprs:
        return set()
    basis = sympy.groebner(exprs, *symbols, modulus=p, order="grevlex")
    result = set()
    for expr in basis.exprs:
        poly = sympy.Poly(expr, *symbols, modulus=p)
        result.add(Polynomial(ring, {tuple(m): int(c) % p for m, c in poly.terms()}))
    return result


def _to_sympy(g: Polynomial, symbols: Sequence[sympy.Symbol]):
    return sympy.Add(
        *[
            c * sympy.Mul(*[s ** a for s, a in zip(symbols, exps)])
            for exps, c in g.items()
        ]
    )


def _monomials_up_to(nvars: int, degree: int) -> List[Exponents]:
    if degree < 0:
        return []
    return [
        exps
        for exps in itertools.product(range(degree + 1), repeat=nvars)
        if sum(exps) <= degree
    ]


def linear_membership(
    f: Polynomial, generators: Iterable[Polynomial], degree: int
) -> bool:
    """Is f in span{m g : deg(m g) <= degree}?

    Exact ideal membership for homogeneous f and generators with
    degree = deg f; a sufficient test otherwise.
    """
    ring = f.ring
    K = GF(ring.characteristic)
    products: List[Polynomial] = []
    for g in generators:
        if g.is_zero():
            continue
        for m in _monomials_up_to(ring.nvars, degree - g.total_degree()):
            products.append(g.mul_monomial(m))
    if not products:
        return f.is_zero()

    index: Dict[Exponents, int] = {}
    for poly in products + [f]:
        for m in poly.terms:
            index.setdefault(m, len(index))

    def row(poly: Polynomial) -> List:
        values = [K(0)] * len(index)
        for m, c in poly.items():
            values[index[m]] = K(c)
        return values

    spanning = DomainMatrix([row(g) for g in products], (len(products), len(index)), K)
    extended = DomainMatrix(
        [row(g) for g in products] + [row(f)], (len(products) + 1, len(index)), K
    )
    member = spanning.rank() == extended.rank()
    logger.debug(f"linear membership of {f} over {len(products)} products: {member}")
    return member
