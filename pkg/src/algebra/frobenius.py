from dataclasses import dataclass
from typing import Dict, Mapping

from .groebner import Ideal
from .poly import Exponents, Polynomial
from .ring import RingSpec
from ..utils.errors import LevelBoundError
from ..utils.limits import get_limits


@dataclass(frozen=True)
class FrobeniusDecomposition:
    """g = sum over a of components[a]^(p^e) * x^a, with a in [0, p^e)^n."""

    ring: RingSpec
    level: int
    components: Mapping[Exponents, Polynomial]

    def reassemble(self) -> Polynomial:
        total = Polynomial.zero(self.ring)
        for a, g_a in self.components.items():
            total = total + g_a.frobenius(self.level).mul_monomial(a)
        return total


def _check_level(e: int) -> None:
    if e < 1:
        raise ValueError(f"Frobenius level must be positive, got {e}")
    emax = get_limits().emax
    if e > emax:
        raise LevelBoundError(f"Frobenius level {e} exceeds E_max={emax}")


def _split(g: Polynomial, q: int) -> Dict[Exponents, Dict[Exponents, int]]:
    parts: Dict[Exponents, Dict[Exponents, int]] = {}
    for exps, coef in g.items():
        basis, quotient = [], []
        for m in exps:
            hi, lo = divmod(m, q)
            basis.append(lo)
            quotient.append(hi)
        # the p^e-th root of c in F_p is c itself
        parts.setdefault(tuple(basis), {})[tuple(quotient)] = coef
    return parts


def pth_root_decompose(g: Polynomial, e: int) -> FrobeniusDecomposition:
    """Decompose g over the Frobenius basis x^a, a in [0, p^e)^n."""
    _check_level(e)
    q = g.ring.characteristic ** e
    components = {
        a: Polynomial._from_clean(g.ring, terms) for a, terms in _split(g, q).items()
    }
    return FrobeniusDecomposition(g.ring, e, components)


def root_generators(ideal: Ideal, e: int):
    """Components of every generator at level e, without the E_max check."""
    q = ideal.ring.characteristic ** e
    for g in ideal.generators:
        for terms in _split(g, q).values():
            yield Polynomial._from_clean(ideal.ring, terms)


def frobenius_root(ideal: Ideal, e: int) -> Ideal:
    """I^[1/p^e]: the smallest ideal J with I contained in J^[p^e]."""
    _check_level(e)
    return Ideal(ideal.ring, tuple(root_generators(ideal, e)))


def cartier_image(g: Polynomial, ideal: Ideal, e: int) -> Ideal:
    """kappa^e(g * I) under the trivialization sending x^(p-1)...x^(p-1) to 1."""
    g.ring.check_same(ideal.ring)
    return frobenius_root(ideal.scale(g), e)
