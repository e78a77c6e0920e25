import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Union

from sympy import n_order, primitive_root

from ..algebra.groebner import Ideal
from ..algebra.poly import Exponents, Polynomial
from ..algebra.ring import RingSpec
from ..cartier.modules import CartierModuleDesc, FractionalSubmodule, Provenance
from ..testmod.test_module import test_module
from ..utils.errors import GradingError, UnsupportedStructureError
from ..utils.logger import get_logger


logger = get_logger("kummer")


@dataclass(frozen=True)
class KummerCovering:
    """S = R[t]/(t^n - x), realized as the polynomial ring with x = t^n.

    The covering ring keeps the variable order of R with the filtration
    variable renamed; zeta is a primitive n-th root of unity in F_p.
    """

    n: int
    base: RingSpec
    cover: RingSpec
    zeta: int

    @classmethod
    def build(cls, base: RingSpec, n: int, name: str = "t") -> "KummerCovering":
        p = base.characteristic
        if n < 1 or math.gcd(n, p) != 1 or (p - 1) % n:
            raise UnsupportedStructureError(
                f"Kummer degree {n} must divide p-1={p - 1}"
            )
        zeta = pow(primitive_root(p), (p - 1) // n, p)
        if n_order(zeta, p) != n:
            raise UnsupportedStructureError(f"{zeta} is not a primitive {n}-th root mod {p}")
        cover = base.rename(base.filtvar, name)
        return cls(n=n, base=base, cover=cover, zeta=zeta)

    @property
    def filtvar(self) -> int:
        return self.base.filtvar

    def embed(self, g: Polynomial) -> Polynomial:
        """x -> t^n."""
        g.ring.check_same(self.base)
        fv, n = self.filtvar, self.n
        return g.map_exponents(
            self.cover,
            lambda exps: tuple(a * n if i == fv else a for i, a in enumerate(exps)),
        )

    def embed_submodule(self, N: FractionalSubmodule) -> FractionalSubmodule:
        gens = tuple(self.embed(g) for g in N.basis)
        return FractionalSubmodule.of(Ideal(self.cover, gens), N.shift * self.n)

    def t_power(self, k: int) -> Polynomial:
        return Polynomial.filtvar_power(self.cover, k)

    def galois_action(self, h: Polynomial, k: int = 1) -> Polynomial:
        """sigma^k(h) = zeta^k h(zeta^k t); fixes t^{n-1}, i.e. delta_0."""
        p = self.base.characteristic
        fv = self.filtvar
        root = pow(self.zeta, k, p)
        return Polynomial(
            self.cover,
            {exps: c * pow(root, exps[fv] + 1, p) for exps, c in h.items()},
        )

    def reynolds(self, h: Polynomial) -> Polynomial:
        p = self.base.characteristic
        total = Polynomial.zero(self.cover)
        for k in range(self.n):
            total = total + self.galois_action(h, k)
        return total.scale(pow(self.n, -1, p))

    def graded_part(self, h: Polynomial) -> Polynomial:
        """Terms of t-degree congruent to n-1 mod n."""
        fv, n = self.filtvar, self.n
        return Polynomial(
            self.cover, {exps: c for exps, c in h.items() if exps[fv] % n == n - 1}
        )

    def project(self, g: Polynomial, offset: int) -> FractionalSubmodule:
        """Coefficient of t^{n-1} in t^offset g, written over R via x = t^n."""
        fv, n = self.filtvar, self.n
        terms: Dict[Exponents, int] = {}
        for exps, c in g.items():
            degree = exps[fv] + offset - (n - 1)
            if degree % n:
                continue
            down = list(exps)
            down[fv] = degree // n
            terms[tuple(down)] = c
        if not terms:
            return FractionalSubmodule.zero(self.base)
        shift = max(0, -min(exps[fv] for exps in terms))
        lifted = {
            tuple(a + shift if i == fv else a for i, a in enumerate(exps)): c
            for exps, c in terms.items()
        }
        return FractionalSubmodule.generated_by(
            self.base, [Polynomial(self.base, lifted)], shift
        )


@dataclass(frozen=True)
class KummerModuleDesc:
    """Cartier module over the covering, identified with Hom_R(S, M) by delta_{n-1} -> 1."""

    module: CartierModuleDesc
    covering: KummerCovering

    @property
    def ring(self) -> RingSpec:
        return self.covering.cover

    def filtration_element(self) -> Polynomial:
        """x = t^n upstairs."""
        return self.covering.t_power(self.covering.n)


def _sum(ring: RingSpec, parts: Iterable[FractionalSubmodule]) -> FractionalSubmodule:
    total = FractionalSubmodule.zero(ring)
    for part in parts:
        total = total + part
    return total


def kummer_shriek(M: CartierModuleDesc, cov: KummerCovering) -> KummerModuleDesc:
    """Pullback of (R or x^{-1}R, kappa * u x^s) to (S or t^{-n}S, kappa_S * u t^{ns})."""
    M.ring.check_same(cov.base)
    if M.twist.filtvar_monomial_power() is None:
        raise UnsupportedStructureError(
            f"Kummer pullback needs twist unit*{cov.base.filtvar_name}^s, got {M.twist}"
        )
    if not M.carrier.gb.is_unit() or M.carrier.shift not in (0, 1):
        raise UnsupportedStructureError(
            f"Kummer pullback needs carrier R or x^-1 R, got {M.carrier}"
        )
    module = CartierModuleDesc(
        carrier=FractionalSubmodule.unit(cov.cover, M.carrier.shift * cov.n),
        twist=cov.embed(M.twist),
        provenance=Provenance.KUMMER_PULLBACK,
        covering=cov,
    )
    return KummerModuleDesc(module=module, covering=cov)


def g_invariants(N: FractionalSubmodule, cov: KummerCovering) -> FractionalSubmodule:
    """{m in R_x : m t^{n-1} in N} for a Z/n-graded submodule N of S_t."""
    N.ring.check_same(cov.cover)
    fv, n, k = cov.filtvar, cov.n, N.shift
    parts = []
    for g in N.basis:
        classes = {exps[fv] % n for exps in g.terms}
        if len(classes) != 1:
            raise GradingError(
                f"generator {g} of {N} is not homogeneous for the Z/{n} grading in "
                f"{cov.cover.filtvar_name}"
            )
        d = classes.pop()
        i = (n - 1 - d + k) % n
        parts.append(cov.project(g, i - k))
    return _sum(cov.base, parts)


def trace(N: FractionalSubmodule, cov: KummerCovering) -> FractionalSubmodule:
    """Evaluation-at-1 image: R-span of the t^{n-1}-coefficients of N."""
    N.ring.check_same(cov.cover)
    k = N.shift
    return _sum(
        cov.base,
        (cov.project(g, i - k) for g in N.basis for i in range(cov.n)),
    )


def invariants_inside_tau(
    M: CartierModuleDesc, cov: KummerCovering, t: Union[Fraction, int, str]
) -> bool:
    """Every generator m of tau(M, x^t) gives m t^{n-1} in tau(f^! M, x^t)."""
    x = Polynomial.filtvar_power(M.ring, 1)
    down = test_module(M, x, t)
    pulled = kummer_shriek(M, cov)
    up = test_module(pulled.module, pulled.filtration_element(), t)
    for g, shift in down.generators():
        lifted = cov.embed(g) * cov.t_power(cov.n - 1)
        if not up.contains_element(lifted, shift * cov.n):
            logger.info(f"{g} * t^{cov.n - 1} not in {up}")
            return False
    return True
