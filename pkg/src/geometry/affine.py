from ..algebra.groebner import Ideal
from ..algebra.poly import Polynomial
from ..algebra.ring import RingSpec
from ..cartier.modules import CartierModuleDesc, FractionalSubmodule


def extend_polynomial(g: Polynomial, ring: RingSpec) -> Polynomial:
    """View g in R[y] (y appended last)."""
    pad = ring.nvars - g.ring.nvars
    return g.map_exponents(ring, lambda exps: exps + (0,) * pad)


def extend_submodule(N: FractionalSubmodule, ring: RingSpec) -> FractionalSubmodule:
    """f^! on submodules: N tensored up to R[y]."""
    gens = tuple(extend_polynomial(g, ring) for g in N.basis)
    return FractionalSubmodule.of(Ideal(ring, gens), N.shift)


def affine_line_shriek(M: CartierModuleDesc, newvar: str = "y") -> CartierModuleDesc:
    """Pullback along A^1 x Spec R -> Spec R.

    The appended variable falls under the global rule
    kappa(y^a m) = y^{(a+1)/p - 1} kappa(m), zero unless p divides a+1.
    """
    ring = M.ring.extend(newvar)
    return CartierModuleDesc(
        carrier=extend_submodule(M.carrier, ring),
        twist=extend_polynomial(M.twist, ring),
        provenance=M.provenance,
    )
