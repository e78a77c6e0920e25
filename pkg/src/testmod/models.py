from typing import Optional

from ..algebra.poly import Polynomial
from ..algebra.ring import RingSpec
from ..cartier.chain import scheduled_apply
from ..cartier.modules import CartierModuleDesc, FractionalSubmodule, Provenance
from ..utils.errors import CertificateError, UnsupportedStructureError
from ..utils.limits import get_limits
from ..utils.logger import get_logger


logger = get_logger("models")


def fractional_model(
    ring: RingSpec, shift: int, twist: Optional[Polynomial] = None
) -> CartierModuleDesc:
    """Carrier x^{-shift} R inside j_* R_x with structure kappa * twist."""
    twist = twist if twist is not None else Polynomial.one(ring)
    return CartierModuleDesc(
        carrier=FractionalSubmodule.unit(ring, shift),
        twist=twist,
        provenance=Provenance.PUSHFORWARD_MODEL,
    )


def model_certificate(M: CartierModuleDesc) -> dict:
    """For each k, the least level e with kappa_M^e(x^{-k} R) inside the model.

    Levels start at the least e with p^e >= k and may exceed it for
    twisted structures.
    """
    limits = get_limits()
    ring = M.ring
    p = ring.characteristic
    one = Polynomial.one(ring)
    levels = {}
    for k in range(1, limits.certificate_depth + 1):
        e = 1
        while p ** e < k:
            e += 1
        lattice = FractionalSubmodule.unit(ring, k)
        while e <= limits.emax:
            if M.carrier.contains(scheduled_apply(M, one, 0, e, lattice)):
                levels[k] = e
                break
            e += 1
        else:
            raise CertificateError(
                f"kappa^e(x^-{k} R) never enters {M.carrier} for e <= {limits.emax}"
            )
    return levels


def pushforward_model(ring: RingSpec, twist: Polynomial) -> CartierModuleDesc:
    """Coherent model of (R_x, kappa * twist) for twist = unit * x^s.

    s = 0 gives x^{-1} R, s >= 1 gives R.
    """
    s = twist.filtvar_monomial_power()
    if s is None:
        raise UnsupportedStructureError(
            f"pushforward models need twist unit*{ring.filtvar_name}^s, got {twist}"
        )
    model = fractional_model(ring, 1 if s == 0 else 0, twist)
    levels = model_certificate(model)
    logger.debug(f"model {model.describe()} certified with levels {levels}")
    return model
