import pytest

from src.algebra import Polynomial, RingSpec
from src.cartier import CartierModuleDesc, FractionalSubmodule


def line(p: int) -> RingSpec:
    return RingSpec(p, ("x",))


def plane(p: int) -> RingSpec:
    return RingSpec(p, ("x", "y"))


def twisted(ring: RingSpec, s: int = 0) -> CartierModuleDesc:
    """(R, kappa * x^s)."""
    return CartierModuleDesc(
        carrier=FractionalSubmodule.unit(ring),
        twist=Polynomial.filtvar_power(ring, s),
    )


def xpow(ring: RingSpec, k: int) -> FractionalSubmodule:
    """x^k R for any integer k."""
    return FractionalSubmodule.unit(ring).mul_filtvar(k)


@pytest.fixture
def line3() -> RingSpec:
    return line(3)


@pytest.fixture
def line5() -> RingSpec:
    return line(5)
