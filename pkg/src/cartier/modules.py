import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Optional, Tuple

from ..algebra.groebner import Ideal, ReducedGB, normal_form
from ..algebra.parser import parse_polynomial
from ..algebra.poly import Polynomial
from ..algebra.ring import RingSpec
from ..utils.errors import InputError


@dataclass(frozen=True)
class FractionalSubmodule:
    """x^{-shift} * I inside R_x, x the ring's filtration variable.

    Always stored canonically: reduced basis, and the smallest shift among
    equal representations, so dataclass equality is submodule equality.
    """

    ring: RingSpec
    shift: int
    gb: ReducedGB

    @classmethod
    def of(cls, ideal: Ideal, shift: int = 0) -> "FractionalSubmodule":
        ring = ideal.ring
        if shift < 0:
            ideal = ideal.scale(Polynomial.filtvar_power(ring, -shift))
            shift = 0
        gb = ideal.reduced()
        if gb.is_zero():
            return cls(ring, 0, gb)
        basis = list(gb.basis)
        fv = ring.filtvar
        strip = min(shift, min(g.min_degree_in(fv) for g in basis))
        if strip:
            # x*J has reduced basis x*(reduced basis of J)
            basis = [g.divide_filtvar(strip) for g in basis]
            gb = ReducedGB(ring, tuple(basis))
        return cls(ring, shift - strip, gb)

    @classmethod
    def unit(cls, ring: RingSpec, shift: int = 0) -> "FractionalSubmodule":
        """x^{-shift} R."""
        return cls.of(Ideal.unit(ring), shift)

    @classmethod
    def zero(cls, ring: RingSpec) -> "FractionalSubmodule":
        return cls.of(Ideal.zero(ring))

    @classmethod
    def generated_by(
        cls, ring: RingSpec, generators, shift: int = 0
    ) -> "FractionalSubmodule":
        return cls.of(Ideal(ring, tuple(generators)), shift)

    @property
    def ideal(self) -> Ideal:
        return Ideal.from_reduced(self.gb)

    @property
    def basis(self) -> Tuple[Polynomial, ...]:
        return self.gb.basis

    def is_zero(self) -> bool:
        return self.gb.is_zero()

    def at_shift(self, k: int) -> Ideal:
        """The ideal J with self = x^{-k} J, for k >= shift."""
        if k < self.shift:
            raise ValueError(f"cannot represent shift {self.shift} at shift {k}")
        if k == self.shift:
            return self.ideal
        return self.ideal.scale(Polynomial.filtvar_power(self.ring, k - self.shift))

    def _common(self, other: "FractionalSubmodule") -> Tuple[int, Ideal, Ideal]:
        self.ring.check_same(other.ring)
        k = max(self.shift, other.shift)
        return k, self.at_shift(k), other.at_shift(k)

    def contains(self, other: "FractionalSubmodule") -> bool:
        """True when other is a subset of self."""
        if other.is_zero():
            return True
        _, mine, theirs = self._common(other)
        return mine.contains(theirs)

    def contains_element(self, g: Polynomial, shift: int = 0) -> bool:
        """Is x^{-shift} g in self?"""
        return self.contains(FractionalSubmodule.generated_by(self.ring, [g], shift))

    def residue(self, g: Polynomial, shift: int = 0) -> Polynomial:
        """Normal form of x^{-shift} g lifted to a common shift with self."""
        k = max(self.shift, shift)
        lifted = g * Polynomial.filtvar_power(self.ring, k - shift)
        return normal_form(lifted, self.at_shift(k).reduced())

    def __add__(self, other: "FractionalSubmodule") -> "FractionalSubmodule":
        k, mine, theirs = self._common(other)
        return FractionalSubmodule.of(mine + theirs, k)

    def scale(self, g: Polynomial) -> "FractionalSubmodule":
        return FractionalSubmodule.of(self.ideal.scale(g), self.shift)

    def mul_filtvar(self, k: int) -> "FractionalSubmodule":
        """x^k * self for any integer k."""
        if self.is_zero():
            return self
        return FractionalSubmodule.of(self.ideal, self.shift - k)

    def generators(self) -> Tuple[Tuple[Polynomial, int], ...]:
        """Generators as (g, shift) pairs meaning x^{-shift} g."""
        return tuple((g, self.shift) for g in self.basis)

    def __str__(self) -> str:
        body = ", ".join(self.gb.lines()) or "0"
        if self.shift:
            return f"{self.ring.filtvar_name}^-{self.shift}*({body})"
        return f"({body})"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "shift": self.shift,
            "basis": self.gb.lines(),
            "ring": self.ring.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "FractionalSubmodule":
        """Inverse of to_dict."""
        ring = RingSpec.from_dict(data["ring"])
        gens = [parse_polynomial(text, ring) for text in data["basis"]]
        return cls.generated_by(ring, gens, data["shift"])


def element_text(g: Polynomial, shift: int) -> str:
    if not shift:
        return str(g)
    return f"{g.ring.filtvar_name}^-{shift}*({g})"


class Provenance(str, Enum):
    PLAIN = "plain"
    PUSHFORWARD_MODEL = "pushforward-model"
    KUMMER_PULLBACK = "kummer-pullback"


@dataclass(frozen=True)
class CartierModuleDesc:
    """Rank-1 Cartier module: carrier plus structural map m -> kappa(twist * m)."""

    carrier: FractionalSubmodule
    twist: Polynomial
    provenance: Provenance = Provenance.PLAIN
    covering: Optional[Any] = field(default=None, compare=False)

    def __post_init__(self):
        self.carrier.ring.check_same(self.twist.ring)

    @property
    def ring(self) -> RingSpec:
        return self.carrier.ring

    @property
    def is_model(self) -> bool:
        return self.provenance == Provenance.PUSHFORWARD_MODEL

    def multiplier(self, shift: int, e: int) -> Polynomial:
        """g^{(p^e-1)/(p-1)} x^{shift (p^e-1)}: e-fold multiplier before kappa^e."""
        p = self.ring.characteristic
        q = p ** e
        return (self.twist ** ((q - 1) // (p - 1))) * Polynomial.filtvar_power(
            self.ring, shift * (q - 1)
        )

    def describe(self) -> str:
        return f"({self.carrier}, kappa*{self.twist}) [{self.provenance.value}]"


@dataclass(frozen=True)
class CartierAlgebraSpec:
    """Cartier algebra generated in degree e by kappa^e f^ceil(t p^e)."""

    f: Polynomial
    t: Fraction = Fraction(0)

    def __post_init__(self):
        t = Fraction(self.t)
        if t < 0:
            raise InputError(f"Cartier algebra parameter must be >= 0, got {t}")
        object.__setattr__(self, "t", t)

    def exponent(self, e: int) -> int:
        return math.ceil(self.t * self.f.ring.characteristic ** e)


def parse_rational(text: str) -> Fraction:
    """Exact rational from 'a', 'a/b' or '-a/b'."""
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise InputError(f"not an exact rational: {text!r}") from None
    if "." in text or "e" in text.lower():
        raise InputError(f"rationals must be written as a/b, got {text!r}")
    return value
