import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from .table import ActionDescriptor, FiltrationTable, table_from_values
from ..algebra.ring import RingSpec
from ..cartier.modules import FractionalSubmodule
from ..geometry.kummer import KummerCovering, g_invariants
from ..utils.errors import InputError, UnsupportedStructureError


Window = Tuple[Fraction, Fraction]


@dataclass(frozen=True)
class TameDescriptor:
    """Rank-1 unit F-module on R_x trivialized by the degree-n Kummer covering.

    s is the character: upstairs the structure is kappa_S t^{s(p-1)},
    downstairs kappa x^{s(p-1)/n}.
    """

    n: int
    s: int = 0
    rank: int = 1

    def __post_init__(self):
        if self.rank != 1:
            raise UnsupportedStructureError("only rank-1 descriptors are supported")
        if self.n < 1:
            raise InputError(f"Kummer degree must be positive, got {self.n}")
        if not 0 <= self.s <= self.n:
            raise InputError(f"character s={self.s} outside [0, {self.n}]")

    def check_ring(self, ring: RingSpec) -> None:
        p = ring.characteristic
        if (p - 1) % self.n:
            raise UnsupportedStructureError(f"n={self.n} does not divide p-1={p - 1}")

    def downstairs_twist(self, p: int) -> int:
        return self.s * (p - 1) // self.n

    def action(self, p: int) -> ActionDescriptor:
        return ActionDescriptor(frobenius_twist=self.downstairs_twist(p))

    def label(self) -> str:
        return f"V(n={self.n}, s={self.s})"


def _candidates(window: Window, n: int) -> List[Fraction]:
    lo, hi = window
    return [Fraction(a, n) for a in range(math.floor(lo * n), math.ceil(hi * n) + 1)]


def trivial_v(ring: RingSpec, window: Window, rank: int = 1) -> FiltrationTable:
    """V^a = x^ceil(a) R: the V-filtration of the trivial rank-1 module."""
    if rank != 1:
        raise UnsupportedStructureError("only rank-1 filtrations are supported")
    lo, hi = (Fraction(w) for w in window)
    unit = FractionalSubmodule.unit(ring)
    return table_from_values(
        ring,
        (lo, hi),
        _candidates((lo, hi), 1),
        lambda a: unit.mul_filtvar(math.ceil(a)),
        action=ActionDescriptor(),
        label=f"trivial V on {ring.describe()}",
    )


def stadnik_v(d: TameDescriptor, ring: RingSpec, window: Window) -> FiltrationTable:
    """V-filtration on R_x as G-invariants of the trivial one upstairs.

    V^b = (t^{n-1+s} V^{nb}_triv)^G with delta_0 <-> t^{n-1}.
    """
    d.check_ring(ring)
    lo, hi = (Fraction(w) for w in window)
    cov = KummerCovering.build(ring, d.n)
    upstairs = FractionalSubmodule.unit(cov.cover)

    def value(b: Fraction) -> FractionalSubmodule:
        level = upstairs.mul_filtvar(d.n - 1 + d.s + math.ceil(d.n * b))
        return g_invariants(level, cov)

    return table_from_values(
        ring,
        (lo, hi),
        _candidates((lo, hi), d.n),
        value,
        action=d.action(ring.characteristic),
        label=d.label(),
    )


def stadnik_v_direct(d: TameDescriptor, ring: RingSpec, window: Window) -> FiltrationTable:
    """Closed form V^b = x^ceil((ceil(nb) + s)/n) R, built without the covering."""
    d.check_ring(ring)
    lo, hi = (Fraction(w) for w in window)
    unit = FractionalSubmodule.unit(ring)
    return table_from_values(
        ring,
        (lo, hi),
        _candidates((lo, hi), d.n),
        lambda b: unit.mul_filtvar(math.ceil(Fraction(math.ceil(d.n * b) + d.s, d.n))),
        action=d.action(ring.characteristic),
        label=f"{d.label()} closed form",
    )
