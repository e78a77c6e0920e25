import bisect
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Callable, Iterable, List, Optional, Tuple

from ..algebra.poly import Polynomial
from ..algebra.ring import RingSpec
from ..cartier.modules import CartierModuleDesc, FractionalSubmodule
from ..testmod.jumps import jumping_numbers
from ..testmod.test_module import filtration_param, test_module
from ..utils.errors import OutOfWindowError, VerificationFailure


@dataclass(frozen=True)
class ActionDescriptor:
    """How the p-power structure alpha acts on representatives.

    alpha(x^{-n} g) = x^{-w} x^{-np} g^p with w the frobenius twist; with
    quotient_integral every submodule is read modulo the integral lattice R.
    """

    frobenius_twist: int = 0
    quotient_integral: bool = False

    def frobenius(self, g: Polynomial, shift: int) -> Tuple[Polynomial, int]:
        image = g.frobenius(1)
        new_shift = shift * g.ring.characteristic + self.frobenius_twist
        if new_shift < 0:
            image = image * Polynomial.filtvar_power(g.ring, -new_shift)
            new_shift = 0
        return image, new_shift


@dataclass(frozen=True)
class FiltrationTable:
    """Descending filtration with finitely many jumps on a closed window.

    values[0] holds on the window start; values[i] holds after jumps[i-1].
    Right-continuous tables change value at a jump, left-continuous ones
    right after it.
    """

    ring: RingSpec
    window: Tuple[Fraction, Fraction]
    jumps: Tuple[Fraction, ...]
    values: Tuple[FractionalSubmodule, ...]
    left_continuous: bool = False
    action: Optional[ActionDescriptor] = None
    label: str = ""

    def __post_init__(self):
        lo, hi = self.window
        if len(self.values) != len(self.jumps) + 1:
            raise ValueError("a filtration table needs one more value than jumps")
        if list(self.jumps) != sorted(set(self.jumps)):
            raise ValueError("jumps must be strictly increasing")
        if any(j < lo or j > hi for j in self.jumps):
            raise ValueError(f"jump outside window [{lo}, {hi}]")
        for before, after in zip(self.values, self.values[1:]):
            if before == after or not before.contains(after):
                raise VerificationFailure(
                    f"filtration {self.label!r} does not strictly decrease: {before} -> {after}"
                )

    def _check(self, t: Fraction) -> Fraction:
        t = filtration_param(t)
        lo, hi = self.window
        if not lo <= t <= hi:
            raise OutOfWindowError(f"t={t} outside window [{lo}, {hi}]")
        return t

    def in_window(self, t: Fraction) -> bool:
        lo, hi = self.window
        return lo <= t <= hi

    def value_at(self, t) -> FractionalSubmodule:
        t = self._check(t)
        if self.left_continuous:
            return self.values[bisect.bisect_left(self.jumps, t)]
        return self.values[bisect.bisect_right(self.jumps, t)]

    def value_after(self, t) -> FractionalSubmodule:
        """Value on (t, t + eps)."""
        return self.values[bisect.bisect_right(self.jumps, self._check(t))]

    def value_before(self, t) -> FractionalSubmodule:
        """Value on (t - eps, t)."""
        return self.values[bisect.bisect_left(self.jumps, self._check(t))]

    def without_jump(self, jump) -> "FiltrationTable":
        """Drop one jump; the earlier value extends over the merged piece."""
        jump = filtration_param(jump)
        index = self.jumps.index(jump)
        return replace(
            self,
            jumps=self.jumps[:index] + self.jumps[index + 1:],
            values=self.values[: index + 1] + self.values[index + 2:],
            label=f"{self.label} without {jump}",
        )

    def grid_points(self) -> List[Fraction]:
        """Window ends, jumps and the midpoints between them."""
        lo, hi = self.window
        anchors = sorted({lo, hi, *self.jumps})
        mids = [(a + b) / 2 for a, b in zip(anchors, anchors[1:])]
        return sorted(set(anchors) | set(mids))

    def rows(self) -> List[dict]:
        lo, hi = self.window
        bounds = [lo, *self.jumps, hi]
        return [
            {"from": str(a), "to": str(b), "value": str(v), "shift": v.shift, "basis": v.gb.lines()}
            for a, b, v in zip(bounds, bounds[1:], self.values)
        ]

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "ring": self.ring.to_dict(),
            "window": [str(self.window[0]), str(self.window[1])],
            "left_continuous": self.left_continuous,
            "jumps": [str(j) for j in self.jumps],
            "pieces": self.rows(),
        }


def table_from_values(
    ring: RingSpec,
    window: Tuple[Fraction, Fraction],
    candidates: Iterable[Fraction],
    value: Callable[[Fraction], FractionalSubmodule],
    action: Optional[ActionDescriptor] = None,
    label: str = "",
) -> FiltrationTable:
    """Left-continuous table of a value function jumping only at candidates."""
    lo, hi = (filtration_param(w) for w in window)
    points = sorted({lo, hi} | {c for c in candidates if lo <= c < hi})
    computed = [value(t) for t in points]
    jumps, values = [], [computed[0]]
    for t, before, after in zip(points, computed, computed[1:]):
        if after != before:
            jumps.append(t)
            values.append(after)
    return FiltrationTable(
        ring=ring,
        window=(lo, hi),
        jumps=tuple(jumps),
        values=tuple(values),
        left_continuous=True,
        action=action,
        label=label,
    )


def tau_table(
    M: CartierModuleDesc,
    f: Polynomial,
    window: Tuple[Fraction, Fraction],
    d_max: Optional[int] = None,
) -> FiltrationTable:
    """Right-continuous table of t -> tau(M, f^t) on the window."""
    lo, hi = (filtration_param(w) for w in window)
    report = jumping_numbers(M, f, lo, hi, d_max, closed_right=True)
    jumps = tuple(j for j in report.points if j > lo)
    values = (test_module(M, f, lo),) + tuple(test_module(M, f, j) for j in jumps)
    return FiltrationTable(
        ring=M.ring,
        window=(lo, hi),
        jumps=jumps,
        values=values,
        left_continuous=False,
        label=f"tau({M.describe()}, ({f})^t)",
    )
