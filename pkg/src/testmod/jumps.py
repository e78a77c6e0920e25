import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from .test_module import filtration_param, test_module, test_module_left
from ..algebra.poly import Polynomial
from ..cartier.modules import CartierModuleDesc, FractionalSubmodule
from ..utils.errors import InputError
from ..utils.limits import get_limits
from ..utils.logger import get_logger


logger = get_logger("jumps")

Rational = Union[Fraction, int, str]


@dataclass
class JumpReport:
    """Jumping numbers found on an interval, complete up to denominator_bound."""

    points: List[Fraction]
    denominator_bound: int
    unresolved: List[Tuple[Fraction, Fraction]] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "jumps": [str(j) for j in self.points],
            "denominator_bound": self.denominator_bound,
            "unresolved": [[str(a), str(b)] for a, b in self.unresolved],
        }


class JumpScanner:
    """Locates jumps of t -> tau(M, f^t) on a grid of step 1/(D_max p^2)."""

    def __init__(self, M: CartierModuleDesc, f: Polynomial, d_max: Optional[int] = None):
        self.M = M
        self.f = f
        self.p = M.ring.characteristic
        self.d_max = d_max or get_limits().denominator_bound
        self.refine_depth = get_limits().refine_depth
        self.step = Fraction(1, self.d_max * self.p ** 2)
        self._values: Dict[Fraction, FractionalSubmodule] = {}
        self.jumps: set = set()
        self.unresolved: List[Tuple[Fraction, Fraction]] = []

    def value(self, t: Fraction) -> FractionalSubmodule:
        if t not in self._values:
            self._values[t] = test_module(self.M, self.f, t, validate=False)
        return self._values[t]

    def left_value(self, t: Fraction) -> Optional[FractionalSubmodule]:
        if t <= 0 and not self.M.is_model:
            return None
        return test_module_left(self.M, self.f, t)

    def grid(self, a: Fraction, b: Fraction) -> List[Fraction]:
        first = math.ceil(a / self.step)
        last = math.floor(b / self.step)
        points = {self.step * k for k in range(first, last + 1)}
        points.update((a, b))
        return sorted(points)

    def scan_interval(self, lo: Fraction, hi: Fraction, depth: int = 0) -> None:
        """Record jumps in (lo, hi]."""
        low, high = self.value(lo), self.value(hi)
        if low == high:
            return
        before_hi = self.left_value(hi)
        if before_hi != high:
            self.jumps.add(hi)
        if before_hi == low:
            return
        if depth >= self.refine_depth:
            logger.warning(f"unresolved jumps inside ({lo}, {hi})")
            self.unresolved.append((lo, hi))
            return
        width = (hi - lo) / self.p
        points = [lo + width * i for i in range(self.p + 1)]
        for left, right in zip(points, points[1:]):
            self.scan_interval(left, right, depth + 1)

    def scan(self, a: Fraction, b: Fraction) -> None:
        points = self.grid(a, b)
        for lo, hi in zip(points, points[1:]):
            self.scan_interval(lo, hi)
        before_a = self.left_value(a)
        if before_a is not None and before_a != self.value(a):
            self.jumps.add(a)


def jumping_numbers(
    M: CartierModuleDesc,
    f: Polynomial,
    a: Rational,
    b: Rational,
    d_max: Optional[int] = None,
    closed_right: bool = False,
) -> JumpReport:
    """Jumps of tau(M, f^t) in [a, b), or [a, b] with closed_right.

    The left endpoint counts only where a left value exists.
    """
    a, b = filtration_param(a), filtration_param(b)
    if a >= b:
        raise InputError(f"empty interval [{a}, {b}]")
    scanner = JumpScanner(M, f, d_max)
    scanner.scan(a, b)
    points = sorted(j for j in scanner.jumps if j < b or (closed_right and j == b))
    return JumpReport(
        points=points,
        denominator_bound=scanner.d_max * scanner.p ** 2,
        unresolved=sorted(scanner.unresolved),
    )


def f_pure_threshold(
    M: CartierModuleDesc, f: Polynomial, d_max: Optional[int] = None
) -> Optional[Fraction]:
    """First jump in (0, 1], or None.

    tau is descending, so the first grid point below tau(f^0) is found by
    bisection before the enclosing interval is scanned.
    """
    scanner = JumpScanner(M, f, d_max)
    start = scanner.value(Fraction(0))
    points = scanner.grid(Fraction(0), Fraction(1))
    if scanner.value(points[-1]) == start:
        return None
    lo, hi = 0, len(points) - 1
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if scanner.value(points[mid]) == start:
            lo = mid
        else:
            hi = mid
    scanner.scan_interval(points[lo], points[hi])
    if not scanner.jumps:
        return None
    fpt = min(scanner.jumps)
    logger.info(f"F-pure threshold of {f}: {fpt}")
    return fpt
