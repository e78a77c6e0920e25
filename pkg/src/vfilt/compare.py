import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Iterable, List, Optional, Tuple

from .axioms import FAIL, PASS, SKIP, AxiomEntry, annihilator
from .stadnik import TameDescriptor, Window, stadnik_v
from ..algebra.poly import Polynomial
from ..algebra.ring import RingSpec
from ..testmod.models import pushforward_model
from ..testmod.test_module import test_module, test_module_left
from ..utils.errors import InputError, UnsupportedStructureError
from ..utils.logger import get_logger


logger = get_logger("compare")


@dataclass
class CompareReport:
    descriptor: TameDescriptor
    entries: List[AxiomEntry] = field(default_factory=list)
    graded: Optional[AxiomEntry] = None

    @property
    def passed(self) -> bool:
        statuses = [e.status for e in self.entries]
        if self.graded is not None:
            statuses.append(self.graded.status)
        return FAIL not in statuses

    def failed_points(self) -> List[str]:
        return [e.t for e in self.entries if e.status == FAIL]

    def to_list(self) -> List[dict]:
        rows = [asdict(e) for e in self.entries]
        if self.graded is not None:
            rows.append(asdict(self.graded))
        return rows


def default_points(d: TameDescriptor, window: Window) -> List[Fraction]:
    """Points a/(2n) in (lo, hi]."""
    lo, hi = window
    step = Fraction(1, 2 * d.n)
    first = math.floor(lo / step) + 1
    last = math.floor(hi / step)
    return [k * step for k in range(first, last + 1)]


def compare_v_tau(
    d: TameDescriptor,
    ring: RingSpec,
    window: Tuple = (Fraction(-1), Fraction(2)),
    points: Optional[Iterable] = None,
    strict: bool = True,
) -> CompareReport:
    """V^t against tau(model, x^{t+1-eps}) on a grid, plus Gr^0_V against Gr^1_tau.

    With strict the window must lie in (-1, t_max]; the non-strict mode
    evaluates outside it, where the identity is expected to fail.
    """
    lo, hi = (Fraction(w) for w in window)
    points = sorted(Fraction(t) for t in points) if points is not None else default_points(d, (lo, hi))
    if strict and (lo < -1 or any(t <= -1 for t in points)):
        raise InputError(f"comparison window must lie in (-1, {hi}]")
    if not points:
        raise InputError("no comparison points in the window")

    p = ring.characteristic
    x = Polynomial.filtvar_power(ring, 1)
    model = pushforward_model(ring, Polynomial.filtvar_power(ring, d.downstairs_twist(p)))
    table_lo = min(lo, points[0])
    table_hi = max(hi, points[-1], Fraction(1))
    V = stadnik_v(d, ring, (table_lo, table_hi))

    report = CompareReport(descriptor=d)
    for t in points:
        v_value = V.value_at(t)
        tau_value = test_module_left(model, x, t + 1)
        status = PASS if v_value == tau_value else FAIL
        report.entries.append(
            AxiomEntry(
                axiom="compare",
                t=str(t),
                status=status,
                witness="" if status == PASS else f"V={v_value} tau={tau_value}",
                notes=f"{v_value}",
            )
        )

    if V.in_window(0):
        report.graded = _compare_graded(V, model, x)
    logger.info(
        f"compare {d.label()} over {ring.describe()}: "
        f"{len(report.failed_points())} of {len(points)} points failed"
    )
    return report


def _compare_graded(V, model, x) -> AxiomEntry:
    v_upper, v_lower = V.value_at(0), V.value_after(0)
    tau_upper, tau_lower = test_module_left(model, x, 1), test_module(model, x, 1)
    v_zero, tau_zero = v_upper == v_lower, tau_upper == tau_lower
    if v_zero or tau_zero:
        status = PASS if v_zero == tau_zero else FAIL
        return AxiomEntry("graded", "0", status, notes=f"Gr^0_V zero={v_zero}, Gr^1_tau zero={tau_zero}")
    try:
        ann_v = annihilator(v_upper, v_lower)
        ann_tau = annihilator(tau_upper, tau_lower)
    except UnsupportedStructureError as exc:
        return AxiomEntry("graded", "0", SKIP, notes=str(exc))
    same = ann_v.same_as(ann_tau)
    return AxiomEntry(
        "graded",
        "0",
        PASS if same else FAIL,
        witness="" if same else ", ".join(ann_tau.reduced().lines()),
        notes=f"ann(Gr^0_V) = ({', '.join(ann_v.reduced().lines())})",
    )
