import math
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from .oracles import line_tau_oracle, nu_oracle, principal_root_oracle
from ..algebra.frobenius import frobenius_root
from ..algebra.groebner import Ideal
from ..algebra.parser import parse_polynomial
from ..algebra.poly import Polynomial
from ..algebra.ring import RingSpec
from ..cartier.chain import is_f_pure
from ..cartier.modules import (
    CartierAlgebraSpec,
    CartierModuleDesc,
    FractionalSubmodule,
    parse_rational,
)
from ..geometry.affine import affine_line_shriek, extend_polynomial, extend_submodule
from ..geometry.kummer import (
    KummerCovering,
    g_invariants,
    invariants_inside_tau,
    kummer_shriek,
    trace,
)
from ..testmod.jumps import f_pure_threshold
from ..testmod.models import fractional_model
from ..testmod.test_module import is_f_regular, test_module
from ..utils.config import get_acceptance_config
from ..utils.errors import KernelError, UsageError
from ..utils.logger import get_logger
from ..vfilt.axioms import check_v_axioms
from ..vfilt.compare import compare_v_tau
from ..vfilt.graph import graph_counterexample_check, graph_embedding_table
from ..vfilt.stadnik import TameDescriptor


logger = get_logger("acceptance")

PASS, FAIL, ERROR = "pass", "fail", "error"

Outcome = Tuple[bool, str]


class AcceptanceEntry(BaseModel):
    """One row of config/acceptance.yaml."""

    model_config = ConfigDict(extra="forbid")

    id: int
    anchor: str
    check: str
    primes: List[int]
    params: Dict = Field(default_factory=dict)


@dataclass
class AcceptanceResult:
    id: int
    anchor: str
    char: int
    status: str
    detail: str = ""
    seconds: float = 0.0

    def to_dict(self) -> dict:
        # timings are logged, not printed
        data = asdict(self)
        data.pop("seconds")
        return data


@dataclass
class SuiteReport:
    results: List[AcceptanceResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.status == PASS for r in self.results)

    def failures(self) -> List[AcceptanceResult]:
        return [r for r in self.results if r.status != PASS]

    def rows(self) -> List[dict]:
        return [r.to_dict() for r in self.results]


# -- helpers ----------------------------------------------------------------


def rational_grid(lo, hi, max_denominator: int) -> List[Fraction]:
    """All a/b in [lo, hi] with b <= max_denominator."""
    lo, hi = Fraction(lo), Fraction(hi)
    points = set()
    for b in range(1, max_denominator + 1):
        for a in range(math.ceil(lo * b), math.floor(hi * b) + 1):
            points.add(Fraction(a, b))
    return sorted(points)


def line_ring(p: int) -> RingSpec:
    return RingSpec(p, ("x",))


def plane_ring(p: int) -> RingSpec:
    return RingSpec(p, ("x", "y"))


def twisted_line(ring: RingSpec, s: int) -> CartierModuleDesc:
    """(R, kappa * x^s)."""
    return CartierModuleDesc(
        carrier=FractionalSubmodule.unit(ring),
        twist=Polynomial.filtvar_power(ring, s),
    )


def kummer_degrees(p: int) -> List[int]:
    return [n for n in range(1, p) if (p - 1) % n == 0]


def _mismatch(label: str, got, expected) -> Outcome:
    return False, f"{label}: got {got}, expected {expected}"


# -- checks -----------------------------------------------------------------


def check_frobenius_root_closed_form(p: int, params: dict) -> Outcome:
    ring = line_ring(p)
    x = Polynomial.filtvar_power(ring, 1)
    count = 0
    for a in range(params.get("max_exponent", 200) + 1):
        for e in range(1, params.get("max_level", 3) + 1):
            got = frobenius_root(Ideal.principal(x ** a), e)
            expected = Ideal.principal(x ** (a // p ** e))
            if not got.same_as(expected):
                return _mismatch(f"(x^{a})^[1/{p}^{e}]", got.reduced(), expected.reduced())
            if not got.same_as(principal_root_oracle(ring, a, e)):
                return False, f"(x^{a})^[1/{p}^{e}] disagrees with the search oracle"
            count += 1
    return True, f"{count} roots"


def check_tau_line_closed_form(p: int, params: dict) -> Outcome:
    ring = line_ring(p)
    x = Polynomial.filtvar_power(ring, 1)
    M = twisted_line(ring, 0)
    grid = rational_grid(0, params.get("upper", 5), params.get("max_denominator", 30))
    levels = params.get("oracle_levels", 4)
    for t in grid:
        tau = test_module(M, x, t)
        expected = FractionalSubmodule.of(Ideal.principal(x ** math.floor(t)))
        if tau != expected:
            return _mismatch(f"tau at t={t}", tau, expected)
        oracle = line_tau_oracle(ring, t, levels)
        if oracle != expected:
            return _mismatch(f"oracle at t={t}", oracle, expected)
    return True, f"{len(grid)} grid points"


def check_twist_criterion(p: int, params: dict) -> Outcome:
    ring = line_ring(p)
    x = Polynomial.filtvar_power(ring, 1)
    for s in range(p):
        regular = is_f_regular(twisted_line(ring, s))
        if regular != (s <= p - 2):
            return _mismatch(f"F-regularity of kappa*x^{s}", regular, s <= p - 2)
    top = test_module(twisted_line(ring, p - 1), x, 0)
    expected = FractionalSubmodule.of(Ideal.principal(x))
    if top != expected:
        return _mismatch(f"tau(kappa*x^{p - 1})", top, expected)
    return True, f"s in [0, {p - 1}]"


def check_briancon_skoda(p: int, params: dict) -> Outcome:
    ring = line_ring(p)
    x = Polynomial.filtvar_power(ring, 1)
    line_grid = rational_grid(
        0, params.get("line_upper", 5), params.get("line_max_denominator", 30)
    )
    cases = [(twisted_line(ring, s), x, line_grid) for s in range(p)]
    plane = plane_ring(p)
    plane_grid = rational_grid(
        0, params.get("plane_upper", 5), params.get("plane_max_denominator", 12)
    )
    for text in params.get("plane_elements", ["x^2", "x*y", "x^2*y"]):
        cases.append((twisted_line(plane, 0), parse_polynomial(text, plane), plane_grid))
    checked = 0
    for M, f, grid in cases:
        for t in grid:
            lhs = test_module(M, f, t).scale(f)
            rhs = test_module(M, f, t + 1)
            if lhs != rhs:
                return _mismatch(f"f*tau(f^{t}) for {M.describe()}, f={f}", lhs, rhs)
            checked += 1
    return True, f"{checked} identities"


def check_model_independence(p: int, params: dict) -> Outcome:
    ring = line_ring(p)
    x = Polynomial.filtvar_power(ring, 1)
    models = [fractional_model(ring, n) for n in params.get("shifts", [1, 2, 3])]
    grid = rational_grid(-2, 2, params.get("max_denominator", 4))
    for t in grid:
        values = [test_module(M, x, t) for M in models]
        if any(v != values[0] for v in values):
            return False, f"models disagree at t={t}: {', '.join(map(str, values))}"
    return True, f"{len(models)} models, {len(grid)} points"


def check_tau_of_tau_and_powers(p: int, params: dict) -> Outcome:
    ring = line_ring(p)
    x = Polynomial.filtvar_power(ring, 1)
    modules = [twisted_line(ring, 0), twisted_line(ring, 1), fractional_model(ring, 1)]
    grid = rational_grid(0, 2, params.get("max_denominator", 6))
    for M in modules:
        inner = CartierModuleDesc(
            carrier=test_module(M, x, 0), twist=M.twist, provenance=M.provenance
        )
        for t in grid:
            lhs, rhs = test_module(M, x, t), test_module(inner, x, t)
            if lhs != rhs:
                return _mismatch(f"tau(tau) for {M.describe()} at t={t}", rhs, lhs)

    plane = plane_ring(p)
    for text in params.get("bases", ["x", "x*y"]):
        g = parse_polynomial(text, plane)
        M = twisted_line(plane, 0)
        for n in params.get("powers", [2, 3]):
            for a in range(2 * n + 1):
                lhs = test_module(M, g ** n, Fraction(a, n))
                rhs = test_module(M, g, a)
                if lhs != rhs:
                    return _mismatch(f"tau(({g})^{n})^({a}/{n})", lhs, rhs)
    return True, "tau-of-tau and power rule"


def check_kummer_invariance(p: int, params: dict) -> Outcome:
    ring = line_ring(p)
    x = Polynomial.filtvar_power(ring, 1)
    grid = rational_grid(0, 2, params.get("max_denominator", 4))
    checked = 0
    for n in kummer_degrees(p):
        cov = KummerCovering.build(ring, n)
        for s in params.get("twists", [0, 1]):
            M = twisted_line(ring, s)
            pulled = kummer_shriek(M, cov)
            for t in grid:
                down = test_module(M, x, t)
                up = test_module(pulled.module, pulled.filtration_element(), t)
                if g_invariants(up, cov) != down:
                    return _mismatch(f"invariants n={n} s={s} t={t}", g_invariants(up, cov), down)
                if trace(up, cov) != down:
                    return _mismatch(f"trace n={n} s={s} t={t}", trace(up, cov), down)
                if not invariants_inside_tau(M, cov, t):
                    return False, f"invariants not inside tau for n={n} s={s} t={t}"
                checked += 1
    return True, f"{checked} coverings and parameters"


def check_kummer_negative(p: int, params: dict) -> Outcome:
    ring = line_ring(p)
    cov = KummerCovering.build(ring, p - 1)
    pulled = kummer_shriek(twisted_line(ring, 1), cov)
    f = pulled.filtration_element()
    pure = is_f_pure(pulled.module, CartierAlgebraSpec(f))
    regular = is_f_regular(pulled.module, f)
    if not pure or regular:
        return False, f"expected F-pure and not F-regular, got pure={pure} regular={regular}"
    return True, f"n={p - 1}: F-pure, not F-regular"


def check_comparison(p: int, params: dict) -> Outcome:
    ring = line_ring(p)
    window = tuple(parse_rational(w) for w in params.get("window", ["-1", "2"]))
    count = 0
    for n in kummer_degrees(p):
        for s in range(n + 1):
            report = compare_v_tau(TameDescriptor(n, s), ring, window)
            if not report.passed:
                return False, f"(n={n}, s={s}) fails at {', '.join(report.failed_points())}"
            count += 1
    control = params.get("negative_control")
    if control and p in control.get("primes", [p]):
        d = TameDescriptor(control["n"], control.get("s", 1))
        points = [parse_rational(t) for t in control["points"]]
        report = compare_v_tau(d, ring, window, points=points, strict=False)
        if len(report.failed_points()) != len(points):
            return False, f"negative control passed at some of {control['points']}"
    return True, f"{count} descriptors"


def check_graph_counterexample(p: int, params: dict) -> Outcome:
    witnesses = []
    for s in range(1, p - 1):
        result = graph_counterexample_check(p, s)
        expected = f"x^{s * p}"
        if result.member or result.witness != expected or not result.generator_member:
            return _mismatch(f"graph embedding s={s}", result.verdict, f"NON-MEMBER witness {expected}")
        table = graph_embedding_table(p, s)
        report = check_v_axioms(table, Polynomial.variable(table.ring, "x"))
        if not report.failures("iii"):
            return False, f"axiom (iii) unexpectedly holds for s={s}"
        witnesses.append(result.witness)
    return True, "witnesses " + ", ".join(witnesses)


def check_affine_line(p: int, params: dict) -> Outcome:
    ring = line_ring(p)
    x = Polynomial.filtvar_power(ring, 1)
    grid = rational_grid(0, params.get("upper", 5), params.get("max_denominator", 30))
    for s in params.get("twists", [0]):
        M = twisted_line(ring, s)
        lifted = affine_line_shriek(M)
        x_up = extend_polynomial(x, lifted.ring)
        for t in grid:
            lhs = extend_submodule(test_module(M, x, t), lifted.ring)
            rhs = test_module(lifted, x_up, t)
            if lhs != rhs:
                return _mismatch(f"pullback of tau at t={t}", rhs, lhs)
    return True, f"{len(grid)} grid points"


def check_cusp_threshold(p: int, params: dict) -> Outcome:
    ring = plane_ring(p)
    f = parse_polynomial(params.get("f", "x^2 + y^3"), ring)
    expected = parse_rational(params.get("expected", "4/5"))
    fpt = f_pure_threshold(twisted_line(ring, 0), f, params.get("denominator_bound"))
    if fpt != expected:
        return _mismatch(f"F-pure threshold of {f}", fpt, expected)
    nus = []
    for e in range(1, params.get("oracle_levels", 3) + 1):
        q = p ** e
        nu = nu_oracle(f, e)
        if not Fraction(nu, q) < fpt <= Fraction(nu + 1, q):
            return False, f"nu({q}) = {nu} does not bracket {fpt}"
        nus.append(f"nu({q})={nu}")
    first = params.get("nu_first")
    if first is not None and nu_oracle(f, 1) != first:
        return _mismatch(f"nu({p})", nu_oracle(f, 1), first)
    return True, f"fpt {fpt}; " + ", ".join(nus)


CHECKS: Dict[str, Callable[[int, dict], Outcome]] = {
    "frobenius_root_closed_form": check_frobenius_root_closed_form,
    "tau_line_closed_form": check_tau_line_closed_form,
    "twist_criterion": check_twist_criterion,
    "briancon_skoda": check_briancon_skoda,
    "model_independence": check_model_independence,
    "tau_of_tau_and_powers": check_tau_of_tau_and_powers,
    "kummer_invariance": check_kummer_invariance,
    "kummer_negative": check_kummer_negative,
    "comparison": check_comparison,
    "graph_counterexample": check_graph_counterexample,
    "affine_line": check_affine_line,
    "cusp_threshold": check_cusp_threshold,
}


# -- suite ------------------------------------------------------------------


def load_entries(config: Optional[dict] = None) -> List[AcceptanceEntry]:
    config = config if config is not None else get_acceptance_config()
    entries = [AcceptanceEntry(**item) for item in config.get("entries", [])]
    unknown = [e.check for e in entries if e.check not in CHECKS]
    if unknown:
        raise UsageError(f"unknown acceptance checks: {', '.join(unknown)}")
    return entries


def run_entry(entry: AcceptanceEntry, p: int) -> AcceptanceResult:
    started = time.perf_counter()
    try:
        ok, detail = CHECKS[entry.check](p, entry.params)
        status = PASS if ok else FAIL
    except KernelError as exc:
        status, detail = ERROR, f"{type(exc).__name__}: {exc.message}"
    result = AcceptanceResult(
        id=entry.id,
        anchor=entry.anchor,
        char=p,
        status=status,
        detail=detail,
        seconds=round(time.perf_counter() - started, 3),
    )
    if status == PASS:
        logger.info(f"[{entry.id}] p={p} passed in {result.seconds}s: {detail}")
    else:
        logger.warning(f"[{entry.id}] p={p} {status}: {detail}")
    return result


def run_suite(
    char: Optional[int] = None,
    ids: Optional[List[int]] = None,
    config: Optional[dict] = None,
) -> SuiteReport:
    """Run every entry (restricted to one characteristic and/or ids), sorted by id and p."""
    report = SuiteReport()
    for entry in load_entries(config):
        if ids is not None and entry.id not in ids:
            continue
        for p in entry.primes:
            if char is not None and p != char:
                continue
            report.results.append(run_entry(entry, p))
    report.results.sort(key=lambda r: (r.id, r.char))
    logger.info(f"acceptance suite: {len(report.results)} runs, {len(report.failures())} failed")
    return report
