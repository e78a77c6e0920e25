import math
from dataclasses import asdict, dataclass
from fractions import Fraction

from .table import ActionDescriptor, FiltrationTable, table_from_values
from ..algebra.groebner import Ideal, normal_form
from ..algebra.poly import Polynomial
from ..algebra.ring import RingSpec
from ..cartier.modules import FractionalSubmodule
from ..utils.errors import InputError


def graph_ring(p: int) -> RingSpec:
    """F_p[x, t] with t, the graph coordinate, carrying the denominators."""
    return RingSpec(p, ("x", "t"), filtvar=1)


def _check_s(p: int, s: int) -> None:
    if not 1 <= s <= p - 2:
        raise InputError(f"s must lie in [1, {p - 2}] for p={p}, got {s}")


@dataclass(frozen=True)
class GraphWitness:
    p: int
    s: int
    member: bool
    witness: str
    generator_member: bool
    interpretation: str

    @property
    def verdict(self) -> str:
        if self.member:
            return "MEMBER"
        return f"NON-MEMBER witness {self.witness}"

    def to_dict(self) -> dict:
        data = asdict(self)
        data["verdict"] = self.verdict
        return data


def graph_counterexample_check(p: int, s: int) -> GraphWitness:
    """Normal form of x^{sp} modulo (t^p, x^{sp} t^{p-1}) in F_p[x, t]."""
    ring = graph_ring(p)
    _check_s(p, s)
    x = Polynomial.variable(ring, "x")
    t = Polynomial.variable(ring, "t")
    target = x ** (s * p)
    generator = target * t ** (p - 1)
    gb = Ideal(ring, (t ** p, generator)).reduced()
    remainder = normal_form(target, gb)
    return GraphWitness(
        p=p,
        s=s,
        member=remainder.is_zero(),
        witness=str(remainder),
        generator_member=normal_form(generator, gb).is_zero(),
        interpretation=(
            f"alpha(x^{s} t^-1) = x^{s * p} t^-{p} lies outside V^{s * p} + R[t], "
            f"so alpha(V^{s}) is not contained in V^{s * p}"
        ),
    )


def graph_embedding_table(p: int, s: int) -> FiltrationTable:
    """Candidate filtration V^i = x^ceil(i) t^{-1} R[t] mod R[t] on [0, sp].

    The p-power map is plain Frobenius on R[t]_t.
    """
    ring = graph_ring(p)
    _check_s(p, s)
    top = Fraction(s * p)
    polar = FractionalSubmodule.unit(ring, 1)
    x = Polynomial.variable(ring, "x")
    return table_from_values(
        ring,
        (Fraction(0), top),
        [Fraction(k) for k in range(0, s * p + 1)],
        lambda i: polar.scale(x ** math.ceil(i)),
        action=ActionDescriptor(frobenius_twist=0, quotient_integral=True),
        label=f"graph embedding p={p} s={s}",
    )
