from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple, Union

from .poly import (
    Exponents,
    Polynomial,
    grevlex_key,
    monomial_divides,
    monomial_lcm,
    monomial_quotient,
)
from .ring import RingSpec
from ..utils.errors import GroebnerBudgetError, RingMismatchError, UnsupportedStructureError
from ..utils.limits import get_limits
from ..utils.logger import get_logger


logger = get_logger("groebner")

TermDict = Dict[Exponents, int]


@dataclass(frozen=True)
class ReducedGB:
    """Reduced grevlex Groebner basis, sorted by descending leading monomial.

    Two ideals are equal exactly when their reduced bases are equal.
    """

    ring: RingSpec
    basis: Tuple[Polynomial, ...]
    leading: Tuple[Exponents, ...] = field(compare=False, repr=False, default=())

    def __post_init__(self):
        if not self.leading:
            object.__setattr__(
                self, "leading", tuple(g.leading_monomial() for g in self.basis)
            )

    def is_zero(self) -> bool:
        return not self.basis

    def is_unit(self) -> bool:
        return len(self.basis) == 1 and self.basis[0].is_constant()

    def is_monomial(self) -> bool:
        return all(g.is_monomial() for g in self.basis)

    def lines(self) -> List[str]:
        return [str(g) for g in self.basis]

    def __str__(self) -> str:
        return "\n".join(self.lines())


@dataclass(frozen=True)
class Ideal:
    """Ideal given by generators; zero generators are dropped."""

    ring: RingSpec
    generators: Tuple[Polynomial, ...] = ()
    _reduced: Optional[ReducedGB] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        gens = []
        for g in self.generators:
            g.ring.check_same(self.ring)
            if g:
                gens.append(g)
        object.__setattr__(self, "generators", tuple(gens))

    @classmethod
    def of(cls, ring: RingSpec, generators: Iterable[Polynomial]) -> "Ideal":
        return cls(ring, tuple(generators))

    @classmethod
    def zero(cls, ring: RingSpec) -> "Ideal":
        return cls(ring, ())

    @classmethod
    def unit(cls, ring: RingSpec) -> "Ideal":
        return cls(ring, (Polynomial.one(ring),))

    @classmethod
    def principal(cls, g: Polynomial) -> "Ideal":
        return cls(g.ring, (g,))

    @classmethod
    def from_reduced(cls, gb: ReducedGB) -> "Ideal":
        return cls(gb.ring, gb.basis, gb)

    def reduced(self) -> ReducedGB:
        if self._reduced is None:
            object.__setattr__(self, "_reduced", reduce_basis(self))
        return self._reduced

    def is_zero(self) -> bool:
        return not self.generators

    def scale(self, g: Polynomial) -> "Ideal":
        return Ideal(self.ring, tuple(g * h for h in self.generators))

    def __add__(self, other: "Ideal") -> "Ideal":
        self.ring.check_same(other.ring)
        return Ideal(self.ring, self.generators + other.generators)

    def __mul__(self, other: "Ideal") -> "Ideal":
        self.ring.check_same(other.ring)
        return Ideal(
            self.ring, tuple(g * h for g in self.generators for h in other.generators)
        )

    def contains(self, other: "Ideal") -> bool:
        """True when other is a subset of self."""
        gb = self.reduced()
        return all(normal_form(g, gb).is_zero() for g in other.generators)

    def member(self, f: Polynomial) -> bool:
        return normal_form(f, self.reduced()).is_zero()

    def same_as(self, other: "Ideal") -> bool:
        return self.reduced() == other.reduced()


# -- division ----------------------------------------------------------------


def _reduce_terms(
    terms: TermDict,
    basis: Sequence[Tuple[Exponents, TermDict]],
    p: int,
    full: bool = True,
) -> TermDict:
    """Multivariate division of terms by monic basis elements."""
    work = dict(terms)
    remainder: TermDict = {}
    while work:
        lead = max(work, key=grevlex_key)
        coef = work[lead]
        for lm, g in basis:
            if monomial_divides(lm, lead):
                q = monomial_quotient(lead, lm)
                for gm, gc in g.items():
                    m = tuple(a + b for a, b in zip(gm, q))
                    value = (work.get(m, 0) - coef * gc) % p
                    if value:
                        work[m] = value
                    else:
                        work.pop(m, None)
                break
        else:
            if not full:
                remainder.update(work)
                return remainder
            remainder[lead] = coef
            del work[lead]
    return remainder


def normal_form(f: Polynomial, gb: ReducedGB) -> Polynomial:
    """Unique remainder of f modulo a reduced basis; zero iff f is in the ideal."""
    if f.ring != gb.ring:
        raise RingMismatchError(
            f"ring mismatch: {f.ring.describe()} vs {gb.ring.describe()}"
        )
    if not f or not gb.basis:
        return f
    basis = [(lm, dict(g.terms)) for lm, g in zip(gb.leading, gb.basis)]
    return Polynomial._from_clean(f.ring, _reduce_terms(f.terms, basis, f.ring.characteristic))


# -- Buchberger ----------------------------------------------------------------


def _monic_terms(terms: TermDict, p: int) -> Tuple[Exponents, TermDict]:
    lead = max(terms, key=grevlex_key)
    inv = pow(terms[lead], -1, p)
    return lead, {m: (c * inv) % p for m, c in terms.items()}


def _s_polynomial(
    f: Tuple[Exponents, TermDict], g: Tuple[Exponents, TermDict], p: int
) -> TermDict:
    lcm = monomial_lcm(f[0], g[0])
    qf = monomial_quotient(lcm, f[0])
    qg = monomial_quotient(lcm, g[0])
    result: TermDict = {}
    for m, c in f[1].items():
        result[tuple(a + b for a, b in zip(m, qf))] = c
    for m, c in g[1].items():
        key = tuple(a + b for a, b in zip(m, qg))
        value = (result.get(key, 0) - c) % p
        if value:
            result[key] = value
        else:
            result.pop(key, None)
    return result


def _coprime(a: Exponents, b: Exponents) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def reduce_basis(ideal: Ideal, step_budget: Optional[int] = None) -> ReducedGB:
    """Reduced grevlex Groebner basis by Buchberger's algorithm.

    Normal selection strategy with the product and chain criteria, then
    minimalization and interreduction.
    """
    ring = ideal.ring
    p = ring.characteristic
    budget = step_budget or get_limits().groebner_step_budget

    gens = [g for g in ideal.generators if g]
    if not gens:
        return ReducedGB(ring, ())
    if any(g.is_constant() for g in gens):
        return ReducedGB(ring, (Polynomial.one(ring),))

    basis: List[Tuple[Exponents, TermDict]] = []
    for g in gens:
        basis.append(_monic_terms(dict(g.terms), p))

    pairs: Set[Tuple[int, int]] = {
        (i, j) for j in range(len(basis)) for i in range(j)
    }
    steps = 0
    while pairs:
        i, j = min(
            pairs,
            key=lambda ij: (grevlex_key(monomial_lcm(basis[ij[0]][0], basis[ij[1]][0])), ij),
        )
        pairs.discard((i, j))
        lm_i, lm_j = basis[i][0], basis[j][0]
        if _coprime(lm_i, lm_j):
            continue
        lcm = monomial_lcm(lm_i, lm_j)
        if any(
            k != i
            and k != j
            and monomial_divides(basis[k][0], lcm)
            and (min(i, k), max(i, k)) not in pairs
            and (min(j, k), max(j, k)) not in pairs
            for k in range(len(basis))
        ):
            continue

        steps += 1
        if steps > budget:
            raise GroebnerBudgetError(
                f"Groebner step budget {budget} exceeded on {len(gens)} generators "
                f"over {ring.describe()}"
            )
        remainder = _reduce_terms(_s_polynomial(basis[i], basis[j], p), basis, p)
        if not remainder:
            continue
        new = _monic_terms(remainder, p)
        if all(a == 0 for a in new[0]):
            return ReducedGB(ring, (Polynomial.one(ring),))
        basis.append(new)
        k = len(basis) - 1
        pairs.update((m, k) for m in range(k))

    logger.debug(f"Buchberger finished after {steps} reductions, {len(basis)} elements")
    return _interreduce(ring, basis)


def _interreduce(ring: RingSpec, basis: List[Tuple[Exponents, TermDict]]) -> ReducedGB:
    p = ring.characteristic
    minimal: List[Tuple[Exponents, TermDict]] = []
    for idx, (lm, g) in enumerate(basis):
        redundant = False
        for jdx, (other, _) in enumerate(basis):
            if jdx == idx or not monomial_divides(other, lm):
                continue
            if other != lm or jdx < idx:
                redundant = True
                break
        if not redundant:
            minimal.append((lm, g))

    reduced = []
    for idx, (lm, g) in enumerate(minimal):
        others = [item for jdx, item in enumerate(minimal) if jdx != idx]
        tail = {m: c for m, c in g.items() if m != lm}
        tail = _reduce_terms(tail, others, p)
        tail[lm] = 1
        reduced.append((lm, tail))

    reduced.sort(key=lambda item: grevlex_key(item[0]), reverse=True)
    polys = tuple(Polynomial._from_clean(ring, terms) for _, terms in reduced)
    return ReducedGB(ring, polys, tuple(lm for lm, _ in reduced))


# -- ideal operations ------------------------------------------------------------


def frobenius_power(ideal: Ideal, e: int = 1) -> Ideal:
    """I^[p^e]: the ideal generated by p^e-th powers of generators."""
    return Ideal(ideal.ring, tuple(g.frobenius(e) for g in ideal.generators))


def monomial_colon(numerator: Ideal, denominator: Ideal) -> Ideal:
    """(numerator : denominator) for monomial ideals."""
    num = numerator.reduced()
    den = denominator.reduced()
    if not (num.is_monomial() and den.is_monomial()):
        raise UnsupportedStructureError("colon ideals are only computed for monomial ideals")
    ring = numerator.ring
    if den.is_zero():
        return Ideal.unit(ring)
    result: Optional[Ideal] = None
    for d in den.leading:
        quotients = [
            Polynomial.monomial(ring, monomial_quotient(monomial_lcm(n, d), d))
            for n in num.leading
        ]
        piece = Ideal(ring, tuple(quotients))
        result = piece if result is None else monomial_intersection(result, piece)
    return result


def monomial_intersection(a: Ideal, b: Ideal) -> Ideal:
    """Intersection of monomial ideals via pairwise lcms."""
    ga, gb = a.reduced(), b.reduced()
    if not (ga.is_monomial() and gb.is_monomial()):
        raise UnsupportedStructureError("intersections are only computed for monomial ideals")
    ring = a.ring
    return Ideal(
        ring,
        tuple(
            Polynomial.monomial(ring, monomial_lcm(m, n))
            for m in ga.leading
            for n in gb.leading
        ),
    )


def ideal_ops(op: str, *args) -> Union[Ideal, bool]:
    """Ideal arithmetic and comparisons.

    sum(I, J), product(I, J), scale_by_poly(g, I), equal(I, J), member(f, I).
    """
    if op == "sum":
        left, right = args
        return left + right
    if op == "product":
        left, right = args
        return left * right
    if op == "scale_by_poly":
        g, ideal = args
        g.ring.check_same(ideal.ring)
        return ideal.scale(g)
    if op == "equal":
        left, right = args
        left.ring.check_same(right.ring)
        return left.same_as(right)
    if op == "member":
        f, ideal = args
        f.ring.check_same(ideal.ring)
        return ideal.member(f)
    raise ValueError(f"unknown ideal operation {op!r}")
