from typing import Dict, Iterable, List, Mapping, Optional, Tuple, Union

from .ring import RingSpec
from ..utils.errors import RingMismatchError


Exponents = Tuple[int, ...]
Term = Tuple[Exponents, int]


def grevlex_key(exps: Exponents) -> Tuple[int, Tuple[int, ...]]:
    """Sort key: larger key means larger monomial in grevlex."""
    return sum(exps), tuple(-a for a in reversed(exps))


def monomial_divides(a: Exponents, b: Exponents) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(a: Exponents, b: Exponents) -> Exponents:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_quotient(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x - y for x, y in zip(a, b))


class Polynomial:
    """Immutable sparse polynomial over F_p.

    Terms map exponent vectors to coefficients in 1..p-1; the zero
    polynomial has no terms.
    """

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: RingSpec, terms: Optional[Mapping[Exponents, int]] = None):
        p = ring.characteristic
        clean: Dict[Exponents, int] = {}
        for exps, coef in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != ring.nvars:
                raise ValueError(f"exponent vector {exps} does not fit {ring.describe()}")
            if any(a < 0 for a in exps):
                raise ValueError(f"negative exponent in {exps}")
            value = (clean.get(exps, 0) + coef) % p
            if value:
                clean[exps] = value
            else:
                clean.pop(exps, None)
        self.ring = ring
        self._terms = clean
        self._hash = None

    @classmethod
    def _from_clean(cls, ring: RingSpec, terms: Dict[Exponents, int]) -> "Polynomial":
        poly = cls.__new__(cls)
        poly.ring = ring
        poly._terms = terms
        poly._hash = None
        return poly

    @classmethod
    def zero(cls, ring: RingSpec) -> "Polynomial":
        return cls._from_clean(ring, {})

    @classmethod
    def constant(cls, ring: RingSpec, value: int) -> "Polynomial":
        return cls(ring, {(0,) * ring.nvars: value})

    @classmethod
    def one(cls, ring: RingSpec) -> "Polynomial":
        return cls.constant(ring, 1)

    @classmethod
    def monomial(cls, ring: RingSpec, exps: Iterable[int], coef: int = 1) -> "Polynomial":
        return cls(ring, {tuple(exps): coef})

    @classmethod
    def variable(cls, ring: RingSpec, name: str, power: int = 1) -> "Polynomial":
        exps = [0] * ring.nvars
        exps[ring.index(name)] = power
        return cls(ring, {tuple(exps): 1})

    @classmethod
    def filtvar_power(cls, ring: RingSpec, power: int) -> "Polynomial":
        exps = [0] * ring.nvars
        exps[ring.filtvar] = power
        return cls(ring, {tuple(exps): 1})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> Mapping[Exponents, int]:
        return self._terms

    def items(self):
        return self._terms.items()

    def sorted_terms(self) -> List[Term]:
        """Terms in descending grevlex order."""
        return sorted(self._terms.items(), key=lambda item: grevlex_key(item[0]), reverse=True)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def is_constant(self) -> bool:
        zero = (0,) * self.ring.nvars
        return not self._terms or set(self._terms) == {zero}

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def leading_term(self) -> Term:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        exps = max(self._terms, key=grevlex_key)
        return exps, self._terms[exps]

    def leading_monomial(self) -> Exponents:
        return self.leading_term()[0]

    def total_degree(self) -> int:
        return max((sum(exps) for exps in self._terms), default=-1)

    def min_degree_in(self, index: int) -> int:
        return min((exps[index] for exps in self._terms), default=0)

    def filtvar_monomial_power(self) -> Optional[int]:
        """k if this is u * x^k with u a unit and x the filtration variable."""
        if not self.is_monomial():
            return None
        exps, _ = self.leading_term()
        fv = self.ring.filtvar
        if any(a for i, a in enumerate(exps) if i != fv):
            return None
        return exps[fv]

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: "Polynomial") -> None:
        if self.ring != other.ring:
            raise RingMismatchError(
                f"ring mismatch: {self.ring.describe()} vs {other.ring.describe()}"
            )

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, int):
            return Polynomial.constant(self.ring, other)
        return NotImplemented

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ring.characteristic
        result = dict(self._terms)
        for exps, coef in other._terms.items():
            value = (result.get(exps, 0) + coef) % p
            if value:
                result[exps] = value
            else:
                result.pop(exps, None)
        return Polynomial._from_clean(self.ring, result)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        p = self.ring.characteristic
        return Polynomial._from_clean(
            self.ring, {exps: p - coef for exps, coef in self._terms.items()}
        )

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, int):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ring.characteristic
        result: Dict[Exponents, int] = {}
        for a, ca in self._terms.items():
            for b, cb in other._terms.items():
                exps = tuple(x + y for x, y in zip(a, b))
                value = (result.get(exps, 0) + ca * cb) % p
                if value:
                    result[exps] = value
                else:
                    result.pop(exps, None)
        return Polynomial._from_clean(self.ring, result)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"exponent must be a nonnegative integer, got {exponent!r}")
        result = Polynomial.one(self.ring)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def scale(self, coef: int) -> "Polynomial":
        p = self.ring.characteristic
        coef %= p
        if not coef:
            return Polynomial.zero(self.ring)
        return Polynomial._from_clean(
            self.ring, {exps: (c * coef) % p for exps, c in self._terms.items()}
        )

    def mul_monomial(self, exps: Exponents, coef: int = 1) -> "Polynomial":
        p = self.ring.characteristic
        coef %= p
        if not coef:
            return Polynomial.zero(self.ring)
        return Polynomial._from_clean(
            self.ring,
            {
                tuple(x + y for x, y in zip(m, exps)): (c * coef) % p
                for m, c in self._terms.items()
            },
        )

    def monic(self) -> "Polynomial":
        _, lead = self.leading_term()
        return self.scale(pow(lead, -1, self.ring.characteristic))

    def frobenius(self, e: int = 1) -> "Polynomial":
        """self^(p^e); coefficients are fixed because c^p = c in F_p."""
        q = self.ring.characteristic ** e
        return Polynomial._from_clean(
            self.ring,
            {tuple(a * q for a in exps): c for exps, c in self._terms.items()},
        )

    def divide_filtvar(self, k: int) -> "Polynomial":
        """Exact division by x^k; every term must be divisible."""
        fv = self.ring.filtvar
        result = {}
        for exps, c in self._terms.items():
            if exps[fv] < k:
                raise ValueError(f"{self} is not divisible by {self.ring.filtvar_name}^{k}")
            shifted = list(exps)
            shifted[fv] -= k
            result[tuple(shifted)] = c
        return Polynomial._from_clean(self.ring, result)

    def map_exponents(self, ring: RingSpec, fn) -> "Polynomial":
        """Transport to another ring by an injective map on exponent vectors."""
        return Polynomial(ring, {fn(exps): c for exps, c in self._terms.items()})

    # -- comparison and text ------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    def _monomial_text(self, exps: Exponents) -> str:
        parts = []
        for name, a in zip(self.ring.variables, exps):
            if a == 1:
                parts.append(name)
            elif a > 1:
                parts.append(f"{name}^{a}")
        return "*".join(parts)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for exps, coef in self.sorted_terms():
            mono = self._monomial_text(exps)
            if not mono:
                pieces.append(str(coef))
            elif coef == 1:
                pieces.append(mono)
            else:
                pieces.append(f"{coef}*{mono}")
        return " + ".join(pieces)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r}, {self.ring.describe()})"


def poly_arith(op: str, a: Polynomial, b: Union[Polynomial, int]) -> Polynomial:
    """Dispatch add/sub/mul/pow on canonical polynomials."""
    if op == "pow":
        return a ** b
    if not isinstance(b, Polynomial):
        raise TypeError(f"{op} expects a polynomial operand")
    a._check(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown polynomial operation {op!r}")
