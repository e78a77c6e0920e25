from dataclasses import dataclass
from typing import Dict, Sequence, Tuple

from sympy import isprime

from ..utils.errors import RingMismatchError, RingSpecError, UnknownVariableError


MIN_CHARACTERISTIC = 3
MAX_CHARACTERISTIC = 97


@dataclass(frozen=True)
class RingSpec:
    """Polynomial ring F_p[x_1, ..., x_n] with a distinguished variable.

    The distinguished (filtration) variable is the x of fractional carriers
    x^{-n} I, of filtrations f = x and of Kummer coverings.
    """

    characteristic: int
    variables: Tuple[str, ...]
    filtvar: int = 0

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        p = self.characteristic
        if not isinstance(p, int) or not isprime(p):
            raise RingSpecError(f"characteristic {p} is not a prime")
        if not MIN_CHARACTERISTIC <= p <= MAX_CHARACTERISTIC:
            raise RingSpecError(
                f"characteristic {p} outside "
                f"[{MIN_CHARACTERISTIC}, {MAX_CHARACTERISTIC}]"
            )
        if not self.variables:
            raise RingSpecError("ring needs at least one variable")
        for name in self.variables:
            if not (name.isascii() and name.isidentifier()):
                raise RingSpecError(f"invalid variable name {name!r}")
        if len(set(self.variables)) != len(self.variables):
            raise RingSpecError(f"duplicate variable names in {self.variables}")
        if not 0 <= self.filtvar < len(self.variables):
            raise RingSpecError(f"filtration variable index {self.filtvar} out of range")

    @classmethod
    def from_names(
        cls, characteristic: int, variables: Sequence[str], filtvar: str = None
    ) -> "RingSpec":
        variables = tuple(variables)
        if filtvar is None:
            return cls(characteristic, variables, 0)
        if filtvar not in variables:
            raise UnknownVariableError(f"filtration variable {filtvar!r} not in ring")
        return cls(characteristic, variables, variables.index(filtvar))

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def filtvar_name(self) -> str:
        return self.variables[self.filtvar]

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise UnknownVariableError(f"unknown variable {name!r}") from None

    def check_same(self, other: "RingSpec") -> None:
        if self != other:
            raise RingMismatchError(f"ring mismatch: {self.describe()} vs {other.describe()}")

    def extend(self, name: str) -> "RingSpec":
        """Append a fresh variable; the filtration variable is unchanged."""
        if name in self.variables:
            raise RingSpecError(f"variable {name!r} already in ring")
        return RingSpec(self.characteristic, self.variables + (name,), self.filtvar)

    def rename(self, index: int, name: str) -> "RingSpec":
        if name in self.variables[:index] + self.variables[index + 1:]:
            raise RingSpecError(f"variable {name!r} already in ring")
        variables = list(self.variables)
        variables[index] = name
        return RingSpec(self.characteristic, tuple(variables), self.filtvar)

    def describe(self) -> str:
        return f"F_{self.characteristic}[{', '.join(self.variables)}]"

    def to_dict(self) -> Dict:
        return {
            "char": self.characteristic,
            "vars": list(self.variables),
            "filtvar": self.filtvar_name,
        }

    @classmethod
    def from_dict(cls, data: Dict) -> "RingSpec":
        return cls.from_names(data["char"], data["vars"], data.get("filtvar"))
