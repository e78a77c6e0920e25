from typing import Any, Dict, Optional


class KernelError(Exception):
    """Base class for every failure raised by the kernel."""

    exit_code = 1

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message

    def to_dict(self) -> Dict[str, Any]:
        return {"error": type(self).__name__, "message": self.message}


class UsageError(KernelError):
    """Bad command line or job description."""


class InputError(KernelError):
    """Malformed user input (polynomials, rationals, ring data)."""


class PolynomialParseError(InputError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position

    def to_dict(self) -> Dict[str, Any]:
        data = super().to_dict()
        data["position"] = self.position
        return data


class UnknownVariableError(InputError):
    pass


class ExponentOverflowError(InputError):
    pass


class OutOfWindowError(InputError):
    pass


class RingSpecError(KernelError):
    pass


class RingMismatchError(KernelError):
    pass


class ContainmentError(KernelError):
    """A submodule argument is not contained in the module carrier."""


class BudgetExceededError(KernelError):
    """A configured computation budget ran out."""

    exit_code = 2


class GroebnerBudgetError(BudgetExceededError):
    pass


class LevelBoundError(BudgetExceededError):
    pass


class StabilizationError(BudgetExceededError):
    pass


class LeftLimitError(BudgetExceededError):
    def __init__(
        self,
        message: str,
        candidates: Optional[tuple] = None,
    ):
        super().__init__(message)
        self.candidates = candidates or ()


class UnsupportedStructureError(KernelError):
    """Input is outside the class of modules the kernel handles."""


class CertificateError(UnsupportedStructureError):
    pass


class GradingError(UnsupportedStructureError):
    pass


class InvalidTestElementError(UnsupportedStructureError):
    pass


class DegenerateModuleError(UnsupportedStructureError):
    pass


class MissingActionDescriptorError(KernelError):
    pass


class VerificationFailure(KernelError):
    exit_code = 3
