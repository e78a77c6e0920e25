from contextlib import contextmanager
from contextvars import ContextVar
from typing import Iterator, Optional

from pydantic import BaseModel, ConfigDict, Field


class KernelLimits(BaseModel):
    """Budgets and bounds shared by every stabilization loop."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    emax: int = Field(6, ge=1, le=12)
    level_budget: int = Field(128, ge=1)
    chain_budget: int = Field(40, ge=1)
    groebner_step_budget: int = Field(1_000_000, ge=1)
    max_exponent: int = Field(1_000_000, ge=1)
    denominator_bound: int = Field(4, ge=1)
    halving_budget: int = Field(12, ge=1)
    refine_depth: int = Field(2, ge=0)
    validate_test_element: bool = True
    certificate_depth: int = Field(5, ge=1)


_active_limits: ContextVar[Optional[KernelLimits]] = ContextVar(
    "kernel_limits", default=None
)


def get_limits() -> KernelLimits:
    """Limits in force for the current context (config file by default)."""
    limits = _active_limits.get()
    if limits is None:
        from .config import get_settings

        limits = get_settings().kernel
    return limits


@contextmanager
def limits_override(**changes) -> Iterator[KernelLimits]:
    """Temporarily replace some limits; None values are ignored."""
    base = get_limits()
    updates = {key: value for key, value in changes.items() if value is not None}
    limits = KernelLimits(**{**base.model_dump(), **updates})
    token = _active_limits.set(limits)
    try:
        yield limits
    finally:
        _active_limits.reset(token)
