from .logger import setup_logger, get_logger
from .config import (
    Settings,
    get_settings,
    get_acceptance_config,
    load_yaml_config,
)
from .limits import KernelLimits, get_limits, limits_override
from . import errors

__all__ = [
    "setup_logger",
    "get_logger",
    "Settings",
    "get_settings",
    "get_acceptance_config",
    "load_yaml_config",
    "KernelLimits",
    "get_limits",
    "limits_override",
    "errors",
]
