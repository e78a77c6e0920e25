from functools import lru_cache
from pathlib import Path
from typing import Optional

import yaml
from pydantic import BaseModel
from pydantic_settings import BaseSettings, SettingsConfigDict

from .limits import KernelLimits


PROJECT_ROOT = Path(__file__).resolve().parents[2]
CONFIG_DIR = PROJECT_ROOT / "config"


class AppInfo(BaseModel):
    name: str = "Cartier Kernel"
    version: str = "1.0.0"


class LoggingConfig(BaseModel):
    level: str = "WARNING"
    dir: Optional[str] = None


class Settings(BaseSettings):
    """Application settings, read from config/config.yaml only."""

    model_config = SettingsConfigDict(extra="ignore")

    app: AppInfo = AppInfo()
    kernel: KernelLimits = KernelLimits()
    logging: LoggingConfig = LoggingConfig()

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls,
        init_settings,
        env_settings,
        dotenv_settings,
        file_secret_settings,
    ):
        # the CLI contract forbids environment variables
        return (init_settings,)


def load_yaml_config(config_path: str = str(CONFIG_DIR / "config.yaml")) -> dict:
    """Load YAML configuration file."""
    path = Path(config_path)
    if not path.exists():
        raise FileNotFoundError(f"Config file not found: {config_path}")

    with open(path, "r", encoding="utf-8") as f:
        return yaml.safe_load(f) or {}


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Get application settings singleton."""
    path = CONFIG_DIR / "config.yaml"
    data = load_yaml_config(str(path)) if path.exists() else {}
    return Settings(**data)


def get_acceptance_config() -> dict:
    """Acceptance matrix driving the verify-paper suite."""
    return load_yaml_config(str(CONFIG_DIR / "acceptance.yaml"))
