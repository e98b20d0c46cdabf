#
from typing import Literal

from pydantic_settings import BaseSettings, SettingsConfigDict

class Settings(BaseSettings):
    # ——— Search ———
    budget: int = 0            # nodes per solver call, 0 = unlimited
    seed: int = 1
    # ——— Harness ———
    sweep_backend: Literal["local", "celery"] = "local"
    sweep_timeout: float = 3600.0  # seconds
    max_exhaustive_order: int = 6
    report_timings: bool = False
    # ——— Redis ———
    redis_url: str = "redis://redis:6379/0"
    # ——— Logging ———
    log_level: str = "WARNING"

    model_config = SettingsConfigDict(env_prefix="LIMPACK_", env_file=".env", env_file_encoding="utf-8")

settings = Settings()
