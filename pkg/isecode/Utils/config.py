# isecode/Utils/config.py

import os
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional
from pydantic import Field, ValidationError, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict
from isecode.Utils.errors import ParameterError

try:
    from dotenv import load_dotenv

    dotenv_path = os.path.abspath(os.path.join(os.path.dirname(__file__), '..', '.env'))
    load_dotenv(dotenv_path)
except ImportError:
    def load_dotenv(*args, **kwargs):  # no-op if python-dotenv is unavailable
        return

DEFAULT_DENSE_CAP = 2 ** 26


class Settings(BaseSettings):
    # Storage caps
    DENSE_CAP: int = Field(default=DEFAULT_DENSE_CAP, ge=1, le=DEFAULT_DENSE_CAP,
                           description="Largest s^n a dense family may hold")
    VERTEX_CAP: int = Field(default=2 ** 16, ge=1)

    # Extremal search
    SEARCH_TIMEOUT_MS: int = Field(default=60_000, ge=1)
    SEARCH_WORKERS: int = Field(default=1, ge=1)
    SEARCH_BATCH_SIZE: int = Field(default=32, ge=1)

    # Correlation campaigns
    CORRELATION_TRIALS: int = Field(default=1000, ge=1)
    CORRELATION_SEED: int = 20240611
    CORRELATION_RHOS: str = "1/8,1/4,1/2"

    LOG_LEVEL: str = "INFO"
    LOG_FILE: Optional[str] = None

    model_config = SettingsConfigDict(
        env_prefix="ISECODE_",
        env_file=".env",
        extra="ignore",
        case_sensitive=False,
    )

    @field_validator("CORRELATION_RHOS")
    @classmethod
    def validate_rhos(cls, v: str) -> str:
        try:
            rhos = [Fraction(part.strip()) for part in v.strip("[]").split(",") if part.strip()]
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"densities must be rationals like 1/4: {e}")
        if not rhos or any(not 0 <= rho <= 1 for rho in rhos):
            raise ValueError("densities must lie in [0, 1]")
        return v

    @property
    def correlation_rhos(self) -> List[Fraction]:
        return [Fraction(part.strip()) for part in self.CORRELATION_RHOS.strip("[]").split(",") if part.strip()]


@lru_cache()
def get_settings() -> Settings:
    try:
        return Settings()
    except ValidationError as e:
        problems = "; ".join(f"{'.'.join(str(part) for part in err['loc'])}: {err['msg']}" for err in e.errors())
        raise ParameterError(f"invalid ISECODE_ settings: {problems}")


if __name__ == "__main__":
    import pprint

    pprint.pprint(get_settings().model_dump())
