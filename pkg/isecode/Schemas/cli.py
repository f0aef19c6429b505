# isecode/Schemas/cli.py
from enum import Enum
from typing import Any, Dict, List, Optional
from pydantic import BaseModel, Field, field_validator, model_validator
from isecode.Utils.errors import ParameterError
from isecode.Schemas.measures import WSelection
from isecode.Utils.rational import Rational


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"
    TEXT = "text"


class RunConfig(BaseModel):
    """Validated command line of one run."""
    command: str
    n: Optional[int] = None
    s: Optional[int] = None
    t: Optional[List[int]] = None
    p: Optional[Rational] = None
    input: Optional[str] = None
    output: Optional[str] = None
    seed: Optional[int] = None
    timeout_ms: Optional[int] = None
    workers: Optional[int] = None
    format: OutputFormat = OutputFormat.JSON

    @field_validator("t", mode="before")
    @classmethod
    def parse_t(cls, v):
        if isinstance(v, str):
            try:
                return [int(part) for part in v.split(",") if part.strip()]
            except ValueError:
                raise ParameterError(f"-t must be a comma list of integers, got {v!r}")
        return v

    @model_validator(mode="after")
    def check_shapes(self):
        if self.t is not None and any(x < 0 for x in self.t):
            raise ParameterError(f"t entries must be non-negative, got {self.t}")
        if self.s is None and self.t is not None and len(self.t) >= 2:
            self.s = len(self.t)
        if self.s is not None and self.s < 2:
            raise ParameterError(f"-s must be at least 2, got {self.s}")
        if self.n is not None and self.n < 1:
            raise ParameterError(f"-n must be at least 1, got {self.n}")
        if self.timeout_ms is not None and self.timeout_ms < 1:
            raise ParameterError("--timeout-ms must be positive")
        if self.workers is not None and self.workers < 1:
            raise ParameterError("--workers must be positive")
        return self


class BoundEntry(BaseModel):
    applicable: bool
    words: Optional[int] = None
    density: Optional[Rational] = None
    reason: Optional[str] = None
    windows: Optional[List[int]] = None


class BoundReport(BaseModel):
    n: int
    s: int
    t: List[int]
    thm4: BoundEntry
    thm7: BoundEntry
    w: Optional[List[WSelection]] = None


class ConstructReport(BaseModel):
    kind: str
    n: int
    s: int
    t: List[int]
    size: Optional[int] = None
    density: Rational
    blocks: Optional[List[List[int]]] = None
    output: Optional[str] = None


class VerifyReport(BaseModel):
    path: str
    n: int
    s: int
    t: List[int]
    size: int
    density: Rational
    intersecting: bool
    completeness: Dict[str, bool] = Field(default_factory=dict)
    thm4: Optional[int] = None
    within_thm4: Optional[bool] = None
    thm7: Optional[int] = None
    within_thm7: Optional[bool] = None
    metadata: Optional[Dict[str, Any]] = None
    metadata_matches: Optional[bool] = None


class TableRow(BaseModel):
    n: int
    s: int
    t: str
    max: int
    p: Rational
    thm4: Optional[int] = None
    thm7: Optional[int] = None
    best_K: Optional[int] = None
    lower_bound_only: bool = False
