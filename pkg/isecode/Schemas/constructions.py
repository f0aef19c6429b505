# isecode/Schemas/constructions.py
from typing import Tuple
from pydantic import BaseModel, ConfigDict, model_validator
from isecode.Utils.errors import ParameterError


class Partition(BaseModel):
    """Pairwise disjoint blocks X_1, ..., X_s of positions in [n]."""
    model_config = ConfigDict(frozen=True)

    n: int
    blocks: Tuple[Tuple[int, ...], ...]

    @model_validator(mode="after")
    def check_blocks(self):
        seen = set()
        for block in self.blocks:
            for j in block:
                if not 1 <= j <= self.n:
                    raise ParameterError(f"position {j} outside [1, {self.n}]")
                if j in seen:
                    raise ParameterError(f"blocks overlap at position {j}")
                seen.add(j)
        return self

    @property
    def sizes(self) -> Tuple[int, ...]:
        return tuple(len(block) for block in self.blocks)


class WindowFamilySpec(BaseModel):
    """F_{t,r} = {A : |A n [t+2r]| >= t+r}."""
    model_config = ConfigDict(frozen=True)

    t: int
    r: int

    @property
    def window(self) -> int:
        return self.t + 2 * self.r

    @property
    def threshold(self) -> int:
        return self.t + self.r
