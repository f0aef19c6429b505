# isecode/Schemas/measures.py
from typing import List
from pydantic import BaseModel, ConfigDict
from isecode.Utils.rational import Rational


class WSelection(BaseModel):
    """Window chosen by the piecewise definition of w and the resulting value."""
    model_config = ConfigDict(frozen=True)

    t: int
    p: Rational
    r: int
    r_star: int
    value: Rational

    @property
    def window(self) -> int:
        return self.t + 2 * self.r


class Thm7Bound(BaseModel):
    model_config = ConfigDict(frozen=True)

    density: Rational
    words: int
    selections: List[WSelection]
