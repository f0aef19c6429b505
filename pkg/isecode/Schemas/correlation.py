# isecode/Schemas/correlation.py
from typing import List, Optional, Tuple
from pydantic import BaseModel, ConfigDict, Field
from isecode.Utils.rational import Rational


class CorrelationCheck(BaseModel):
    """|F||G| against s^n |F n G| for a P-complete F and a Q-complete G."""
    model_config = ConfigDict(frozen=True)

    s: int
    n: int
    P: Tuple[int, ...]
    Q: Tuple[int, ...]
    size_F: int
    size_G: int
    size_FG: int
    lhs: int
    rhs: int
    slack: int

    @property
    def holds(self) -> bool:
        return self.slack >= 0


class CorrelationTrial(BaseModel):
    seed: int
    rho: Rational
    P: Tuple[int, ...]
    Q: Tuple[int, ...]
    size_F: int
    size_G: int
    size_FG: int
    slack: int
    replay: Optional[List[str]] = None


class CorrelationReport(BaseModel):
    s: int
    n: int
    base_seed: Optional[int] = None
    patterns: List[Tuple[Tuple[int, ...], Tuple[int, ...]]]
    trials: int
    violations: int
    min_slack: Optional[int] = None
    results: List[CorrelationTrial] = Field(default_factory=list)


class SliceReport(BaseModel):
    """Slice sizes of F (P-complete) and G (Q-complete) at the last position."""
    s: int
    n: int
    P: Tuple[int, ...]
    Q: Tuple[int, ...]
    f: List[int]
    g: List[int]
    f_common: int
    g_common: int
    violations: List[str] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


class SplitCheck(BaseModel):
    r: int
    p: Rational
    p_head: Rational
    p_tail: Rational
    product: Rational
    holds: bool


class SubmultiplicativityReport(BaseModel):
    n: int
    s: int
    t: List[int]
    splits: List[SplitCheck]
    chain_product: Rational  # prod_i p(n, s, t_i e_i)
    chain_holds: bool

    @property
    def holds(self) -> bool:
        return self.chain_holds and all(split.holds for split in self.splits)


class ExhaustiveReport(BaseModel):
    """Every complete pair of families in [s]^1 for each pattern."""
    s: int
    n: int
    patterns: List[Tuple[Tuple[int, ...], Tuple[int, ...]]]
    pairs: int
    violations: int
    min_slack: Optional[int] = None
    checks: List[CorrelationCheck] = Field(default_factory=list)
