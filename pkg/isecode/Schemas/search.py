# isecode/Schemas/search.py
from typing import List, Optional, Tuple
from pydantic import BaseModel, ConfigDict


class BestK(BaseModel):
    """Largest K(X1, X2, t) over disjoint blocks X1 = [1, n1], X2 = [n1+1, n1+n2]."""
    model_config = ConfigDict(frozen=True)

    n: int
    t: Tuple[int, int]
    size: int
    n1: int
    n2: int
    parity_ok: bool
    near_cover: bool  # |X1| + |X2| in {n - 1, n}

    @property
    def X1(self) -> Tuple[int, ...]:
        return tuple(range(1, self.n1 + 1))

    @property
    def X2(self) -> Tuple[int, ...]:
        return tuple(range(self.n1 + 1, self.n1 + self.n2 + 1))


class SearchReport(BaseModel):
    n: int
    s: int
    t: List[int]
    max: int
    lower_bound_only: bool = False
    witness_file: Optional[str] = None
    nodes: int
    ms: int
    vertices: int
    workers: int = 1
