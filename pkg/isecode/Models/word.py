# isecode/Models/word.py

from typing import Iterable, Sequence, Tuple
import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator, model_validator
from isecode.Utils.config import get_settings
from isecode.Utils.errors import CapacityError, ParameterError


class SpaceParams(BaseModel):
    """The word space [s]^n."""
    model_config = ConfigDict(frozen=True)

    s: int
    n: int

    @model_validator(mode="after")
    def check_dense_cap(self):
        if self.s < 2 or self.n < 1:
            raise ParameterError(f"need s >= 2 and n >= 1, got s = {self.s}, n = {self.n}")
        cap = get_settings().DENSE_CAP
        if self.s ** self.n > cap:
            raise CapacityError(f"s^n = {self.s}^{self.n} exceeds the dense cap {cap}",
                                extra={"s": self.s, "n": self.n, "cap": cap})
        return self

    @property
    def size(self) -> int:
        return self.s ** self.n


class Word(BaseModel):
    model_config = ConfigDict(frozen=True)

    params: SpaceParams
    symbols: Tuple[int, ...]

    @model_validator(mode="after")
    def check_symbols(self):
        if len(self.symbols) != self.params.n:
            raise ParameterError(f"word has length {len(self.symbols)}, expected n = {self.params.n}")
        if any(not 1 <= a <= self.params.s for a in self.symbols):
            raise ParameterError(f"word {self.symbols} has entries outside [1, {self.params.s}]")
        return self

    def __str__(self) -> str:
        return word_to_text(self)


class MeetWord(BaseModel):
    """Coordinatewise agreement of two words; 0 marks disagreement."""
    model_config = ConfigDict(frozen=True)

    entries: Tuple[int, ...]


class IntersectionProfile(BaseModel):
    model_config = ConfigDict(frozen=True)

    counts: Tuple[int, ...]


class TVector(BaseModel):
    """Intersection demand (t_1, ..., t_s)."""
    model_config = ConfigDict(frozen=True)

    t: Tuple[int, ...]

    @field_validator("t")
    @classmethod
    def non_negative(cls, v):
        if not v or any(x < 0 for x in v):
            raise ParameterError(f"t-vector {v} must be a non-empty vector of non-negative integers")
        return v

    @classmethod
    def of(cls, *values: int) -> "TVector":
        return cls(t=tuple(values))

    @classmethod
    def zeros(cls, s: int) -> "TVector":
        return cls(t=(0,) * s)

    @property
    def total(self) -> int:
        return sum(self.t)

    def check(self, params: SpaceParams) -> None:
        if len(self.t) != params.s:
            raise ParameterError(f"t-vector has {len(self.t)} entries, alphabet has s = {params.s}")

    def head(self, r: int) -> "TVector":
        """(t_1, ..., t_r, 0, ..., 0)"""
        return TVector(t=self.t[:r] + (0,) * (len(self.t) - r))

    def tail(self, r: int) -> "TVector":
        """(0, ..., 0, t_{r+1}, ..., t_s)"""
        return TVector(t=(0,) * r + self.t[r:])

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.t)


class SymbolSet(BaseModel):
    model_config = ConfigDict(frozen=True)

    members: frozenset[int]

    @classmethod
    def of(cls, *symbols: int) -> "SymbolSet":
        return cls(members=frozenset(symbols))

    def check_proper(self, s: int, *, nonempty: bool = False) -> None:
        if any(not 1 <= a <= s for a in self.members):
            raise ParameterError(f"symbol set {sorted(self.members)} is not a subset of [{s}]")
        if len(self.members) == s:
            raise ParameterError(f"P = [{s}] is not a proper subset of the alphabet")
        if nonempty and not self.members:
            raise ParameterError("symbol set must be non-empty")

    def complement(self, s: int) -> Tuple[int, ...]:
        return tuple(a for a in range(1, s + 1) if a not in self.members)

    def __contains__(self, symbol: int) -> bool:
        return symbol in self.members

    def __str__(self) -> str:
        return "{" + ",".join(str(a) for a in sorted(self.members)) + "}"


def _same_space(y: Word, z: Word) -> None:
    if y.params != z.params:
        raise ParameterError(f"words live in different spaces: {y.params} vs {z.params}")


def make_word(params: SpaceParams, symbols: Iterable[int]) -> Word:
    return Word(params=params, symbols=tuple(int(a) for a in symbols))


def meet(y: Word, z: Word) -> MeetWord:
    _same_space(y, z)
    return MeetWord(entries=tuple(a if a == b else 0 for a, b in zip(y.symbols, z.symbols)))


def profile(y: Word, z: Word) -> IntersectionProfile:
    w = meet(y, z)
    counts = [0] * y.params.s
    for a in w.entries:
        if a:
            counts[a - 1] += 1
    return IntersectionProfile(counts=tuple(counts))


def satisfies(y: Word, z: Word, t: TVector) -> bool:
    t.check(y.params)
    return all(c >= need for c, need in zip(profile(y, z).counts, t.t))


def is_word_t_intersecting(y: Word, z: Word, t: int) -> bool:
    """Classical demand: the meet has at least t non-zero coordinates."""
    return sum(1 for a in meet(y, z).entries if a) >= t


def leq_P(x: Word, y: Word, P: SymbolSet) -> bool:
    """x <_P y: every coordinate where x carries a symbol of P is kept in y."""
    _same_space(x, y)
    P.check_proper(x.params.s)
    return all(a == b or a not in P for a, b in zip(x.symbols, y.symbols))


def encode(w: Word) -> int:
    # position 1 is the least significant digit
    index = 0
    for a in reversed(w.symbols):
        index = index * w.params.s + (a - 1)
    return index


def decode(index: int, params: SpaceParams) -> Word:
    if not 0 <= index < params.size:
        raise ParameterError(f"index {index} outside [0, {params.size - 1}]")
    symbols = []
    for _ in range(params.n):
        index, digit = divmod(index, params.s)
        symbols.append(digit + 1)
    return Word(params=params, symbols=tuple(symbols))


def word_to_text(w: Word) -> str:
    if w.params.s > 9:
        raise ParameterError("digit-string form needs s <= 9")
    return "".join(str(a) for a in w.symbols)


def word_from_text(text: str, params: SpaceParams) -> Word:
    text = text.strip()
    if params.s > 9:
        raise ParameterError("digit-string form needs s <= 9")
    if not text.isdigit():
        raise ParameterError(f"{text!r} is not a digit string")
    return make_word(params, (int(ch) for ch in text))


def symbol_matrix(indices: Sequence[int] | np.ndarray, params: SpaceParams) -> np.ndarray:
    """Decode many indices at once; column j holds the symbols at position j + 1."""
    idx = np.asarray(indices, dtype=np.int64)
    out = np.empty((idx.size, params.n), dtype=np.int8)
    for j in range(params.n):
        idx, digit = np.divmod(idx, params.s)
        out[:, j] = digit + 1
    return out
