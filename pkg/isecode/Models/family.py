# isecode/Models/family.py

import logging
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Tuple
import numpy as np
from typing_extensions import Self
from isecode.Models.word import (
    SpaceParams, SymbolSet, TVector, Word, decode, encode, symbol_matrix, word_from_text,
)
from isecode.Utils.config import get_settings
from isecode.Utils.errors import CapacityError, ParameterError

logger = logging.getLogger(__name__)

# rows of the pairwise product computed per block in the intersecting checks
_PAIR_BLOCK = 1 << 22


class SetFamily:
    """A family of subsets of [n], stored densely over 2^[n].

    Subset A is addressed by the mask sum(2^(j-1) for j in A), so position j
    of the ground set is bit j - 1.
    """
    __slots__ = ("n", "membership", "size")

    def __init__(self, n: int, membership: np.ndarray):
        if n < 0:
            raise ParameterError(f"ground set size must be non-negative, got {n}")
        cap = get_settings().DENSE_CAP
        if 2 ** n > cap:
            raise CapacityError(f"2^{n} exceeds the dense cap {cap}")
        membership = np.asarray(membership, dtype=bool)
        if membership.shape != (2 ** n,):
            raise ParameterError(f"membership must have length 2^{n}, got {membership.shape}")
        membership = membership.copy()
        membership.flags.writeable = False
        self.n = n
        self.membership = membership
        self.size = int(np.count_nonzero(membership))

    @classmethod
    def empty(cls, n: int) -> Self:
        return cls(n, np.zeros(2 ** n, dtype=bool))

    @classmethod
    def full(cls, n: int) -> Self:
        return cls(n, np.ones(2 ** n, dtype=bool))

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> Self:
        membership = np.zeros(2 ** n, dtype=bool)
        membership[np.fromiter(masks, dtype=np.int64)] = True
        return cls(n, membership)

    @classmethod
    def from_sets(cls, n: int, sets: Iterable[Iterable[int]]) -> Self:
        return cls.from_masks(n, (set_to_mask(A, n) for A in sets))

    def masks(self) -> np.ndarray:
        return np.flatnonzero(self.membership)

    def sets(self) -> Iterator[frozenset[int]]:
        for mask in self.masks():
            yield mask_to_set(int(mask), self.n)

    def __contains__(self, A: Iterable[int]) -> bool:
        return bool(self.membership[set_to_mask(A, self.n)])

    def __len__(self) -> int:
        return self.size

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SetFamily):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.membership, other.membership)

    def __hash__(self):
        return hash((self.n, self.membership.tobytes()))

    def __repr__(self) -> str:
        return f"SetFamily(n={self.n}, size={self.size})"

    def set_sizes(self) -> np.ndarray:
        """|A| for every member mask, aligned with masks()."""
        return popcount(self.masks())

    def is_upward_closed(self) -> bool:
        idx = np.arange(2 ** self.n, dtype=np.int64)
        m = self.membership
        for b in range(self.n):
            if np.any(m & ~m[idx | (1 << b)]):
                return False
        return True


def set_to_mask(A: Iterable[int], n: int) -> int:
    mask = 0
    for j in A:
        if not 1 <= j <= n:
            raise ParameterError(f"position {j} outside [1, {n}]")
        mask |= 1 << (j - 1)
    return mask


def mask_to_set(mask: int, n: int) -> frozenset[int]:
    return frozenset(j + 1 for j in range(n) if mask >> j & 1)


def popcount(values: np.ndarray) -> np.ndarray:
    values = np.asarray(values, dtype=np.int64)
    counts = np.zeros(values.shape, dtype=np.int64)
    while np.any(values):
        counts += values & 1
        values = values >> 1
    return counts


class Family:
    """A dense family F of words in [s]^n with cached cardinality."""
    __slots__ = ("params", "membership", "size")

    def __init__(self, params: SpaceParams, membership: np.ndarray):
        membership = np.asarray(membership, dtype=bool)
        if membership.shape != (params.size,):
            raise ParameterError(f"membership must have length s^n = {params.size}, got {membership.shape}")
        if membership.flags.writeable:
            membership = membership.copy()
            membership.flags.writeable = False
        self.params = params
        self.membership = membership
        self.size = int(np.count_nonzero(membership))

    @classmethod
    def empty(cls, params: SpaceParams) -> Self:
        return cls(params, np.zeros(params.size, dtype=bool))

    @classmethod
    def full(cls, params: SpaceParams) -> Self:
        return cls(params, np.ones(params.size, dtype=bool))

    @classmethod
    def from_indices(cls, params: SpaceParams, indices: Iterable[int]) -> Self:
        idx = np.fromiter(indices, dtype=np.int64)
        if idx.size and (idx.min() < 0 or idx.max() >= params.size):
            raise ParameterError(f"word index outside [0, {params.size - 1}]")
        membership = np.zeros(params.size, dtype=bool)
        membership[idx] = True
        return cls(params, membership)

    @classmethod
    def from_words(cls, params: SpaceParams, words: Iterable[Word]) -> Self:
        return cls.from_indices(params, (encode(w) for w in words))

    @classmethod
    def from_texts(cls, params: SpaceParams, texts: Iterable[str]) -> Self:
        return cls.from_words(params, (word_from_text(text, params) for text in texts))

    def indices(self) -> np.ndarray:
        return np.flatnonzero(self.membership)

    def words(self) -> Iterator[Word]:
        for idx in self.indices():
            yield decode(int(idx), self.params)

    def symbols(self) -> np.ndarray:
        """Members decoded into an (|F|, n) symbol matrix."""
        return symbol_matrix(self.indices(), self.params)

    def cube(self) -> np.ndarray:
        """Membership as an s x ... x s array; axis n - i holds position i."""
        return self.membership.reshape((self.params.s,) * self.params.n)

    def __contains__(self, w: Word) -> bool:
        return w.params == self.params and bool(self.membership[encode(w)])

    def __len__(self) -> int:
        return self.size

    def __iter__(self) -> Iterator[Word]:
        return self.words()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Family):
            return NotImplemented
        return self.params == other.params and np.array_equal(self.membership, other.membership)

    def __hash__(self):
        return hash((self.params, self.membership.tobytes()))

    def __repr__(self) -> str:
        return f"Family(s={self.params.s}, n={self.params.n}, size={self.size})"

    def _check_same(self, other: "Family") -> None:
        if self.params != other.params:
            raise ParameterError(f"families live in different spaces: {self.params} vs {other.params}")

    def intersect(self, other: "Family") -> "Family":
        self._check_same(other)
        return Family(self.params, self.membership & other.membership)

    def union(self, other: "Family") -> "Family":
        self._check_same(other)
        return Family(self.params, self.membership | other.membership)

    def complement(self) -> "Family":
        return Family(self.params, ~self.membership)

    def issubset(self, other: "Family") -> bool:
        self._check_same(other)
        return not np.any(self.membership & ~other.membership)

    __and__ = intersect
    __or__ = union
    __invert__ = complement
    __le__ = issubset


def density(F: Family) -> Fraction:
    return Fraction(F.size, F.params.size)


def _pairwise_ok(E: np.ndarray, need: int) -> bool:
    """True iff every row pair (including a row with itself) has dot product >= need."""
    m = E.shape[0]
    rows = max(1, _PAIR_BLOCK // max(1, m))
    for start in range(0, m, rows):
        block = E[start:start + rows] @ E.T
        if np.any(block < need):
            return False
    return True


def is_t_intersecting(F: Family, t: TVector) -> bool:
    """Every ordered pair, self-pairs included, agrees on >= t_l coordinates carrying l."""
    t.check(F.params)
    if F.size == 0 or t.total == 0:
        return True
    if t.total > F.params.n:
        return False
    W = F.symbols()
    for symbol, need in enumerate(t.t, start=1):
        if need == 0:
            continue
        E = (W == symbol).astype(np.int32)
        # self-pairs first: a member must carry the symbol often enough itself
        if np.any(E.sum(axis=1) < need):
            return False
        if not _pairwise_ok(E, need):
            return False
    return True


def is_intersecting(F: Family, t: int = 1) -> bool:
    """Classical t-intersecting: every meet has at least t non-zero coordinates."""
    if F.size == 0 or t <= 0:
        return True
    W = F.symbols()
    m = W.shape[0]
    rows = max(1, _PAIR_BLOCK // max(1, m * F.params.n))
    for start in range(0, m, rows):
        agree = (W[start:start + rows, None, :] == W[None, :, :]).sum(axis=2)
        if np.any(agree < t):
            return False
    return True


def _non_p_symbols(P: SymbolSet, s: int) -> Tuple[int, ...]:
    P.check_proper(s, nonempty=True)
    return tuple(a - 1 for a in P.complement(s))


def closure_P(F: Family, P: SymbolSet) -> Family:
    """F(P): every word reachable from F by rewriting coordinates whose symbol is outside P."""
    free = _non_p_symbols(P, F.params.s)
    cube = F.cube().copy()
    changed = True
    sweeps = 0
    while changed:
        changed = False
        for axis in range(F.params.n):
            spawn = cube.take(free, axis=axis).any(axis=axis, keepdims=True)
            grown = cube | spawn
            if not np.array_equal(grown, cube):
                changed = True
                cube = grown
        sweeps += 1
    logger.debug("closure_P(%s) reached fixpoint after %d sweeps", P, sweeps)
    return Family(F.params, cube.reshape(-1))


def completeness_violation(F: Family, P: SymbolSet) -> Optional[Tuple[Word, Word, int]]:
    """First (x, y, position) with x in F, x <_P y differing only at `position`, y not in F."""
    free = _non_p_symbols(P, F.params.s)
    cube = F.cube()
    n = F.params.n
    for axis in range(n):
        spawn = cube.take(free, axis=axis).any(axis=axis, keepdims=True)
        missing = np.broadcast_to(spawn, cube.shape) & ~cube
        if not missing.any():
            continue
        y_idx = int(np.argmax(missing.reshape(-1)))
        y = decode(y_idx, F.params)
        position = n - axis
        for a in free:
            symbols = list(y.symbols)
            symbols[position - 1] = a + 1
            x = Word(params=F.params, symbols=tuple(symbols))
            if x in F:
                return x, y, position
    return None


def is_P_complete(F: Family, P: SymbolSet) -> bool:
    return completeness_violation(F, P) is None


def project(F: Family, i: int) -> SetFamily:
    """P_i(F): the sets {j : y_j = i} realised by members y of F."""
    if not 1 <= i <= F.params.s:
        raise ParameterError(f"symbol {i} outside [1, {F.params.s}]")
    W = F.symbols()
    weights = np.int64(1) << np.arange(F.params.n, dtype=np.int64)
    masks = (W == i).astype(np.int64) @ weights
    return SetFamily.from_masks(F.params.n, masks)


def slice_family(F: Family, i: int) -> Family:
    """F_i = {x in [s]^(n-1) : (x, i) in F}, fixing the last position."""
    if F.params.n < 2:
        raise ParameterError("slicing needs n >= 2")
    if not 1 <= i <= F.params.s:
        raise ParameterError(f"symbol {i} outside [1, {F.params.s}]")
    sub = SpaceParams(s=F.params.s, n=F.params.n - 1)
    # the last position is the most significant digit, so each slice is a contiguous block
    return Family(sub, F.membership.reshape(F.params.s, sub.size)[i - 1])
