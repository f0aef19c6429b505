# isecode/Utils/constructions.py

import logging
import math
from fractions import Fraction
from typing import Iterable, List, Optional, Tuple
import numpy as np
from isecode.Models.family import Family, SetFamily, is_t_intersecting, popcount
from isecode.Models.word import SpaceParams, TVector
from isecode.Schemas.constructions import Partition, WindowFamilySpec
from isecode.Utils.errors import CapacityError, ParameterError
from isecode.Utils.measures import binomial_tail, bound_thm7, w

logger = logging.getLogger(__name__)

# families up to this many members get their intersecting property re-checked on construction
AUTO_VERIFY_LIMIT = 4096


def _positions(X: Iterable[int], n: int) -> Tuple[int, ...]:
    positions = tuple(sorted(set(int(j) for j in X)))
    if any(not 1 <= j <= n for j in positions):
        raise ParameterError(f"positions {positions} not inside [1, {n}]")
    return positions


def _majority(size: int, t: int) -> int:
    """ceil((size + t) / 2)"""
    return (size + t + 1) // 2


def symbol_counts(params: SpaceParams, positions: Iterable[int], symbol: int) -> np.ndarray:
    """For every word index, how many of `positions` carry `symbol`."""
    shape = (params.s,) * params.n
    counts = np.zeros(shape, dtype=np.int16)
    hit = np.arange(1, params.s + 1) == symbol
    for j in positions:
        axis = params.n - j
        view = [1] * params.n
        view[axis] = params.s
        counts += hit.reshape(view)
    return counts.reshape(-1)


def _postcheck(F: Family, t: TVector, verify: Optional[bool]) -> None:
    if verify is None:
        verify = F.size <= AUTO_VERIFY_LIMIT
    if verify and not is_t_intersecting(F, t):
        raise RuntimeError(f"construction produced a family that is not ({t})-intersecting")


def construct_K(n: int, X1: Iterable[int], X2: Iterable[int], t: Tuple[int, int],
                verify: Optional[bool] = None) -> Family:
    """Binary words with at least ceil((n_i + t_i)/2) symbols i inside X_i, i = 1, 2."""
    t1, t2 = t
    if t1 < 1 or t2 < 1:
        raise ParameterError(f"K needs t1, t2 >= 1, got ({t1},{t2})")
    params = SpaceParams(s=2, n=n)
    X1, X2 = _positions(X1, n), _positions(X2, n)
    if t1 > len(X1) or t2 > len(X2):
        logger.warning("K(|X1|=%d, |X2|=%d, t=(%d,%d)) is empty: some t_i exceeds |X_i|",
                       len(X1), len(X2), t1, t2)
        return Family.empty(params)
    membership = ((symbol_counts(params, X1, 1) >= _majority(len(X1), t1))
                  & (symbol_counts(params, X2, 2) >= _majority(len(X2), t2)))
    F = Family(params, membership)
    logger.info("K(|X1|=%d, |X2|=%d, t=(%d,%d)) on n=%d: %d words", len(X1), len(X2), t1, t2, n, F.size)
    if not set(X1) & set(X2):
        _postcheck(F, TVector.of(t1, t2), verify)
    return F


def density_K(n1: int, n2: int, t: Tuple[int, int]) -> Fraction:
    """Exact density of K for disjoint blocks of sizes n1, n2, without building it."""
    t1, t2 = t
    if t1 > n1 or t2 > n2:
        return Fraction(0)
    half = Fraction(1, 2)
    return binomial_tail(n1, _majority(n1, t1), half) * binomial_tail(n2, _majority(n2, t2), half)


def construct_L(n: int, s: int, X: Iterable[int], t: int, verify: Optional[bool] = None) -> Family:
    """Words with at least (|X| + t)/2 ones inside X; (t, 0, ..., 0)-intersecting."""
    params = SpaceParams(s=s, n=n)
    X = _positions(X, n)
    if not 1 <= t <= len(X):
        raise ParameterError(f"L needs 1 <= t <= |X|, got t = {t}, |X| = {len(X)}")
    F = Family(params, symbol_counts(params, X, 1) >= _majority(len(X), t))
    logger.info("L(|X|=%d, t=%d) in [%d]^%d: %d words", len(X), t, s, n, F.size)
    _postcheck(F, TVector(t=(t,) + (0,) * (s - 1)), verify)
    return F


def density_L(s: int, m: int, t: int) -> Fraction:
    """Exact density of L(X) for |X| = m."""
    if not 1 <= t <= m:
        raise ParameterError(f"L needs 1 <= t <= |X|, got t = {t}, |X| = {m}")
    return binomial_tail(m, _majority(m, t), Fraction(1, s))


def hoeffding_bound(n: int, s: int, eps: Fraction) -> float:
    """e^(-2 eps^2 n / s^2), the concentration estimate for the density of L(X)."""
    return math.exp(-2 * float(eps) ** 2 * n / s ** 2)


def construct_Ftr(n: int, t: int, r: int) -> SetFamily:
    spec = WindowFamilySpec(t=t, r=r)
    if t < 0 or r < 0 or spec.window > n:
        raise ParameterError(f"F_(t,r) needs t, r >= 0 and t + 2r <= n, got t = {t}, r = {r}, n = {n}")
    masks = np.arange(2 ** n, dtype=np.int64)
    inside = popcount(masks & ((1 << spec.window) - 1))
    return SetFamily(n, inside >= spec.threshold)


def lift(S: SetFamily, i: int, s: int) -> Family:
    """Words w with {j : w_j = i} in S. {i}-complete when S is upward closed."""
    if not 1 <= i <= s:
        raise ParameterError(f"symbol {i} outside [1, {s}]")
    if not S.is_upward_closed():
        raise ParameterError("lift needs an upward-closed set family")
    params = SpaceParams(s=s, n=S.n)
    shape = (s,) * S.n
    masks = np.zeros(shape, dtype=np.int64)
    hit = (np.arange(1, s + 1) == i).astype(np.int64)
    for j in range(1, S.n + 1):
        view = [1] * S.n
        view[S.n - j] = s
        masks += (hit << (j - 1)).reshape(view)
    return Family(params, S.membership[masks.reshape(-1)])


def plan_product_partition(n: int, s: int, t: TVector) -> Tuple[Partition, List[WindowFamilySpec]]:
    """Consecutive blocks |X_i| = t_i + 2r_i for i < s, X_s takes the rest."""
    if s < 3:
        raise ParameterError(f"product construction needs s >= 3, got s = {s}")
    bound_thm7(n, s, t)  # capacity check, raises with the deficit
    p = Fraction(1, s)
    specs = [WindowFamilySpec(t=x, r=w(n, x, p).r) for x in t.t]
    blocks = []
    start = 1
    for spec in specs[:-1]:
        blocks.append(tuple(range(start, start + spec.window)))
        start += spec.window
    blocks.append(tuple(range(start, n + 1)))
    if len(blocks[-1]) < specs[-1].window:
        raise CapacityError(f"last block has {len(blocks[-1])} positions, needs {specs[-1].window}",
                            extra={"deficit": specs[-1].window - len(blocks[-1])})
    return Partition(n=n, blocks=tuple(blocks)), specs


def construct_product(n: int, s: int, t: TVector, verify: Optional[bool] = None) -> Family:
    """Block i hosts lift(F_{t_i, r_i}, i); a word belongs iff every block accepts it."""
    partition, specs = plan_product_partition(n, s, t)
    params = SpaceParams(s=s, n=n)
    membership = np.ones(params.size, dtype=bool)
    for symbol, (block, spec) in enumerate(zip(partition.blocks, specs), start=1):
        if spec.threshold == 0:
            continue
        window = block[:spec.window]
        membership &= symbol_counts(params, window, symbol) >= spec.threshold
    F = Family(params, membership)
    expected = bound_thm7(n, s, t).words
    if F.size != expected:
        raise RuntimeError(f"product construction has {F.size} words, expected {expected}")
    logger.info("product construction t=(%s) in [%d]^%d: %d words, blocks %s",
                t, s, n, F.size, partition.sizes)
    _postcheck(F, t, verify)
    return F
