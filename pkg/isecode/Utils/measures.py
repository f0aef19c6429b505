# isecode/Utils/measures.py
"""Exact p-biased measures, the complete-intersection value w(n, t, p) and the
bound formulas for (t_1, ..., t_s)-intersecting families.

Everything here is exact rational arithmetic.
"""

import logging
from fractions import Fraction
from math import comb
import numpy as np
from isecode.Models.family import SetFamily
from isecode.Models.word import TVector
from isecode.Utils.errors import CapacityError, ParameterError, PreconditionError
from isecode.Schemas.measures import Thm7Bound, WSelection
from isecode.Utils.rational import RationalLike, to_fraction

logger = logging.getLogger(__name__)


def _probability(p: RationalLike) -> Fraction:
    p = to_fraction(p)
    if not 0 <= p <= 1:
        raise ParameterError(f"p = {p} outside [0, 1]")
    return p


def binomial_tail(m: int, k: int, p: RationalLike) -> Fraction:
    """P(Bin(m, p) >= k)."""
    p = _probability(p)
    q = 1 - p
    return sum((comb(m, j) * p ** j * q ** (m - j) for j in range(max(k, 0), m + 1)), Fraction(0))


def mu_p(S: SetFamily, p: RationalLike) -> Fraction:
    p = _probability(p)
    if S.size == 0:
        return Fraction(0)
    by_size = np.bincount(S.set_sizes(), minlength=S.n + 1)
    q = 1 - p
    return sum((int(c) * p ** k * q ** (S.n - k) for k, c in enumerate(by_size) if c), Fraction(0))


def mu_p_window(t: int, r: int, p: RationalLike) -> Fraction:
    """mu_p of {A : |A n [t+2r]| >= t+r}; coordinates outside the window are free."""
    if t < 0 or r < 0:
        raise ParameterError(f"need t, r >= 0, got t = {t}, r = {r}")
    return binomial_tail(t + 2 * r, t + r, p)


def r_star(n: int, t: int) -> int:
    if n < t:
        raise ParameterError(f"r* needs n >= t, got n = {n}, t = {t}")
    return (n - t) // 2


def w(n: int, t: int, p: RationalLike) -> WSelection:
    """Largest mu_p-measure of a t-intersecting family in 2^[n], p in (0, 1/2].

    For t >= 2 the window r is the first r < r* whose interval
    [r/(t+2r-1), (r+1)/(t+2r+1)] holds p, else r*. Boundary ties go to the
    smaller r. t = 0 gives 1 and t = 1 gives p (the family of sets containing 1).
    """
    p = to_fraction(p)
    if not 0 < p <= Fraction(1, 2):
        raise ParameterError(f"w is defined for p in (0, 1/2], got p = {p}")
    if t < 0:
        raise ParameterError(f"t must be non-negative, got {t}")
    rs = r_star(n, t)
    if t == 0:
        return WSelection(t=t, p=p, r=0, r_star=rs, value=Fraction(1))
    if t == 1:
        return WSelection(t=t, p=p, r=0, r_star=rs, value=p)
    chosen = rs
    for r in range(rs):
        if Fraction(r, t + 2 * r - 1) <= p <= Fraction(r + 1, t + 2 * r + 1):
            chosen = r
            break
    else:
        if p < Fraction(rs, t + 2 * rs - 1):
            # unreachable: the intervals below r* tile [0, r*/(t+2r*-1)]
            raise ParameterError(f"no window selected for n = {n}, t = {t}, p = {p}")
    return WSelection(t=t, p=p, r=chosen, r_star=rs, value=mu_p_window(t, chosen, p))


def eq9_window(t: int, s: int) -> int:
    """Smallest block length that hosts the window selected by w(., t, 1/s)."""
    if s < 3:
        raise ParameterError(f"window length is defined for s >= 3, got s = {s}")
    if t < 0:
        raise ParameterError(f"t must be non-negative, got {t}")
    raw = -((s - 1 - t) // (s - 2))  # ceil((t - s + 1) / (s - 2))
    return t + 2 * max(0, raw)


def _check_t(n: int, s: int, t: TVector) -> None:
    if len(t.t) != s:
        raise ParameterError(f"t-vector has {len(t.t)} entries, alphabet has s = {s}")
    if t.total > n:
        raise ParameterError(f"sum of t = {t.total} exceeds n = {n}")


def bound_thm4(n: int, s: int, t: TVector) -> int:
    """|F| <= s^(n - sum t_i), asserted only when every t_i < s."""
    _check_t(n, s, t)
    if any(x >= s for x in t.t):
        raise PreconditionError(f"bound s^(n - sum t) needs every t_i < s = {s}, got t = ({t})")
    return s ** (n - t.total)


def bound_thm7(n: int, s: int, t: TVector) -> Thm7Bound:
    """Exact maximum density prod_i w(n, t_i, 1/s), valid under the capacity condition."""
    if s < 3:
        raise ParameterError(f"product bound needs s >= 3, got s = {s}")
    _check_t(n, s, t)
    need = sum(eq9_window(x, s) for x in t.t)
    if need > n:
        raise CapacityError(f"capacity condition fails: windows need {need} > n = {n}",
                            extra={"needed": need, "n": n, "deficit": need - n})
    p = Fraction(1, s)
    selections = [w(n, x, p) for x in t.t]
    value = Fraction(1)
    for sel in selections:
        value *= sel.value
    words = value * s ** n
    assert words.denominator == 1, "windows fit inside n, so the product is integral"
    return Thm7Bound(density=value, words=int(words), selections=selections)


def bound_frankl_furedi(n: int, s: int, t: int) -> int:
    """s^(n-t) for a t-intersecting family of [s]^n, s > t >= 1."""
    if not 1 <= t < s:
        raise PreconditionError(f"needs s > t >= 1, got s = {s}, t = {t}")
    if t > n:
        raise ParameterError(f"t = {t} exceeds n = {n}")
    return s ** (n - t)


def bound_majority(n: int) -> int:
    """2^(n-2) for binary words pairwise sharing a 1 and a 2."""
    if n < 2:
        raise ParameterError(f"needs n >= 2, got {n}")
    return 2 ** (n - 2)
