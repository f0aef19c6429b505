# isecode/Utils/correlation.py
"""Checks of the negative correlation |F||G| >= s^n |F n G| between a
P-complete F and a Q-complete G (P, Q disjoint), and of its consequences."""

import logging
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import combinations
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union
import numpy as np
from isecode.Models.family import Family, closure_P, completeness_violation, slice_family
from isecode.Models.word import SpaceParams, SymbolSet, TVector, word_to_text
from isecode.Schemas.correlation import (
    CorrelationCheck, CorrelationReport, CorrelationTrial, SliceReport, SplitCheck, SubmultiplicativityReport,
)
from isecode.Utils.config import get_settings
from isecode.Utils.errors import ParameterError, PreconditionError
from isecode.Utils.extremal_search import p_oracle
from isecode.Utils.family_io import write_family
from isecode.Utils.rational import RationalLike, to_fraction

logger = logging.getLogger(__name__)

Seed = Union[int, Sequence[int]]
Pattern = Tuple[SymbolSet, SymbolSet]


def _check_pair(P: SymbolSet, Q: SymbolSet, s: int) -> None:
    P.check_proper(s, nonempty=True)
    Q.check_proper(s, nonempty=True)
    if P.members & Q.members:
        raise ParameterError(f"P = {P} and Q = {Q} must be disjoint")


def _require_complete(F: Family, P: SymbolSet, name: str) -> None:
    violation = completeness_violation(F, P)
    if violation is not None:
        x, y, position = violation
        raise PreconditionError(
            f"{name} is not {P}-complete: {word_to_text(x)} is in {name}, "
            f"{word_to_text(y)} (changed at position {position}) is not",
            extra={"family": name, "x": word_to_text(x), "y": word_to_text(y), "position": position},
        )


def check_correlation(F: Family, G: Family, P: SymbolSet, Q: SymbolSet) -> CorrelationCheck:
    if F.params != G.params:
        raise ParameterError(f"families live in different spaces: {F.params} vs {G.params}")
    s, n = F.params.s, F.params.n
    _check_pair(P, Q, s)
    _require_complete(F, P, "F")
    _require_complete(G, Q, "G")
    both = F.intersect(G).size
    lhs = F.size * G.size
    rhs = F.params.size * both
    return CorrelationCheck(s=s, n=n, P=tuple(sorted(P.members)), Q=tuple(sorted(Q.members)),
                            size_F=F.size, size_G=G.size, size_FG=both, lhs=lhs, rhs=rhs, slack=lhs - rhs)


def random_complete_family(params: SpaceParams, P: SymbolSet, rho: RationalLike, seed: Seed) -> Family:
    """Closure under <_P of a seeded random family with word density rho."""
    rho = to_fraction(rho)
    if not 0 <= rho <= 1:
        raise ParameterError(f"rho = {rho} outside [0, 1]")
    rng = np.random.default_rng(seed)
    # exact Bernoulli(num/den) draw per word
    draws = rng.integers(0, rho.denominator, size=params.size) < rho.numerator
    return closure_P(Family(params, draws), P)


def exhaustive_correlation(s: int, P: SymbolSet, Q: SymbolSet, n: int = 1) -> List[CorrelationCheck]:
    """Every P-complete F against every Q-complete G in [s]^1."""
    if n != 1:
        raise ParameterError("exhaustive enumeration is limited to n = 1")
    if s > 3:
        raise ParameterError(f"exhaustive enumeration is limited to s <= 3, got s = {s}")
    params = SpaceParams(s=s, n=1)
    _check_pair(P, Q, s)
    everything = [Family.from_indices(params, (a for a in range(s) if mask >> a & 1)) for mask in range(2 ** s)]
    left = [F for F in everything if completeness_violation(F, P) is None]
    right = [G for G in everything if completeness_violation(G, Q) is None]
    checks = [check_correlation(F, G, P, Q) for F in left for G in right]
    logger.info("exhaustive n=1 s=%d P=%s Q=%s: %d pairs, min slack %d",
                s, P, Q, len(checks), min(c.slack for c in checks))
    return checks


def slice_identity_check(F: Family, G: Family, P: SymbolSet, Q: SymbolSet) -> SliceReport:
    """Slice facts behind the induction on n, checked on actual data."""
    if F.params != G.params:
        raise ParameterError(f"families live in different spaces: {F.params} vs {G.params}")
    s, n = F.params.s, F.params.n
    if n < 2:
        raise ParameterError("slice checks need n >= 2")
    _check_pair(P, Q, s)
    _require_complete(F, P, "F")
    _require_complete(G, Q, "G")

    f = [slice_family(F, i).size for i in range(1, s + 1)]
    g = [slice_family(G, i).size for i in range(1, s + 1)]
    free_F, free_G = P.complement(s), Q.complement(s)
    violations = []
    for name, sizes, free in (("f", f, free_F), ("g", g, free_G)):
        common = {sizes[i - 1] for i in free}
        if len(common) > 1:
            violations.append(f"{name}_i differ across symbols outside the set: {sorted(common)}")
        for i in free:
            for j in range(1, s + 1):
                if sizes[i - 1] > sizes[j - 1]:
                    violations.append(f"{name}_{i} = {sizes[i - 1]} > {name}_{j} = {sizes[j - 1]}")
    f_common, g_common = f[free_F[0] - 1], g[free_G[0] - 1]
    for i in range(1, s + 1):
        if (f[i - 1] - f_common) * (g[i - 1] - g_common) != 0:
            violations.append(f"(f_{i} - f)(g_{i} - g) = {(f[i - 1] - f_common) * (g[i - 1] - g_common)} != 0")
    # the inductive step: s^n |F n G| <= s * sum_i f_i g_i
    both = F.intersect(G).size
    if F.params.size * both > s * sum(a * b for a, b in zip(f, g)):
        violations.append("s^n |F n G| exceeds s * sum f_i g_i")
    if violations:
        logger.warning("slice facts violated for P=%s Q=%s: %s", P, Q, violations)
    return SliceReport(s=s, n=n, P=tuple(sorted(P.members)), Q=tuple(sorted(Q.members)), f=f, g=g,
                       f_common=f_common, g_common=g_common, violations=violations)


def disjoint_patterns(s: int) -> List[Pattern]:
    """Disjoint non-empty (P, Q) up to relabelling symbols and swapping the roles: |P| <= |Q|."""
    patterns = []
    for a in range(1, s):
        for b in range(a, s - a + 1):
            patterns.append((SymbolSet.of(*range(1, a + 1)), SymbolSet.of(*range(a + 1, a + b + 1))))
    return patterns


def _replay_files(F: Family, G: Family, directory: Path, seed: int) -> List[str]:
    directory.mkdir(parents=True, exist_ok=True)
    left = write_family(F, directory / f"seed{seed}_F.fam")
    right = write_family(G, directory / f"seed{seed}_G.fam")
    return [str(left), str(right)]


def _run_trials(job: Tuple[int, int, List[Tuple[Tuple[int, ...], Tuple[int, ...]]], List[Fraction], int,
                List[int], Optional[str]]) -> List[CorrelationTrial]:
    s, n, patterns, rhos, base_seed, seeds, replay_dir = job
    params = SpaceParams(s=s, n=n)
    trials = []
    for k in seeds:
        rho = rhos[k % len(rhos)]
        for P_members, Q_members in patterns:
            P, Q = SymbolSet.of(*P_members), SymbolSet.of(*Q_members)
            rng_seed = [base_seed, k, *P_members, 0, *Q_members]
            F = random_complete_family(params, P, rho, rng_seed + [1])
            G = random_complete_family(params, Q, rho, rng_seed + [2])
            check = check_correlation(F, G, P, Q)
            replay = None
            if check.slack < 0:
                logger.error("correlation violated at seed %d, P=%s Q=%s: slack %d", k, P, Q, check.slack)
                if replay_dir:
                    replay = _replay_files(F, G, Path(replay_dir), k)
            trials.append(CorrelationTrial(seed=k, rho=rho, P=P_members, Q=Q_members, size_F=check.size_F,
                                           size_G=check.size_G, size_FG=check.size_FG, slack=check.slack,
                                           replay=replay))
    return trials


def run_correlation_campaign(s: int, n: int, *, patterns: Optional[Sequence[Pattern]] = None,
                             trials: Optional[int] = None, rhos: Optional[Sequence[RationalLike]] = None,
                             seed: Optional[int] = None, workers: int = 1,
                             replay_dir: Optional[Union[str, Path]] = None) -> CorrelationReport:
    """`trials` seeded random pairs for each (P, Q) pattern; rho cycles through `rhos` by seed."""
    settings = get_settings()
    trials = trials if trials is not None else settings.CORRELATION_TRIALS
    rhos = [to_fraction(r) for r in rhos] if rhos is not None else settings.correlation_rhos
    seed = seed if seed is not None else settings.CORRELATION_SEED
    patterns = list(patterns) if patterns is not None else disjoint_patterns(s)
    SpaceParams(s=s, n=n)
    for P, Q in patterns:
        _check_pair(P, Q, s)
    plain = [(tuple(sorted(P.members)), tuple(sorted(Q.members))) for P, Q in patterns]

    seeds = list(range(trials))
    chunks = [seeds[k::workers] for k in range(workers)] if workers > 1 else [seeds]
    jobs = [(s, n, plain, rhos, seed, chunk, str(replay_dir) if replay_dir else None) for chunk in chunks]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            batches = list(executor.map(_run_trials, jobs))
    else:
        batches = [_run_trials(job) for job in jobs]

    results = sorted((trial for batch in batches for trial in batch), key=lambda tr: (tr.seed, tr.P, tr.Q))
    violations = sum(1 for trial in results if trial.slack < 0)
    min_slack = min((trial.slack for trial in results), default=None)
    logger.info("correlation campaign s=%d n=%d: %d pairs, %d violations, min slack %s",
                s, n, len(results), violations, min_slack)
    return CorrelationReport(s=s, n=n, base_seed=seed, patterns=plain, trials=len(results),
                             violations=violations, min_slack=min_slack, results=results)


def check_submultiplicativity(n: int, s: int, t: TVector, **search_options) -> SubmultiplicativityReport:
    """p(t) <= p(head_r) p(tail_r) for every split r, and p(t) <= prod_i p(t_i e_i)."""
    if len(t.t) != s:
        raise ParameterError(f"t-vector has {len(t.t)} entries, alphabet has s = {s}")
    whole = p_oracle(n, s, t, **search_options)
    splits = []
    for r in range(1, s):
        head = p_oracle(n, s, t.head(r), **search_options)
        tail = p_oracle(n, s, t.tail(r), **search_options)
        splits.append(SplitCheck(r=r, p=whole, p_head=head, p_tail=tail, product=head * tail,
                                 holds=whole <= head * tail))
    chain = Fraction(1)
    for i, x in enumerate(t.t):
        if x:
            single = [0] * s
            single[i] = x
            chain *= p_oracle(n, s, TVector(t=tuple(single)), **search_options)
    return SubmultiplicativityReport(n=n, s=s, t=list(t.t), splits=splits, chain_product=chain,
                                     chain_holds=whole <= chain)
