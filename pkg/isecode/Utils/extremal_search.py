# isecode/Utils/extremal_search.py
"""Exact maximum (t_1, ..., t_s)-intersecting families by maximum clique search.

Vertices of the compatibility graph are the words that satisfy the demand with
themselves; edges join pairs that satisfy it with each other. A maximum clique
is a maximum family.

The solver is a bitset branch and bound with greedy colouring bounds. Top-level
branches (one per vertex, ascending word index) are processed in batches of a
fixed size; every branch of a batch starts from the best size known when the
batch began. Batches do not depend on the worker count, so witnesses and node
counts are identical for any number of workers.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import List, Optional, Sequence, Tuple
import numpy as np
from isecode.Models.family import Family
from isecode.Models.word import SpaceParams, TVector, symbol_matrix
from isecode.Schemas.search import BestK
from isecode.Utils.config import get_settings
from isecode.Utils.constructions import symbol_counts
from isecode.Utils.errors import CapacityError, ParameterError, SearchTimeout

logger = logging.getLogger(__name__)

_ROW_BLOCK = 1 << 22
_CLOCK_EVERY = 2048


@dataclass(frozen=True)
class CompatGraph:
    params: SpaceParams
    t: TVector
    vertices: Tuple[int, ...]  # word indices, ascending
    adjacency: Tuple[int, ...]  # row bitsets over vertex positions, no self-loops

    @property
    def order(self) -> int:
        return len(self.vertices)

    def is_complete(self) -> bool:
        everyone = (1 << self.order) - 1
        return all(row | (1 << v) == everyone for v, row in enumerate(self.adjacency))


@dataclass
class SearchResult:
    max_size: int
    witness: Family
    nodes_explored: int
    elapsed: float  # seconds
    lower_bound_only: bool = False
    vertices: int = 0
    workers: int = 1

    @property
    def elapsed_ms(self) -> int:
        return int(round(self.elapsed * 1000))


@dataclass
class _BranchOutcome:
    size: int
    clique: List[int] = field(default_factory=list)
    nodes: int = 0
    timed_out: bool = False


def _rows_to_bitsets(rows: np.ndarray) -> List[int]:
    packed = np.packbits(rows, axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


def build_compat_graph(n: int, s: int, t: TVector) -> CompatGraph:
    params = SpaceParams(s=s, n=n)
    t.check(params)
    settings = get_settings()

    keep = np.ones(params.size, dtype=bool)
    every_position = range(1, n + 1)
    for symbol, need in enumerate(t.t, start=1):
        if need:
            keep &= symbol_counts(params, every_position, symbol) >= need
    vertices = np.flatnonzero(keep)
    if vertices.size > settings.VERTEX_CAP:
        raise CapacityError(f"compatibility graph has {vertices.size} vertices, cap is {settings.VERTEX_CAP}",
                            extra={"vertices": int(vertices.size), "cap": settings.VERTEX_CAP})

    V = vertices.size
    W = symbol_matrix(vertices, params)
    demands = [(symbol, need, (W == symbol).astype(np.int32)) for symbol, need in enumerate(t.t, start=1) if need]
    adjacency: List[int] = []
    rows_per_block = max(1, _ROW_BLOCK // max(1, V))
    for start in range(0, V, rows_per_block):
        stop = min(V, start + rows_per_block)
        ok = np.ones((stop - start, V), dtype=bool)
        for _, need, E in demands:
            ok &= (E[start:stop] @ E.T) >= need
        ok[np.arange(stop - start), np.arange(start, stop)] = False
        adjacency.extend(_rows_to_bitsets(ok))
    logger.debug("compatibility graph for n=%d s=%d t=(%s): %d vertices", n, s, t, V)
    return CompatGraph(params=params, t=t, vertices=tuple(int(v) for v in vertices),
                       adjacency=tuple(adjacency))


def _color_sort(P: int, adj: Sequence[int]) -> List[Tuple[int, int]]:
    """Greedy sequential colouring of P in ascending vertex order; returns (vertex, colour) by colour."""
    order = []
    colour = 0
    uncoloured = P
    while uncoloured:
        colour += 1
        Q = uncoloured
        while Q:
            low = Q & -Q
            v = low.bit_length() - 1
            Q &= ~low & ~adj[v]
            uncoloured &= ~low
            order.append((v, colour))
    return order


def _expand(prefix: List[int], P: int, adj: Sequence[int], best: int, deadline: float) -> _BranchOutcome:
    """Largest clique prefix + C with C inside P, reported only if larger than `best`."""
    outcome = _BranchOutcome(size=best, nodes=1)
    R = list(prefix)
    if not P:
        if len(R) > best:
            outcome.size, outcome.clique = len(R), list(R)
        return outcome
    stack = [[_color_sort(P, adj), P]]
    while stack:
        frame = stack[-1]
        order, cand = frame
        if order:
            v, colour = order[-1]
            if len(R) + colour <= outcome.size:
                order.clear()
                continue
            order.pop()
            R.append(v)
            sub = cand & adj[v]
            if sub:
                outcome.nodes += 1
                if outcome.nodes % _CLOCK_EVERY == 0 and time.perf_counter() > deadline:
                    outcome.timed_out = True
                    return outcome
                stack.append([_color_sort(sub, adj), sub])
                continue
            if len(R) > outcome.size:
                outcome.size, outcome.clique = len(R), list(R)
            R.pop()
            frame[1] = cand & ~(1 << v)
        else:
            stack.pop()
            if stack:
                v = R.pop()
                stack[-1][1] &= ~(1 << v)
    return outcome


_WORKER_ADJ: Tuple[int, ...] = ()


def _init_worker(adjacency: Tuple[int, ...]) -> None:
    global _WORKER_ADJ
    _WORKER_ADJ = adjacency


def _run_branch(job: Tuple[int, int, int, float]) -> _BranchOutcome:
    v, P, best, deadline = job
    return _expand([v], P, _WORKER_ADJ, best, deadline)


def _greedy_clique(graph: CompatGraph) -> List[int]:
    clique = []
    P = (1 << graph.order) - 1
    while P:
        low = P & -P
        v = low.bit_length() - 1
        clique.append(v)
        P &= graph.adjacency[v]
    return clique


def _is_sorted_word(symbols: np.ndarray) -> bool:
    return bool(np.all(np.diff(symbols) >= 0))


def _branches(graph: CompatGraph, canonical_seed: bool) -> List[Tuple[int, int]]:
    """(vertex, candidate set) per top-level branch, ascending vertex."""
    branches = []
    if canonical_seed:
        W = symbol_matrix(graph.vertices, graph.params)
        for v in range(graph.order):
            if _is_sorted_word(W[v]):
                branches.append((v, graph.adjacency[v]))
        return branches
    for v in range(graph.order):
        later = ~((1 << (v + 1)) - 1)
        branches.append((v, graph.adjacency[v] & later))
    return branches


def solve_clique(graph: CompatGraph, *, timeout_ms: Optional[int] = None, workers: Optional[int] = None,
                 canonical_seed: bool = False) -> SearchResult:
    settings = get_settings()
    timeout_ms = timeout_ms if timeout_ms is not None else settings.SEARCH_TIMEOUT_MS
    workers = workers if workers is not None else settings.SEARCH_WORKERS
    batch_size = settings.SEARCH_BATCH_SIZE
    started = time.perf_counter()
    deadline = started + timeout_ms / 1000

    clique = _greedy_clique(graph)
    best = len(clique)
    nodes = 0
    timed_out = False

    if graph.order and not graph.is_complete():
        branches = _branches(graph, canonical_seed)
        executor = None
        if workers > 1:
            executor = ProcessPoolExecutor(max_workers=workers, initializer=_init_worker,
                                           initargs=(graph.adjacency,))
        else:
            _init_worker(graph.adjacency)
        try:
            for start in range(0, len(branches), batch_size):
                batch = branches[start:start + batch_size]
                jobs = [(v, P, best, deadline) for v, P in batch]
                outcomes = list(executor.map(_run_branch, jobs)) if executor else [_run_branch(j) for j in jobs]
                for outcome in outcomes:
                    nodes += outcome.nodes
                    timed_out = timed_out or outcome.timed_out
                    if outcome.size > best and outcome.clique:
                        best, clique = outcome.size, outcome.clique
                logger.debug("batch %d: best %d, nodes %d", start // batch_size, best, nodes)
                if timed_out:
                    logger.warning("search timed out after %d ms; %d is a lower bound only", timeout_ms, best)
                    break
        finally:
            if executor:
                executor.shutdown()
    elif graph.order:
        clique = list(range(graph.order))
        best = graph.order

    witness = Family.from_indices(graph.params, (graph.vertices[v] for v in clique))
    return SearchResult(max_size=best, witness=witness, nodes_explored=nodes, elapsed=time.perf_counter() - started,
                        lower_bound_only=timed_out, vertices=graph.order, workers=workers)


def max_family(n: int, s: int, t: TVector, *, timeout_ms: Optional[int] = None, workers: Optional[int] = None,
               canonical_seed: bool = False) -> SearchResult:
    params = SpaceParams(s=s, n=n)
    t.check(params)
    if t.total == 0:
        return SearchResult(max_size=params.size, witness=Family.full(params), nodes_explored=0,
                            elapsed=0.0, vertices=params.size)
    graph = build_compat_graph(n, s, t)
    result = solve_clique(graph, timeout_ms=timeout_ms, workers=workers, canonical_seed=canonical_seed)
    logger.info("max family n=%d s=%d t=(%s): %d%s over %d vertices, %d nodes, %d ms",
                n, s, t, result.max_size, " (lower bound)" if result.lower_bound_only else "",
                result.vertices, result.nodes_explored, result.elapsed_ms)
    return result


def p_oracle(n: int, s: int, t: TVector, **options) -> Fraction:
    result = max_family(n, s, t, **options)
    if result.lower_bound_only:
        raise SearchTimeout(f"search for n={n} s={s} t=({t}) timed out; only a lower bound is known",
                            extra={"lower_bound": result.max_size})
    return Fraction(result.max_size, s ** n)


def _upper_count(m: int, k: int) -> int:
    """Number of binary strings of length m with at least k ones."""
    return sum(comb(m, j) for j in range(max(k, 0), m + 1))


def best_K(n: int, t: Tuple[int, int]) -> BestK:
    """Largest |K(X1, X2, t)| over disjoint blocks; only the block sizes matter."""
    t1, t2 = t
    if t1 < 1 or t2 < 1 or t1 + t2 > n:
        raise ParameterError(f"need t1, t2 >= 1 and t1 + t2 <= n, got t = ({t1},{t2}), n = {n}")
    if n > 14:
        raise ParameterError(f"the block sweep is limited to n <= 14, got n = {n}")
    best_key, best = None, None
    for n1 in range(t1, n + 1):
        for n2 in range(t2, n - n1 + 1):
            size = (2 ** (n - n1 - n2) * _upper_count(n1, (n1 + t1 + 1) // 2)
                    * _upper_count(n2, (n2 + t2 + 1) // 2))
            parity_ok = n1 % 2 == t1 % 2 and n2 % 2 == t2 % 2
            key = (size, parity_ok, n1 + n2, -n1)
            if best_key is None or key > best_key:
                best_key = key
                best = BestK(n=n, t=(t1, t2), size=size, n1=n1, n2=n2, parity_ok=parity_ok,
                             near_cover=n1 + n2 >= n - 1)
    return best
