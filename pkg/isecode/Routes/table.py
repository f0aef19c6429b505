# isecode/Routes/table.py
import argparse
import logging
from fractions import Fraction
from itertools import product
from typing import Iterable, List, Sequence
from isecode.Models.word import TVector
from isecode.Routes.common import emit, positions, run_config
from isecode.Schemas.cli import OutputFormat, TableRow
from isecode.Utils.errors import ParameterError, SearchTimeout
from isecode.Utils.extremal_search import best_K, max_family
from isecode.Utils.measures import bound_thm4, bound_thm7

logger = logging.getLogger(__name__)


def demands(n: int, s: int) -> Iterable[TVector]:
    """Every t in N^s with sum t_i <= n, lexicographic."""
    for t in product(range(n + 1), repeat=s):
        if sum(t) <= n:
            yield TVector(t=t)


def table_row(n: int, s: int, t: TVector, timeout_ms=None, workers=None) -> TableRow:
    result = max_family(n, s, t, timeout_ms=timeout_ms, workers=workers)
    row = TableRow(n=n, s=s, t=str(t), max=result.max_size, p=Fraction(result.max_size, s ** n),
                   lower_bound_only=result.lower_bound_only)
    try:
        row.thm4 = bound_thm4(n, s, t)
    except ParameterError:
        pass
    try:
        row.thm7 = bound_thm7(n, s, t).words
    except ParameterError:
        pass
    if s == 2 and min(t.t) >= 1:
        row.best_K = best_K(n, t.t).size
    return row


def sweep(s_values: Sequence[int], n_values: Sequence[int], timeout_ms=None, workers=None) -> List[TableRow]:
    rows = []
    for s in s_values:
        for n in n_values:
            for t in demands(n, s):
                rows.append(table_row(n, s, t, timeout_ms, workers))
            logger.info("table: s=%d n=%d done, %d rows so far", s, n, len(rows))
    return rows


def handle(args: argparse.Namespace) -> int:
    cfg = run_config(args, default_format=OutputFormat.CSV)
    s_values = [cfg.s] if cfg.s is not None else positions(args.s_values, "--s-values")
    n_values = [cfg.n] if cfg.n is not None else list(range(1, args.n_max + 1))
    if any(s < 2 for s in s_values) or any(n < 1 for n in n_values):
        raise ParameterError("table needs s >= 2 and n >= 1")
    rows = sweep(s_values, n_values, cfg.timeout_ms, cfg.workers)
    emit(rows, cfg)
    partial = [f"n={row.n} s={row.s} t=({row.t})" for row in rows if row.lower_bound_only]
    if partial:
        raise SearchTimeout(f"{len(partial)} rows hold lower bounds only", extra={"rows": partial})
    return 0


def register(subparsers, parent: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("table", parents=[parent], help="sweep a parameter grid, CSV by default")
    parser.add_argument("--s-values", dest="s_values", default="2,3", help="comma list of alphabet sizes")
    parser.add_argument("--n-max", dest="n_max", type=int, default=4, help="largest word length")
    parser.set_defaults(handler=handle)
