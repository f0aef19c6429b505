# isecode/Routes/search.py
import argparse
import logging
import sys
import json
from isecode.Routes.common import emit, require, run_config, t_vector
from isecode.Schemas.search import SearchReport
from isecode.Utils.errors import SearchTimeout
from isecode.Utils.extremal_search import max_family
from isecode.Utils.family_io import write_family

logger = logging.getLogger(__name__)


def handle(args: argparse.Namespace) -> int:
    cfg = run_config(args)
    require(cfg, "n", "s")
    t = t_vector(cfg)
    result = max_family(cfg.n, cfg.s, t, timeout_ms=cfg.timeout_ms, workers=cfg.workers,
                        canonical_seed=args.canonical_seed)
    witness_file = str(write_family(result.witness, cfg.output)) if cfg.output else None
    report = SearchReport(n=cfg.n, s=cfg.s, t=list(t.t), max=result.max_size,
                          lower_bound_only=result.lower_bound_only, witness_file=witness_file,
                          nodes=result.nodes_explored, ms=result.elapsed_ms, vertices=result.vertices,
                          workers=result.workers)
    emit(report, cfg)
    if result.lower_bound_only:
        error = SearchTimeout(f"search stopped after {cfg.timeout_ms or 'the configured'} ms; "
                              f"{result.max_size} is a lower bound", extra={"lower_bound": result.max_size})
        sys.stderr.write(json.dumps(error.to_dict()) + "\n")
        return error.exit_code
    return 0


def register(subparsers, parent: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("search", parents=[parent], help="exact maximum family by clique search")
    parser.add_argument("--canonical-seed", action="store_true", dest="canonical_seed",
                        help="branch only at words with non-decreasing symbols")
    parser.set_defaults(handler=handle)
