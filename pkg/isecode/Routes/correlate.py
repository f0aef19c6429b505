# isecode/Routes/correlate.py
import argparse
import logging
from typing import List, Optional
from isecode.Routes.common import emit, require, run_config, symbol_set
from isecode.Schemas.correlation import ExhaustiveReport
from isecode.Utils.correlation import Pattern, disjoint_patterns, exhaustive_correlation, run_correlation_campaign
from isecode.Utils.errors import ParameterError

logger = logging.getLogger(__name__)


def _patterns(args: argparse.Namespace) -> Optional[List[Pattern]]:
    if (args.P is None) != (args.Q is None):
        raise ParameterError("give both -P and -Q, or neither")
    if args.P is None:
        return None
    return [(symbol_set(args.P, "-P"), symbol_set(args.Q, "-Q"))]


def exhaustive_report(s: int, patterns: Optional[List[Pattern]]) -> ExhaustiveReport:
    patterns = patterns if patterns is not None else disjoint_patterns(s)
    checks = [check for P, Q in patterns for check in exhaustive_correlation(s, P, Q)]
    return ExhaustiveReport(
        s=s, n=1,
        patterns=[(tuple(sorted(P.members)), tuple(sorted(Q.members))) for P, Q in patterns],
        pairs=len(checks),
        violations=sum(1 for check in checks if not check.holds),
        min_slack=min((check.slack for check in checks), default=None),
        checks=checks,
    )


def handle(args: argparse.Namespace) -> int:
    cfg = run_config(args)
    require(cfg, "s")
    patterns = _patterns(args)
    if args.exhaustive:
        if cfg.n not in (None, 1):
            raise ParameterError("--exhaustive runs in [s]^1 only")
        report = exhaustive_report(cfg.s, patterns)
    else:
        require(cfg, "n")
        rhos = args.rhos.split(",") if args.rhos else None
        report = run_correlation_campaign(cfg.s, cfg.n, patterns=patterns, trials=args.trials, rhos=rhos,
                                          seed=cfg.seed, workers=cfg.workers or 1, replay_dir=args.replay_dir)
    emit(report, cfg)
    if report.violations:
        logger.error("%d correlation violations", report.violations)
        return 1
    return 0


def register(subparsers, parent: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("correlate", parents=[parent],
                                   help="check |F||G| >= s^n |F n G| on complete families")
    parser.add_argument("-P", help="symbol set F is complete for, e.g. 1,2")
    parser.add_argument("-Q", help="symbol set G is complete for, disjoint from P")
    parser.add_argument("--trials", type=int)
    parser.add_argument("--rhos", help="comma list of word densities, e.g. 1/8,1/2")
    parser.add_argument("--replay-dir", dest="replay_dir", help="where violating pairs are written")
    parser.add_argument("--exhaustive", action="store_true", help="all complete pairs in [s]^1")
    parser.set_defaults(handler=handle)
