# isecode/Routes/bound.py
import argparse
import logging
from fractions import Fraction
from isecode.Routes.common import emit, require, run_config, t_vector
from isecode.Schemas.cli import BoundEntry, BoundReport
from isecode.Utils.errors import ParameterError, PreconditionError
from isecode.Utils.measures import bound_thm4, bound_thm7, w

logger = logging.getLogger(__name__)


def bound_report(n: int, s: int, t, p=None) -> BoundReport:
    """Both upper bounds with applicability flags; refuses when neither applies."""
    try:
        words = bound_thm4(n, s, t)
        thm4 = BoundEntry(applicable=True, words=words, density=Fraction(words, s ** n))
    except ParameterError as e:
        thm4 = BoundEntry(applicable=False, reason=e.detail)
    try:
        product = bound_thm7(n, s, t)
        thm7 = BoundEntry(applicable=True, words=product.words, density=product.density,
                          windows=[sel.window for sel in product.selections])
    except ParameterError as e:
        thm7 = BoundEntry(applicable=False, reason=e.detail)

    if not thm4.applicable and not thm7.applicable:
        raise PreconditionError(f"no bound applies to n={n} s={s} t=({t})",
                                extra={"thm4": thm4.reason, "thm7": thm7.reason})
    selections = [w(n, x, p) for x in t.t] if p is not None else None
    return BoundReport(n=n, s=s, t=list(t.t), thm4=thm4, thm7=thm7, w=selections)


def handle(args: argparse.Namespace) -> int:
    cfg = run_config(args)
    require(cfg, "n", "s")
    report = bound_report(cfg.n, cfg.s, t_vector(cfg), cfg.p)
    emit(report, cfg)
    return 0


def register(subparsers, parent: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("bound", parents=[parent], help="upper bounds for (t_1,...,t_s)-intersecting families")
    parser.set_defaults(handler=handle)
