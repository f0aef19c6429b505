# isecode/Routes/verify.py
import argparse
import logging
from isecode.Models.family import Family, density, is_P_complete, is_t_intersecting
from isecode.Models.word import SpaceParams, SymbolSet, TVector
from isecode.Routes.common import emit, run_config, subsets
from isecode.Schemas.cli import RunConfig, VerifyReport
from isecode.Utils.errors import ParameterError
from isecode.Utils.family_io import read_family, read_metadata
from isecode.Utils.measures import bound_thm4, bound_thm7

logger = logging.getLogger(__name__)

# above this alphabet size only the singletons {i} are checked for completeness
ALL_SUBSETS_UP_TO = 4
METADATA_KEYS = ("n", "s", "size", "density")


def _demand(cfg: RunConfig, F: Family) -> TVector:
    if cfg.t is None:
        return TVector.zeros(F.params.s)
    t = TVector(t=tuple(cfg.t))
    t.check(F.params)
    return t


def verify_family(path: str, cfg: RunConfig) -> VerifyReport:
    # a blank file carries no header; it is read as the empty family of these params
    default_params = SpaceParams(s=cfg.s or 2, n=cfg.n or 1)
    F = read_family(path, default_params)
    if cfg.s is not None and cfg.s != F.params.s:
        raise ParameterError(f"file holds words over [{F.params.s}], -s says {cfg.s}")
    t = _demand(cfg, F)
    s, n = F.params.s, F.params.n

    symbol_sets = subsets(s) if s <= ALL_SUBSETS_UP_TO else (SymbolSet.of(i) for i in range(1, s + 1))
    completeness = {str(P): is_P_complete(F, P) for P in symbol_sets}

    report = VerifyReport(path=str(path), n=n, s=s, t=list(t.t), size=F.size, density=density(F),
                          intersecting=is_t_intersecting(F, t), completeness=completeness)
    try:
        report.thm4 = bound_thm4(n, s, t)
        report.within_thm4 = F.size <= report.thm4
    except ParameterError as e:
        logger.info("bound s^(n - sum t) not applicable: %s", e.detail)
    try:
        report.thm7 = bound_thm7(n, s, t).words
        report.within_thm7 = F.size <= report.thm7
    except ParameterError as e:
        logger.info("product bound not applicable: %s", e.detail)

    metadata = read_metadata(path)
    if metadata is not None:
        computed = report.model_dump(mode="json")
        mismatched = [key for key in METADATA_KEYS if key in metadata and metadata[key] != computed[key]]
        report.metadata = metadata
        report.metadata_matches = not mismatched
        if mismatched:
            logger.warning("%s disagrees with its sidecar on %s", path, ", ".join(mismatched))
    return report


def handle(args: argparse.Namespace) -> int:
    cfg = run_config(args)
    emit(verify_family(args.path, cfg), cfg)
    return 0


def register(subparsers, parent: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("verify", parents=[parent], help="check a family file")
    parser.add_argument("path")
    parser.set_defaults(handler=handle)
