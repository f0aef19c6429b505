# isecode/Routes/construct.py
import argparse
import logging
from typing import Optional
from isecode.Models.family import Family, density
from isecode.Routes.common import emit, positions, require, run_config, scalar_t, t_vector
from isecode.Schemas.cli import ConstructReport, RunConfig
from isecode.Utils.config import get_settings
from isecode.Utils.constructions import (
    construct_Ftr, construct_K, construct_L, construct_product, density_K, density_L, lift, plan_product_partition,
)
from isecode.Utils.errors import ParameterError
from isecode.Utils.family_io import write_family, write_metadata

logger = logging.getLogger(__name__)

KINDS = ("K", "L", "Ftr", "product")


def _beyond_cap(s: int, n: int) -> bool:
    return s ** n > get_settings().DENSE_CAP


def _build_K(cfg: RunConfig, args: argparse.Namespace):
    if cfg.s not in (None, 2):
        raise ParameterError(f"K lives in [2]^n, got -s {cfg.s}")
    t = t_vector(cfg)
    if len(t.t) != 2:
        raise ParameterError(f"K takes -t t1,t2, got ({t})")
    if args.x1 is None or args.x2 is None:
        raise ParameterError("K needs --x1 and --x2")
    X1, X2 = positions(args.x1, "--x1"), positions(args.x2, "--x2")
    blocks = [sorted(set(X1)), sorted(set(X2))]
    if _beyond_cap(2, cfg.n):
        if set(X1) & set(X2):
            raise ParameterError("density-only K needs disjoint --x1 and --x2")
        if any(not 1 <= j <= cfg.n for j in X1 + X2):
            raise ParameterError(f"positions outside [1, {cfg.n}]")
        return None, density_K(len(blocks[0]), len(blocks[1]), t.t), 2, list(t.t), blocks
    F = construct_K(cfg.n, X1, X2, t.t)
    return F, density(F), 2, list(t.t), blocks


def _build_L(cfg: RunConfig, args: argparse.Namespace):
    require(cfg, "s")
    t = scalar_t(cfg)
    if args.x is None:
        raise ParameterError("L needs --x")
    X = sorted(set(positions(args.x, "--x")))
    if any(not 1 <= j <= cfg.n for j in X):
        raise ParameterError(f"positions outside [1, {cfg.n}]")
    t_list = [t] + [0] * (cfg.s - 1)
    if _beyond_cap(cfg.s, cfg.n):
        return None, density_L(cfg.s, len(X), t), cfg.s, t_list, [X]
    F = construct_L(cfg.n, cfg.s, X, t)
    return F, density(F), cfg.s, t_list, [X]


def _build_Ftr(cfg: RunConfig, args: argparse.Namespace):
    require(cfg, "s")
    t = scalar_t(cfg)
    if args.r is None:
        raise ParameterError("Ftr needs -r")
    F = lift(construct_Ftr(cfg.n, t, args.r), args.symbol, cfg.s)
    t_list = [0] * cfg.s
    t_list[args.symbol - 1] = t
    return F, density(F), cfg.s, t_list, [list(range(1, t + 2 * args.r + 1))]


def _build_product(cfg: RunConfig, args: argparse.Namespace):
    require(cfg, "s")
    t = t_vector(cfg)
    partition, _ = plan_product_partition(cfg.n, cfg.s, t)
    F = construct_product(cfg.n, cfg.s, t)
    return F, density(F), cfg.s, list(t.t), [list(block) for block in partition.blocks]


BUILDERS = {"K": _build_K, "L": _build_L, "Ftr": _build_Ftr, "product": _build_product}


def construct_report(cfg: RunConfig, args: argparse.Namespace) -> tuple[Optional[Family], ConstructReport]:
    require(cfg, "n")
    F, q, s, t, blocks = BUILDERS[args.kind](cfg, args)
    report = ConstructReport(kind=args.kind, n=cfg.n, s=s, t=t, size=F.size if F is not None else None,
                             density=q, blocks=blocks)
    return F, report


def handle(args: argparse.Namespace) -> int:
    cfg = run_config(args)
    F, report = construct_report(cfg, args)
    if cfg.output:
        if F is None:
            logger.warning("%s family in [%d]^%d is beyond the dense cap; writing no file, density only",
                           report.kind, report.s, report.n)
        else:
            path = write_family(F, cfg.output)
            report = report.model_copy(update={"output": str(path)})
            write_metadata(path, report.model_dump(mode="json", exclude={"output"}))
    emit(report, cfg)
    return 0


def register(subparsers, parent: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("construct", parents=[parent], help="build an extremal family")
    parser.add_argument("kind", choices=KINDS)
    parser.add_argument("--x1", help="positions of the first block (K)")
    parser.add_argument("--x2", help="positions of the second block (K)")
    parser.add_argument("--x", help="positions of the majority block (L)")
    parser.add_argument("-r", type=int, help="window parameter (Ftr)")
    parser.add_argument("--symbol", type=int, default=1, help="symbol the set family is lifted at (Ftr)")
    parser.set_defaults(handler=handle)
