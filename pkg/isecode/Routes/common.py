# isecode/Routes/common.py

import argparse
import sys
from typing import Iterable, List, Sequence, Union
from pydantic import BaseModel
from isecode.Models.word import SymbolSet, TVector
from isecode.Schemas.cli import OutputFormat, RunConfig
from isecode.Utils.errors import ParameterError
from isecode.Utils.output import render


def shared_flags() -> argparse.ArgumentParser:
    """Flags every subcommand understands; used as an argparse parent."""
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("-n", type=int, help="word length")
    parent.add_argument("-s", type=int, help="alphabet size")
    parent.add_argument("-t", help="comma list t_1,...,t_s")
    parent.add_argument("-p", help="probability as num/den")
    parent.add_argument("-o", "--output", help="output file")
    parent.add_argument("--seed", type=int)
    parent.add_argument("--timeout-ms", type=int, dest="timeout_ms")
    parent.add_argument("--workers", type=int)
    parent.add_argument("--format", choices=[f.value for f in OutputFormat], default=None)
    return parent


def run_config(args: argparse.Namespace, default_format: OutputFormat = OutputFormat.JSON) -> RunConfig:
    return RunConfig(
        command=args.command,
        n=args.n,
        s=args.s,
        t=args.t,
        p=args.p,
        input=getattr(args, "path", None),
        output=args.output,
        seed=args.seed,
        timeout_ms=args.timeout_ms,
        workers=args.workers,
        format=args.format or default_format,
    )


def require(cfg: RunConfig, *names: str) -> None:
    missing = [name for name in names if getattr(cfg, name) is None]
    if missing:
        flags = ", ".join("-" + name for name in missing)
        raise ParameterError(f"{cfg.command} needs {flags}")


def t_vector(cfg: RunConfig) -> TVector:
    require(cfg, "t")
    t = TVector(t=tuple(cfg.t))
    if cfg.s is not None and len(t.t) != cfg.s:
        raise ParameterError(f"-t has {len(t.t)} entries but -s is {cfg.s}")
    return t


def scalar_t(cfg: RunConfig) -> int:
    """-t given as a single integer, or as (t, 0, ..., 0)."""
    require(cfg, "t")
    if any(cfg.t[1:]):
        raise ParameterError(f"{cfg.command} takes a single t, got -t {','.join(map(str, cfg.t))}")
    return cfg.t[0]


def positions(text: str, flag: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise ParameterError(f"{flag} must be a comma list of positions, got {text!r}")


def symbol_set(text: str, flag: str) -> SymbolSet:
    return SymbolSet.of(*positions(text, flag))


def emit(payload: Union[BaseModel, Sequence[BaseModel]], cfg: RunConfig) -> None:
    sys.stdout.write(render(payload, cfg.format).rstrip("\n") + "\n")


def subsets(s: int) -> Iterable[SymbolSet]:
    """Proper non-empty subsets of [s], smallest first."""
    for mask in sorted(range(1, 2 ** s - 1), key=lambda m: (bin(m).count("1"), m)):
        yield SymbolSet.of(*(a + 1 for a in range(s) if mask >> a & 1))
