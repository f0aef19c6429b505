# isecode/main.py
import argparse
import json
import logging
import sys
from typing import Optional, Sequence
from isecode import __version__
from isecode.Routes import bound, construct, correlate, search, table, verify
from isecode.Routes.common import shared_flags
from isecode.Utils.config import get_settings
from isecode.Utils.errors import IsecodeError

logger = logging.getLogger(__name__)

ROUTES = (bound, construct, search, verify, correlate, table)


def configure_logging() -> None:
    settings = get_settings()
    handlers = [logging.StreamHandler(sys.stderr)]
    if settings.LOG_FILE:
        handlers.append(logging.FileHandler(settings.LOG_FILE))
    logging.basicConfig(
        level=getattr(logging, settings.LOG_LEVEL.upper(), logging.INFO),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        handlers=handlers,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="isecode",
        description="Extremal (t_1,...,t_s)-intersecting families of words: bounds, constructions, exact search.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    parent = shared_flags()
    for route in ROUTES:
        route.register(subparsers, parent)
    return parser


def _report_error(payload: dict) -> None:
    sys.stderr.write(json.dumps(payload) + "\n")


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        configure_logging()
        return args.handler(args)
    except IsecodeError as e:
        logger.warning("%s refused: %s", args.command, e.detail)
        _report_error(e.to_dict())
        return e.exit_code
    except OSError as e:
        logger.error("I/O error: %s", e)
        _report_error({"error": str(e), "code": 4})
        return 4
    except Exception as e:
        logger.exception("Unhandled error in %s", args.command)
        _report_error({"error": f"internal error: {e}", "code": 1})
        return 1


if __name__ == "__main__":
    sys.exit(main())
