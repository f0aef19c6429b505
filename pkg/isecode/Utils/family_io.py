# isecode/Utils/family_io.py

import json
import logging
from pathlib import Path
from typing import Any, Optional, Union
import numpy as np
from isecode.Models.family import Family
from isecode.Models.word import SpaceParams, encode, word_from_text
from isecode.Utils.errors import FamilyFormatError, IsecodeError, ParameterError

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]
BINARY_SUFFIXES = (".bfam", ".bin")


def is_binary_path(path: PathLike) -> bool:
    return Path(path).suffix in BINARY_SUFFIXES


def dumps_text(F: Family) -> str:
    if F.params.s > 9:
        raise ParameterError("the text format needs s <= 9; write a .bfam file instead")
    lines = [f"{F.params.s} {F.params.n}"]
    digits = (F.symbols() + ord("0")).astype(np.uint8)
    lines.extend(row.tobytes().decode("ascii") for row in digits)
    return "\n".join(lines) + "\n"


def loads_text(text: str, default_params: Optional[SpaceParams] = None) -> Family:
    """Parse the text format: a header "s n", then one digit-string word per line.

    A blank file is the empty family of `default_params` when those are given.
    """
    lines = text.splitlines()
    header_at = next((k for k, line in enumerate(lines) if line.strip()), None)
    if header_at is None:
        if default_params is not None:
            return Family.empty(default_params)
        raise FamilyFormatError("missing header line 's n'", line=1)
    parts = lines[header_at].split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise FamilyFormatError(f"header must be 's n', got {lines[header_at]!r}", line=header_at + 1)
    try:
        params = SpaceParams(s=int(parts[0]), n=int(parts[1]))
    except IsecodeError as e:
        raise FamilyFormatError(e.detail, line=header_at + 1)

    membership = np.zeros(params.size, dtype=bool)
    for lineno, line in enumerate(lines[header_at + 1:], start=header_at + 2):
        text_word = line.strip()
        if not text_word:
            continue
        try:
            w = word_from_text(text_word, params)
        except IsecodeError as e:
            raise FamilyFormatError(e.detail, line=lineno)
        idx = encode(w)
        if membership[idx]:
            raise FamilyFormatError(f"duplicate word {text_word}", line=lineno)
        membership[idx] = True
    return Family(params, membership)


def dumps_binary(F: Family) -> bytes:
    header = np.array([F.params.s, F.params.n], dtype="<u4").tobytes()
    return header + np.packbits(F.membership, bitorder="little").tobytes()


def loads_binary(blob: bytes) -> Family:
    if len(blob) < 8:
        raise FamilyFormatError("binary family is shorter than its 8-byte header")
    s, n = (int(x) for x in np.frombuffer(blob[:8], dtype="<u4"))
    try:
        params = SpaceParams(s=s, n=n)
    except IsecodeError as e:
        raise FamilyFormatError(e.detail)
    expected = (params.size + 7) // 8
    body = np.frombuffer(blob[8:], dtype=np.uint8)
    if body.size != expected:
        raise FamilyFormatError(f"binary body has {body.size} bytes, expected {expected} for s={s} n={n}")
    bits = np.unpackbits(body, bitorder="little")
    if np.any(bits[params.size:]):
        raise FamilyFormatError("padding bits after the last word must be zero")
    return Family(params, bits[:params.size].astype(bool))


def write_family(F: Family, path: PathLike) -> Path:
    path = Path(path)
    if is_binary_path(path):
        path.write_bytes(dumps_binary(F))
    else:
        path.write_text(dumps_text(F))
    logger.info("wrote %r (%d words) to %s", F, F.size, path)
    return path


def read_family(path: PathLike, default_params: Optional[SpaceParams] = None) -> Family:
    path = Path(path)
    if is_binary_path(path):
        return loads_binary(path.read_bytes())
    blob = path.read_bytes()
    try:
        text = blob.decode("utf-8")
    except UnicodeDecodeError as e:
        raise FamilyFormatError(f"byte {blob[e.start]:#04x} is not valid UTF-8",
                                line=blob.count(b"\n", 0, e.start) + 1)
    return loads_text(text, default_params)


def sidecar_path(path: PathLike) -> Path:
    path = Path(path)
    return path.with_name(path.name + ".json")


def write_metadata(path: PathLike, metadata: dict[str, Any]) -> Path:
    target = sidecar_path(path)
    target.write_text(json.dumps(metadata, indent=2, sort_keys=True) + "\n")
    return target


def read_metadata(path: PathLike) -> Optional[dict[str, Any]]:
    target = sidecar_path(path)
    if not target.exists():
        return None
    try:
        return json.loads(target.read_text())
    except json.JSONDecodeError as e:
        raise FamilyFormatError(f"sidecar {target.name} is not valid JSON: {e.msg}", line=e.lineno)
