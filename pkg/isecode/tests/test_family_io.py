# isecode/tests/test_family_io.py

import numpy as np
import pytest
from isecode.Models.family import Family
from isecode.Models.word import SpaceParams
from isecode.Utils.errors import FamilyFormatError, ParameterError
from isecode.Utils.family_io import (
    dumps_binary, dumps_text, loads_binary, loads_text, read_family, read_metadata, sidecar_path, write_family,
    write_metadata,
)


def test_text_layout(prefix_family):
    assert dumps_text(prefix_family) == "3 3\n121\n122\n123\n"


def test_text_parse(space33):
    F = loads_text("3 3\n\n211\n  123 \n")
    assert F.params == space33
    assert sorted(str(word) for word in F) == ["123", "211"]


def test_blank_file_needs_default_params(space33):
    assert loads_text("\n\n", default_params=space33) == Family.empty(space33)
    with pytest.raises(FamilyFormatError) as err:
        loads_text("")
    assert err.value.line == 1


@pytest.mark.parametrize("text,line", [
    ("3\n111\n", 1),
    ("3 3\n111\n1111\n", 3),
    ("3 3\n111\n141\n", 3),
    ("3 3\n111\n111\n", 3),
    ("3 3\n1x1\n", 2),
    ("1 3\n", 1),
])
def test_text_errors_carry_line_numbers(text, line):
    with pytest.raises(FamilyFormatError) as err:
        loads_text(text)
    assert err.value.line == line
    assert err.value.detail.startswith(f"line {line}: ")


def test_text_needs_small_alphabet():
    with pytest.raises(ParameterError):
        dumps_text(Family.empty(SpaceParams(s=10, n=2)))


def test_binary_layout():
    params = SpaceParams(s=3, n=2)
    blob = dumps_binary(Family.from_indices(params, [0, 8]))
    assert blob[:8] == bytes([3, 0, 0, 0, 2, 0, 0, 0])
    assert blob[8:] == bytes([0b00000001, 0b00000001])


def test_binary_parse_checks_body():
    params = SpaceParams(s=3, n=2)
    blob = dumps_binary(Family.full(params))
    assert loads_binary(blob) == Family.full(params)
    with pytest.raises(FamilyFormatError):
        loads_binary(blob[:-1])
    with pytest.raises(FamilyFormatError):
        loads_binary(blob[:-1] + bytes([0xFF]))
    with pytest.raises(FamilyFormatError):
        loads_binary(b"\x03\x00")


def test_undecodable_text_is_a_format_error(tmp_path):
    path = tmp_path / "bad.fam"
    path.write_bytes(b"2 2\n11\n1\xff\n")
    with pytest.raises(FamilyFormatError) as info:
        read_family(path)
    assert info.value.line == 3


def test_files_by_suffix(tmp_path):
    params = SpaceParams(s=3, n=4)
    F = Family(params, np.random.default_rng(3).random(params.size) < 0.3)
    for name in ("f.fam", "f.bfam"):
        path = write_family(F, tmp_path / name)
        assert read_family(path) == F
    assert (tmp_path / "f.bfam").read_bytes()[:4] == bytes([3, 0, 0, 0])


def test_sidecar_metadata(tmp_path):
    path = tmp_path / "f.fam"
    assert sidecar_path(path).name == "f.fam.json"
    assert read_metadata(path) is None
    write_metadata(path, {"size": 11, "density": "11/243"})
    assert read_metadata(path) == {"size": 11, "density": "11/243"}
    sidecar_path(path).write_text("{not json")
    with pytest.raises(FamilyFormatError):
        read_metadata(path)
