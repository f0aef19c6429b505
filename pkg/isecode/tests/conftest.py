# isecode/tests/conftest.py

import pytest
from isecode.Models.family import Family
from isecode.Models.word import SpaceParams
from isecode.Utils.config import get_settings


@pytest.fixture(autouse=True)
def fresh_settings():
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def lowered_cap(monkeypatch):
    """Dense cap lowered to 3^4 words."""
    monkeypatch.setenv("ISECODE_DENSE_CAP", "81")
    get_settings.cache_clear()
    return 81


@pytest.fixture
def space33() -> SpaceParams:
    return SpaceParams(s=3, n=3)


@pytest.fixture
def prefix_family(space33) -> Family:
    """{(1,2,y) : y in [3]}"""
    return Family.from_texts(space33, ["121", "122", "123"])