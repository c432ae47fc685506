from pathlib import Path

import pytest

import zetalab as zl

FULL_TABLE_PATH = Path(__file__).resolve().parent.parent / "data" / "riemann_zeros_100k.txt"


@pytest.fixture(scope="session")
def fixture_table():
    return zl.load_zero_table(zl.fixture_path())


@pytest.fixture(scope="session")
def full_table():
    assert FULL_TABLE_PATH.exists(), (
        f"{FULL_TABLE_PATH} is missing; regenerate it with "
        "scripts/make_zero_table.py")
    return zl.load_zero_table(FULL_TABLE_PATH)
