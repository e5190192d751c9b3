from pathlib import Path

import pytest

from fuzzdet import parse_automaton

DATA = Path(__file__).parent / "data"


def load_fixture(name):
    return parse_automaton((DATA / name).read_text(encoding="utf-8"))


@pytest.fixture
def goguen3():
    return load_fixture("goguen3.fza")


@pytest.fixture
def boolean3():
    return load_fixture("boolean3.fza")


@pytest.fixture
def goguen3_path():
    return str(DATA / "goguen3.fza")


@pytest.fixture
def boolean3_path():
    return str(DATA / "boolean3.fza")
