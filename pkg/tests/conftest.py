import sys
from pathlib import Path

import pytest

from qalg.algebra import validate
from qalg.parser import load_spec

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"
sys.path.insert(0, str(Path(__file__).resolve().parent))


def load(name: str):
    return validate(load_spec(FIXTURES / f"{name}.qalg"))


@pytest.fixture(scope="session")
def fixture_algebra():
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = load(name)
        return cache[name]

    return get


@pytest.fixture(scope="session")
def random_corpus():
    from corpus import corpus

    return corpus(500)
