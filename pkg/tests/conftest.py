"""
Pytest configuration and fixtures for argdial testing
"""

import tempfile
from pathlib import Path

import pytest
from loguru import logger

from argdial.dialogue import DialogueTypeId, new_dialogue
from argdial.evaluation import ArgumentGraph, add_argument
from argdial.schemes import (
    ARGUMENT_FROM_SIGN,
    DEFEASIBLE_MODUS_PONENS,
    Substitution,
    default_registry,
    instantiate_scheme,
)

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(autouse=True)
def quiet_logging():
    """Keep loguru's default stderr sink out of test output"""
    logger.remove()
    yield
    logger.remove()


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def temp_dir():
    """Create a temporary directory for scheme files and outputs"""
    with tempfile.TemporaryDirectory() as tmpdir:
        yield Path(tmpdir)


@pytest.fixture
def registry():
    """A fresh registry holding the built-in schemes"""
    return default_registry()


@pytest.fixture
def dmp(registry):
    return registry.get(DEFEASIBLE_MODUS_PONENS)


@pytest.fixture
def sign(registry):
    return registry.get(ARGUMENT_FROM_SIGN)


@pytest.fixture
def lemma_argument(dmp):
    """Defeasible modus ponens from a lemma to a conjecture"""
    return instantiate_scheme(
        dmp, Substitution.of(P="the lemma holds", Q="the conjecture holds"), "arg1"
    )


@pytest.fixture
def sign_argument(sign):
    return instantiate_scheme(sign, Substitution.of(A="a rash", B="measles"), "s1")


@pytest.fixture
def lemma_graph(lemma_argument, dmp) -> ArgumentGraph:
    return add_argument(ArgumentGraph(), lemma_argument, dmp)


@pytest.fixture
def persuasion():
    """An open persuasion dialogue between P1 (proponent) and P2"""
    return new_dialogue(DialogueTypeId.PERSUASION)


@pytest.fixture
def inquiry():
    return new_dialogue(DialogueTypeId.INQUIRY)


def pytest_collection_modifyitems(config, items):
    """Mark tests by directory so `-m unit` and `-m integration` select them"""
    for item in items:
        path = str(item.fspath)
        if "/integration/" in path:
            item.add_marker(pytest.mark.integration)
        elif "/unit/" in path:
            item.add_marker(pytest.mark.unit)
