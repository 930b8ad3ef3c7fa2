import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from loopforge import GapAlphabet, OracleConfig


@pytest.fixture(scope="session")
def alpha1():
    return GapAlphabet(1)


@pytest.fixture(scope="session")
def alpha2():
    return GapAlphabet(2)


@pytest.fixture(scope="session")
def session_cache(tmp_path_factory):
    """One shared oracle cache for the whole test session."""
    return tmp_path_factory.mktemp("oracle-cache")


@pytest.fixture(scope="session")
def config(session_cache):
    return OracleConfig(cache_dir=session_cache)


@pytest.fixture()
def nocache_config():
    return OracleConfig(use_cache=False)
