import pytest
from hypothesis import HealthCheck, settings

from hybridsearch.config import EngineConfig
from hybridsearch.engine import SearchEngine

settings.register_profile(
    "suite", derandomize=True,
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("suite")


@pytest.fixture(scope="session")
def engine() -> SearchEngine:
    """One engine over the bundled desk-scale corpus, shared by the suite."""
    return SearchEngine.build(EngineConfig())
