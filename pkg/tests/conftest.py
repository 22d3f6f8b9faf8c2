"""
Test configuration and fixtures for pytest.
This file contains shared fixtures used across all tests.
"""
import os
import sys
from pathlib import Path
from typing import Generator

import pytest
from fastapi.testclient import TestClient
from hypothesis import HealthCheck, settings as hypothesis_settings

# Add parent directory to path for imports
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from app.main import app
from app.core.config import Settings
from app.dependencies import get_settings
from app.kernel.parser import parse
from app.kernel.source import SourceFile

CORPUS_DIR = Path(__file__).resolve().parent.parent / "corpus"

# Property tests: a quick default, and the full acceptance run
# (HYPOTHESIS_PROFILE=acceptance pytest -m "not e2e")
hypothesis_settings.register_profile("default", max_examples=200, deadline=None)
hypothesis_settings.register_profile(
    "acceptance",
    max_examples=10_000,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
hypothesis_settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))


def _load(name: str) -> SourceFile:
    return parse((CORPUS_DIR / name).read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def corpus_dir() -> Path:
    return CORPUS_DIR


@pytest.fixture(scope="session")
def corpus() -> SourceFile:
    """The canonicity corpus, parsed once per session."""
    return _load("corpus.ctt")


@pytest.fixture(scope="session")
def truncation() -> SourceFile:
    return _load("truncation.ctt")


@pytest.fixture(scope="session")
def mutants() -> SourceFile:
    return _load("mutants.ctt")


@pytest.fixture(scope="session")
def path01() -> SourceFile:
    return _load("path01.ctt")


@pytest.fixture(scope="function")
def test_settings() -> Settings:
    """Settings with small budgets, handed to the API through get_settings."""
    return Settings(DEFAULT_FUEL=200_000, CHECK_FUEL=200_000, AUDIT_SAMPLES=5)


@pytest.fixture(scope="function")
def client(test_settings: Settings) -> Generator[TestClient, None, None]:
    """Create a test client with overridden settings dependency."""
    app.dependency_overrides[get_settings] = lambda: test_settings
    with TestClient(app) as test_client:
        yield test_client
    app.dependency_overrides.clear()


@pytest.fixture
def sample_source() -> str:
    """A small source with one natural, one truncation and one rejected definition."""
    return (
        "names i\n"
        "\n"
        "two : N = suc (suc Z)\n"
        "\n"
        "back : N = comp^k N [(i=0) -> 2] 2\n"
        "\n"
        "w : inh N = squash (inc 1) (inc 2) i\n"
        "\n"
        "bad : N = suc U\n"
    )
