"""Shared fixtures for the HNN Order Lab test suite"""

import os
import sys

import numpy as np
import pytest

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
if ROOT not in sys.path:
    sys.path.insert(0, ROOT)

from utils.certificates import DEFAULT_SEQUENCE, FREE_ALPHABET, free_hnn_words  # noqa: E402
from utils.hnn import free_extension  # noqa: E402

SCENARIO_DIR = os.path.join(ROOT, "data", "scenarios")


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def ab():
    return FREE_ALPHABET


@pytest.fixture(scope="session")
def free_words():
    return free_hnn_words(DEFAULT_SEQUENCE, DEFAULT_SEQUENCE, DEFAULT_SEQUENCE, DEFAULT_SEQUENCE)


@pytest.fixture(scope="session")
def free_hnn(free_words):
    u, v = free_words
    return free_extension(FREE_ALPHABET, u, v, name="free-hnn")


@pytest.fixture
def scenario_path():
    def path(name):
        return os.path.join(SCENARIO_DIR, name)
    return path


@pytest.fixture
def write_scenario(tmp_path):
    """Write scenario text to a temporary .scn file and return its path"""
    def write(text, name="test.scn"):
        target = tmp_path / name
        target.write_text(text, encoding="utf-8")
        return str(target)
    return write


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for key in ("HNNLAB_DEPTH", "HNNLAB_THREADS", "HNNLAB_FORMAT", "HNNLAB_SEED", "HNNLAB_REPORT_DIR"):
        monkeypatch.delenv(key, raising=False)
