"""Shared fixtures; puts the repository root on sys.path."""

import os
import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.algebra.field import QQ_FIELD, gf  # noqa: E402

FULL_ACCEPTANCE = bool(os.environ.get("PARORBIT_FULL_ACCEPTANCE"))

full_only = pytest.mark.skipif(not FULL_ACCEPTANCE, reason="set PARORBIT_FULL_ACCEPTANCE=1 for full-size runs")


@pytest.fixture
def qq():
    return QQ_FIELD


@pytest.fixture
def gf2():
    return gf(2)


@pytest.fixture
def gf5():
    return gf(5)


@pytest.fixture
def rng():
    return random.Random(20240611)
