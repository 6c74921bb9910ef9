import os
import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture
def rng():
    return random.Random(int(os.environ.get("WITTFORGE_SEED", "20261018")))


@pytest.fixture
def golden_dir():
    return GOLDEN
