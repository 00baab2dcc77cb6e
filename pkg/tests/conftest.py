import os
import random
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))


def _seed() -> int:
    return int(os.environ.get("GLOBFORGE_SEED", "20240915"))


@pytest.fixture
def rng() -> random.Random:
    return random.Random(_seed())
