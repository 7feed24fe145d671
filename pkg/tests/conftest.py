import os
import random

import pytest
from hypothesis import settings

# Property tests replay a fixed example order so CI runs are comparable;
# deadlines are off because the SNF sweeps are deliberately chunky.
settings.register_profile("lbkit", deadline=None, max_examples=50,
                          derandomize=True)
settings.load_profile("lbkit")


@pytest.fixture
def rng():
    """Seeded generator for the randomized sweeps (slide/Reidemeister/data
    fuzzing).  Set LBKIT_SEED to reproduce a particular run."""
    return random.Random(int(os.environ.get("LBKIT_SEED", "20260815")))
