import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from cyclic3.arith import admissible_primes, build_context

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile(
    "repro", derandomize=True, deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repro")

SMALL_PRIMES = admissible_primes(7, 200)


@pytest.fixture(scope="session")
def ctx7():
    return build_context(7)


@pytest.fixture(scope="session")
def ctx13():
    return build_context(13)
