import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session")
def desk_records():
    from delpezzo.classify import SearchBounds, enumerate_all

    return enumerate_all(SearchBounds(a_max=30, n_max=12))


@pytest.fixture(scope="session")
def instances():
    from delpezzo.catalog import expected_instances

    return expected_instances(30, 12)
