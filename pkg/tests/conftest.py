import os

import pytest
from hypothesis import HealthCheck, settings

from compliance_lib.core.encoders import encode
from compliance_lib.core.event_log import load_event_log
from compliance_lib.enums import EncodingKindEnum

DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "data")
SAMPLE_LOG_PATH = os.path.join(DATA_DIR, "sample_log.csv")
RULES_PATH = os.path.join(DATA_DIR, "rules.txt")

settings.register_profile(
    "seeded", derandomize=True, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("seeded")


@pytest.fixture
def sample_text():
    with open(SAMPLE_LOG_PATH, encoding="utf-8") as f:
        return f.read()


@pytest.fixture(scope="session")
def sample_log():
    return load_event_log(SAMPLE_LOG_PATH)


@pytest.fixture(scope="session")
def sample_encoded(sample_log):
    return {kind: encode(sample_log, kind) for kind in EncodingKindEnum}


@pytest.fixture(params=list(EncodingKindEnum), ids=lambda kind: kind.value)
def encoding(request):
    return request.param


@pytest.fixture
def sample_path():
    return SAMPLE_LOG_PATH


@pytest.fixture
def rules_path():
    return RULES_PATH
