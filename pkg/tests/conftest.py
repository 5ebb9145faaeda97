import json
import os

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "suite",
    deadline=None,
    max_examples=60,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")


@pytest.fixture(scope="session")
def goldens() -> dict:
    with open(os.path.join(DATA_DIR, "goldens.json")) as fh:
        return json.load(fh)


@pytest.fixture(scope="session")
def data_dir() -> str:
    return DATA_DIR
