import os

import pytest
from hypothesis import HealthCheck, settings

PROFILE = os.environ.get("HYPOTHESIS_PROFILE", "default")

settings.register_profile(
    "default",
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("ci", parent=settings.get_profile("default"), max_examples=300)
settings.load_profile(PROFILE)


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: exhaustive checks that only run under the ci profile")


def pytest_collection_modifyitems(config, items):
    if PROFILE == "ci":
        return
    skip = pytest.mark.skip(reason="slow; run with HYPOTHESIS_PROFILE=ci")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)
