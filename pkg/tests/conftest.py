import os

import pytest


def pytest_addoption(parser):
    parser.addoption(
        "--heavy",
        action="store_true",
        default=False,
        help="run the long verifications (dims 15/19/23 and 17)",
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--heavy") or os.environ.get("ODDGENUS_HEAVY") == "1":
        return
    skip = pytest.mark.skip(reason="heavy case; enable with --heavy or ODDGENUS_HEAVY=1")
    for item in items:
        if "heavy" in item.keywords:
            item.add_marker(skip)
