import pytest


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run slow-tier tests")
    parser.addoption("--runextended", action="store_true", default=False, help="run extended-tier tests")


def pytest_collection_modifyitems(config, items):
    skip_slow = pytest.mark.skip(reason="slow tier: pass --runslow")
    skip_ext = pytest.mark.skip(reason="extended tier: pass --runextended")
    for item in items:
        if "slow" in item.keywords and not config.getoption("--runslow"):
            item.add_marker(skip_slow)
        if "extended" in item.keywords and not config.getoption("--runextended"):
            item.add_marker(skip_ext)
