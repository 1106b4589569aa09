import pytest


def pytest_addoption(parser):
    parser.addoption("--tier2", action="store_true", default=False,
                     help="run opt-in long-running certification checks")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--tier2"):
        return
    skip = pytest.mark.skip(reason="tier-2 check; run with --tier2")
    for item in items:
        if "tier2" in item.keywords:
            item.add_marker(skip)
