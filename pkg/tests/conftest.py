import pytest


def pytest_addoption(parser):
    parser.addoption(
        "--long-tests", action="store_true", default=False,
        help="run enumerations beyond the default codeword budget",
    )


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "long: heavy enumeration, runs only with --long-tests")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--long-tests"):
        return
    skip = pytest.mark.skip(reason="needs --long-tests")
    for item in items:
        if "long" in item.keywords:
            item.add_marker(skip)
