import random

import pytest

from tests.graphs import cycle_graph, path_graph, star_graph


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run slow acceptance suites")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture(autouse=True)
def _isolated_logs(tmp_path, monkeypatch):
    monkeypatch.setenv("MWIS_LOG_DIR", str(tmp_path / "logs"))


@pytest.fixture
def star_witness():
    """Center 3 with four unit leaves: greedy takes the center, the optimum is the leaves."""
    return star_graph(3, [1, 1, 1, 1])


@pytest.fixture
def c4_heavy_pair():
    return cycle_graph([1, 10, 1, 10])


@pytest.fixture
def unit_path4():
    return path_graph([1, 1, 1, 1])
