from pathlib import Path

import pytest

from spectra.config import get_settings
from spectra.graph import complete_graph, cycle_graph, from_edge_list, path_graph, star_graph

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(autouse=True)
def fresh_settings():
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture
def k3():
    # edges e01, e12, e02
    return from_edge_list([(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def p4():
    return path_graph(4)


@pytest.fixture
def p5():
    return path_graph(5)


@pytest.fixture
def c5():
    return cycle_graph(5)


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def star4():
    return star_graph(4)
