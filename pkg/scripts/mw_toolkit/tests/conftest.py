"""Shared fixtures: tool directory on sys.path, hypothesis profiles, bundled graphs."""
import os
import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

TOOL_DIR = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(TOOL_DIR))

from api.graphs import cycle_multigraph, star  # noqa: E402
from modules.config_utils import load_bipartite_graph, load_multigraph  # noqa: E402

GRAPHS_DIR = TOOL_DIR.parents[1] / "graph_configs" / "graphs"

settings.register_profile("fast", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=300, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "fast"))


@pytest.fixture
def graphs_dir() -> Path:
    return GRAPHS_DIR


@pytest.fixture
def c4():
    return cycle_multigraph(4)


@pytest.fixture
def six_vertex():
    return load_multigraph(str(GRAPHS_DIR / "six_vertex.json"))


@pytest.fixture
def s4():
    return star(4)


@pytest.fixture
def bundled_bipartite():
    def load(name: str):
        return load_bipartite_graph(str(GRAPHS_DIR / name))
    return load


@pytest.fixture
def bundled_multigraph():
    def load(name: str):
        return load_multigraph(str(GRAPHS_DIR / name))
    return load
