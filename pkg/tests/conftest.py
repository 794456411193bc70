"""
Shared pytest fixtures for the Buckfire test suite.
"""
from pathlib import Path

import pytest

# Ensure we can import application modules
import sys
sys.path.insert(0, str(Path(__file__).parent.parent))

from config.settings import Settings, ENV_OVERRIDES, reset_settings
from core.graph_builder import (
    build_complete_kary_tree, single_vertex, path_graph, cycle_graph, complete_graph,
)
from models.graph import TreeSpec


# ──────────────────────────────────────────────
# Isolation
# ──────────────────────────────────────────────

@pytest.fixture(autouse=True)
def isolated_settings(monkeypatch):
    """Every test starts from default settings with no BUCKFIRE_* variables."""
    for name in ENV_OVERRIDES:
        monkeypatch.delenv(name, raising=False)
    monkeypatch.setattr("config.settings.load_dotenv", lambda *args, **kwargs: False)
    reset_settings()
    yield
    reset_settings()


@pytest.fixture
def default_settings():
    return Settings()


# ──────────────────────────────────────────────
# Board Fixtures
# ──────────────────────────────────────────────

@pytest.fixture
def level1_tree():
    """Root 0 with leaves 1 and 2."""
    return build_complete_kary_tree(TreeSpec(2, 1))


@pytest.fixture
def level2_tree():
    return build_complete_kary_tree(TreeSpec(2, 2))


@pytest.fixture
def lone_vertex():
    return single_vertex()


@pytest.fixture
def path3():
    """Path 0-1-2 started at 0."""
    return path_graph(3, start=0)


@pytest.fixture
def small_corpus():
    """A quick cross-section of board families."""
    return [
        single_vertex(),
        build_complete_kary_tree(TreeSpec(2, 1)),
        build_complete_kary_tree(TreeSpec(2, 2)),
        build_complete_kary_tree(TreeSpec(3, 2)),
        path_graph(2),
        path_graph(5, start=2),
        cycle_graph(4),
        cycle_graph(5, start=3),
        complete_graph(4, start=1),
    ]


# ──────────────────────────────────────────────
# File Fixtures
# ──────────────────────────────────────────────

PATH3_TEXT = """\
# the path 0 - 1 - 2
start 0
edge 0 1
edge 1 2
"""


@pytest.fixture
def path3_file(tmp_path):
    """A board file holding the path 0-1-2."""
    file_path = tmp_path / "path3.txt"
    file_path.write_text(PATH3_TEXT, encoding="utf-8")
    return file_path


@pytest.fixture
def exports_dir(tmp_path):
    return tmp_path / "exports"
