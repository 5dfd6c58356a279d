import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # for helpers.py

from foon.data import corpus_file, subgraph_paths
from foon.merge import merge_subgraphs
from foon.parser import (
    parse_goal_nodes,
    parse_kitchen,
    parse_motion_rates,
    parse_subgraph,
)

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def corpus_subgraphs():
    return [parse_subgraph(path.read_text()) for path in subgraph_paths()]


@pytest.fixture(scope="session")
def corpus_graph(corpus_subgraphs):
    return merge_subgraphs(corpus_subgraphs).graph


@pytest.fixture(scope="session")
def corpus_kitchen():
    return parse_kitchen(corpus_file("kitchen.json").read_text())


@pytest.fixture(scope="session")
def corpus_goals():
    return parse_goal_nodes(corpus_file("goal_nodes.json").read_text())


@pytest.fixture(scope="session")
def corpus_rates():
    return parse_motion_rates(corpus_file("motion.txt").read_text())


@pytest.fixture(scope="session")
def fixture_kitchen():
    return parse_kitchen((FIXTURES / "fixture_kitchen.json").read_text())


@pytest.fixture(scope="session")
def fixture_goal():
    return parse_goal_nodes((FIXTURES / "fixture_goal.json").read_text())[0]


@pytest.fixture(scope="session")
def fixture_rates():
    return parse_motion_rates((FIXTURES / "fixture_rates.motion.txt").read_text())


def fixture_graph(name):
    units = parse_subgraph((FIXTURES / f"{name}.foon.txt").read_text())
    return merge_subgraphs([units]).graph
