import random

import networkx as nx
import pytest

from wordrep.core import Graph

ACCEPTANCE_LINES = []


def to_graph(nxg) -> Graph:
    """networkx graph on 0..n-1 -> Graph on "1".."n"."""
    nodes = sorted(nxg.nodes)
    return Graph([str(v + 1) for v in nodes],
                 [(str(u + 1), str(v + 1)) for u, v in nxg.edges])


def all_labeled_trees(n):
    if n == 2:
        yield Graph("12", [("1", "2")])
        return
    for seq in _sequences(n, n - 2):
        yield to_graph(nx.from_prufer_sequence(list(seq)))


def _sequences(n, length):
    if length == 0:
        yield ()
        return
    for head in range(n):
        for tail in _sequences(n, length - 1):
            yield (head,) + tail


def random_tree(rng: random.Random, n: int, labels=None) -> Graph:
    if n == 1:
        return Graph(labels or ["1"])
    if n == 2:
        T = Graph("12", [("1", "2")])
    else:
        T = to_graph(nx.from_prufer_sequence([rng.randrange(n) for _ in range(n - 2)]))
    if labels is not None:
        T = T.relabel(dict(zip(T.vertices, labels)))
    return T


@pytest.fixture
def tree4():
    return Graph("1234", [("1", "2"), ("1", "3"), ("3", "4")])


@pytest.fixture
def claw():
    return Graph("1234", [("1", "2"), ("2", "3"), ("2", "4")])


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
