import random

import networkx as nx
import numpy as np
import pytest

from mrc3.graph_core import ColoredCompleteGraph, SimpleGraph


def random_graph(n, p, rng):
    a = np.zeros((n, n), dtype=bool)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                a[u, v] = a[v, u] = True
    return SimpleGraph(n, a)


def random_coloring(n, rng, p=0.5):
    c = np.ones((n, n), dtype=np.int32)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                c[u, v] = c[v, u] = 0
    return ColoredCompleteGraph(n, c)


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h):
    h = nx.convert_node_labels_to_integers(h)
    return SimpleGraph.from_edges(h.number_of_nodes(), h.edges())


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    acc = __import__("sys").modules.get("test_acceptance")
    if acc and acc.RESULTS:
        terminalreporter.section("acceptance criteria")
        for num in sorted(acc.RESULTS):
            terminalreporter.write_line(acc.RESULTS[num])
