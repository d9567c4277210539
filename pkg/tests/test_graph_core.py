import random

import networkx as nx
import numpy as np
import pytest

from mrc3.graph_core import (BLUE, RED, ColoredCompleteGraph, CycleCover, InputError,
                             SimpleGraph, canonical_cycle, color_degree, induced_subgraph,
                             is_monochromatic, single_color, validate_cover)

from conftest import random_coloring, random_graph, to_nx


def five_cycle_k5():
    return ColoredCompleteGraph.from_color_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])


def two_triangles_k6():
    return ColoredCompleteGraph.from_color_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])


def test_color_degree_examples():
    red5 = ColoredCompleteGraph.monochromatic(5)
    assert color_degree(red5, 0, RED) == 4
    assert color_degree(red5, 0, BLUE) == 0
    assert color_degree(five_cycle_k5(), 2, RED) == 2


def test_color_degree_rejects_bad_args():
    g = five_cycle_k5()
    with pytest.raises(InputError):
        color_degree(g, 5, RED)
    with pytest.raises(InputError):
        color_degree(g, 0, 2)


def test_color_degrees_sum_to_n_minus_one(rng):
    for n in range(3, 12):
        g = random_coloring(n, rng)
        for v in range(n):
            assert color_degree(g, v, RED) + color_degree(g, v, BLUE) == n - 1


def test_induced_subgraph_examples():
    red4 = ColoredCompleteGraph.monochromatic(4)
    assert induced_subgraph(red4, RED) == SimpleGraph.complete(4)
    assert induced_subgraph(red4, BLUE) == SimpleGraph.empty(4)
    g = two_triangles_k6()
    r, b = induced_subgraph(g, RED), induced_subgraph(g, BLUE)
    assert nx.is_isomorphic(to_nx(r), nx.disjoint_union(nx.complete_graph(3), nx.complete_graph(3)))
    assert nx.is_isomorphic(to_nx(b), nx.complete_bipartite_graph(3, 3))
    assert r.complement() == b


@pytest.mark.parametrize("cycles, ok, why", [
    ([[0, 1, 2], [3, 4, 5]], True, "ok"),
    ([[0, 1], [2, 3, 4, 5]], False, "cycle shorter than 3"),
    ([[0, 1, 2], [2, 3, 4]], False, "not vertex-disjoint"),
    ([[0, 1, 2], [3, 4, 6]], False, "vertex 6 out of range"),
    ([[0, 1, 2, 1], [3, 4, 5]], False, "vertex repeated within a cycle"),
    ([[0, 1, 2]], False, "does not cover all vertices"),
])
def test_validate_cover(cycles, ok, why):
    assert validate_cover(6, CycleCover(cycles)) == (ok, why)


def test_is_monochromatic_examples():
    assert is_monochromatic(ColoredCompleteGraph.monochromatic(5), CycleCover([[0, 1, 2, 3, 4]])) == [RED]
    assert is_monochromatic(two_triangles_k6(), CycleCover([[0, 1, 2], [3, 4, 5]])) == [RED, RED]
    k4 = ColoredCompleteGraph.from_color_edges(4, [(0, 1), (1, 2)])
    assert is_monochromatic(k4, CycleCover([[0, 1, 2, 3]])) == [None]
    assert single_color(k4, CycleCover([[0, 1, 2, 3]])) is None


def test_single_color_needs_a_shared_color():
    # red triangle and blue triangle: each cycle monochromatic, cover is not single-color
    g = ColoredCompleteGraph.from_color_edges(6, [(0, 1), (1, 2), (0, 2)])
    assert is_monochromatic(g, CycleCover([[0, 1, 2], [3, 4, 5]])) == [RED, BLUE]
    assert single_color(g, CycleCover([[0, 1, 2], [3, 4, 5]])) is None


def test_is_monochromatic_rejects_invalid_cover():
    with pytest.raises(InputError):
        is_monochromatic(five_cycle_k5(), CycleCover([[0, 1, 2]]))


def test_canonical_cycle():
    assert canonical_cycle([3, 1, 4, 0, 2]) == (0, 2, 3, 1, 4)
    assert canonical_cycle([2, 0, 1]) == (0, 1, 2)
    c = CycleCover([[5, 4, 3], [2, 0, 1]]).canonical()
    assert c.cycles == ((0, 1, 2), (3, 4, 5))


def test_graph_validation():
    with pytest.raises(InputError):
        SimpleGraph(2, [[True, True], [True, False]])
    with pytest.raises(InputError):
        SimpleGraph(2, [[False, True], [False, False]])
    with pytest.raises(InputError):
        ColoredCompleteGraph(3, [[-1, 0, 1], [0, -1, 2], [1, 2, -1]])
    with pytest.raises(InputError):
        ColoredCompleteGraph(3, [[-1, 0, 1], [1, -1, 0], [1, 0, -1]])


def test_relabel_and_swap():
    g = five_cycle_k5()
    assert g.swap_colors().swap_colors() == g
    perm = [4, 2, 0, 1, 3]
    h = g.relabel(perm)
    for u in range(5):
        for v in range(5):
            if u != v:
                assert h.color(u, v) == g.color(perm[u], perm[v])


def test_articulation_points_match_networkx(rng):
    for _ in range(300):
        n = rng.randrange(2, 14)
        g = random_graph(n, rng.uniform(0.1, 0.6), rng)
        assert g.articulation_points() == sorted(nx.articulation_points(to_nx(g)))
        assert g.is_connected() == (n == 0 or nx.is_connected(to_nx(g)))
        expect = [sorted(c) for c in nx.connected_components(to_nx(g))]
        assert sorted(g.components()) == sorted(expect)


def test_two_connected():
    assert SimpleGraph.complete(3).is_two_connected()
    path = SimpleGraph.from_edges(3, [(0, 1), (1, 2)])
    assert not path.is_two_connected()
    assert path.articulation_points() == [1]
    cyc = SimpleGraph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
    assert cyc.is_two_connected()
