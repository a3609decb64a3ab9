from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from djtrudi.core import SkewDiagram
from djtrudi.folding import typed_conditions
from djtrudi.graphs import (
    INFINITY,
    ArcGraph,
    all_graphs,
    build_overlap_graph,
    dual_graph,
    extremes_alternate,
    has_odd_segment,
    dual_graph_balanced,
    segments,
)
from djtrudi.regions import enumerate_H, odd_regions


def valid(n, arcs):
    try:
        ArcGraph(n, frozenset(arcs)).check()
    except ValueError:
        return False
    return True


def brute_graphs(n):
    pairs = list(combinations(range(n), 2))
    out = set()
    for size in range(len(pairs) + 1):
        for arcs in combinations(pairs, size):
            if valid(n, arcs):
                out.add(frozenset(arcs))
    return out


@pytest.mark.parametrize("n", range(7))
def test_generator_matches_brute_force(n):
    got = [g.arcs for g in all_graphs(n)]
    assert len(got) == len(set(got))
    assert set(got) == brute_graphs(n)


def test_counts_are_catalan():
    for n in range(10):
        assert sum(1 for _ in all_graphs(n)) == comb(2 * n, n) // (n + 1)


def test_check_rejects_bad_graphs():
    for arcs in [{(0, 2), (1, 3)}, {(0, 1), (0, 2)}, {(1, 3), (2, 3)}, {(0, 5)}, {(2, 1)}]:
        with pytest.raises(ValueError):
            ArcGraph(4, frozenset(arcs)).check()


def test_segments_examples():
    g = ArcGraph(4, frozenset({(0, 1), (1, 2)}))
    segs = segments(g)
    assert [s.vertices for s in segs] == [(0, 1, 2), (3,)]
    assert has_odd_segment(g)
    assert not has_odd_segment(ArcGraph(4, frozenset({(0, 3), (1, 2)})))
    assert not has_odd_segment(ArcGraph(0))


def test_dual_graph_examples():
    # one arc over two vertices: the dual vertex inside is cut off
    d = dual_graph(ArcGraph(2, frozenset({(0, 1)})))
    assert d.vertices == [0, INFINITY]
    assert d.arcs == frozenset()
    d = dual_graph(ArcGraph(3))
    assert d.arcs == {(0, 1), (1, INFINITY)}
    assert d.vtype(0) == "LR" and d.vtype(1) == "RL" and d.vtype(INFINITY) is None


@pytest.mark.parametrize("n", range(11))
def test_three_descriptions_agree(n):
    for g in all_graphs(n):
        even = not has_odd_segment(g)
        assert extremes_alternate(g) == even
        assert dual_graph_balanced(g) == even


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([(2, 2), (3, 3), (3, 3, 1), (2, 2, 2)]), st.data())
def test_overlap_graph_detects_odd_regions(lam, data):
    n = 2
    hs = [h for h in enumerate_H(SkewDiagram(lam), n) if h.l >= 2]
    h = data.draw(st.sampled_from(hs))
    k = 2
    g, idx = build_overlap_graph(h, k)
    g.check()
    assert idx == sorted(idx, reverse=True)
    no_odd = not odd_regions(h, k - 1, "I")
    assert dual_graph_balanced(g) == no_odd
    assert all(typed_conditions(h, k).values()) == no_odd
