from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from djtrudi.core import SkewDiagram, partitions_in_box, subpartitions
from djtrudi.paths import classify_pair, enumerate_tuples, transposed_pairs
from djtrudi.regions import (
    HPair,
    adjacent,
    boundary_values,
    dual_unit,
    enumerate_H,
    epsilon_k,
    in_H,
    iota2,
    lift_first,
    odd_first_regions,
    project_pi,
    regions,
    unit_vertices,
)


# wide shapes at n=3 have tens of thousands of families, so they stay at n=2
REGION_CASES = [(SkewDiagram(lam, mu), n) for lam, mu, n in [
    ((2, 1), (), 2), ((2, 1), (), 3), ((2, 2), (), 2), ((2, 2), (), 3), ((2, 2, 1), (), 2),
    ((2, 2, 1), (), 3), ((3, 2), (), 2), ((3, 3), (), 2), ((3, 2), (1,), 2)]]


def small_shapes(rows=2, cols=3):
    return [SkewDiagram(lam, mu) for lam in partitions_in_box(rows, cols) for mu in subpartitions(lam)]


def brute_H(d, n):
    """Every family of +-1 walks with the right ends, filtered by in_H."""
    a_end, b_end = boundary_values(d, n)
    l = len(a_end)
    walks = []
    for end in a_end + b_end:
        opts = []
        for steps in product((-1, 1), repeat=n):
            prof = [end]
            for s in steps:
                prof.append(prof[-1] + s)
            opts.append(tuple(reversed(prof)))
        walks.append(opts)
    out = set()
    for choice in product(*walks):
        h = HPair(n, tuple(choice[:l]), tuple(choice[l:]))
        if in_H(h, d):
            out.add(h)
    return out


def test_dual_unit_is_an_involution():
    for u in [(1, 0, 0), (-1, 0, 2), (1, 2, -3), (-1, 1, 5)]:
        assert dual_unit(dual_unit(u)) == u
        assert dual_unit(u)[0] == -u[0]
    assert dual_unit((1, 0, 0)) == (-1, 0, 2)


def test_unit_shapes():
    n = 2
    assert len(unit_vertices((1, 0, 0), n)) == 3
    assert len(unit_vertices((1, n, 0), n)) == 3
    assert len(unit_vertices((1, 1, 1), n)) == 4


def test_adjacency_examples():
    assert adjacent((1, 1, 1), (1, 1, 3))
    assert not adjacent((1, 1, 1), (1, 1, 5))
    assert adjacent((1, 0, 0), (1, 1, -1)) or adjacent((1, 1, -1), (1, 0, 0))


@pytest.mark.parametrize("n", [2, 3])
def test_enumerate_H_matches_brute_force(n):
    for d in small_shapes(2, 2):
        assert set(enumerate_H(d, n)) == brute_H(d, n)


@pytest.mark.parametrize("n", [2, 3])
def test_projection_lands_in_H(n):
    for d in small_shapes():
        for t in enumerate_tuples(d, n, "first"):
            h = project_pi(t, n)
            assert in_H(h, d)
            assert lift_first(h) == t


@pytest.mark.parametrize("n", [2, 3])
def test_overlaps_and_holes_match_intersections(n):
    """On first tuples, gaps at k=1 read off how the paths meet."""
    for d in small_shapes():
        for t in enumerate_tuples(d, n, "first"):
            h = project_pi(t, n)
            P = t.paths
            tp = set(transposed_pairs(t))
            for i in range(1, h.l):
                g = h.gap(i, 1)
                special = classify_pair(P[i - 1], P[i]) == "special" and (i - 1, i) not in tp
                transposed = any((i - 1, j) in tp for j in range(i, h.l))
                meets_later = any(classify_pair(P[i - 1], P[j]) != "disjoint" for j in range(i, h.l))
                assert (g <= 0 and g % 2 == 1) == special
                assert (g <= 0 and g % 2 == 0) == transposed
                assert (g > 0) == (not meets_later)


@pytest.mark.parametrize("klass", ["I", "II"])
def test_regions_are_self_dual_and_expand_to_H(klass):
    for d, n in REGION_CASES:
        for h in enumerate_H(d, n):
            for k in range(1, h.l):
                for V in regions(h, k, klass):
                    assert V.is_self_dual()
                    assert any(u[1] == 0 for u in V.units)
                    h2 = epsilon_k(h, V)
                    assert in_H(h2, d)


def test_first_regions_flip_under_expansion():
    for d, n in REGION_CASES:
        for h in enumerate_H(d, n):
            for klass, other in (("I", "II"), ("II", "I")):
                for V in regions(h, 1, klass):
                    h2 = epsilon_k(h, V)
                    keys = {W.units for W in regions(h2, 1, other)}
                    assert V.units in keys
                    assert epsilon_k(h2, V) == h


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([(2, 2), (3, 2), (3, 3), (2, 2, 1)]), st.integers(2, 3), st.data())
def test_iota2_is_a_sign_reversing_involution(lam, n, data):
    d = SkewDiagram(lam)
    ts = [t for t in enumerate_tuples(d, n, "first") if odd_first_regions(project_pi(t, n))]
    assert ts
    t = data.draw(st.sampled_from(ts))
    s = iota2(t, n)
    assert s is not None and iota2(s, n) == t
    assert s.sign == -t.sign
