from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from djtrudi.core import SkewDiagram, ZPoly, eq_in_Z
from djtrudi.determinant import jt_det_h
from djtrudi.paths import (
    DPath,
    MOVES,
    classify_pair,
    e_labels,
    enumerate_paths,
    enumerate_tuples,
    first_sum,
    height,
    iota1,
    path_sum_e,
    path_weight,
    signed_total_sum,
)


def brute_paths(u, v, n, extra=4):
    """Every step word of bounded length that is a valid path from u to v."""
    out = set()
    for length in range(2 * n, 2 * n + extra + 1):
        for word in product(MOVES, repeat=length):
            x, y = u
            ok = True
            for s in word:
                if s == "E" and x + y != 0:
                    ok = False
                    break
                dx, dy = MOVES[s]
                x, y = x + dx, y + dy
            if ok and (x, y) == tuple(v) and word.count("E") % 2 == 0:
                # east steps must form one run
                idx = [i for i, s in enumerate(word) if s == "E"]
                if idx and idx[-1] - idx[0] + 1 != len(idx):
                    continue
                out.add(word)
    return out


def four_term(n, k=0):
    return sum((ZPoly.var(c, k) for c in list(range(1, n + 1)) + list(range(-n, 0))), ZPoly())


def test_endpoints_checked():
    with pytest.raises(ValueError):
        enumerate_paths((0, -2), (2, -2), 2)


def test_path_counts():
    assert len(enumerate_paths((0, -2), (1, 1), 2)) == 4
    only = enumerate_paths((0, -2), (0, 2), 2)
    assert len(only) == 1 and set(only[0].steps) == {"NW"}


@pytest.mark.parametrize("u,v", [((0, -2), (1, 1)), ((0, -2), (2, 0)), ((0, -2), (0, 2)),
                                 ((1, -3), (3, -1))])
def test_paths_match_brute_force(u, v):
    got = {p.steps for p in enumerate_paths(u, v, 2)}
    assert got == brute_paths(u, v, 2)


def test_labels():
    n = 2
    p = DPath((0, -2), ("NE", "NW", "NW", "NW"))
    assert e_labels(p, n) == [(1, 0)]
    assert e_labels(DPath((0, -2), ("NW",) * 4), n) == []
    # NE at height 0 reads nbar
    q = DPath((0, -2), ("NW", "NW", "NE", "NW"))
    assert e_labels(q, n) == [(-2, 0)]
    assert path_weight(DPath((0, -2), ("NW",) * 4), n) == ZPoly.one()


def test_east_run_labels():
    n = 2
    p = DPath((1, -3), ("NW", "NW", "E", "E", "NW", "NW"))
    x0 = p.points[2][0]
    assert height(p.points[2]) == 0
    assert e_labels(p, n) == [(-n, x0), (n, x0 + 1)]


def test_path_sum_e_examples():
    assert path_sum_e(0, 0, 2) == ZPoly.one()
    assert path_sum_e(1, 0, 2) == four_term(2)
    assert path_sum_e(-1, 0, 2).is_zero()


def test_classify_examples():
    a = DPath((0, -2), ("NE", "NW", "NW", "NW"))
    b = DPath((1, -3), ("NW", "NW", "NW", "NW"))
    shared = set(a.points) & set(b.points)
    assert -1 in {height(w) for w in shared}
    assert classify_pair(a, b) == "ordinary"
    left = DPath((1, -3), ("NW",) * 4)
    right = DPath((0, -2), ("NW",) * 4)
    assert classify_pair(left, right) == "disjoint"


def test_special_meeting():
    # p runs east along the middle line from x=0; q touches it once at x=1
    p = DPath((0, -2), ("NW", "NW", "E", "E", "NW", "NW"))
    q = DPath((1, -3), ("NW",) * 4)
    shared = set(p.points) & set(q.points)
    assert shared == {(1, -1)}
    assert p.run_start - q.run_start == -1
    assert classify_pair(p, q) == "special"


def test_sum_examples():
    for n in (2, 3):
        empty = SkewDiagram((1,), (1,))
        assert signed_total_sum(empty, n) == ZPoly.one()
        assert first_sum(empty, n) == ZPoly.one()
        assert signed_total_sum(SkewDiagram((1,)), n) == four_term(n)
    d = SkewDiagram((2, 1))
    assert eq_in_Z(first_sum(d, 2), jt_det_h(d, 2), 2)


@settings(max_examples=20, deadline=None)
@given(st.sampled_from([(2,), (2, 1), (2, 2)]), st.data())
def test_iota1_properties(lam, data):
    d = SkewDiagram(lam)
    ts = [t for t in enumerate_tuples(d, 2, "all") if iota1(t) is not None]
    assert ts
    t = data.draw(st.sampled_from(ts))
    s = iota1(t)
    assert iota1(s) == t
    assert s.sign == -t.sign
    assert s.weight_mono(2) == t.weight_mono(2)


def test_first_tuples_are_fixed_points():
    d = SkewDiagram((2, 2))
    for t in enumerate_tuples(d, 2, "first"):
        assert iota1(t) is None
