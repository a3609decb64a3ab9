import json

import pytest
from hypothesis import given, strategies as st

from djtrudi.core import (
    Entry,
    SkewDiagram,
    ZPoly,
    all_entries,
    cmp_entries,
    conjugate,
    depth,
    eq_in_Z,
    partitions_in_box,
    positivity,
    relation_poly,
    specialize_mono,
    subpartitions,
    zvar,
)


@st.composite
def partitions(draw, rows=4, cols=4):
    parts = draw(st.lists(st.integers(0, cols), max_size=rows))
    return tuple(sorted(parts, reverse=True))


def cells_of(lam):
    return {(i, j) for i, p in enumerate(lam) for j in range(p)}


def transpose_cells(lam):
    """Conjugate by flipping the cell set and reading row lengths back."""
    flipped = {(j, i) for i, j in cells_of(lam)}
    rows = {}
    for i, _ in flipped:
        rows[i] = rows.get(i, 0) + 1
    return tuple(rows[i] for i in sorted(rows))


def test_entries_count_and_order():
    for n in (1, 2, 3, 4):
        assert len(all_entries(n)) == 2 * n
    assert cmp_entries(1, -1, 3) == "lt"
    assert cmp_entries(3, -3, 3) == "incomparable"
    assert cmp_entries(-3, -2, 3) == "lt"
    assert cmp_entries(-2, -2, 3) == "eq"
    assert Entry(1, 3) < Entry.parse("2bar", 3)
    assert not Entry.parse("2bar", 3) < Entry(1, 3)


def test_entry_range_checked():
    with pytest.raises(ValueError):
        Entry(4, 3)
    with pytest.raises(ValueError):
        Entry(0, 3)


@given(st.integers(1, 5), st.data())
def test_order_is_a_chain_apart_from_n(n, data):
    x = data.draw(st.sampled_from(all_entries(n)))
    y = data.draw(st.sampled_from(all_entries(n)))
    c = cmp_entries(x, y, n)
    assert (c == "incomparable") == ({x, y} == {n, -n})
    flip = {"lt": "gt", "gt": "lt", "eq": "eq", "incomparable": "incomparable"}
    assert cmp_entries(y, x, n) == flip[c]


def test_conjugate_examples():
    assert conjugate(()) == ()
    assert conjugate((1,)) == (1,)
    assert conjugate((3, 1)) == (2, 1, 1)


@given(partitions())
def test_conjugate_matches_transposed_cells(lam):
    lam = tuple(p for p in lam if p)
    assert conjugate(lam) == transpose_cells(lam)
    assert conjugate(conjugate(lam)) == lam


def test_depth_examples():
    assert depth(SkewDiagram((2, 1), (2, 1))) == 0
    assert depth(SkewDiagram((1,))) == 1
    assert depth(SkewDiagram((2, 2), (1,))) == 2


@given(partitions(), st.data())
def test_depth_is_longest_column(lam, data):
    lam = tuple(p for p in lam if p)
    mu = data.draw(st.sampled_from(subpartitions(lam)))
    d = SkewDiagram(lam, mu)
    cols = {}
    for i, j in d.cells():
        cols[j] = cols.get(j, 0) + 1
    assert depth(d) == max(cols.values(), default=0)


def test_positivity_examples():
    assert positivity(SkewDiagram((2, 2)), 2)
    assert not positivity(SkewDiagram((2, 2, 2)), 2)
    assert positivity(SkewDiagram((3, 2, 1), (1,)), 3)


def test_shape_parsing():
    d = SkewDiagram.parse("3,2,1/1")
    assert d.lam == (3, 2, 1) and d.mu == (1,)
    assert str(d) == "3,2,1/1"
    for bad in ("2,x", "1,2", "2/3", "-1"):
        with pytest.raises(ValueError):
            SkewDiagram.parse(bad)


def test_partitions_in_box_counts():
    # binomial(rows + cols, rows)
    assert len(partitions_in_box(3, 3)) == 20
    assert len(partitions_in_box(2, 3)) == 10


def test_relation_at_one_collapses():
    for n in (2, 3, 4):
        m = zvar(1, 0) + zvar(-1, n - 1)
        assert specialize_mono(m, n) == ()
        assert specialize_mono(0, n) == ()


@given(st.integers(2, 4), st.data())
def test_relations_hold_after_specialization(n, data):
    i = data.draw(st.integers(1, n))
    t = data.draw(st.integers(-3, 3))
    assert eq_in_Z(relation_poly(i, t, n), ZPoly(), n)


def test_eq_in_Z_examples():
    assert eq_in_Z(ZPoly(), ZPoly(), 2)
    assert eq_in_Z(ZPoly({zvar(1, 0) + zvar(-1, 1): 1}), ZPoly.one(), 2)
    assert not eq_in_Z(ZPoly.var(1, 0), ZPoly.var(2, 0), 2)


@given(st.lists(st.tuples(st.sampled_from([1, 2, -1, -2, 3, -3]), st.integers(-3, 3),
                          st.integers(-4, 4)), max_size=6))
def test_json_round_trip(raw):
    p = ZPoly()
    for code, off, c in raw:
        p = p + ZPoly({zvar(code, off): c})
    q = ZPoly.from_json(json.dumps(p.to_json()))
    assert q == p


def test_ring_arithmetic():
    x, y = ZPoly.var(1, 0), ZPoly.var(2, 1)
    assert (x + y) * (x - y) == x * x - y * y
    assert (x * y).shift(1) == x.shift(1) * y.shift(1)
    assert ZPoly.one() * x == x
