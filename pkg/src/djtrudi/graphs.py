"""Arc graphs on a line, their segments and dual graphs.

Vertices 0..N-1 sit on the boundary of the upper half plane and are labelled
L, R, L, R, ... from the left.  Arcs are pairs (i, j) with i < j.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .regions import HPair, pair_meets, regions

INFINITY = "inf"


@dataclass(frozen=True)
class ArcGraph:
    n_vertices: int
    arcs: frozenset = frozenset()

    def label(self, v: int) -> str:
        return "L" if v % 2 == 0 else "R"

    def check(self) -> None:
        """Raise ValueError unless the arcs form a valid graph."""
        left, right = {}, {}
        for i, j in self.arcs:
            if not 0 <= i < j < self.n_vertices:
                raise ValueError(f"bad arc {(i, j)}")
            if i in right or j in left:
                raise ValueError(f"two arcs on one side of a vertex at {(i, j)}")
            right[i], left[j] = j, i
        for a, b in self.arcs:
            for c, d in self.arcs:
                if a < c < b < d:
                    raise ValueError(f"arcs {(a, b)} and {(c, d)} cross")


def _components(n: int, pairs) -> list[list[int]]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in pairs:
        parent[find(a)] = find(b)
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


@dataclass(frozen=True)
class Segment:
    vertices: tuple

    @property
    def odd(self) -> bool:
        return len(self.vertices) % 2 == 1


def segments(g: ArcGraph) -> list[Segment]:
    return [Segment(tuple(c)) for c in _components(g.n_vertices, g.arcs)]


def has_odd_segment(g: ArcGraph) -> bool:
    return any(s.odd for s in segments(g))


def extremes_alternate(g: ArcGraph) -> bool:
    """Every segment starts and ends with different labels."""
    return all(g.label(s.vertices[0]) != g.label(s.vertices[-1]) for s in segments(g))


# --------------------------------------------------------------------------
# dual graphs


@dataclass(frozen=True)
class DualGraph:
    """Dual vertices 0..N-2 (vertex d lies between d and d+1) and INFINITY."""

    base: ArcGraph
    arcs: frozenset

    @property
    def vertices(self) -> list:
        return list(range(max(self.base.n_vertices - 1, 0))) + [INFINITY]

    def vtype(self, d) -> str | None:
        if d == INFINITY:
            return None
        return "LR" if d % 2 == 0 else "RL"

    def segments(self) -> list[set]:
        verts = self.vertices
        index = {v: i for i, v in enumerate(verts)}
        comps = _components(len(verts), [(index[a], index[b]) for a, b in self.arcs])
        return [{verts[i] for i in c} for c in comps]


def _enclosing(g: ArcGraph, pos2: int) -> frozenset:
    """Arcs whose span contains the doubled position pos2 (odd, between vertices)."""
    return frozenset((i, j) for i, j in g.arcs if 2 * i < pos2 < 2 * j)


def dual_graph(g: ArcGraph) -> DualGraph:
    """Join each dual vertex to the nearest one on its right in the same face."""
    n = g.n_vertices
    pos = [2 * d + 1 for d in range(max(n - 1, 0))] + [2 * n]
    names = list(range(max(n - 1, 0))) + [INFINITY]
    faces = [_enclosing(g, p) for p in pos]
    arcs = set()
    for x in range(len(pos)):
        for y in range(x + 1, len(pos)):
            if faces[x] == faces[y]:
                arcs.add((names[x], names[y]))
                break
    return DualGraph(g, frozenset(arcs))


def dual_graph_balanced(g: ArcGraph) -> bool:
    """Even vertex count, unmixed dual and every LR dual segment bounded."""
    if g.n_vertices % 2:
        return False
    dual = dual_graph(g)
    for seg in dual.segments():
        types = {dual.vtype(d) for d in seg} - {None}
        if types == {"LR", "RL"}:
            return False
        if "LR" in types and INFINITY in seg:
            return False
    return True


# --------------------------------------------------------------------------
# generation


@lru_cache(maxsize=None)
def _graphs_on(a: int, b: int) -> tuple:
    """Arc sets on vertices a..b-1 with no arc leaving the interval."""
    if b - a <= 1:
        return (frozenset(),)
    out = list(_graphs_on(a + 1, b))  # a has no arc to the right
    for j in range(a + 1, b):
        for inner in _graphs_on(a + 1, j):
            for rest in _graphs_on(j, b):
                out.append(inner | rest | {(a, j)})
    return tuple(out)


def all_graphs(n: int):
    """Every valid graph on n vertices."""
    for arcs in _graphs_on(0, n):
        yield ArcGraph(n, arcs)


# --------------------------------------------------------------------------
# the graph of a pair of families


def build_overlap_graph(h: HPair, k: int) -> tuple[ArcGraph, list[int]]:
    """Graph on the even (k-1)-overlaps, left to right, with arcs inside I_{k-1}-regions.

    Returns the graph and the overlap index of each vertex.  Larger indices
    sit further left, so the vertices are the overlaps in decreasing order.
    """
    kk = k - 1
    idx = sorted((i for i in range(1, h.l - kk + 1)
                  if h.gap(i, kk) <= 0 and h.gap(i, kk) % 2 == 0), reverse=True)
    arcs = set()
    for V in regions(h, kk, "I"):
        members = [v for v, i in enumerate(idx) if pair_meets(h, V, i, kk)]
        arcs.update(zip(members, members[1:]))
    return ArcGraph(len(idx), frozenset(arcs)), idx
