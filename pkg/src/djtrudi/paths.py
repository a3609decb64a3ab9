"""Lattice paths with east steps on the middle line, their labels and tuples.

A point is (x, y); its height is x + y and its doubled position x - y.
Steps are "NE" (x+1), "NW" (y+1) and "E" (x+1, y-1, only at height 0).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations, permutations

from .core import SkewDiagram, ZPoly, conjugate, part, zvar

MOVES = {"NE": (1, 0), "NW": (0, 1), "E": (1, -1)}


def height(pt) -> int:
    return pt[0] + pt[1]


def pos2(pt) -> int:
    return pt[0] - pt[1]


def point_at(ht: int, p2: int) -> tuple[int, int]:
    if (ht + p2) % 2:
        raise ValueError(f"height {ht} and doubled position {p2} differ in parity")
    return ((ht + p2) // 2, (ht - p2) // 2)


@dataclass(frozen=True)
class DPath:
    start: tuple[int, int]
    steps: tuple[str, ...]

    @cached_property
    def points(self) -> tuple[tuple[int, int], ...]:
        x, y = self.start
        pts = [(x, y)]
        for s in self.steps:
            dx, dy = MOVES[s]
            x, y = x + dx, y + dy
            pts.append((x, y))
        return tuple(pts)

    @property
    def end(self):
        return self.points[-1]

    @cached_property
    def run_start(self) -> int:
        """Position (x coordinate) of the leftmost point at height 0."""
        for pt in self.points:
            if height(pt) == 0:
                return pt[0]
        raise ValueError("path misses height 0")

    @cached_property
    def run_end(self) -> int:
        for pt in reversed(self.points):
            if height(pt) == 0:
                return pt[0]
        raise ValueError("path misses height 0")

    def n_east(self) -> int:
        return self.steps.count("E")

    def __str__(self):
        return f"{self.start}:" + ",".join(self.steps)


def check_path(p: DPath) -> None:
    run = [i for i, s in enumerate(p.steps) if s == "E"]
    for i in run:
        if height(p.points[i]) != 0:
            raise ValueError("east step away from height 0")
    if len(run) % 2:
        raise ValueError("odd number of east steps")


def enumerate_paths(u, v, n: int) -> list[DPath]:
    """All paths from u (height -n) to v (height n)."""
    if height(u) != -n or height(v) != n:
        raise ValueError("endpoints must sit at heights -n and n")
    dpos = (pos2(v) - pos2(u)) // 2
    total = dpos + n  # number of NE plus E steps
    out = []
    for e in range(0, max(total, -1) + 1, 2):
        s = total - e
        if s < 0 or s > 2 * n:
            continue
        for ne in combinations(range(-n, n), s):
            ne = set(ne)
            steps = []
            for h in range(-n, n):
                if h == 0:
                    steps.extend(["E"] * e)
                steps.append("NE" if h in ne else "NW")
            p = DPath(tuple(u), tuple(steps))
            assert p.end == tuple(v)
            out.append(p)
    return out


def e_labels(p: DPath, n: int) -> list[tuple[int, int]]:
    """(entry code, offset) for every NE or E step, from the bottom up."""
    out = []
    run = 0
    for (x, y), s in zip(p.points, p.steps):
        m = x + y
        if s == "NE":
            out.append((n + 1 + m, x) if m < 0 else (-(n - m), x))
        elif s == "E":
            out.append((n if run % 2 else -n, x))
            run += 1
    return out


def weight_mono(p: DPath, n: int) -> int:
    m = 0
    for code, off in e_labels(p, n):
        m += zvar(code, off)
    return m


def path_weight(p: DPath, n: int) -> ZPoly:
    return ZPoly({weight_mono(p, n): 1})


def path_sum_e(r: int, k: int, n: int) -> ZPoly:
    """Sum of path weights from (k, -n-k) to (k+r, n-k-r)."""
    if r < 0:
        return ZPoly()
    out: dict[int, int] = {}
    for p in enumerate_paths((k, -n - k), (k + r, n - k - r), n):
        m = weight_mono(p, n)
        out[m] = out.get(m, 0) + 1
    return ZPoly(out)


# --------------------------------------------------------------------------
# endpoints and tuples


def endpoints(d: SkewDiagram, n: int):
    """Start points u_1..u_l and end points v_1..v_l, l = lam_1."""
    lc, mc = conjugate(d.lam), conjugate(d.mu)
    l = d.lam[0] if d.lam else 0
    us = [(part(mc, i) + 1 - i, -n - part(mc, i) - 1 + i) for i in range(1, l + 1)]
    vs = [(part(lc, i) + 1 - i, n - part(lc, i) - 1 + i) for i in range(1, l + 1)]
    return us, vs


def perm_sign(perm) -> int:
    sign, seen = 1, [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


@dataclass(frozen=True)
class PathTuple:
    """Paths p_1..p_l; p_i runs from u_i to v_{sigma(i)} (0-based sigma)."""

    paths: tuple[DPath, ...]
    sigma: tuple[int, ...]

    @property
    def sign(self) -> int:
        return perm_sign(self.sigma)

    def weight_mono(self, n: int) -> int:
        return sum(weight_mono(p, n) for p in self.paths)

    def weight(self, n: int) -> ZPoly:
        return ZPoly({self.weight_mono(n): 1})


def classify_pair(p: DPath, q: DPath) -> str:
    """'disjoint', 'special' or 'ordinary'."""
    common = set(p.points) & set(q.points)
    if not common:
        return "disjoint"
    if all(height(w) == 0 for w in common) and (p.run_start - q.run_start) % 2:
        return "special"
    return "ordinary"


def has_ordinary_pair(t: PathTuple, adjacent_only: bool = False) -> bool:
    ps = t.paths
    for i in range(len(ps)):
        rng = range(i + 1, min(i + 2, len(ps))) if adjacent_only else range(i + 1, len(ps))
        for j in rng:
            if classify_pair(ps[i], ps[j]) == "ordinary":
                return True
    return False


def _swap_legal(t: PathTuple, w, i: int, j: int) -> bool:
    if height(w) != 0:
        return True
    return (t.paths[i].run_start - t.paths[j].run_start) % 2 == 0


def iota1(t: PathTuple) -> PathTuple | None:
    """Tail swap at the lowest (then leftmost) point where two paths may swap.

    Returns None when the tuple has no ordinarily intersecting pair.
    """
    owners: dict[tuple[int, int], list[int]] = {}
    for idx, p in enumerate(t.paths):
        for w in p.points:
            owners.setdefault(w, []).append(idx)
    shared = sorted((w for w, who in owners.items() if len(who) > 1),
                    key=lambda w: (height(w), pos2(w)))
    for w in shared:
        who = owners[w]
        for a in range(len(who)):
            for b in range(a + 1, len(who)):
                i, j = who[a], who[b]
                if _swap_legal(t, w, i, j):
                    return _swap_tails(t, w, i, j)
    return None


def _swap_tails(t: PathTuple, w, i: int, j: int) -> PathTuple:
    pi, pj = t.paths[i], t.paths[j]
    ci, cj = pi.points.index(w), pj.points.index(w)
    new_i = DPath(pi.start, pi.steps[:ci] + pj.steps[cj:])
    new_j = DPath(pj.start, pj.steps[:cj] + pi.steps[ci:])
    paths = list(t.paths)
    sigma = list(t.sigma)
    paths[i], paths[j] = new_i, new_j
    sigma[i], sigma[j] = sigma[j], sigma[i]
    return PathTuple(tuple(paths), tuple(sigma))


@lru_cache(maxsize=4096)
def _paths_between(u, v, n):
    return tuple(enumerate_paths(u, v, n))


def enumerate_tuples(d: SkewDiagram, n: int, mode: str = "all"):
    """Yield path tuples.

    mode 'all': every sigma, no restriction; 'first': no ordinarily
    intersecting pair; 'hv': sigma = id and no ordinary adjacent pair.
    """
    us, vs = endpoints(d, n)
    l = len(us)
    sigmas = [tuple(range(l))] if mode == "hv" else list(permutations(range(l)))
    for sigma in sigmas:
        options = [_paths_between(us[i], vs[sigma[i]], n) for i in range(l)]
        if any(not o for o in options):
            continue
        chosen: list[DPath] = []

        def rec(i):
            if i == l:
                yield PathTuple(tuple(chosen), sigma)
                return
            for p in options[i]:
                if mode == "first" and any(classify_pair(q, p) == "ordinary" for q in chosen):
                    continue
                if mode == "hv" and chosen and classify_pair(chosen[-1], p) == "ordinary":
                    continue
                chosen.append(p)
                yield from rec(i + 1)
                chosen.pop()

        yield from rec(0)


def signed_total_sum(d: SkewDiagram, n: int) -> ZPoly:
    out: dict[int, int] = {}
    for t in enumerate_tuples(d, n, "all"):
        m = t.weight_mono(n)
        out[m] = out.get(m, 0) + t.sign
    return ZPoly(out)


def first_sum(d: SkewDiagram, n: int) -> ZPoly:
    out: dict[int, int] = {}
    for t in enumerate_tuples(d, n, "first"):
        m = t.weight_mono(n)
        out[m] = out.get(m, 0) + t.sign
    return ZPoly(out)


def transposed_pairs(t: PathTuple) -> list[tuple[int, int]]:
    """Pairs i < j whose end points come in the opposite order to the starts.

    Start points move left as the index grows, so this is pos(end_i) < pos(end_j).
    """
    out = []
    for i in range(len(t.paths)):
        for j in range(i + 1, len(t.paths)):
            if pos2(t.paths[i].end) < pos2(t.paths[j].end):
                out.append((i, j))
    return out
