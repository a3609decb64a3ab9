"""Pairs of lower/upper path families, units, regions and the expansion map.

Profiles are stored with doubled positions.  For a lower path ``alpha`` the
value ``alpha[r]`` is its doubled position at height -r, and for an upper
path ``beta[r]`` is the doubled position at height r (r = 0..n).  Dual paths
are never stored: the dual of alpha sits at ``alpha[r] - 2`` on height r and
the dual of beta at ``beta[r] + 2`` on height -r.

A unit is a triple ``(side, r, a2)``: side +1 for the upper strip, -1 for the
lower one, r the absolute height of its left vertex and a2 that vertex's
doubled position.  Units at r = 0 or r = n are triangles.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import permutations

from .core import SkewDiagram, ZPoly, positivity
from .paths import DPath, PathTuple, classify_pair, endpoints, height, point_at, pos2

INF = 10**9

Unit = tuple  # (side, r, a2)


@dataclass(frozen=True)
class HPair:
    """Lower paths alpha_1..alpha_l and upper paths beta_1..beta_l."""

    n: int
    alphas: tuple[tuple[int, ...], ...]
    betas: tuple[tuple[int, ...], ...]

    @property
    def l(self) -> int:
        return len(self.alphas)

    # values with the conventions alpha_{<=0} = +inf, beta_{>l} = -inf
    def A(self, i: int, r: int) -> int:
        if i <= 0:
            return INF
        return self.alphas[i - 1][r]

    def B(self, j: int, r: int) -> int:
        if j > self.l:
            return -INF
        return self.betas[j - 1][r]

    def A_dual(self, i: int, r: int) -> int:
        """Doubled position of the dual of alpha_i at height +r."""
        v = self.A(i, r)
        return v if v >= INF else v - 2

    def B_dual(self, j: int, r: int) -> int:
        """Doubled position of the dual of beta_j at height -r."""
        v = self.B(j, r)
        return v if v <= -INF else v + 2

    def gap(self, i: int, k: int) -> int:
        """alpha_i(0) - beta_{i+k}(0) in (undoubled) positions."""
        return (self.alphas[i - 1][0] - self.betas[i + k - 1][0]) // 2

    def pos_range(self) -> tuple[int, int]:
        vals = [v for prof in self.alphas + self.betas for v in prof]
        if not vals:
            return (0, 0)
        return min(vals) - 2, max(vals) + 2

    def __str__(self):
        al = " ".join(str(list(a)) for a in self.alphas)
        be = " ".join(str(list(b)) for b in self.betas)
        return f"HPair(n={self.n}; alpha {al}; beta {be})"


def boundary_values(d: SkewDiagram, n: int):
    """Doubled alpha_i(-n) and beta_i(n) fixed by the shape."""
    us, vs = endpoints(d, n)
    return [pos2(u) for u in us], [pos2(v) for v in vs]


def _is_lattice_profile(prof, start_parity) -> bool:
    return all(abs(prof[r + 1] - prof[r]) == 1 for r in range(len(prof) - 1)) and \
        all((prof[r] - r - start_parity) % 2 == 0 for r in range(len(prof)))


def in_H(h: HPair, d: SkewDiagram) -> bool:
    """Membership in the set of nonintersecting lower/upper families for d."""
    n = h.n
    a_end, b_end = boundary_values(d, n)
    if h.l != len(a_end) or len(h.betas) != h.l:
        return False
    for i in range(h.l):
        a, b = h.alphas[i], h.betas[i]
        if len(a) != n + 1 or len(b) != n + 1:
            return False
        if a[n] != a_end[i] or b[n] != b_end[i]:
            return False
        if not (_is_lattice_profile(a, 0) and _is_lattice_profile(b, 0)):
            return False
        if a[0] % 2 or b[0] % 2:
            return False
    for i in range(h.l - 1):
        if any(h.alphas[i][r] <= h.alphas[i + 1][r] for r in range(n + 1)):
            return False
        if any(h.betas[i][r] <= h.betas[i + 1][r] for r in range(n + 1)):
            return False
    return True


# --------------------------------------------------------------------------
# units


def dual_unit(u: Unit) -> Unit:
    """Upper p corresponds to lower p + 2."""
    side, r, a2 = u
    return (-side, r, a2 + 2 * side)


def unit_vertices(u: Unit, n: int):
    """Vertices as (absolute height, doubled position), strip given by the side."""
    _, r, a2 = u
    out = [(r, a2), (r, a2 + 2)]
    if r < n:
        out.append((r + 1, a2 + 1))
    if r > 0:
        out.append((r - 1, a2 + 1))
    return out


def unit_height(u: Unit) -> int:
    side, r, _ = u
    return side * r


# Height-0 triangles in opposite strips touch when their vertices meet after
# gluing the two middle lines through the duality (upper p ~ lower p + 2).
# These are the allowed offsets (lower a2) - (upper a2).
CROSS_OFFSETS = (0, 2, 4)


def adjacent(u: Unit, v: Unit) -> bool:
    (s1, r1, a1), (s2, r2, a2) = u, v
    if u == v:
        return False
    if s1 == s2 and r1 == r2 and abs(a1 - a2) == 2:
        return True
    if r1 == r2 == 0 and s1 != s2:
        plus, minus = (a1, a2) if s1 > 0 else (a2, a1)
        return minus - plus in CROSS_OFFSETS
    if s1 == s2 and abs(r1 - r2) == 1 and abs(a1 - a2) == 1:
        return True
    return False


def neighbours(u: Unit, n: int):
    side, r, a2 = u
    out = [(side, r, a2 - 2), (side, r, a2 + 2)]
    for dr in (-1, 1):
        if 0 <= r + dr <= n:
            out.append((side, r + dr, a2 - 1))
            out.append((side, r + dr, a2 + 1))
    if r == 0:
        out.extend((-side, 0, a2 + side * off) for off in CROSS_OFFSETS)
    return out


def _bounds(h: HPair, u: Unit, i: int, k: int):
    """(left, right) pair of the I-type inequalities for witness i."""
    side, r, _ = u
    if side > 0:
        return h.A_dual(i, r), h.B(i + k, r)
    return h.A(i, r), h.B_dual(i + k, r)


def witnesses(h: HPair, u: Unit, k: int, klass: str) -> list[int]:
    _, _, a2 = u
    out = []
    for i in range(0, h.l + 1):
        left, right = _bounds(h, u, i, k)
        if klass == "I":
            ok = left <= a2 and a2 + 2 <= right
        else:
            ok = right <= a2 and a2 + 2 <= left
        if ok:
            out.append(i)
    return out


def is_unit(h: HPair, u: Unit, k: int, klass: str) -> bool:
    return bool(witnesses(h, u, k, klass))


def is_boundary(h: HPair, u: Unit, k: int) -> bool:
    """A II_k-unit whose witness may be taken at the edge."""
    ws = witnesses(h, u, k, "II")
    if not ws:
        return False
    return u[1] == h.n or any(i == 0 or i >= h.l - k + 1 for i in ws)


def all_units(h: HPair):
    lo, hi = h.pos_range()
    lo -= 4
    hi += 4
    for side in (1, -1):
        for r in range(h.n + 1):
            start = lo if (lo - r) % 2 == 0 else lo + 1
            for a2 in range(start, hi + 1, 2):
                yield (side, r, a2)


class UnitSet:
    """The k-units of one class inside the window, as intervals of left vertices.

    ``edge`` marks intervals coming from a boundary witness.
    """

    def __init__(self, h: HPair, k: int, klass: str):
        lo, hi = h.pos_range()
        self.lo, self.hi = lo - 4, hi + 4
        self.n = h.n
        self.spans: dict[tuple[int, int], list[tuple[int, int, bool]]] = {}
        for side in (1, -1):
            for r in range(h.n + 1):
                spans = []
                for i in range(0, h.l + 1):
                    left, right = _bounds(h, (side, r, 0), i, k)
                    first, last = (left, right - 2) if klass == "I" else (right, left - 2)
                    first, last = max(first, self.lo), min(last, self.hi)
                    if (first - r) % 2:
                        first += 1
                    if first <= last:
                        edge = klass == "II" and (i == 0 or i >= h.l - k + 1 or r == h.n)
                        spans.append((first, last, edge))
                self.spans[(side, r)] = spans

    def __contains__(self, u) -> bool:
        side, r, a2 = u
        if (a2 - r) % 2:
            return False
        return any(f <= a2 <= g for f, g, _ in self.spans.get((side, r), ()))

    def is_edge(self, u) -> bool:
        side, r, a2 = u
        return any(e and f <= a2 <= g for f, g, e in self.spans.get((side, r), ()))

    def __iter__(self):
        for (side, r), spans in sorted(self.spans.items()):
            seen = set()
            for f, g, _ in spans:
                seen.update(range(f, g + 1, 2))
            for a2 in sorted(seen):
                yield (side, r, a2)

    def height0(self):
        for side in (1, -1):
            for f, g, _ in self.spans[(side, 0)]:
                for a2 in range(f, g + 1, 2):
                    yield (side, 0, a2)


def components(h: HPair, k: int, klass: str, members: UnitSet | None = None) -> list[frozenset]:
    """Connected components of the k-units of the given class (inside the window)."""
    if members is None:
        members = UnitSet(h, k, klass)
    seen: set = set()
    return [_grow(members, start, h.n, seen) for start in sorted(members) if start not in seen]


def _grow(members: UnitSet, start, n: int, seen: set, stop_at_edge: bool = False):
    """Component of start; None as soon as it touches a boundary unit (if asked)."""
    comp = {start}
    queue = deque([start])
    seen.add(start)
    while queue:
        u = queue.popleft()
        if stop_at_edge and members.is_edge(u):
            return None
        for v in neighbours(u, n):
            if stop_at_edge and v in seen and v not in comp and v in members:
                return None  # met a component already found to touch the boundary
            if v in members and v not in seen:
                seen.add(v)
                comp.add(v)
                queue.append(v)
    return frozenset(comp)


@dataclass(frozen=True)
class Region:
    units: frozenset
    klass: str
    k: int
    n: int

    @cached_property
    def plus_vertices(self) -> frozenset:
        return frozenset(v for u in self.units if u[0] > 0 for v in unit_vertices(u, self.n))

    @cached_property
    def minus_vertices(self) -> frozenset:
        return frozenset(v for u in self.units if u[0] < 0 for v in unit_vertices(u, self.n))

    def height0_positions(self) -> list[int]:
        """Undoubled positions of the height-0 points of the region."""
        pts = {p for (r, p) in self.plus_vertices | self.minus_vertices if r == 0}
        return sorted(p // 2 for p in pts)

    def max_height0(self) -> int:
        return max(self.height0_positions())

    def is_self_dual(self) -> bool:
        return frozenset(dual_unit(u) for u in self.units) == self.units

    def key(self):
        return (self.klass, self.k, tuple(sorted(self.units)))


def regions(h: HPair, k: int, klass: str, d: SkewDiagram | None = None) -> list[Region]:
    """I_k- or II_k-regions: components reaching height 0 (II: and no boundary unit)."""
    if klass == "I" and d is not None and not positivity(d, h.n):
        raise ValueError("I-regions are only defined under the positivity condition")
    members = UnitSet(h, k, klass)
    out = []
    for comp in components(h, k, klass, members):
        if not any(u[1] == 0 for u in comp):
            continue
        if klass == "II" and any(members.is_edge(u) for u in comp):
            continue
        out.append(Region(comp, klass, k, h.n))
    out.sort(key=lambda V: V.max_height0())
    return out


# --------------------------------------------------------------------------
# the expansion map


def epsilon_k(h: HPair, V: Region, k: int | None = None) -> HPair:
    """Swap alpha_i with the dual of beta_{i+k} (and beta_i with the dual of
    alpha_{i-k}) at every vertex lying in V."""
    k = V.k if k is None else k
    n, l = h.n, h.l
    alphas = []
    for i in range(1, l + 1):
        prof = list(h.alphas[i - 1])
        for r in range(n + 1):
            if (r, prof[r]) in V.minus_vertices:
                new = h.B_dual(i + k, r)
                if abs(new) >= INF:
                    raise ValueError(f"alpha_{i} meets the region but beta_{i + k} does not exist")
                prof[r] = new
        alphas.append(tuple(prof))
    betas = []
    for i in range(1, l + 1):
        prof = list(h.betas[i - 1])
        for r in range(n + 1):
            if (r, prof[r]) in V.plus_vertices:
                new = h.A_dual(i - k, r)
                if abs(new) >= INF:
                    raise ValueError(f"beta_{i} meets the region but alpha_{i - k} does not exist")
                prof[r] = new
        betas.append(tuple(prof))
    return HPair(n, tuple(alphas), tuple(betas))


def pair_meets(h: HPair, V: Region, i: int, k: int) -> bool:
    """Whether (alpha_i, beta_{i+k}) touches V at height 0."""
    return (0, h.alphas[i - 1][0]) in V.minus_vertices or \
        (0, h.betas[i + k - 1][0]) in V.plus_vertices


def region_count(h: HPair, V: Region) -> int:
    """Number of even overlaps (I) or even holes (II) touching V at height 0."""
    k = V.k
    total = 0
    for i in range(1, h.l - k + 1):
        g = h.gap(i, k)
        if g % 2:
            continue
        if (V.klass == "I") != (g <= 0):
            continue
        if pair_meets(h, V, i, k):
            total += 1
    return total


def is_odd(h: HPair, V: Region) -> bool:
    return region_count(h, V) % 2 == 1


def odd_regions(h: HPair, k: int, klass: str) -> list[Region]:
    """Regions with n(V) odd.

    Only components containing a height-0 endpoint of an even hole (II) or
    even overlap (I) can be odd, so the search starts from those units.
    """
    want_hole = klass == "II"
    pairs = [i for i in range(1, h.l - k + 1)
             if h.gap(i, k) % 2 == 0 and (h.gap(i, k) > 0) == want_hole]
    if not pairs:
        return []
    members = UnitSet(h, k, klass)
    # units having (0, p) as a vertex: two triangles at height 0 and one unit above
    points = [(-1, h.alphas[i - 1][0]) for i in pairs] + [(1, h.betas[i + k - 1][0]) for i in pairs]
    seeds = [u for side, p in points
             for u in ((side, 0, p), (side, 0, p - 2), (side, 1, p - 1))
             if u[1] <= h.n and u in members]
    seen: set = set()
    out = []
    for start in sorted(seeds):
        if start in seen:
            continue
        comp = _grow(members, start, h.n, seen, want_hole)
        if comp is None or all(u[1] for u in comp):
            continue
        V = Region(comp, klass, k, h.n)
        if is_odd(h, V):
            out.append(V)
    out.sort(key=lambda V: V.max_height0())
    return out


# --------------------------------------------------------------------------
# tuples of paths <-> pairs of families


def project_pi(t: PathTuple, n: int) -> HPair:
    """Cut every path at height 0; upper parts are re-indexed by end point."""
    l = len(t.paths)
    alphas = [None] * l
    betas = [None] * l
    for i, p in enumerate(t.paths):
        low = [None] * (n + 1)
        up = [None] * (n + 1)
        for pt in p.points:
            ht = height(pt)
            if ht < 0 or (ht == 0 and low[0] is None):
                low[-ht] = pos2(pt)
            if ht >= 0:
                up[ht] = pos2(pt)
        alphas[i] = tuple(low)
        betas[t.sigma[i]] = tuple(up)
    return HPair(n, tuple(alphas), tuple(betas))


def join(alpha, beta, n: int) -> DPath | None:
    """The path made of alpha, east steps along height 0, then beta."""
    run = beta[0] - alpha[0]
    if run < 0 or run % 4:
        return None
    steps = []
    for r in range(n, 0, -1):
        steps.append("NE" if alpha[r - 1] - alpha[r] == 1 else "NW")
    steps.extend(["E"] * (run // 2))
    for r in range(n):
        steps.append("NE" if beta[r + 1] - beta[r] == 1 else "NW")
    return DPath(point_at(-n, alpha[n]), tuple(steps))


def tuple_from_pairing(h: HPair, sigma) -> PathTuple | None:
    paths = []
    for i, j in enumerate(sigma):
        p = join(h.alphas[i], h.betas[j], h.n)
        if p is None:
            return None
        paths.append(p)
    return PathTuple(tuple(paths), tuple(sigma))


def lift_first(h: HPair) -> PathTuple | None:
    """The unique tuple without ordinary intersections projecting to h, if any."""
    found = []
    for sigma in permutations(range(h.l)):
        t = tuple_from_pairing(h, sigma)
        if t is None:
            continue
        ps = t.paths
        if any(classify_pair(ps[a], ps[b]) == "ordinary"
               for a in range(len(ps)) for b in range(a + 1, len(ps))):
            continue
        found.append(t)
    if len(found) > 1:
        raise AssertionError("projection is not injective on tuples without ordinary pairs")
    return found[0] if found else None


def epsilon_tuple(t: PathTuple, V: Region, n: int) -> PathTuple:
    h2 = epsilon_k(project_pi(t, n), V, 1)
    out = lift_first(h2)
    if out is None:
        raise AssertionError("expanded pair has no lift")
    return out


def odd_first_regions(h: HPair) -> list[Region]:
    return odd_regions(h, 1, "I") + odd_regions(h, 1, "II")


def iota2(t: PathTuple, n: int) -> PathTuple | None:
    """Expand at the odd region reaching furthest right on height 0."""
    h = project_pi(t, n)
    odd = odd_first_regions(h)
    if not odd:
        return None
    V = max(odd, key=lambda R: R.max_height0())
    return epsilon_tuple(t, V, n)


def in_P2(t: PathTuple, n: int) -> bool:
    return not odd_first_regions(project_pi(t, n))


def enumerate_P2(d: SkewDiagram, n: int):
    from .paths import enumerate_tuples
    for t in enumerate_tuples(d, n, "first"):
        if in_P2(t, n):
            yield t


def positive_sum_P2(d: SkewDiagram, n: int) -> ZPoly:
    out: dict[int, int] = {}
    for t in enumerate_P2(d, n):
        if t.sign != 1:
            raise AssertionError("negative tuple survived both involutions")
        m = t.weight_mono(n)
        out[m] = out.get(m, 0) + 1
    return ZPoly(out)


def enumerate_H(d: SkewDiagram, n: int):
    """All nonintersecting lower/upper families for d (brute force)."""
    a_end, b_end = boundary_values(d, n)
    l = len(a_end)

    def profiles(end, upward):
        # all +-1 walks of length n ending at `end` (index n), with even value at 0
        out = []

        def rec(prof):
            if len(prof) == n + 1:
                if prof[-1] % 2 == 0:
                    out.append(tuple(reversed(prof)))
                return
            for step in (1, -1):
                rec(prof + [prof[-1] + step])

        rec([end])
        return out

    a_opts = [profiles(a_end[i], False) for i in range(l)]
    b_opts = [profiles(b_end[i], True) for i in range(l)]

    def families(opts):
        out = []

        def rec(i, chosen):
            if i == l:
                out.append(tuple(chosen))
                return
            for p in opts[i]:
                if chosen and any(chosen[-1][r] <= p[r] for r in range(n + 1)):
                    continue
                rec(i + 1, chosen + [p])

        rec(0, [])
        return out

    fa, fb = families(a_opts), families(b_opts)
    for a in fa:
        for b in fb:
            yield HPair(n, a, b)
