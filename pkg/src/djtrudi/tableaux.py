"""Tableaux with the horizontal, vertical and extra rules.

A tableau is stored as a dict (row, col) -> entry code, 1-based cells.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .core import SkewDiagram, ZPoly, entry_str, parse_entry, positivity, preceq, zvar
from .paths import DPath, PathTuple, e_labels, endpoints, has_ordinary_pair, pos2
from .regions import HPair, odd_regions


@dataclass(frozen=True)
class Tableau:
    shape: SkewDiagram
    n: int
    cells: tuple  # ((row, col, code), ...) in row-major order

    @cached_property
    def entries(self) -> dict:
        return {(i, j): c for i, j, c in self.cells}

    def __getitem__(self, cell):
        return self.entries[cell]

    def get(self, cell):
        return self.entries.get(cell)

    def column(self, j: int) -> list[int]:
        return [c for (i, jj, c) in sorted(self.cells) if jj == j]

    def weight_mono(self) -> int:
        return sum(zvar(c, i - j) for i, j, c in self.cells)

    def weight(self) -> ZPoly:
        return ZPoly({self.weight_mono(): 1})

    def rows_text(self) -> list[str]:
        lam = self.shape.lam
        out = []
        for i in range(1, len(lam) + 1):
            toks = []
            for j in range(1, lam[i - 1] + 1):
                c = self.get((i, j))
                toks.append("." if c is None else entry_str(c))
            out.append(" ".join(toks))
        return out

    def __str__(self):
        return "\n".join(self.rows_text())


def tableau_from_rows(d: SkewDiagram, n: int, rows) -> Tableau:
    """Rows of entry tokens ("." for cells of mu), e.g. ["2 2bar"]."""
    cells = []
    for i, row in enumerate(rows, start=1):
        toks = row.split() if isinstance(row, str) else list(row)
        for j, tok in enumerate(toks, start=1):
            if tok == ".":
                continue
            cells.append((i, j, parse_entry(tok) if isinstance(tok, str) else tok))
    t = Tableau(d, n, tuple(sorted(cells)))
    if set(t.entries) != set(d.cells()):
        raise ValueError("filling does not match the shape")
    return t


# --------------------------------------------------------------------------
# HV rules


def h_ok(x: int, y: int, n: int) -> bool:
    return preceq(x, y, n) or (x == n and y == -n)


def v_ok(x: int, y: int, n: int) -> bool:
    """x above y: x must not be weakly above y in the order."""
    return not preceq(y, x, n)


def hv_check(t: Tableau) -> bool:
    n = t.n
    for (i, j), x in t.entries.items():
        y = t.get((i, j + 1))
        if y is not None and not h_ok(x, y, n):
            return False
        y = t.get((i + 1, j))
        if y is not None and not v_ok(x, y, n):
            return False
    return True


def all_codes(n: int) -> list[int]:
    return list(range(1, n + 1)) + list(range(-n, 0))


def enumerate_hv(d: SkewDiagram, n: int):
    """All HV-tableaux of shape d, filling cells in row-major order."""
    cells = sorted(d.cells())
    codes = all_codes(n)
    filled: dict = {}

    def rec(idx):
        if idx == len(cells):
            yield Tableau(d, n, tuple((i, j, filled[(i, j)]) for i, j in cells))
            return
        i, j = cells[idx]
        left, up = filled.get((i, j - 1)), filled.get((i - 1, j))
        for c in codes:
            if left is not None and not h_ok(left, c, n):
                continue
            if up is not None and not v_ok(up, c, n):
                continue
            filled[(i, j)] = c
            yield from rec(idx + 1)
            del filled[(i, j)]

    yield from rec(0)


# --------------------------------------------------------------------------
# tuples of paths <-> tableaux


def column_labels(p: DPath, n: int) -> list[int]:
    return [code for code, _ in e_labels(p, n)]


def tv(t: PathTuple, d: SkewDiagram, n: int) -> Tableau:
    """Column j lists the labels of the j-th path from the bottom step up."""
    if any(s != i for i, s in enumerate(t.sigma)):
        raise ValueError("tuple is not paired straight")
    if has_ordinary_pair(t, adjacent_only=True):
        raise ValueError("adjacent paths intersect ordinarily")
    mc = d.mu_conj
    cells = []
    for j, p in enumerate(t.paths, start=1):
        top = mc[j - 1] if j <= len(mc) else 0
        for k, code in enumerate(column_labels(p, n), start=1):
            cells.append((top + k, j, code))
    return Tableau(d, n, tuple(sorted(cells)))


def _column_steps(codes: list[int], n: int) -> tuple[frozenset, int]:
    """Heights of the NE steps and the number of E steps encoded by a column."""
    k = 0
    while k < len(codes) and codes[k] > 0:
        k += 1
    unbarred = codes[:k]
    east = 0
    while k + 1 < len(codes) and codes[k] == -n and codes[k + 1] == n:
        east += 2
        k += 2
    barred = codes[k:]
    if any(c > 0 for c in barred):
        raise ValueError("column is not a valid label sequence")
    ne_heights = [c - n - 1 for c in unbarred] + [n + c for c in barred]
    if len(set(ne_heights)) != len(ne_heights) or ne_heights != sorted(ne_heights):
        raise ValueError("column labels do not increase")
    if any(not -n <= m < n for m in ne_heights):
        raise ValueError("label outside the strip")
    return frozenset(ne_heights), east


def _column_path(codes: list[int], start, n: int) -> DPath:
    """Rebuild one path from its column of labels."""
    ne, east = _column_steps(codes, n)
    steps = []
    for m in range(-n, n):
        if m == 0:
            steps.extend(["E"] * east)
        steps.append("NE" if m in ne else "NW")
    return DPath(tuple(start), tuple(steps))


def tv_inv(t: Tableau) -> PathTuple:
    d, n = t.shape, t.n
    if not hv_check(t):
        raise ValueError("tableau breaks the HV rules")
    us, vs = endpoints(d, n)
    paths = []
    for j in range(1, len(us) + 1):
        p = _column_path(t.column(j), us[j - 1], n)
        if p.end != tuple(vs[j - 1]):
            raise ValueError(f"column {j} does not reach its end point")
        paths.append(p)
    return PathTuple(tuple(paths), tuple(range(len(paths))))


def tableau_hpair(t: Tableau) -> HPair:
    """The pair of families of the tuple of t, read off the columns directly.

    Equal to project_pi(tv_inv(t)) for an HV-tableau.
    """
    n = t.n
    us, _ = endpoints(t.shape, n)
    alphas, betas = [], []
    for j in range(1, len(us) + 1):
        ne, east = _column_steps(t.column(j), n)
        p = pos2(us[j - 1])
        low = [0] * (n + 1)
        low[n] = p
        for m in range(-n, 0):
            p += 1 if m in ne else -1
            low[-m - 1] = p
        p += 2 * east
        up = [p] + [0] * n
        for m in range(n):
            p += 1 if m in ne else -1
            up[m + 1] = p
        alphas.append(tuple(low))
        betas.append(tuple(up))
    return HPair(n, tuple(alphas), tuple(betas))


def extra_rule_paths(t: Tableau) -> bool:
    """Rule E: the corresponding tuple has no odd II-region."""
    if not t.cells:
        return True
    return not odd_regions(tableau_hpair(t), 1, "II")


def enumerate_tab(d: SkewDiagram, n: int):
    for t in enumerate_hv(d, n):
        if extra_rule_paths(t):
            yield t


def tableau_sum(d: SkewDiagram, n: int) -> ZPoly:
    if not positivity(d, n):
        raise ValueError("tableau sum requires the positivity condition")
    out: dict[int, int] = {}
    for t in enumerate_tab(d, n):
        m = t.weight_mono()
        out[m] = out.get(m, 0) + 1
    return ZPoly(out)


# --------------------------------------------------------------------------
# LU-configurations and rule E'


@dataclass(frozen=True)
class LUConfig:
    kind: int  # 1 or 2
    col: int  # column of L; U sits in col + 1
    l_top: int
    a: tuple  # a_1..a_s top to bottom
    u_top: int
    b: tuple  # b_1..b_t as plain values; bbar_1 is the bottom cell
    a_dual: tuple
    b_dual: tuple
    k: int
    extra: int  # r for type 1, k' for type 2

    @property
    def odd(self) -> bool:
        return self.kind == 1 and self.extra % 2 == 1

    @property
    def l_cells(self):
        return [(self.l_top + i, self.col) for i in range(len(self.a))]

    @property
    def u_cells(self):
        return [(self.u_top + i, self.col + 1) for i in range(len(self.b))]

    def a_row(self, i: int) -> int:
        """Row of a_i (1-based)."""
        return self.l_top + i - 1

    def b_row(self, i: int) -> int:
        """Row of bbar_i; bbar_1 is at the bottom."""
        return self.u_top + len(self.b) - i


def _run_down(t: Tableau, row: int, col: int, ok) -> list[int]:
    out = []
    while (c := t.get((row, col))) is not None and ok(c):
        out.append(c)
        row += 1
    return out


def _run_up(t: Tableau, row: int, col: int, ok) -> list[int]:
    out = []
    while (c := t.get((row, col))) is not None and ok(c):
        out.append(c)
        row -= 1
    return out


def _interlaced(a, b, a_dual, b_dual, upto_a: int, upto_b: int) -> bool:
    # a_{i+1} <= b'_i and b_{i+1} <= a'_i (barred order reversed)
    if any(a[i] > b_dual[i - 1] for i in range(1, upto_a + 1)):
        return False
    if any(b[i] > a_dual[i - 1] for i in range(1, upto_b + 1)):
        return False
    return True


def find_lu_configs(t: Tableau) -> list[LUConfig]:
    n = t.n
    out = []
    for (i0, j), k in sorted(t.entries.items()):
        if k < 0:
            continue
        bottom = i0 + n - k
        if t.get((bottom, j + 1)) != -k:
            continue
        # type 1: L and U are maximal runs
        a = _run_down(t, i0, j, lambda c: c > 0)
        b = [-c for c in _run_up(t, bottom, j + 1, lambda c: c < 0)]
        s, tt = len(a), len(b)
        r = s + tt - (n - k + 1)
        if 1 <= r <= min(s, tt):
            a_dual = tuple(sorted(set(range(k, n + 1)) - set(a)))
            b_dual = tuple(sorted(set(range(k, n + 1)) - set(b)))
            if _interlaced(a, b, a_dual, b_dual, len(b_dual), len(a_dual)):
                out.append(LUConfig(1, j, i0, tuple(a), bottom - tt + 1, tuple(b),
                                    a_dual, b_dual, k, r))
        # type 2
        for k2 in range(k + 1, n + 1):
            a = _run_down(t, i0, j, lambda c: 0 < c < k2)
            if t.get((i0 + len(a), j)) == k2:
                continue
            b = [-c for c in _run_up(t, bottom, j + 1, lambda c: c < 0 and -c < k2)]
            if t.get((bottom - len(b), j + 1)) == -k2:
                continue
            s, tt = len(a), len(b)
            if s + tt != k2 - k + 1:
                continue
            a_dual = tuple(sorted(set(range(k, k2 + 1)) - set(a)))
            b_dual = tuple(sorted(set(range(k, k2 + 1)) - set(b)))
            if _interlaced(a, b, a_dual, b_dual, s - 1, tt - 1):
                out.append(LUConfig(2, j, i0, tuple(a), bottom - tt + 1, tuple(b),
                                    a_dual, b_dual, k, k2))
    return out


def _right_adjacent(cells_vals, c: LUConfig) -> bool:
    """An L-configuration given as {(row, col): value} is right-adjacent to c."""
    for i in range(1, min(len(c.a), len(c.b_dual)) + 1):
        e = cells_vals.get((c.a_row(i), c.col + 1))
        if e is not None and e < c.b_dual[i - 1]:
            return True
    return False


def _left_adjacent(cells_vals, c: LUConfig) -> bool:
    """A U-configuration {(row, col): plain value} is left-adjacent to c."""
    for i in range(1, min(len(c.b), len(c.a_dual)) + 1):
        e = cells_vals.get((c.b_row(i), c.col))
        if e is not None and e < c.a_dual[i - 1]:
            return True
    return False


def lu_adjacent(c1: LUConfig, c2: LUConfig) -> bool:
    l1 = {cell: v for cell, v in zip(c1.l_cells, c1.a)}
    l2 = {cell: v for cell, v in zip(c2.l_cells, c2.a)}
    u1 = {cell: v for cell, v in zip(c1.u_cells, reversed(c1.b))}
    u2 = {cell: v for cell, v in zip(c2.u_cells, reversed(c2.b))}
    return (_right_adjacent(l2, c1) or _right_adjacent(l1, c2)
            or _left_adjacent(u2, c1) or _left_adjacent(u1, c2))


def boundary_configs(t: Tableau, configs: list[LUConfig]):
    """Boundary L- and U-configurations as {(row, col): plain value} maps."""
    used_l = {cell for c in configs for cell in c.l_cells}
    used_u = {cell for c in configs for cell in c.u_cells}
    cols = sorted({j for _, j in t.entries})
    ls, us = [], []
    for j in cols:
        rows = sorted(i for i, jj in t.entries if jj == j)
        top, bot = rows[0], rows[-1]
        cells = {}
        i = top
        while (c := t.get((i, j))) is not None and c > 0 and (i, j) not in used_l:
            cells[(i, j)] = c
            i += 1
        if cells:
            ls.append(cells)
        cells = {}
        i = bot
        while (c := t.get((i, j))) is not None and c < 0 and (i, j) not in used_u:
            cells[(i, j)] = -c
            i -= 1
        if cells:
            us.append(cells)
    return ls, us


@dataclass(frozen=True)
class TabIIRegion:
    members: tuple

    @property
    def odd(self) -> bool:
        return sum(c.odd for c in self.members) % 2 == 1


def lu_classes(configs: list[LUConfig]) -> list[list[LUConfig]]:
    parent = list(range(len(configs)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x in range(len(configs)):
        for y in range(x + 1, len(configs)):
            if lu_adjacent(configs[x], configs[y]):
                parent[find(x)] = find(y)
    groups: dict[int, list] = {}
    for x in range(len(configs)):
        groups.setdefault(find(x), []).append(configs[x])
    return list(groups.values())


def tab_ii_regions(t: Tableau) -> list[TabIIRegion]:
    configs = find_lu_configs(t)
    ls, us = boundary_configs(t, configs)
    out = []
    for cls in lu_classes(configs):
        if any(_right_adjacent(bl, c) for bl in ls for c in cls):
            continue
        if any(_left_adjacent(bu, c) for bu in us for c in cls):
            continue
        out.append(TabIIRegion(tuple(cls)))
    return out


def extra_rule_lu(t: Tableau) -> bool:
    """Rule E': no odd II-region among the LU-configurations."""
    return not any(R.odd for R in tab_ii_regions(t))


# --------------------------------------------------------------------------
# explicit rule lists for small shape classes


def rule_e1r(t: Tableau) -> bool:
    """No row contains n immediately followed by nbar."""
    n = t.n
    return not any(c == n and t.get((i, j + 1)) == -n for (i, j), c in t.entries.items())


def rule_e2r(t: Tableau) -> bool:
    """No run of n-1 in row i over a shifted run of (n-1)bar in row i+1 closed by a corner.

    With the run in columns c..last of row i and (n-1)bar in columns
    c+1..last+1 of row i+1, the pattern is forbidden when either
    the corner below the run start is n and the cell after the run is n or missing,
    or the cell after the run is nbar and the corner below the start is nbar or missing.
    """
    n = t.n
    g = t.get
    for (i, c0), x in t.entries.items():
        if x != n - 1:
            continue
        last = c0
        while True:
            if all(g((i + 1, c)) == -(n - 1) for c in range(c0 + 1, last + 2)):
                after, corner = g((i, last + 1)), g((i + 1, c0))
                if corner == n and after in (n, None):
                    return False
                if after == -n and corner in (-n, None):
                    return False
            if g((i, last + 1)) != n - 1:
                break
            last += 1
    return True


def rule_e2c(t: Tableau) -> bool:
    """Two-column rule: no odd type 1 configuration with harmless neighbours.

    The cells c_i above U in the right column must satisfy c_i >= b'_i and the
    barred cells d_i below L in the left column must satisfy d_i <= a'_i
    (comparing plain values), for every index the shape provides.
    """
    _require(t, cols=2)
    for c in find_lu_configs(t):
        if not c.odd:
            continue
        blocked = False
        for i, bd in enumerate(c.b_dual, start=1):
            if i > len(c.a):
                break
            e = t.get((c.a_row(i), c.col + 1))
            if e is not None and 0 < e < bd:
                blocked = True
        for i, ad in enumerate(c.a_dual, start=1):
            if i > len(c.b):
                break
            e = t.get((c.b_row(i), c.col))
            if e is not None and e < 0 and -e < ad:
                blocked = True
        if not blocked:
            return False
    return True


# Links of three-row tableaux with k >= n-2, as offsets from n:
# (kind, n-k, r for type 1 or n-k' for type 2, L top to bottom, U bottom to top)
THREE_ROW_LINKS = (
    (1, 0, 1, (0,), (0,)),
    (1, 1, 1, (1,), (1, 0)),
    (1, 1, 1, (1, 0), (1,)),
    (1, 1, 2, (1, 0), (1, 0)),
    (1, 2, 1, (2,), (2, 1, 0)),
    (1, 2, 1, (2, 0), (2, 1)),
    (1, 2, 1, (2, 1), (2, 0)),
    (1, 2, 1, (2, 1), (2, 1)),
    (1, 2, 1, (2, 1, 0), (2,)),
    (1, 2, 2, (2, 0), (2, 1, 0)),
    (1, 2, 2, (2, 1), (2, 1, 0)),
    (1, 2, 2, (2, 1, 0), (2, 0)),
    (1, 2, 2, (2, 1, 0), (2, 1)),
    (1, 2, 3, (2, 1, 0), (2, 1, 0)),
    (2, 1, 0, (1,), (1,)),
    (2, 2, 0, (2,), (2, 1)),
    (2, 2, 0, (2, 1), (2,)),
    (2, 2, 1, (2,), (2,)),
)


def _link_at(t: Tableau, i0: int, j: int, link) -> LUConfig | None:
    n = t.n
    kind, dk, extra, l_off, u_off = link
    k = n - dk
    if n - max(l_off + u_off) < 1:
        return None
    a = tuple(n - o for o in l_off)
    b = tuple(n - o for o in u_off)
    bottom = i0 + dk
    if any(t.get((i0 + x, j)) != v for x, v in enumerate(a)):
        return None
    if any(t.get((bottom - x, j + 1)) != -v for x, v in enumerate(b)):
        return None
    below, above = t.get((i0 + len(a), j)), t.get((bottom - len(b), j + 1))
    if kind == 1:
        top = n
        if (below is not None and below > 0) or (above is not None and above < 0):
            return None
    else:
        top = n - extra
        if below is not None and 0 < below <= top:
            return None
        if above is not None and above < 0 and -above <= top:
            return None
    a_dual = tuple(sorted(set(range(k, top + 1)) - set(a)))
    b_dual = tuple(sorted(set(range(k, top + 1)) - set(b)))
    return LUConfig(kind, j, i0, a, bottom - len(b) + 1, b, a_dual, b_dual, k,
                    extra if kind == 1 else top)


_LINKS_BY_ENDS: dict[tuple[int, int, int], list] = {}
for _link in THREE_ROW_LINKS:
    _LINKS_BY_ENDS.setdefault((_link[3][0], _link[1], _link[4][0]), []).append(_link)


def three_row_links(t: Tableau) -> list[LUConfig]:
    """Every placement of a listed link in the tableau."""
    n = t.n
    out = []
    for (i0, j), v in sorted(t.entries.items()):
        if not 0 <= n - v <= 2:
            continue
        for dk in range(3):
            w = t.get((i0 + dk, j + 1))
            if w is None or w >= 0:
                continue
            for link in _LINKS_BY_ENDS.get((n - v, dk, n + w), ()):
                c = _link_at(t, i0, j, link)
                if c is not None:
                    out.append(c)
    return out


def rule_e3r(t: Tableau) -> bool:
    """Three-row rule: no odd chain of links that involves a link with k = n-2."""
    _require(t, rows=3)
    n = t.n
    # every failing chain has a k = n-2 link, whose end cells hold n-2 and its bar
    vals = set(t.entries.values())
    if n - 2 < 1 or n - 2 not in vals or 2 - n not in vals:
        return True
    links = three_row_links(t)
    ls, us = boundary_configs(t, links)
    for chain in lu_classes(links):
        if all(c.k != t.n - 2 for c in chain):
            continue
        if sum(c.odd for c in chain) % 2 == 0:
            continue
        if any(_right_adjacent(bl, c) for bl in ls for c in chain):
            continue
        if any(_left_adjacent(bu, c) for bu in us for c in chain):
            continue
        return False
    return True


def _require(t: Tableau, rows: int | None = None, cols: int | None = None) -> None:
    lam = t.shape.lam
    if rows is not None and len(lam) != rows:
        raise ValueError(f"rule needs a shape with {rows} rows, got {t.shape}")
    if cols is not None and (lam[0] if lam else 0) > cols:
        raise ValueError(f"rule needs a shape with at most {cols} columns, got {t.shape}")


def rule_classes(d: SkewDiagram) -> dict[str, list]:
    """Shape classes of d with their explicit rules; E' is their conjunction on each."""
    lam = d.lam
    out = {}
    if len(lam) == 1:
        out["one row"] = [rule_e1r]
    elif len(lam) == 2:
        out["two rows"] = [rule_e1r, rule_e2r]
    elif len(lam) == 3:
        out["three rows"] = [rule_e1r, rule_e2r, rule_e3r]
    if lam and lam[0] <= 2:
        out["two columns"] = [rule_e2c]
    return out


def is_listed_link(c: LUConfig, n: int) -> bool:
    """Whether a configuration is one of the listed three-row links."""
    key = (c.kind, n - c.k, c.extra if c.kind == 1 else n - c.extra,
           tuple(n - v for v in c.a), tuple(n - v for v in c.b))
    return key in THREE_ROW_LINKS
