"""ASCII and SVG pictures of path tuples, pairs of families and regions.

Height runs upward and the doubled position runs to the right.  Dual paths
are drawn dotted and regions are shaded.
"""
from __future__ import annotations

import io

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Polygon  # noqa: E402

from .paths import PathTuple, height, pos2  # noqa: E402
from .regions import HPair, Region, unit_vertices  # noqa: E402

STEP_CHARS = {"NE": "/", "NW": "\\"}


class _Canvas:
    """Character grid at half steps: rows are half heights, columns half doubled positions."""

    def __init__(self, n: int, lo: int, hi: int):
        self.n, self.lo = n, lo
        self.rows = [[" "] * (2 * (hi - lo) + 1) for _ in range(4 * n + 1)]

    def put(self, ht2: int, p4: int, ch: str, weak: bool = False):
        """ht2 is twice the height and p4 twice the doubled position."""
        row = 2 * self.n - ht2
        col = p4 - 2 * self.lo
        if 0 <= row < len(self.rows) and 0 <= col < len(self.rows[0]):
            if weak and self.rows[row][col] != " ":
                return
            self.rows[row][col] = ch

    def middle_line(self):
        for col in range(len(self.rows[0])):
            self.put(0, col + 2 * self.lo, ".", weak=True)

    def text(self) -> str:
        lines = []
        for idx, row in enumerate(self.rows):
            label = f"{self.n - idx // 2:>3d} " if idx % 2 == 0 else "    "
            lines.append((label + "".join(row)).rstrip())
        return "\n".join(lines) + "\n"


def _tuple_range(t: PathTuple):
    ps = [pos2(pt) for p in t.paths for pt in p.points]
    return (min(ps), max(ps)) if ps else (0, 0)


def ascii_tuple(t: PathTuple, n: int) -> str:
    """Steps as '/', '\\' and '=', path points marked with the path index."""
    if not t.paths:
        return ""
    lo, hi = _tuple_range(t)
    cv = _Canvas(n, lo - 1, hi + 1)
    for idx, p in enumerate(t.paths, start=1):
        for a, s in zip(p.points, p.steps):
            h0, q0 = height(a), pos2(a)
            if s == "E":
                for off in (1, 2, 3):
                    cv.put(0, 2 * q0 + off, "=")
            else:
                cv.put(2 * h0 + 1, 2 * q0 + (1 if s == "NE" else -1), STEP_CHARS[s])
        for pt in p.points:
            cv.put(2 * height(pt), 2 * pos2(pt), str(idx % 10))
    cv.middle_line()
    return cv.text()


def ascii_hpair(h: HPair, marked: list[Region] = ()) -> str:
    """Lower paths as 'a', upper paths as 'b', duals as ':' and region vertices as '#'."""
    n = h.n
    lo, hi = h.pos_range()
    cv = _Canvas(n, lo - 2, hi + 2)
    for V in marked:
        for r, p2 in V.minus_vertices:
            cv.put(-2 * r, 2 * p2, "#")
        for r, p2 in V.plus_vertices:
            cv.put(2 * r, 2 * p2, "#")
    for a in h.alphas:
        for r, p2 in enumerate(a):
            cv.put(-2 * r, 2 * p2, "a", weak=True)
            cv.put(2 * r, 2 * (p2 - 2), ":", weak=True)
    for b in h.betas:
        for r, p2 in enumerate(b):
            cv.put(2 * r, 2 * p2, "b", weak=True)
            cv.put(-2 * r, 2 * (p2 + 2), ":", weak=True)
    cv.middle_line()
    return cv.text()


# --------------------------------------------------------------------------
# SVG


def _svg_bytes(fig) -> bytes:
    buf = io.StringIO()
    with plt.rc_context({"svg.hashsalt": "djtrudi", "svg.fonttype": "none"}):
        fig.savefig(buf, format="svg", metadata={"Date": None, "Creator": None})
    plt.close(fig)
    return buf.getvalue().encode()


def _frame(ax, n: int):
    ax.axhline(0, color="0.6", lw=0.6)
    for ht in range(-n, n + 1):
        ax.axhline(ht, color="0.9", lw=0.4, zorder=0)
    ax.set_ylim(-n - 0.5, n + 0.5)
    ax.set_xlabel("doubled position")
    ax.set_ylabel("height")
    ax.set_aspect("equal")


def svg_tuple(t: PathTuple, n: int) -> bytes:
    fig, ax = plt.subplots(figsize=(6, 4))
    _frame(ax, n)
    for idx, p in enumerate(t.paths, start=1):
        xs = [pos2(pt) for pt in p.points]
        ys = [height(pt) for pt in p.points]
        ax.plot(xs, ys, marker="o", ms=2.5, lw=1.2, label=f"p{idx}")
    if t.paths:
        ax.legend(loc="upper left", fontsize="small", frameon=False)
    return _svg_bytes(fig)


def _unit_polygon(u, n: int):
    side, _, _ = u
    verts = unit_vertices(u, n)
    # left, top, right, bottom
    order = sorted(verts, key=lambda v: (v[1], -v[0]))
    left, right = order[0], order[-1]
    mids = [v for v in verts if v not in (left, right)]
    ring = [left] + [v for v in mids if v[0] > left[0]] + [right] + [v for v in mids if v[0] < left[0]]
    return [(p2, side * r) for r, p2 in ring]


def svg_hpair(h: HPair, marked: list[Region] = ()) -> bytes:
    n = h.n
    fig, ax = plt.subplots(figsize=(6, 4))
    _frame(ax, n)
    for V in marked:
        for u in sorted(V.units):
            ax.add_patch(Polygon(_unit_polygon(u, n), closed=True, fc="0.8", ec="none", zorder=1))
    for i, a in enumerate(h.alphas, start=1):
        ax.plot(list(a), [-r for r in range(n + 1)], color="C0", lw=1.2, zorder=2)
        ax.plot([x - 2 for x in a], list(range(n + 1)), color="C0", lw=1, ls=":", zorder=2)
    for i, b in enumerate(h.betas, start=1):
        ax.plot(list(b), list(range(n + 1)), color="C3", lw=1.2, zorder=2)
        ax.plot([x + 2 for x in b], [-r for r in range(n + 1)], color="C3", lw=1, ls=":", zorder=2)
    return _svg_bytes(fig)


def plot_report(rows: list[dict], path) -> None:
    """Bar chart of term counts per sum for each shape, written to path."""
    legs = [k for k in rows[0] if k.endswith("_terms")] if rows else []
    fig, ax = plt.subplots(figsize=(max(4, 0.6 * len(rows) + 2), 3.5))
    width = 0.8 / max(len(legs), 1)
    for j, leg in enumerate(legs):
        xs = [i + j * width for i in range(len(rows))]
        ax.bar(xs, [r[leg] or 0 for r in rows], width=width, label=leg.removesuffix("_terms"))
    ax.set_xticks([i + 0.4 - width / 2 for i in range(len(rows))])
    ax.set_xticklabels([f"{r['shape']} n={r['n']}" for r in rows], rotation=45, ha="right",
                       fontsize="small")
    ax.set_ylabel("terms")
    if legs:
        ax.legend(fontsize="small", frameon=False)
    fig.tight_layout()
    with plt.rc_context({"svg.hashsalt": "djtrudi"}):
        fig.savefig(path, metadata={"Date": None} if str(path).endswith(".svg") else None)
    plt.close(fig)
