"""Named property suites over small families of shapes.

Each suite returns a ``CheckResult`` holding how many instances were looked
at and a list of violations.  The command line ``verify`` and the
acceptance tests both run these.
"""
from __future__ import annotations

import random
import time
from collections import Counter
from dataclasses import dataclass, field

from .core import SkewDiagram, eq_in_Z, partitions_in_box, positivity, specialize_mono, subpartitions
from .determinant import jt_det_e, jt_det_h
from .folding import (
    conditions,
    enumerate_P,
    fold_pair,
    in_Q,
    in_R,
    in_R_direct,
    typed_conditions,
    phi,
    phi_t,
    phi_t_inv,
    pi_inv_Q1,
    pi_inv_R,
    unfold_pair,
)
from .graphs import (
    all_graphs,
    build_overlap_graph,
    extremes_alternate,
    has_odd_segment,
    dual_graph_balanced,
)
from .paths import enumerate_tuples, first_sum, iota1, path_sum_e, signed_total_sum
from .regions import (
    HPair,
    UnitSet,
    all_units,
    boundary_values,
    dual_unit,
    enumerate_P2,
    epsilon_k,
    in_H,
    iota2,
    neighbours,
    odd_first_regions,
    odd_regions,
    positive_sum_P2,
    project_pi,
    regions,
)
from .series import check_inverse, e_poly
from .tableaux import (
    enumerate_hv,
    enumerate_tab,
    extra_rule_lu,
    extra_rule_paths,
    hv_check,
    rule_classes,
    tableau_sum,
    tv,
    tv_inv,
)

MAX_REPORTED = 20


@dataclass
class CheckResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    counts: Counter = field(default_factory=Counter)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures and not self.counts

    def fail(self, label: str, detail: str = "") -> None:
        self.counts[label] += 1
        if len(self.failures) < MAX_REPORTED:
            self.failures.append(f"{label}: {detail}" if detail else label)

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        extra = "" if self.ok else " " + ", ".join(f"{k}x{v}" for k, v in sorted(self.counts.items()))
        return f"{status} {self.name} ({self.checked} checked, {self.seconds:.1f}s){extra}"

    def as_dict(self) -> dict:
        return {"name": self.name, "ok": self.ok, "checked": self.checked,
                "seconds": round(self.seconds, 3), "violations": dict(self.counts),
                "examples": self.failures}


def _timed(fn):
    def run(*args, **kwargs):
        t0 = time.perf_counter()
        res = fn(*args, **kwargs)
        res.seconds = time.perf_counter() - t0
        return res

    run.__name__ = fn.__name__
    run.__doc__ = fn.__doc__
    return run


def skew_shapes(rows: int, cols: int, straight_only: bool = False):
    """Every (lambda, mu) with lambda inside the box, nonempty lambda first."""
    for lam in partitions_in_box(rows, cols):
        mus = [()] if straight_only else subpartitions(lam)
        for mu in mus:
            yield SkewDiagram(lam, mu)


def same_weight(t1, t2, n: int) -> bool:
    return specialize_mono(t1.weight_mono(n), n) == specialize_mono(t2.weight_mono(n), n)


# --------------------------------------------------------------------------
# algebra


@_timed
def series_duality(ns=(2, 3, 4), K: int = 5) -> CheckResult:
    res = CheckResult("series duality H(X)E(-X) = 1")
    for n in ns:
        res.checked += 1
        if not check_inverse(n, K):
            res.fail("inverse", f"n={n} K={K}")
    return res


@_timed
def path_series(ns=(2, 3), rmax: int = 4, kmax: int = 2) -> CheckResult:
    res = CheckResult("path expansion of e")
    for n in ns:
        for r in range(rmax + 1):
            for k in range(-kmax, kmax + 1):
                res.checked += 1
                if path_sum_e(r, k, n) != e_poly(r, k, n):
                    res.fail("path_sum_e", f"n={n} r={r} k={k}")
    return res


@_timed
def determinant_identity(rows: int = 3, cols: int = 3, ns=(2, 3)) -> CheckResult:
    res = CheckResult("h- and e-determinants agree")
    for n in ns:
        for d in skew_shapes(rows, cols):
            res.checked += 1
            if not eq_in_Z(jt_det_h(d, n), jt_det_e(d, n), n):
                res.fail("det_h != det_e", f"{d} n={n}")
    return res


@_timed
def gv_cancellation(cases=(((2, 2), (2,)), ((2, 3), (2, 3)))) -> CheckResult:
    """cases: ((rows, cols), ns) boxes for lambda, all mu."""
    res = CheckResult("signed sum, first sum and determinant")
    for (rows, cols), ns in cases:
        for n in ns:
            for d in skew_shapes(rows, cols):
                res.checked += 1
                first = first_sum(d, n)
                if signed_total_sum(d, n) != first:
                    res.fail("signed != first", f"{d} n={n}")
                if not eq_in_Z(first, jt_det_h(d, n), n):
                    res.fail("first != det", f"{d} n={n}")
    return res


# --------------------------------------------------------------------------
# involutions and the positive sum


@_timed
def involutions(rows: int = 2, cols: int = 2, n: int = 2) -> CheckResult:
    res = CheckResult("first and second involutions")
    for d in skew_shapes(rows, cols):
        for t in enumerate_tuples(d, n, "all"):
            s = iota1(t)
            if s is None:
                continue
            res.checked += 1
            if iota1(s) != t:
                res.fail("iota1 not an involution", f"{d}")
            if s.sign != -t.sign:
                res.fail("iota1 keeps sign", f"{d}")
            if s.weight_mono(n) != t.weight_mono(n):
                res.fail("iota1 changes weight", f"{d}")
        if not positivity(d, n):
            continue
        for t in enumerate_tuples(d, n, "first"):
            if not odd_first_regions(project_pi(t, n)):
                continue
            res.checked += 1
            s = iota2(t, n)
            if s is None or iota2(s, n) != t:
                res.fail("iota2 not an involution", f"{d}")
                continue
            if s.sign != -t.sign:
                res.fail("iota2 keeps sign", f"{d}")
            if not same_weight(s, t, n):
                res.fail("iota2 changes weight", f"{d}")
    return res


@_timed
def positive_sum(rows: int = 2, cols: int = 3, ns=(2, 3)) -> CheckResult:
    res = CheckResult("positive sum equals the determinant")
    for n in ns:
        for d in skew_shapes(rows, cols):
            if not positivity(d, n):
                continue
            res.checked += 1
            try:
                if not eq_in_Z(positive_sum_P2(d, n), jt_det_h(d, n), n):
                    res.fail("positive sum != det", f"{d} n={n}")
            except AssertionError as e:
                res.fail("negative term", f"{d} n={n}: {e}")
    return res


# --------------------------------------------------------------------------
# folding


def pipeline_pairs(h: HPair):
    """(pair, stage) for every stage the folding passes through."""
    t = 1
    while True:
        yield h, t
        if not conditions(h, t)[7]:
            return
        h = phi_t(h, t)
        t += 1


@_timed
def folding(rows: int = 2, cols: int = 3, ns=(2, 3), collect: list | None = None) -> CheckResult:
    """The folding map is a weight-preserving bijection onto P(lambda/mu)."""
    res = CheckResult("folding map")
    for n in ns:
        for d in skew_shapes(rows, cols):
            if not positivity(d, n):
                continue
            P2 = list(enumerate_P2(d, n))
            P = list(enumerate_P(d, n))
            res.checked += 1
            if len(P2) != len(P):
                res.fail("size", f"{d} n={n}: {len(P2)} vs {len(P)}")
            targets = set(P)
            images = Counter()
            for t in P2:
                res.checked += 1
                h = project_pi(t, n)
                if not in_H(h, d):
                    res.fail("projection leaves H", f"{d}")
                if not in_Q(h, 1):
                    res.fail("projection not in Q_1", f"{d}")
                    continue
                try:
                    if pi_inv_Q1(h) != t:
                        res.fail("pi_inv_Q1 round trip", f"{d}")
                except ValueError as e:
                    res.fail("pi_inv_Q1 error", f"{d}: {e}")
                for hh, stage in pipeline_pairs(h):
                    if collect is not None:
                        collect.append((hh, 2**stage))
                    if conditions(hh, stage)[7]:
                        if phi_t_inv(phi_t(hh, stage), stage) != hh:
                            res.fail("phi_t inverse", f"{d} t={stage}")
                hf, stage = fold_pair(h)
                if unfold_pair(hf, stage) != h:
                    res.fail("unfold", f"{d}")
                if not in_R(hf):
                    res.fail("folded pair not in R", f"{d}")
                if in_R(hf) != in_R_direct(hf):
                    res.fail("two descriptions of R differ", f"{d}")
                try:
                    f = phi(t, n)
                    back = pi_inv_R(project_pi(f, n))
                except ValueError as e:
                    res.fail("phi error", f"{d}: {e}")
                    continue
                if back != f:
                    res.fail("pi_inv_R round trip", f"{d}")
                if f not in targets:
                    res.fail("image outside P", f"{d}")
                if not same_weight(f, t, n):
                    res.fail("weight", f"{d}")
                images[f] += 1
            if any(c > 1 for c in images.values()) or len(images) != len(P):
                res.fail("not a bijection", f"{d} n={n}")
            w2 = Counter(specialize_mono(t.weight_mono(n), n) for t in P2)
            w1 = Counter(specialize_mono(t.weight_mono(n), n) for t in P)
            if w1 != w2:
                res.fail("weight multisets", f"{d} n={n}")
    return res


# --------------------------------------------------------------------------
# tableaux


@_timed
def tableaux(rows: int = 2, cols: int = 3, ns=(2, 3)) -> CheckResult:
    res = CheckResult("tableaux and the tableau sum")
    fixture = sum(1 for _ in enumerate_tab(SkewDiagram((2,), ()), 2))
    res.checked += 1
    if fixture != 9:
        res.fail("fixture |Tab((2))| at n=2", f"got {fixture}")
    for n in ns:
        for d in skew_shapes(rows, cols):
            hv = list(enumerate_hv(d, n))
            ph = list(enumerate_tuples(d, n, "hv"))
            res.checked += 1
            if len(hv) != len(ph):
                res.fail("HV count", f"{d} n={n}")
            images = set()
            for p in ph:
                T = tv(p, d, n)
                images.add(T)
                if not hv_check(T):
                    res.fail("image not HV", f"{d}")
                if tv_inv(T) != p:
                    res.fail("tv round trip", f"{d}")
                if T.weight_mono() != p.weight_mono(n):
                    res.fail("tv weight", f"{d}")
            if images != set(hv):
                res.fail("tv not onto", f"{d} n={n}")
            if not positivity(d, n):
                continue
            tabs = set(enumerate_tab(d, n))
            if {tv(p, d, n) for p in enumerate_P(d, n)} != tabs:
                res.fail("Tab is not the image of P", f"{d} n={n}")
            if not eq_in_Z(tableau_sum(d, n), jt_det_h(d, n), n):
                res.fail("tableau sum != det", f"{d} n={n}")
    return res


@_timed
def rule_equivalence(rows: int = 3, cols: int = 3, ns=(2, 3, 4)) -> CheckResult:
    """E and E' agree, and E' agrees with the explicit lists on each class."""
    res = CheckResult("extra rules")
    for n in ns:
        for d in skew_shapes(rows, cols):
            classes = rule_classes(d)
            for T in enumerate_hv(d, n):
                res.checked += 1
                e2 = extra_rule_lu(T)
                if extra_rule_paths(T) != e2:
                    res.fail("E != E'", f"{d} n={n}\n{T}")
                for name, rules in classes.items():
                    if all(f(T) for f in rules) != e2:
                        res.fail(f"{name} list != E'", f"{d} n={n}\n{T}")
    return res


# --------------------------------------------------------------------------
# graphs


@_timed
def arc_graphs(max_vertices: int = 10, pairs=None) -> CheckResult:
    """Both equivalences on every graph, then the graph of each pipeline pair."""
    res = CheckResult("arc graphs")
    for N in range(max_vertices + 1):
        for g in all_graphs(N):
            res.checked += 1
            odd = has_odd_segment(g)
            if (not odd) != extremes_alternate(g):
                res.fail("odd segment vs alternating extremes", f"{sorted(g.arcs)} N={N}")
            if (not odd) != dual_graph_balanced(g):
                res.fail("odd segment vs dual graph", f"{sorted(g.arcs)} N={N}")
    for h, k in pairs or ():
        if k - 1 > h.l - 1:
            continue
        res.checked += 1
        g, _ = build_overlap_graph(h, k)
        try:
            g.check()
        except ValueError as e:
            res.fail("overlap graph invalid", f"{h}: {e}")
            continue
        lc = typed_conditions(h, k)
        no_odd = not odd_regions(h, k - 1, "I")
        if dual_graph_balanced(g) != all(lc.values()):
            res.fail("graph vs typed conditions", f"{h} k={k}")
        if dual_graph_balanced(g) != no_odd:
            res.fail("graph vs odd regions", f"{h} k={k}")
        if has_odd_segment(g) == no_odd:
            res.fail("odd segment vs odd regions", f"{h} k={k}")
    return res


# --------------------------------------------------------------------------
# units and regions on random pairs


def random_hpair(d: SkewDiagram, n: int, rng: random.Random, tries: int = 100000) -> HPair:
    """A random member of H(d) by rejection from independent random walks."""
    a_end, b_end = boundary_values(d, n)

    def walk(end):
        while True:
            prof = [end]
            for _ in range(n):
                prof.append(prof[-1] + rng.choice((1, -1)))
            if prof[-1] % 2 == 0:
                return tuple(reversed(prof))

    for _ in range(tries):
        h = HPair(n, tuple(walk(e) for e in a_end), tuple(walk(e) for e in b_end))
        if in_H(h, d):
            return h
    raise RuntimeError(f"no pair found for {d} at n={n}")


def _unit_lemmas(res: CheckResult, h: HPair, d: SkewDiagram, pos: bool) -> None:
    n, l = h.n, h.l
    window = set(all_units(h))
    sets = {(k, c): UnitSet(h, k, c) for k in range(1, l + 2) for c in ("I", "II")}
    for k in range(1, l + 1):
        I, II, II_next = sets[(k, "I")], sets[(k, "II")], sets[(k + 1, "II")]
        for u in window:
            du = dual_unit(u)
            if du in window:
                if (u in I) != (du in I) or (u in II) != (du in II):
                    res.fail("dual changes class", f"{h} k={k} u={u}")
            if u in I and u in II:
                res.fail("unit in both classes", f"{h} k={k} u={u}")
            if (u in I) == (u in II_next):
                res.fail("I_k and II_k+1 not complementary", f"{h} k={k} u={u}")
            if u in I:
                for v in neighbours(u, n):
                    if any(v in sets[(k2, "II")] for k2 in range(1, k + 1)):
                        res.fail("I unit next to II unit", f"{h} k={k} u={u} v={v}")
        if pos and any(u[0] > 0 and u[1] == n for u in I):
            res.fail("I unit at the top", f"{h} k={k}")
        for klass in ("I", "II"):
            other = "II" if klass == "I" else "I"
            for V in regions(h, k, klass):
                if not V.is_self_dual():
                    res.fail("region not self-dual", f"{h} k={k}")
                if klass == "I" and not pos:
                    continue
                try:
                    h2 = epsilon_k(h, V)
                except ValueError as e:
                    res.fail("expansion undefined", f"{h} k={k}: {e}")
                    continue
                if not in_H(h2, d):
                    res.fail("expansion leaves H", f"{h} k={k}")
                if V.units not in {W.units for W in regions(h2, k, other)}:
                    res.fail("expansion keeps class", f"{h} k={k} {klass}")
                if epsilon_k(h2, V) != h:
                    res.fail("expansion not an involution", f"{h} k={k}")
    for klass in ("I", "II"):
        regs = [V for k in range(1, l + 1) for V in regions(h, k, klass)]
        for V in regs:
            for W in regs:
                if V.k != W.k and V.units & W.units and not (V.units <= W.units or W.units <= V.units):
                    res.fail("regions neither nested nor disjoint", f"{h}")
    if pos:
        for k in range(1, l + 1):
            for W in regions(h, k, "I"):
                h2 = epsilon_k(h, W)
                for r in range(k, min(2 * k - 1, l) + 1):
                    for V in regions(h, r, "I"):
                        if V.units <= W.units and \
                                V.units not in {X.units for X in regions(h2, 2 * k - r, "II")}:
                            res.fail("nested region class", f"{h} k={k} r={r}")


@_timed
def unit_calculus(configs=(((2, 1), 2), ((3, 3), 2), ((2, 1), 3), ((3, 3), 3)),
                  samples: int = 500, seed: int = 0) -> CheckResult:
    """Unit and region lemmas on random pairs (seeded), per (shape, n) configuration."""
    res = CheckResult("unit calculus on random pairs")
    rng = random.Random(seed)
    for lam, n in configs:
        d = SkewDiagram(lam, ())
        pos = positivity(d, n)
        for _ in range(samples):
            h = random_hpair(d, n, rng)
            res.checked += 1
            _unit_lemmas(res, h, d, pos)
    return res


SUITES = {
    "series": series_duality,
    "paths": path_series,
    "determinant": determinant_identity,
    "gv": gv_cancellation,
    "involutions": involutions,
    "positive": positive_sum,
    "folding": folding,
    "tableaux": tableaux,
    "rules": rule_equivalence,
    "graphs": arc_graphs,
    "units": unit_calculus,
}


def run_all(seed: int = 0) -> list[CheckResult]:
    pairs: list = []
    return [series_duality(), path_series(), determinant_identity(), gv_cancellation(),
           involutions(), positive_sum(), folding(collect=pairs), tableaux(),
           rule_equivalence(), arc_graphs(pairs=pairs), unit_calculus(seed=seed)]
