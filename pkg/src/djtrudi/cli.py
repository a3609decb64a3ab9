"""Command line driver: determinants, the sums that re-derive them, checks and pictures."""
from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import checks
from .core import SkewDiagram, ZPoly, eq_in_Z, part, positivity
from .determinant import jt_det_e, jt_det_h
from .folding import enumerate_P
from .graphs import all_graphs
from .paths import enumerate_tuples
from .regions import enumerate_P2, project_pi, regions
from .tableaux import enumerate_hv, enumerate_tab, extra_rule_lu, extra_rule_paths, rule_classes

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    n: int
    shape: SkewDiagram
    trunc: int
    seed: int = 0
    fmt: str = "text"
    render: str = "ascii"
    max_cells: int = 9
    max_n: int = 4
    out: str | None = None

    def guard(self) -> None:
        if self.n < 1:
            raise UsageError("n must be positive")
        if self.n > self.max_n:
            raise UsageError(f"guard exceeded: n={self.n} > {self.max_n}")
        if self.shape.size() > self.max_cells:
            raise UsageError(f"guard exceeded: {self.shape.size()} cells > {self.max_cells}")
        need = required_degree(self.shape)
        if self.trunc < need:
            raise UsageError(f"truncation {self.trunc} is below the degree {need} the shape needs")


def required_degree(d: SkewDiagram) -> int:
    """Largest series degree occurring in either determinant."""
    def widest(lam, mu):
        l = len(lam)
        return max((part(lam, i) - part(mu, j) - i + j for i in range(1, l + 1)
                    for j in range(1, l + 1)), default=0)

    return max(widest(d.lam, d.mu), widest(d.lam_conj, d.mu_conj), 0)


def default_trunc(d: SkewDiagram) -> int:
    return (d.lam[0] if d.lam else 0) + len(d.lam) + 2


# --------------------------------------------------------------------------
# sums


def _tally(items, weight) -> tuple[ZPoly, int]:
    out: dict[int, int] = {}
    count = 0
    for x in items:
        m, c = weight(x)
        out[m] = out.get(m, 0) + c
        count += 1
    return ZPoly(out), count


def sum_leg(d: SkewDiagram, n: int, leg: str, det: ZPoly | None = None) -> dict:
    """One sum compared with the determinant; positive legs need positivity."""
    det = jt_det_h(d, n) if det is None else det
    needs_positivity = leg in ("positive", "third", "tableau")
    if needs_positivity and not positivity(d, n):
        return {"leg": leg, "status": "skipped", "terms": None,
                "reason": "positivity condition fails"}
    if leg == "signed":
        poly, count = _tally(enumerate_tuples(d, n, "all"), lambda t: (t.weight_mono(n), t.sign))
    elif leg == "first":
        poly, count = _tally(enumerate_tuples(d, n, "first"), lambda t: (t.weight_mono(n), t.sign))
    elif leg == "positive":
        poly, count = _tally(enumerate_P2(d, n), lambda t: (t.weight_mono(n), t.sign))
    elif leg == "third":
        poly, count = _tally(enumerate_P(d, n), lambda t: (t.weight_mono(n), 1))
    elif leg == "tableau":
        poly, count = _tally(enumerate_tab(d, n), lambda T: (T.weight_mono(), 1))
    else:
        raise UsageError(f"unknown sum {leg!r}")
    ok = eq_in_Z(poly, det, n)
    return {"leg": leg, "status": "pass" if ok else "fail", "terms": count}


LEGS = {
    "sum-paths": ("signed", "first"),
    "sum-first": ("first",),
    "sum-positive": ("positive", "third"),
    "sum-tableaux": ("tableau",),
}


def cmd_sums(cfg: RunConfig, legs) -> tuple[dict, int]:
    det = jt_det_h(cfg.shape, cfg.n)
    rows = [sum_leg(cfg.shape, cfg.n, leg, det) for leg in legs]
    status = EXIT_FAIL if any(r["status"] == "fail" for r in rows) else EXIT_OK
    return {"shape": str(cfg.shape), "n": cfg.n, "legs": rows}, status


def _sums_text(rep: dict) -> str:
    lines = [f"shape {rep['shape']}  n={rep['n']}"]
    for r in rep["legs"]:
        extra = f"  ({r['reason']})" if r.get("reason") else ""
        terms = "-" if r["terms"] is None else r["terms"]
        lines.append(f"  {r['leg']:<9} {r['status']:<8} terms={terms}{extra}")
    return "\n".join(lines)


# --------------------------------------------------------------------------
# verify


def _fixture_failures(path: str) -> list[dict]:
    """Each fixture names a shape, n, and expected values of named invariants."""
    data = json.loads(Path(path).read_text())
    out = []
    for fx in data if isinstance(data, list) else [data]:
        d, n = SkewDiagram.parse(fx["shape"]), int(fx["n"])
        where = f"{d} n={n}"
        if "det" in fx and jt_det_h(d, n) != ZPoly.from_json(fx["det"]):
            out.append({"invariant": "fixture det", "where": where})
        if "tableaux" in fx:
            got = sum(1 for _ in enumerate_tab(d, n))
            if got != int(fx["tableaux"]):
                out.append({"invariant": "fixture tableau count", "where": where,
                            "expected": fx["tableaux"], "got": got})
    return out


def cmd_verify(args, cfg: RunConfig) -> tuple[dict, int]:
    names = args.suite or list(checks.SUITES)
    results = []
    pairs: list = []
    for name in checks.SUITES:
        if name not in names:
            continue
        fn = checks.SUITES[name]
        if name == "folding":
            results.append(fn(collect=pairs))
        elif name == "graphs":
            results.append(fn(pairs=pairs))
        elif name == "units":
            results.append(fn(seed=cfg.seed, samples=args.samples))
        else:
            results.append(fn())
    failures = [{"suite": r.name, "invariant": k, "count": v}
                for r in results for k, v in sorted(r.counts.items())]
    if args.fixture:
        failures += _fixture_failures(args.fixture)
    rep = {"seed": cfg.seed, "results": [r.as_dict() for r in results], "failures": failures}
    return rep, EXIT_FAIL if failures else EXIT_OK


# --------------------------------------------------------------------------
# rules


def cmd_check_rules(cfg: RunConfig) -> tuple[dict, int]:
    d, n = cfg.shape, cfg.n
    classes = rule_classes(d)
    total = agree = 0
    per_class = {name: 0 for name in classes}
    count_e = 0
    for T in enumerate_hv(d, n):
        total += 1
        e, e2 = extra_rule_paths(T), extra_rule_lu(T)
        count_e += e
        agree += e == e2
        for name, rules in classes.items():
            per_class[name] += all(f(T) for f in rules) == e2
    ok = agree == total and all(v == total for v in per_class.values())
    rep = {"shape": str(d), "n": n, "hv_tableaux": total, "satisfy_E": count_e,
           "E_vs_E_prime_agree": agree, "classes": per_class}
    return rep, EXIT_OK if ok else EXIT_FAIL


# --------------------------------------------------------------------------
# render


def cmd_render(args, cfg: RunConfig) -> bytes:
    from . import render

    d, n = cfg.shape, cfg.n
    tuples = list(enumerate_tuples(d, n, args.mode))
    if not tuples:
        raise UsageError("no tuples for this shape")
    if not 0 <= args.index < len(tuples):
        raise UsageError(f"index {args.index} out of range 0..{len(tuples) - 1}")
    t = tuples[args.index]
    if args.object == "tuple":
        if cfg.render == "svg":
            return render.svg_tuple(t, n)
        return render.ascii_tuple(t, n).encode()
    h = project_pi(t, n)
    marked = regions(h, args.k, args.klass) if h.l > 0 and args.k <= h.l else []
    if cfg.render == "svg":
        return render.svg_hpair(h, marked)
    head = f"{h}\n{len(marked)} {args.klass}_{args.k}-region(s)\n"
    return (head + render.ascii_hpair(h, marked)).encode()


# --------------------------------------------------------------------------
# report


def cmd_report(args) -> tuple[list[dict], int]:
    from .render import plot_report

    rows = []
    for text in args.shapes:
        d = SkewDiagram.parse(text)
        for n in args.ns:
            cfg = RunConfig("report", n, d, default_trunc(d), max_cells=args.max_cells,
                            max_n=args.max_n)
            cfg.guard()
            det = jt_det_h(d, n)
            row = {"shape": str(d), "n": n, "positivity": positivity(d, n), "det_terms": len(det)}
            for leg in ("signed", "first", "positive", "third", "tableau"):
                r = sum_leg(d, n, leg, det)
                row[f"{leg}_terms"] = r["terms"]
                row[f"{leg}_status"] = r["status"]
            rows.append(row)
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    tsv = out.with_suffix(".tsv")
    with tsv.open("w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=list(rows[0]), delimiter="\t")
        w.writeheader()
        w.writerows(rows)
    plot_report(rows, out.with_suffix("." + args.figure))
    bad = any(v == "fail" for r in rows for k, v in r.items() if k.endswith("_status"))
    return rows, EXIT_FAIL if bad else EXIT_OK


# --------------------------------------------------------------------------
# argument parsing


def _shape(text: str) -> SkewDiagram:
    try:
        return SkewDiagram.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=2, help="rank (default 2)")
    common.add_argument("--shape", type=_shape, default=SkewDiagram((1,)),
                        help='skew shape such as "3,2,1/1"')
    common.add_argument("--trunc", type=int, default=None,
                        help="series truncation degree (default lam_1 + lam'_1 + 2)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=("json", "text"), default=None,
                        help="output format (default json for det-h/det-e, text otherwise)")
    common.add_argument("--max-cells", type=int, default=9)
    common.add_argument("--max-n", type=int, default=4)
    common.add_argument("--out", default=None, help="write output to this file")

    p = argparse.ArgumentParser(prog="djtrudi", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("det-h", parents=[common], help="determinant with h entries")
    sub.add_parser("det-e", parents=[common], help="determinant with e entries")
    for name in LEGS:
        sub.add_parser(name, parents=[common], help="compare a sum with the determinant")
    v = sub.add_parser("verify", parents=[common], help="run the property suites")
    v.add_argument("--suite", action="append", choices=list(checks.SUITES))
    v.add_argument("--samples", type=int, default=500, help="random pairs per configuration")
    v.add_argument("--fixture", help="JSON file of expected values")
    sub.add_parser("check-rules", parents=[common], help="compare the extra rules on one shape")
    r = sub.add_parser("render", parents=[common], help="draw a tuple or a pair with regions")
    r.add_argument("--render", choices=("ascii", "svg"), default="ascii")
    r.add_argument("--object", choices=("tuple", "pair"), default="tuple")
    r.add_argument("--mode", choices=("all", "first", "hv"), default="first")
    r.add_argument("--index", type=int, default=0)
    r.add_argument("--k", type=int, default=1)
    r.add_argument("--klass", choices=("I", "II"), default="II")
    g = sub.add_parser("graphs-selftest", parents=[common], help="check the arc graph lemmas")
    g.add_argument("--max-vertices", type=int, default=10)
    rep = sub.add_parser("report", help="table and figure of all sums over several shapes")
    rep.add_argument("--shapes", nargs="+", default=["1", "2", "1,1", "2,1", "2,2", "3,1"])
    rep.add_argument("--ns", type=int, nargs="+", default=[2, 3])
    rep.add_argument("--out", default="report/sums")
    rep.add_argument("--figure", choices=("svg", "png", "pdf"), default="svg")
    rep.add_argument("--max-cells", type=int, default=9)
    rep.add_argument("--max-n", type=int, default=4)
    return p


def _emit(cfg: RunConfig, payload, text: str) -> None:
    data = json.dumps(payload, indent=2) if cfg.fmt == "json" else text
    if isinstance(data, str) and not data.endswith("\n"):
        data += "\n"
    if cfg.out:
        Path(cfg.out).write_text(data)
    else:
        sys.stdout.write(data)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "report":
            rows, status = cmd_report(args)
            for row in rows:
                print("\t".join(str(v) for v in row.values()))
            print(f"wrote {Path(args.out).with_suffix('.tsv')} and "
                  f"{Path(args.out).with_suffix('.' + args.figure)}")
            return status
        trunc = args.trunc if args.trunc is not None else default_trunc(args.shape)
        fmt = args.format or ("json" if args.command in ("det-h", "det-e") else "text")
        cfg = RunConfig(args.command, args.n, args.shape, trunc, args.seed, fmt,
                        getattr(args, "render", "ascii"), args.max_cells, args.max_n, args.out)
        if args.command != "verify":
            cfg.guard()
        if args.command in ("det-h", "det-e"):
            poly = (jt_det_h if args.command == "det-h" else jt_det_e)(cfg.shape, cfg.n)
            _emit(cfg, poly.to_json(), str(poly))
            return EXIT_OK
        if args.command in LEGS:
            rep, status = cmd_sums(cfg, LEGS[args.command])
            _emit(cfg, rep, _sums_text(rep))
            return status
        if args.command == "verify":
            rep, status = cmd_verify(args, cfg)
            lines = [f"{'PASS' if r['ok'] else 'FAIL'} {r['name']} "
                     f"({r['checked']} checked, {r['seconds']:.1f}s)" for r in rep["results"]]
            lines += [f"FAIL {f.get('suite', 'fixture')}: {f['invariant']} {f.get('where', '')}".rstrip()
                      for f in rep["failures"]]
            _emit(cfg, rep, "\n".join(lines))
            return status
        if args.command == "check-rules":
            rep, status = cmd_check_rules(cfg)
            _emit(cfg, rep, "\n".join(f"{k}: {v}" for k, v in rep.items()))
            return status
        if args.command == "render":
            data = cmd_render(args, cfg)
            if args.out:
                Path(args.out).write_bytes(data)
            else:
                sys.stdout.buffer.write(data)
                sys.stdout.flush()
            return EXIT_OK
        if args.command == "graphs-selftest":
            res = checks.arc_graphs(max_vertices=args.max_vertices)
            counts = {N: sum(1 for _ in all_graphs(N)) for N in range(args.max_vertices + 1)}
            rep = {"result": res.as_dict(), "graphs_per_size": counts}
            _emit(cfg, rep, res.summary())
            return EXIT_OK if res.ok else EXIT_FAIL
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    parser.error(f"unknown command {args.command}")
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
