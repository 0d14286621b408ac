"""Command-line entry point.

Exit codes: 0 all checks passed, 1 a mathematical check failed (the witness
is printed), 2 usage or input error.  Rationals are printed as ``"p/q"``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .core import Graph, Trigraph, from_graph_and_tis, is_valid, validate
from .counts import check_bigsum_identity, check_cauchy_schwarz, config_counts, f_total
from .cut import (
    BranchBudgetExceeded,
    derandomized_cut,
    distribution_mean,
    exact_expectation,
    exhaustive_distribution,
    random_cut,
)
from .extremal import (
    JoinSpec,
    check_local_conditions,
    clebsch,
    clebsch_trigraph,
    is_join_of_cbb,
    make_cjoin_trigraph,
    make_join,
    recognize_cjoin,
)
from .io import ParseError, graph_from_text, parse_trigraph_json, write_graph6, write_trigraph_json
from .oracles import alpha1, tau1, tau2, tau_b
from .sweeps import default_jobs, graph_csv, sweep_theorem, sweep_trigraph, trigraph_csv

CTAU_TARGET = Fraction(5, 3)


class UsageError(Exception):
    pass


def fmt(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return fmt(obj)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return [_jsonable(v) for v in sorted(obj)]
    if hasattr(obj, "__dataclass_fields__"):
        return {k: _jsonable(getattr(obj, k)) for k in obj.__dataclass_fields__}
    return obj


def _flat(prefix, obj, rows):
    if isinstance(obj, dict):
        for k, v in obj.items():
            _flat(f"{prefix}.{k}" if prefix else str(k), v, rows)
    else:
        rows.append((prefix, json.dumps(obj) if isinstance(obj, list) else obj))


def emit(payload: dict, fmt_name: str, out) -> None:
    payload = _jsonable(payload)
    if fmt_name == "csv":
        rows: list = []
        _flat("", payload, rows)
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["key", "value"])
        w.writerows(rows)
    else:
        out.write(json.dumps(payload) + "\n")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _looks_json(text: str) -> bool:
    return text.lstrip().startswith("{")


def load_trigraph_arg(path: str, want_valid: bool = True) -> Trigraph:
    """A trigraph file, or a graph file turned into ``(V, E - S, S)`` with S maximum."""
    text = _read(path)
    if _looks_json(text):
        t = parse_trigraph_json(text)
        if want_valid and not is_valid(t):
            raise UsageError(f"{path}: not a triangle-free trigraph: {validate(t)}")
        return t
    g = graph_from_text(text, path)
    return from_graph_and_tis(g, alpha1(g).witness)


def _partition_obj(p):
    return {"A": sorted(p.A), "B": sorted(p.B)}


# subcommands -------------------------------------------------------------------

def cmd_validate(args, out) -> int:
    t = parse_trigraph_json(_read(args.file))
    bad = validate(t)
    emit({"valid": not bad, "violations": [{"kind": v.kind, "vertices": list(v.vertices)} for v in bad]},
         args.format, out)
    return 1 if bad else 0


def cmd_counts(args, out) -> int:
    t = load_trigraph_arg(args.file)
    k = config_counts(t)
    naive = config_counts(t, method="naive") if t.n <= args.naive_max else None
    cs = check_cauchy_schwarz(t, k)
    big = check_bigsum_identity(t, k)
    ft = f_total(t)
    ok = cs.ok and big.equal and ft.ok and (naive is None or naive == k)
    emit({
        "n": t.n, "S": len(t.S), "C": len(t.C),
        "p4": k.p4, "c4": k.c4, "k13": k.k13, "d": k.d, "r": k.r,
        "naive_agrees": None if naive is None else naive == k,
        "cs_s_slack": cs.cs_s_slack, "cs_n_slack": cs.cs_n_slack,
        "bigsum": {"lhs": big.lhs, "rhs": big.rhs, "equal": big.equal},
        "f_total": {"f": ft.f, "bound": ft.bound, "ok": ft.ok},
        "ok": ok,
    }, args.format, out)
    return 0 if ok else 1


def cmd_cut(args, out) -> int:
    t = load_trigraph_arg(args.file)
    quarter = Fraction(t.n * t.n, 4)
    if args.mode == "random":
        res, trace = random_cut(t, args.seed)
        emit({"mode": "random", "seed": args.seed, "bar_e": res.bar_e, "bound": res.bound,
              "certified": res.certified, "partition": _partition_obj(res.partition),
              "trace": trace.to_obj()}, args.format, out)
        return 0
    if args.mode == "derandomized":
        res = derandomized_cut(t)
        emit({"mode": "derandomized", "bar_e": res.bar_e, "bound": res.bound,
              "certified": res.certified, "partition": _partition_obj(res.partition),
              "levels": [{"pair": list(lv.pair), "pair_sum": lv.pair_sum,
                          "residual_size": lv.residual_size, "flipped": lv.flipped}
                         for lv in res.levels]}, args.format, out)
        return 0 if res.certified else 1
    if args.mode == "exact-e":
        e = exact_expectation(t)
        ok = e + len(t.S) <= quarter
        emit({"expected_bar_e": e, "S": len(t.S), "bound": quarter, "ok": ok}, args.format, out)
        return 0 if ok else 1
    dist = exhaustive_distribution(t, budget=args.budget)
    mean = distribution_mean(dist)
    if args.plot_dir:
        from .report import plot_distribution

        plot_distribution(dist, Path(args.plot_dir) / "distribution.png",
                          bound=quarter - len(t.S))
    emit({"distribution": {str(k): v for k, v in dist.items()}, "mean": mean}, args.format, out)
    return 0


def cmd_oracle(args, out) -> int:
    g = graph_from_text(_read(args.file), args.file)
    if args.what == "alpha1":
        r = alpha1(g)
        emit({"what": "alpha1", "value": r.value, "witness": sorted(r.witness)}, args.format, out)
    elif args.what == "taub":
        r = tau_b(g)
        emit({"what": "taub", "value": r.value, "witness": _partition_obj(r.witness)},
             args.format, out)
    elif args.what == "tau1":
        r = tau1(g)
        emit({"what": "tau1", "value": r.value, "witness": sorted(r.witness)}, args.format, out)
    else:
        r = tau2(g)
        emit({"what": "tau2", "value": r.direct.value, "witness": sorted(r.direct.witness),
              "via_identity": r.via_identity, "agree": r.agree}, args.format, out)
        return 0 if r.agree else 1
    return 0


def cmd_sweep(args, out) -> int:
    jobs = args.jobs or default_jobs()
    if args.trigraphs:
        rep = sweep_trigraph(args.n, with_distribution=args.distribution, jobs=jobs)
        table = trigraph_csv(rep)
    else:
        rep = sweep_theorem(args.n, canonical=args.canonical, jobs=jobs, long_run=args.long_run)
        table = graph_csv(rep)
    summary = dict(rep.summary())
    if rep.violations:
        summary["witnesses"] = rep.violations
    if args.out_dir:
        d = Path(args.out_dir)
        d.mkdir(parents=True, exist_ok=True)
        (d / "sweep.csv").write_text(table)
        (d / "summary.json").write_text(json.dumps(_jsonable(summary)) + "\n")
        from .report import plot_slack_histogram

        plot_slack_histogram(rep, d / "slack.png")
    if args.format == "csv":
        out.write(table)
    else:
        emit(summary, "json", out)
    return 1 if rep.violations else 0


def cmd_scan_ctau(args, out) -> int:
    from .oracles import ctau_scan

    scan = ctau_scan(args.n)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "graph6", "E", "alpha1", "tau1", "tau2", "ratio"])
    for r in scan.table:
        w.writerow([r.n, r.graph6, r.E, r.alpha1, r.tau1, r.tau2, fmt(r.ratio)])
    finding = scan.min_ratio is not None and scan.min_ratio < CTAU_TARGET
    summary = {
        "n_max": args.n,
        "graphs": len(scan.table),
        "min_ratio": scan.min_ratio,
        "argmin": write_graph6(scan.argmin) if scan.argmin is not None else None,
        "below_5_3": finding,
    }
    if args.out_dir:
        d = Path(args.out_dir)
        d.mkdir(parents=True, exist_ok=True)
        (d / "ctau.csv").write_text(buf.getvalue())
        (d / "summary.json").write_text(json.dumps(_jsonable(summary)) + "\n")
        from .report import plot_ctau

        plot_ctau(scan, d / "ctau.png")
    if args.format == "csv":
        out.write(buf.getvalue())
    else:
        emit(summary, "json", out)
    return 1 if finding else 0


def cmd_gen(args, out) -> int:
    if args.join is not None:
        obj = make_join(JoinSpec.parse(args.join))
    elif args.cjoin is not None:
        obj = make_cjoin_trigraph(JoinSpec.parse(args.cjoin))
    else:
        obj = clebsch() if args.as_ == "graph" else clebsch_trigraph()
    if isinstance(obj, Graph) and args.as_ == "trigraph":
        obj = Trigraph(obj.n, frozenset(), obj.edges)
    text = write_graph6(obj) + "\n" if isinstance(obj, Graph) else write_trigraph_json(obj) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        out.write(text)
    return 0


def cmd_check_extremal(args, out) -> int:
    text = _read(args.file)
    if _looks_json(text):
        t = parse_trigraph_json(text)
        if not is_valid(t):
            raise UsageError(f"{args.file}: not a triangle-free trigraph")
        e = exact_expectation(t)
        slack = Fraction(t.n * t.n, 4) - e - len(t.S)
        spec = recognize_cjoin(t)
        local = check_local_conditions(t)
        consistent = (slack == 0) == (spec is not None) == local.all
        emit({"kind": "trigraph", "expected_bar_e": e, "slack": slack, "extremal": slack == 0,
              "cjoin": str(spec) if spec is not None else None,
              "local_conditions": {"cond1": local.cond1, "cond2": local.cond2,
                                   "cond3": local.cond3, "cond4": local.cond4,
                                   "all": local.all},
              "consistent": consistent}, args.format, out)
        return 0 if consistent else 1
    g = graph_from_text(text, args.file)
    a1 = alpha1(g).value
    tb = tau_b(g).value
    slack = Fraction(g.n * g.n, 4) - a1 - tb
    spec = is_join_of_cbb(g)
    consistent = slack >= 0 and (slack == 0) == (spec is not None)
    emit({"kind": "graph", "alpha1": a1, "tau_b": tb, "slack": slack, "extremal": slack == 0,
          "join": str(spec) if spec is not None else None, "consistent": consistent},
         args.format, out)
    return 0 if consistent else 1


# parser ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="alphatau", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--format", choices=("json", "csv"), default="json")
        sp.set_defaults(func=func)
        return sp

    sp = add("validate", cmd_validate, "report trigraph axiom violations")
    sp.add_argument("file")

    sp = add("counts", cmd_counts, "configuration sums and lemma checks")
    sp.add_argument("file")
    sp.add_argument("--naive-max", type=int, default=16,
                    help="cross-check with the literal V^4 sums up to this n")

    sp = add("cut", cmd_cut, "run or evaluate the cut procedure")
    sp.add_argument("file", nargs="?", default="-")
    sp.add_argument("--mode", choices=("random", "derandomized", "exact-e", "distribution"),
                    default="random")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--budget", type=int, default=2_000_000, help="branch budget for distribution")
    sp.add_argument("--plot-dir")

    sp = add("oracle", cmd_oracle, "brute-force alpha1 / tau_B / tau1 / tau2")
    sp.add_argument("file")
    sp.add_argument("--what", choices=("alpha1", "taub", "tau1", "tau2"), required=True)

    sp = add("sweep", cmd_sweep, "exhaustive verification sweep")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--trigraphs", action="store_true")
    sp.add_argument("--canonical", action="store_true")
    sp.add_argument("--distribution", action="store_true",
                    help="also compare the branching evaluator (trigraphs only)")
    sp.add_argument("--long-run", action="store_true", help="allow n=7")
    sp.add_argument("--jobs", type=int)
    sp.add_argument("--out-dir")

    sp = add("scan-ctau", cmd_scan_ctau, "scan tau2/tau1 over small graphs")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--out-dir")

    sp = add("gen", cmd_gen, "generate extremal examples")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--join")
    g.add_argument("--cjoin")
    g.add_argument("--clebsch", action="store_true")
    sp.add_argument("--as", dest="as_", choices=("graph", "trigraph"))
    sp.add_argument("--out")

    sp = add("check-extremal", cmd_check_extremal, "test membership in the extremal family")
    sp.add_argument("file")
    return p


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (UsageError, ParseError, ValueError, IndexError, BranchBudgetExceeded) as exc:
        err.write(f"alphatau {args.command}: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())
