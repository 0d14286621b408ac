"""Exhaustive verification sweeps over small graphs and trigraphs."""

from __future__ import annotations

import csv
import io
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .core import Graph, Trigraph, from_graph_and_tis
from .counts import check_bigsum_identity, check_cauchy_schwarz, config_counts, f_total
from .cut import derandomized_cut, exact_expectation, exhaustive_distribution, distribution_mean
from .enumeration import GRAPH_MAX_N, all_graphs, all_trigraphs, graph_from_code
from .extremal import check_local_conditions, is_join_of_cbb, recognize_cjoin
from .io import trigraph_code, write_graph6
from .oracles import alpha1, tau2, tau_b

JOBS_ENV = "ALPHATAU_JOBS"
DEFAULT_MAX_SWEEP_N = 6


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get(JOBS_ENV, "1")))
    except ValueError:
        return 1


@dataclass(frozen=True)
class SweepRecord:
    id: str
    n: int
    alpha1: int
    tau_b: int
    slack: Fraction
    extremal: bool
    join: str | None = None  # recognised join spec, if any


@dataclass(frozen=True)
class TrigraphRecord:
    id: str
    n: int
    s: int
    expected: Fraction
    slack: Fraction
    extremal: bool
    join: str | None = None


@dataclass
class SweepReport:
    records: list = field(default_factory=list)
    violations: list = field(default_factory=list)

    @property
    def graphs_checked(self) -> int:
        return len(self.records)

    @property
    def equality_cases(self) -> int:
        return sum(r.extremal for r in self.records)

    def merge(self, other: "SweepReport") -> "SweepReport":
        return SweepReport(self.records + other.records, self.violations + other.violations)

    def summary(self) -> dict:
        return {
            "graphs_checked": self.graphs_checked,
            "equality_cases": self.equality_cases,
            "violations": len(self.violations),
        }


# graph sweep ------------------------------------------------------------------

def check_graph(g: Graph) -> tuple[SweepRecord, list]:
    a1 = alpha1(g).value
    tb = tau_b(g).value
    slack = Fraction(g.n * g.n, 4) - a1 - tb
    spec = is_join_of_cbb(g)
    gid = write_graph6(g)
    rec = SweepRecord(gid, g.n, a1, tb, slack, slack == 0, str(spec) if spec else None)
    bad = []
    if slack < 0:
        bad.append({"kind": "inequality", "graph6": gid, "alpha1": a1, "tau_b": tb})
    if slack == 0 and spec is None:
        bad.append({"kind": "equality-not-join", "graph6": gid})
    if slack != 0 and spec is not None:
        bad.append({"kind": "join-not-tight", "graph6": gid, "join": str(spec)})
    return rec, bad


def _graph_range(n: int, start: int, stop: int) -> SweepReport:
    rep = SweepReport()
    for code in range(start, stop):
        rec, bad = check_graph(graph_from_code(n, code))
        rep.records.append(rec)
        rep.violations.extend(bad)
    return rep


def _graph_list(graphs: list) -> SweepReport:
    rep = SweepReport()
    for g in graphs:
        rec, bad = check_graph(g)
        rep.records.append(rec)
        rep.violations.extend(bad)
    return rep


def _run_chunks(fn, chunks, jobs: int) -> SweepReport:
    if jobs <= 1 or len(chunks) <= 1:
        parts = [fn(*c) for c in chunks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(fn, *zip(*chunks)))
    out = SweepReport()
    for p in parts:
        out = out.merge(p)
    return out


def sweep_theorem(n: int, canonical: bool = False, jobs: int | None = None,
                  long_run: bool = False) -> SweepReport:
    """alpha_1 + tau_B <= n^2/4 on every graph with ``n`` vertices.

    Tight cases must be recognised as joins of balanced bicliques, and
    recognised joins must be tight.
    """
    if n > GRAPH_MAX_N:
        raise ValueError(f"sweep_theorem supports n <= {GRAPH_MAX_N}")
    if n > DEFAULT_MAX_SWEEP_N and not long_run:
        raise ValueError(f"n={n} is a long run; pass long_run=True")
    jobs = jobs or default_jobs()
    if canonical:
        return _graph_list(list(all_graphs(n, canonical_only=True)))
    total = 1 << (n * (n - 1) // 2)
    step = max(1, -(-total // (jobs * 4)))
    chunks = [(n, s, min(s + step, total)) for s in range(0, total, step)]
    return _run_chunks(_graph_range, chunks, jobs)


def graph_csv(report: SweepReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["graph6", "n", "alpha1", "tau_b", "slack_times_4", "extremal"])
    for r in report.records:
        w.writerow([r.id, r.n, r.alpha1, r.tau_b, int(r.slack * 4), int(r.extremal)])
    return buf.getvalue()


# trigraph sweep -----------------------------------------------------------------

def check_trigraph(t: Trigraph, with_distribution: bool = False) -> tuple[TrigraphRecord, list]:
    tid = trigraph_code(t)
    bad = []
    k = config_counts(t)
    cs = check_cauchy_schwarz(t, k)
    if not cs.ok:
        bad.append({"kind": "cauchy-schwarz", "id": tid,
                    "cs_s_slack": cs.cs_s_slack, "cs_n_slack": cs.cs_n_slack})
    big = check_bigsum_identity(t, k)
    if not big.equal:
        bad.append({"kind": "bigsum", "id": tid, "lhs": big.lhs, "rhs": big.rhs})
    ft = f_total(t)
    if not ft.ok:
        bad.append({"kind": "f-bound", "id": tid, "f": ft.f, "bound": ft.bound})
    expected = exact_expectation(t)
    s = len(t.S)
    if s * (expected + s) > ft.f / 4:
        bad.append({"kind": "chain", "id": tid, "expected": expected, "f": ft.f})
    slack = Fraction(t.n * t.n, 4) - expected - s
    if slack < 0:
        bad.append({"kind": "expectation-bound", "id": tid, "expected": expected})
    spec = None
    if slack == 0:
        spec = recognize_cjoin(t)
        if spec is None or not check_local_conditions(t).all:
            bad.append({"kind": "equality-not-cjoin", "id": tid})
    if with_distribution:
        mean = distribution_mean(exhaustive_distribution(t))
        if mean != expected:
            bad.append({"kind": "evaluator-mismatch", "id": tid,
                        "distribution_mean": mean, "expected": expected})
    rec = TrigraphRecord(tid, t.n, s, expected, slack, slack == 0, str(spec) if spec else None)
    return rec, bad


def _trigraph_list(trigraphs: list, with_distribution: bool) -> SweepReport:
    rep = SweepReport()
    for t in trigraphs:
        rec, bad = check_trigraph(t, with_distribution)
        rep.records.append(rec)
        rep.violations.extend(bad)
    return rep


def sweep_trigraph(n: int, with_distribution: bool = False, jobs: int | None = None) -> SweepReport:
    """Expectation bound, both lemmas and the F-bound on every trigraph."""
    jobs = jobs or default_jobs()
    ts = list(all_trigraphs(n))
    step = max(1, -(-len(ts) // (jobs * 4)))
    chunks = [(ts[i:i + step], with_distribution) for i in range(0, len(ts), step)]
    if not chunks:
        return SweepReport()
    return _run_chunks(_trigraph_list, chunks, jobs)


def trigraph_csv(report: SweepReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["id", "n", "S", "expected_bar_e", "slack_times_4", "extremal"])
    for r in report.records:
        w.writerow([r.id, r.n, r.s, fmt_fraction(r.expected), fmt_fraction(r.slack * 4),
                    int(r.extremal)])
    return buf.getvalue()


# further corpus checks -------------------------------------------------------------

def check_lemmas(trigraphs: Iterable[Trigraph]) -> tuple[int, list]:
    """Both Cauchy-Schwarz inequalities, the big-sum identity and the F-bound."""
    checked = 0
    bad = []
    for t in trigraphs:
        checked += 1
        k = config_counts(t, method="naive")
        cs = check_cauchy_schwarz(t, k)
        big = check_bigsum_identity(t, k)
        ft = f_total(t)
        if not (cs.ok and big.equal and ft.ok):
            bad.append({"id": trigraph_code(t), "cs": cs, "bigsum": big, "f_total": ft})
    return checked, bad


def check_derandomized(g: Graph) -> list:
    """Run the deterministic cut on ``(V, E - S, S)`` for a maximum S."""
    S = alpha1(g).witness
    t = from_graph_and_tis(g, S)
    res = derandomized_cut(t)
    bad = []
    if not res.certified:
        bad.append({"kind": "not-certified", "graph6": write_graph6(g), "bar_e": res.bar_e})
    for lvl in res.levels:
        if 2 * lvl.pair_sum > lvl.residual_size ** 2:
            bad.append({"kind": "pair-sum", "graph6": write_graph6(g), "level": lvl})
    return bad


def sweep_derandomized(n: int) -> tuple[int, list]:
    checked, bad = 0, []
    for g in all_graphs(n):
        checked += 1
        bad.extend(check_derandomized(g))
    return checked, bad


def sweep_tau2(n: int) -> tuple[int, list]:
    checked, bad = 0, []
    for g in all_graphs(n):
        checked += 1
        r = tau2(g)
        if not r.agree:
            bad.append({"graph6": write_graph6(g), "direct": r.direct.value,
                        "via_identity": r.via_identity})
    return checked, bad


def fmt_fraction(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"

