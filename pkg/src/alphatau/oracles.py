"""Brute-force ground truth for alpha_1, tau_B, tau_1 and tau_2.

Each oracle returns an :class:`OracleResult` whose witness can be
re-checked with the ``verify_*`` helpers in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

import numpy as np

from .core import Graph, Partition, bar_e, popcount

ALPHA1_MAX_N = 12
TAUB_MAX_N = 24
TAU1_MAX_N = 10
TAU2_MAX_N = 12
CTAU_MAX_N = 7


class OracleLimitError(ValueError):
    pass


@dataclass(frozen=True)
class OracleResult:
    value: int
    witness: Any  # frozenset of edges, or a Partition for tau_B


def _limit(g: Graph, cap: int, name: str) -> None:
    if g.n > cap:
        raise OracleLimitError(f"{name} oracle limited to n <= {cap}, got n={g.n}")


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# alpha_1 -------------------------------------------------------------------

def _conflicts(g: Graph, edges):
    """Bitmask per edge index of the edges sharing a triangle with it."""
    idx = {e: i for i, e in enumerate(edges)}
    conf = [0] * len(edges)
    for a, b, c in g.triangles:
        tri = (idx[(a, b)], idx[(a, c)], idx[(b, c)])
        for i in tri:
            for j in tri:
                if i != j:
                    conf[i] |= 1 << j
    return conf


def alpha1(g: Graph) -> OracleResult:
    """Largest triangle-independent edge set.

    Searched as a maximum clique of the compatibility graph (edges that share
    no triangle), with greedy colouring as the pruning bound.  Edges are
    ordered by number of incident triangles, most first.
    """
    _limit(g, ALPHA1_MAX_N, "alpha1")
    base = g.sorted_edges
    tri_count = {e: 0 for e in base}
    for a, b, c in g.triangles:
        for e in ((a, b), (a, c), (b, c)):
            tri_count[e] += 1
    edges = sorted(base, key=lambda e: (-tri_count[e], e))
    m = len(edges)
    conf = _conflicts(g, edges)
    full = (1 << m) - 1
    compat = [full & ~conf[i] & ~(1 << i) for i in range(m)]

    best = [0, 0]  # size, mask

    def colour_bound(cand: int):
        # greedy colouring of the candidate set: returns vertices with colour numbers
        order = []
        colour = 0
        rest = cand
        while rest:
            colour += 1
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= ~(1 << v) & ~compat[v]
                rest &= ~(1 << v)
                order.append((v, colour))
        return order

    def expand(chosen: int, size: int, cand: int):
        for v, colour in reversed(colour_bound(cand)):
            if size + colour <= best[0]:
                return
            nxt = chosen | (1 << v)
            sub = cand & compat[v]
            if sub:
                expand(nxt, size + 1, sub)
            elif size + 1 > best[0]:
                best[0], best[1] = size + 1, nxt
            cand &= ~(1 << v)

    if m:
        expand(0, 0, full)
    witness = frozenset(edges[i] for i in _bits(best[1]))
    return OracleResult(best[0], witness)


# tau_B ----------------------------------------------------------------------

def tau_b(g: Graph) -> OracleResult:
    """Minimum number of inside edges over all bipartitions.

    Vertex 0 is pinned to side A; the witness is the optimal partition with
    the smallest side-B bitmask.
    """
    _limit(g, TAUB_MAX_N, "tau_B")
    if g.n <= 1 or not g.edges:
        return OracleResult(0, Partition((0,) * g.n))
    total = 1 << (g.n - 1)
    chunk = 1 << 18
    best_val, best_mask = None, None
    us = np.array([u for u, _ in g.sorted_edges], dtype=np.int64)
    vs = np.array([v for _, v in g.sorted_edges], dtype=np.int64)
    for start in range(0, total, chunk):
        masks = (np.arange(start, min(start + chunk, total), dtype=np.int64) << 1)
        inside = np.zeros(masks.shape, dtype=np.int64)
        for u, v in zip(us, vs):
            inside += ((masks >> u) ^ (masks >> v)) & 1 ^ 1
        k = int(np.argmin(inside))
        if best_val is None or inside[k] < best_val:
            best_val, best_mask = int(inside[k]), int(masks[k])
    sides = tuple(best_mask >> v & 1 for v in range(g.n))
    return OracleResult(best_val, Partition(sides))


def max_cut(g: Graph) -> int:
    return g.m - tau_b(g).value


# triangle covers --------------------------------------------------------------

def _min_cover(g: Graph, demand: int):
    """Smallest edge set meeting every triangle in at least ``demand`` edges."""
    edges = g.sorted_edges
    idx = {e: i for i, e in enumerate(edges)}
    tris = [
        (1 << idx[(a, b)]) | (1 << idx[(a, c)]) | (1 << idx[(b, c)])
        for a, b, c in g.triangles
    ]
    best = [len(edges) + 1, 0]

    def lower_bound(chosen, excluded):
        lb = 0
        used = 0
        for tm in tris:
            need = demand - popcount(tm & chosen)
            if need > 0 and not tm & used:
                lb += need
                used |= tm
        return lb

    def search(chosen: int, excluded: int, size: int):
        pick = None
        pick_key = None
        for tm in tris:
            need = demand - popcount(tm & chosen)
            if need <= 0:
                continue
            avail = tm & ~chosen & ~excluded
            slack = popcount(avail) - need
            if slack < 0:
                return
            key = (slack, -need)
            if pick_key is None or key < pick_key:
                pick, pick_key = avail, key
        if pick is None:
            if size < best[0]:
                best[0], best[1] = size, chosen
            return
        if size + lower_bound(chosen, excluded) >= best[0]:
            return
        e = (pick & -pick)
        search(chosen | e, excluded, size + 1)
        search(chosen, excluded | e, size)

    search(0, 0, 0)
    return best[0], frozenset(edges[i] for i in _bits(best[1]))


def tau1(g: Graph) -> OracleResult:
    _limit(g, TAU1_MAX_N, "tau1")
    return OracleResult(*_min_cover(g, 1))


@dataclass(frozen=True)
class Tau2Result:
    direct: OracleResult
    via_identity: int

    @property
    def agree(self) -> bool:
        return self.direct.value == self.via_identity


def tau2(g: Graph) -> Tau2Result:
    """Direct search for tau_2, compared with ``|E| - alpha_1``."""
    _limit(g, TAU2_MAX_N, "tau2")
    direct = OracleResult(*_min_cover(g, 2))
    return Tau2Result(direct, g.m - alpha1(g).value)


# witness checks ---------------------------------------------------------------

def is_triangle_independent(g: Graph, T) -> bool:
    T = set(T)
    if not T <= g.edges:
        return False
    return all(((a, b) in T) + ((a, c) in T) + ((b, c) in T) <= 1 for a, b, c in g.triangles)


def is_bipartite(g: Graph) -> bool:
    colour = [-1] * g.n
    for root in range(g.n):
        if colour[root] >= 0:
            continue
        colour[root] = 0
        stack = [root]
        while stack:
            x = stack.pop()
            for y in _bits(g.nbr[x]):
                if colour[y] < 0:
                    colour[y] = 1 - colour[x]
                    stack.append(y)
                elif colour[y] == colour[x]:
                    return False
    return True


def covers_triangles(g: Graph, F, demand: int) -> bool:
    F = set(F)
    if not F <= g.edges:
        return False
    return all(((a, b) in F) + ((a, c) in F) + ((b, c) in F) >= demand for a, b, c in g.triangles)


def verify_alpha1(g: Graph, res: OracleResult) -> bool:
    return len(res.witness) == res.value and is_triangle_independent(g, res.witness)


def verify_tau_b(g: Graph, res: OracleResult) -> bool:
    p = res.witness
    if bar_e(g, p) != res.value:
        return False
    inside = {(u, v) for u, v in g.edges if p.sides[u] == p.sides[v]}
    return is_bipartite(Graph(g.n, g.edges - inside))


def verify_cover(g: Graph, res: OracleResult, demand: int) -> bool:
    return len(res.witness) == res.value and covers_triangles(g, res.witness, demand)


# c_tau scan -------------------------------------------------------------------

@dataclass(frozen=True)
class CtauRow:
    n: int
    graph6: str
    E: int
    alpha1: int
    tau1: int
    tau2: int

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.tau2, self.tau1)


@dataclass(frozen=True)
class CtauScan:
    min_ratio: Fraction | None
    argmin: Graph | None
    table: tuple[CtauRow, ...]


def ctau_scan(n_max: int) -> CtauScan:
    """tau_2 / tau_1 over one representative per isomorphism class, n <= n_max."""
    from .enumeration import all_graphs
    from .io import write_graph6

    if n_max > CTAU_MAX_N:
        raise OracleLimitError(f"ctau_scan limited to n_max <= {CTAU_MAX_N}")
    rows = []
    best, arg = None, None
    for n in range(n_max + 1):
        for g in all_graphs(n, canonical_only=True):
            if not g.triangles:
                continue
            t1 = tau1(g).value
            a1 = alpha1(g).value
            row = CtauRow(n, write_graph6(g), g.m, a1, t1, g.m - a1)
            rows.append(row)
            if best is None or row.ratio < best:
                best, arg = row.ratio, g
    return CtauScan(best, arg, tuple(rows))
