"""Joins of complete balanced bipartite graphs, the Clebsch graph, and
recognisers for the extremal family."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from .core import Graph, Trigraph, canon_pair
from .counts import config_counts
from .oracles import alpha1, tau_b


@dataclass(frozen=True)
class JoinSpec:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(t) for t in self.parts)
        if any(t < 1 for t in parts):
            raise ValueError("join parts must be positive integers")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "JoinSpec":
        text = text.strip()
        if not text:
            return cls(())
        try:
            return cls(tuple(int(x) for x in text.split(",")))
        except ValueError:
            raise ValueError(f"bad join spec {text!r}; expected e.g. 2,1,1") from None

    @property
    def n(self) -> int:
        return 2 * sum(self.parts)

    def canonical(self) -> "JoinSpec":
        return JoinSpec(tuple(sorted(self.parts, reverse=True)))

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))


def _blocks(spec: JoinSpec):
    """Vertex ranges (left, right) of each factor, factors laid out in order."""
    out = []
    start = 0
    for t in spec.parts:
        out.append((range(start, start + t), range(start + t, start + 2 * t)))
        start += 2 * t
    return out


def _split_edges(spec: JoinSpec):
    inner, cross = set(), set()
    blocks = _blocks(spec)
    owner = {}
    for i, (left, right) in enumerate(blocks):
        for v in (*left, *right):
            owner[v] = i
        inner.update(canon_pair(a, b) for a in left for b in right)
    for u, v in combinations(range(spec.n), 2):
        if owner[u] != owner[v]:
            cross.add((u, v))
    return frozenset(inner), frozenset(cross)


def make_join(spec: JoinSpec) -> Graph:
    inner, cross = _split_edges(spec)
    return Graph(spec.n, inner | cross)


def make_cjoin_trigraph(spec: JoinSpec) -> Trigraph:
    inner, cross = _split_edges(spec)
    return Trigraph(spec.n, cross, inner)


def clebsch() -> Graph:
    """Folded 5-cube: 4-bit strings adjacent when they differ in 1 or 4 bits."""
    edges = frozenset(
        (u, v) for u, v in combinations(range(16), 2) if bin(u ^ v).count("1") in (1, 4)
    )
    return Graph(16, edges)


def clebsch_trigraph() -> Trigraph:
    """The Clebsch graph with every edge in S."""
    return Trigraph(16, frozenset(), clebsch().edges)


def _components(n: int, nbr) -> list[list[int]]:
    seen = [False] * n
    out = []
    for root in range(n):
        if seen[root]:
            continue
        comp, stack = [], [root]
        seen[root] = True
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in range(n):
                if nbr[x] >> y & 1 and not seen[y]:
                    seen[y] = True
                    stack.append(y)
        out.append(sorted(comp))
    return out


def is_join_of_cbb(g: Graph) -> JoinSpec | None:
    """Recover ``t_1 >= ... >= t_k`` with ``g`` isomorphic to the join, if any.

    The complement of such a join is a disjoint union of cliques whose sizes
    pair up; clique sizes are paired greedily after sorting.
    """
    comp = g.complement()
    sizes = []
    for part in _components(g.n, comp.nbr):
        k = len(part)
        if comp_edges_within(comp, part) != k * (k - 1) // 2:
            return None
        sizes.append(k)
    counts = Counter(sizes)
    if any(c % 2 for c in counts.values()):
        return None
    parts = []
    for size in sorted(counts, reverse=True):
        parts.extend([size] * (counts[size] // 2))
    return JoinSpec(tuple(parts))


def comp_edges_within(g: Graph, part) -> int:
    return sum(1 for u, v in combinations(part, 2) if g.adjacent(u, v))


def recognize_cjoin(t: Trigraph) -> JoinSpec | None:
    """Spec of ``t`` as a C-join of complete balanced bipartite trigraphs."""
    comps = _components(t.n, t.s_nbr)
    owner = {v: i for i, part in enumerate(comps) for v in part}
    parts = []
    for part in comps:
        if len(part) < 2:
            return None
        # 2-colour the S-component
        side = {part[0]: 0}
        stack = [part[0]]
        while stack:
            x = stack.pop()
            for y in part:
                if t.s_nbr[x] >> y & 1:
                    if y not in side:
                        side[y] = 1 - side[x]
                        stack.append(y)
                    elif side[y] == side[x]:
                        return None
        left = [v for v in part if side[v] == 0]
        right = [v for v in part if side[v] == 1]
        if len(left) != len(right):
            return None
        for u, v in combinations(part, 2):
            want_s = side[u] != side[v]
            if ((u, v) in t.S) != want_s or (u, v) in t.C:
                return None
        parts.append(len(left))
    for u, v in combinations(range(t.n), 2):
        if owner[u] != owner[v] and (u, v) not in t.C:
            return None
    return JoinSpec(tuple(sorted(parts, reverse=True)))


@dataclass(frozen=True)
class LocalConditions:
    cond1: bool
    cond2: bool
    cond3: bool
    cond4: bool

    @property
    def all(self) -> bool:
        return self.cond1 and self.cond2 and self.cond3 and self.cond4


def check_local_conditions(t: Trigraph) -> LocalConditions:
    """The four local conditions describing C-joins of balanced bicliques.

    1. ``n(uv) n(vw) (s(uw) + c(uw)) = 0`` for all triples
    2. ``n(uv) s(vw) c(uw) = 0`` for all triples
    3. ``C4 = K13``
    4. every vertex has an S-neighbour
    """
    s, c, nn = t.s_matrix, t.c_matrix, t.n_matrix
    cond1 = not np.any(nn[:, :, None] * nn[None, :, :] * (s + c)[:, None, :])
    cond2 = not np.any(nn[:, :, None] * s[None, :, :] * c[:, None, :])
    k = config_counts(t)
    cond3 = k.c4 == k.k13
    cond4 = bool(np.all(s.sum(axis=1) > 0))
    return LocalConditions(bool(cond1), bool(cond2), cond3, cond4)


@dataclass(frozen=True)
class TightnessConditions:
    equal_s_degrees: bool
    four_vertex_product: bool
    three_edge_product: bool

    @property
    def all(self) -> bool:
        return self.equal_s_degrees and self.four_vertex_product and self.three_edge_product


def check_tightness_conditions(t: Trigraph) -> TightnessConditions:
    """Necessary conditions for equality in the expectation bound.

    Equal S-degrees across every S-edge, and the vanishing of
    ``(n+c)(uv) s(vw) n(uw) s(ux) n(vx) (n+c)(xw)`` and
    ``s(uv) s(uw) n(wx) c(vx)`` on all quadruples.
    """
    s, c, nn = t.s_matrix, t.c_matrix, t.n_matrix
    nc = nn + c
    deg = s.sum(axis=1)
    eq_deg = all(deg[u] == deg[v] for u, v in t.S)
    # axes u, v, w, x
    prod2 = (
        nc[:, :, None, None]
        * s.T[None, :, :, None]
        * nn[:, None, :, None]
        * s[:, None, None, :]
        * nn[None, :, None, :]
        * nc.T[None, None, :, :]
    )
    prod3 = s[:, :, None, None] * s[:, None, :, None] * nn[None, None, :, :] * c[None, :, None, :]
    return TightnessConditions(bool(eq_deg), not np.any(prod2), not np.any(prod3))


@dataclass(frozen=True)
class JoinIdentities:
    alpha1: int
    edges: int
    tau_b: int
    alpha1_ok: bool
    edges_ok: bool
    taub_ok: bool
    equality_ok: bool

    @property
    def all(self) -> bool:
        return self.alpha1_ok and self.edges_ok and self.taub_ok and self.equality_ok


def verify_join_identities(spec: JoinSpec) -> JoinIdentities:
    g = make_join(spec)
    sq = sum(t * t for t in spec.parts)
    total = sum(spec.parts)
    a1 = alpha1(g).value
    tb = tau_b(g).value
    quarter = Fraction(spec.n ** 2, 4)
    return JoinIdentities(
        alpha1=a1,
        edges=g.m,
        tau_b=tb,
        alpha1_ok=a1 == sq,
        edges_ok=g.m == 2 * total * total - sq,
        taub_ok=tb == g.m - quarter,
        equality_ok=a1 + tb == quarter,
    )


def join_specs_up_to(max_vertices: int):
    """Every JoinSpec (as a non-increasing tuple) with at most ``max_vertices``."""

    def parts(remaining, cap):
        yield ()
        for t in range(min(cap, remaining), 0, -1):
            for rest in parts(remaining - t, t):
                yield (t,) + rest

    for p in parts(max_vertices // 2, max_vertices // 2):
        yield JoinSpec(p)
