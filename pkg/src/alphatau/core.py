"""Graphs, triangle-free trigraphs and partitions.

Vertices are dense integer ids ``0..n-1`` and every edge is stored as a
canonical pair ``(u, v)`` with ``u < v``.  A trigraph carries two disjoint
edge relations: ``C`` (plain edges) and ``S`` (edges of a triangle-independent
set).  All quantities are exact integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping, Sequence

import numpy as np

MAX_VERTICES = 64

A, B = 0, 1
SIDE_NAMES = ("A", "B")


class NotTriangleIndependent(ValueError):
    """Raised when a triangle of the graph contains two edges of S."""

    def __init__(self, triangle):
        self.triangle = tuple(triangle)
        super().__init__(f"triangle {self.triangle} contains two edges of S")


class EdgeNotInGraph(ValueError):
    def __init__(self, edge):
        self.edge = tuple(edge)
        super().__init__(f"edge {self.edge} is not an edge of the graph")


def _check_vertex(n: int, v: int) -> None:
    if not 0 <= v < n:
        raise IndexError(f"vertex {v} out of range for n={n}")


def canon_pair(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u <= v else (v, u)


def _edge_set(n: int, edges: Iterable[Sequence[int]], allow_loops: bool) -> frozenset:
    out = set()
    for e in edges:
        u, v = (int(x) for x in e)
        _check_vertex(n, u)
        _check_vertex(n, v)
        if u == v and not allow_loops:
            raise ValueError(f"self-loop at vertex {u}")
        out.add(canon_pair(u, v))
    return frozenset(out)


def _check_size(n: int) -> None:
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    if n > MAX_VERTICES:
        raise ValueError(f"n={n} exceeds the supported maximum {MAX_VERTICES}")


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``."""

    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        _check_size(self.n)
        object.__setattr__(self, "edges", _edge_set(self.n, self.edges, allow_loops=False))

    @cached_property
    def nbr(self) -> tuple[int, ...]:
        """Neighbourhoods as bitmasks."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def sorted_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.nbr[u] >> v & 1)

    @cached_property
    def triangles(self) -> tuple[tuple[int, int, int], ...]:
        """All triangles ``(a, b, c)`` with ``a < b < c``."""
        out = []
        nbr = self.nbr
        for a, b in self.sorted_edges:
            common = nbr[a] & nbr[b] & ~((1 << (b + 1)) - 1)
            while common:
                low = common & -common
                out.append((a, b, low.bit_length() - 1))
                common ^= low
        return tuple(sorted(out))

    def complement(self) -> "Graph":
        return Graph(self.n, frozenset(combinations(range(self.n), 2)) - self.edges)

    def add_edge(self, u: int, v: int) -> "Graph":
        return Graph(self.n, self.edges | {canon_pair(u, v)})

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph(self.n, frozenset(canon_pair(perm[u], perm[v]) for u, v in self.edges))


@dataclass(frozen=True)
class Trigraph:
    """A triple ``(V, C, S)``.

    Construction normalises pair orientation but does not enforce the
    trigraph axioms; call :func:`validate` (or use :func:`make_trigraph`)
    when the input is untrusted.
    """

    n: int
    C: frozenset = field(default_factory=frozenset)
    S: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        _check_size(self.n)
        object.__setattr__(self, "C", _edge_set(self.n, self.C, allow_loops=True))
        object.__setattr__(self, "S", _edge_set(self.n, self.S, allow_loops=True))

    @cached_property
    def s_nbr(self) -> tuple[int, ...]:
        return _masks(self.n, self.S)

    @cached_property
    def c_nbr(self) -> tuple[int, ...]:
        return _masks(self.n, self.C)

    @cached_property
    def nbr(self) -> tuple[int, ...]:
        return tuple(c | s for c, s in zip(self.c_nbr, self.s_nbr))

    @cached_property
    def s_matrix(self) -> np.ndarray:
        return _matrix(self.n, self.S)

    @cached_property
    def c_matrix(self) -> np.ndarray:
        return _matrix(self.n, self.C)

    @cached_property
    def n_matrix(self) -> np.ndarray:
        """Characteristic function of non-edges; the diagonal is 1."""
        return 1 - self.s_matrix - self.c_matrix

    @cached_property
    def s_pairs(self) -> tuple[tuple[int, int], ...]:
        """Ordered S-pairs ``(u, v)`` in lexicographic order."""
        return tuple(sorted(self.S | {(v, u) for u, v in self.S}))

    def s_degree(self, v: int) -> int:
        return popcount(self.s_nbr[v])

    @property
    def num_edges(self) -> int:
        return len(self.C) + len(self.S)

    def graph(self) -> Graph:
        """The underlying graph with edge set ``C | S``."""
        return Graph(self.n, self.C | self.S)

    def relabel(self, perm: Sequence[int]) -> "Trigraph":
        def move(edges):
            return frozenset(canon_pair(perm[u], perm[v]) for u, v in edges)

        return Trigraph(self.n, move(self.C), move(self.S))


def _masks(n, edges):
    masks = [0] * n
    for u, v in edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return tuple(masks)


def _matrix(n, edges):
    m = np.zeros((n, n), dtype=np.int64)
    for u, v in edges:
        m[u, v] = m[v, u] = 1
    return m


def popcount(x: int) -> int:
    return bin(x).count("1")


@dataclass(frozen=True)
class Violation:
    kind: str  # overlap | triangle | loop | asymmetry
    vertices: tuple[int, ...]


def validate(t) -> list[Violation]:
    """Every violated trigraph axiom of a candidate triple.

    ``t`` is either a :class:`Trigraph` or a pair ``(c_matrix, s_matrix)`` of
    square 0/1 arrays; only the matrix form can be asymmetric.
    """
    if isinstance(t, Trigraph):
        cm, sm = t.c_matrix.copy(), t.s_matrix.copy()
        for u, v in t.C:
            if u == v:
                cm[u, u] = 1
        for u, v in t.S:
            if u == v:
                sm[u, u] = 1
    else:
        cm, sm = (np.asarray(x, dtype=np.int64) for x in t)
        if cm.shape != sm.shape or cm.ndim != 2 or cm.shape[0] != cm.shape[1]:
            raise ValueError("C and S must be square matrices of the same shape")
    n = cm.shape[0]
    out: list[Violation] = []
    for v in range(n):
        if cm[v, v] or sm[v, v]:
            out.append(Violation("loop", (v,)))
    for u, v in combinations(range(n), 2):
        if cm[u, v] != cm[v, u] or sm[u, v] != sm[v, u]:
            out.append(Violation("asymmetry", (u, v)))
    cs = (cm | cm.T) & ~np.eye(n, dtype=bool)
    ss = (sm | sm.T) & ~np.eye(n, dtype=bool)
    for u, v in combinations(range(n), 2):
        if cs[u, v] and ss[u, v]:
            out.append(Violation("overlap", (u, v)))
    seen = set()
    edge = cs | ss
    for u in range(n):
        snb = np.flatnonzero(ss[u])
        for v, w in combinations(snb, 2):
            if edge[v, w]:
                tri = tuple(sorted((u, int(v), int(w))))
                if tri not in seen:
                    seen.add(tri)
                    out.append(Violation("triangle", tri))
    return out


def is_valid(t: Trigraph) -> bool:
    """Fast validity test on a Trigraph (no loops, disjoint, triangle-free)."""
    if t.C & t.S:
        return False
    if any(u == v for u, v in t.C | t.S):
        return False
    nbr, s_nbr = t.nbr, t.s_nbr
    for u in range(t.n):
        m = s_nbr[u]
        while m:
            low = m & -m
            v = low.bit_length() - 1
            if nbr[v] & (m ^ low):
                return False
            m ^= low
    return True


def make_trigraph(n: int, C=(), S=()) -> Trigraph:
    """Build a trigraph and reject it if any axiom is violated."""
    t = Trigraph(n, frozenset(C), frozenset(S))
    bad = validate(t)
    if bad:
        raise ValueError(f"not a triangle-free trigraph: {bad}")
    return t


def from_graph_and_tis(g: Graph, S: Iterable[Sequence[int]]) -> Trigraph:
    """The trigraph ``(V(g), E(g) - S, S)``."""
    s_set = _edge_set(g.n, S, allow_loops=False)
    for e in sorted(s_set):
        if e not in g.edges:
            raise EdgeNotInGraph(e)
    for tri in g.triangles:
        a, b, c = tri
        if ((a, b) in s_set) + ((a, c) in s_set) + ((b, c) in s_set) >= 2:
            raise NotTriangleIndependent(tri)
    return Trigraph(g.n, g.edges - s_set, s_set)


def edge_label(t: Trigraph, u: int, v: int) -> str:
    """``'C'``, ``'S'`` or ``'N'``; the diagonal is always ``'N'``."""
    _check_vertex(t.n, u)
    _check_vertex(t.n, v)
    if u == v:
        return "N"
    p = canon_pair(u, v)
    if p in t.S:
        return "S"
    if p in t.C:
        return "C"
    return "N"


@dataclass(frozen=True)
class Partition:
    """Total side assignment; ``sides[v]`` is 0 for A and 1 for B."""

    sides: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "sides", tuple(int(s) for s in self.sides))
        if any(s not in (A, B) for s in self.sides):
            raise ValueError("sides must be 0 (A) or 1 (B)")

    @classmethod
    def from_sets(cls, n: int, part_a: Iterable[int], part_b: Iterable[int]) -> "Partition":
        sides: list = [None] * n
        for v in part_a:
            sides[v] = A
        for v in part_b:
            if sides[v] is not None:
                raise ValueError(f"vertex {v} assigned to both sides")
            sides[v] = B
        missing = [v for v, s in enumerate(sides) if s is None]
        if missing:
            raise ValueError(f"partial partition: vertices {missing} unassigned")
        return cls(tuple(sides))

    @property
    def A(self) -> frozenset:
        return frozenset(v for v, s in enumerate(self.sides) if s == A)

    @property
    def B(self) -> frozenset:
        return frozenset(v for v, s in enumerate(self.sides) if s == B)

    def swapped(self) -> "Partition":
        return Partition(tuple(1 - s for s in self.sides))


@dataclass(frozen=True)
class CutCounts:
    bar_e: int
    e_cross: int
    s_cross: int
    s_inside_A: int
    s_inside_B: int


def _sides_of(n: int, p) -> tuple:
    sides = p.sides if isinstance(p, Partition) else tuple(p)
    if len(sides) != n or any(s not in (A, B) for s in sides):
        raise ValueError("partial partition: every vertex must be assigned to A or B")
    return sides


def bar_e(g, p) -> int:
    """Number of edges (of a Graph, or C|S of a Trigraph) inside a side."""
    edges = g.edges if isinstance(g, Graph) else g.C | g.S
    sides = _sides_of(g.n, p)
    return sum(sides[u] == sides[v] for u, v in edges)


def cut_counts(t: Trigraph, p) -> CutCounts:
    sides = _sides_of(t.n, p)
    inside = sum(sides[u] == sides[v] for u, v in t.C)
    s_in = [0, 0]
    s_cross = 0
    for u, v in t.S:
        if sides[u] == sides[v]:
            s_in[sides[u]] += 1
        else:
            s_cross += 1
    inside += s_in[0] + s_in[1]
    return CutCounts(
        bar_e=inside,
        e_cross=t.num_edges - inside,
        s_cross=s_cross,
        s_inside_A=s_in[0],
        s_inside_B=s_in[1],
    )


def induced(t: Trigraph, Z: Iterable[int]) -> Trigraph:
    """Induced subtrigraph on ``Z``, relabelled by ascending original id."""
    zs = sorted(set(Z))
    for v in zs:
        _check_vertex(t.n, v)
    pos = {v: i for i, v in enumerate(zs)}

    def keep(edges):
        return frozenset((pos[u], pos[v]) for u, v in edges if u in pos and v in pos)

    return Trigraph(len(zs), keep(t.C), keep(t.S))


def induced_mask(t: Trigraph, mask: int) -> Trigraph:
    return induced(t, (v for v in range(t.n) if mask >> v & 1))


def complete_bipartite_edges(left: Sequence[int], right: Sequence[int]) -> frozenset:
    return frozenset(canon_pair(a, b) for a in left for b in right)


def as_side_map(p: Partition) -> Mapping[int, str]:
    return {v: SIDE_NAMES[s] for v, s in enumerate(p.sides)}
