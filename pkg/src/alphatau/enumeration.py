"""Exhaustive generation of small graphs and trigraphs, and canonical forms."""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product
from typing import Iterator

import numpy as np

from .core import Graph, Trigraph, canon_pair
from .io import pair_order

GRAPH_MAX_N = 7
TRIGRAPH_MAX_N = 5


def _pairs(n):
    return list(pair_order(n))


def graph_code(g: Graph) -> int:
    """Upper-triangle bit string as an int; the first pair is the top bit."""
    code = 0
    for p in pair_order(g.n):
        code = code << 1 | (p in g.edges)
    return code


def graph_from_code(n: int, code: int) -> Graph:
    pairs = _pairs(n)
    m = len(pairs)
    return Graph(n, frozenset(p for i, p in enumerate(pairs) if code >> (m - 1 - i) & 1))


def _refined_cells(g: Graph) -> list[list[int]]:
    """Ordered colour classes of 1-dimensional colour refinement."""
    nbrs = [[v for v in range(g.n) if g.adjacent(u, v)] for u in range(g.n)]
    colour = [0] * g.n
    while True:
        sig = [(colour[v], tuple(sorted(colour[w] for w in nbrs[v]))) for v in range(g.n)]
        ranks = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [ranks[s] for s in sig]
        if len(set(new)) == len(set(colour)):
            colour = new
            break
        colour = new
    cells: dict[int, list[int]] = {}
    for v in range(g.n):
        cells.setdefault(colour[v], []).append(v)
    return [cells[c] for c in sorted(cells)]


def canonical_code(g: Graph) -> int:
    """Minimal code over relabellings that respect the refined colour order.

    Colour refinement is isomorphism-invariant, so two graphs get the same
    code exactly when they are isomorphic.
    """
    n = g.n
    if n == 0:
        return 0
    cells = _refined_cells(g)
    pairs = _pairs(n)
    m = len(pairs)
    adj = [[g.adjacent(u, v) for v in range(n)] for u in range(n)]
    best = None
    for choice in product(*(permutations(c) for c in cells)):
        order = [v for block in choice for v in block]  # order[i] = old vertex at position i
        code = 0
        for i, j in pairs:
            code = code << 1 | adj[order[i]][order[j]]
        if best is None or code < best:
            best = code
    return best if m else 0


def canonical_form(g: Graph) -> Graph:
    return graph_from_code(g.n, canonical_code(g))


@lru_cache(maxsize=None)
def _classes(n: int) -> tuple[int, ...]:
    if n <= 1:
        return (0,)
    found = set()
    for code in _classes(n - 1):
        h = graph_from_code(n - 1, code)
        for nb in range(1 << (n - 1)):
            edges = set(h.edges)
            edges.update((v, n - 1) for v in range(n - 1) if nb >> v & 1)
            found.add(canonical_code(Graph(n, frozenset(edges))))
    return tuple(sorted(found))


def all_graphs(n: int, canonical_only: bool = False) -> Iterator[Graph]:
    """All labelled graphs on ``n`` vertices, or one per isomorphism class.

    Representatives are the graphs whose own code is canonical, emitted in
    increasing code order.
    """
    if n < 0 or n > GRAPH_MAX_N:
        raise ValueError(f"all_graphs supports 0 <= n <= {GRAPH_MAX_N}")
    if canonical_only:
        for code in _classes(n):
            yield graph_from_code(n, code)
        return
    pairs = _pairs(n)
    m = len(pairs)
    for code in range(1 << m):
        yield Graph(n, frozenset(p for i, p in enumerate(pairs) if code >> (m - 1 - i) & 1))


def _valid_labels(n: int, labels) -> bool:
    s_nbr = [0] * n
    nbr = [0] * n
    for (u, v), lab in zip(pair_order(n), labels):
        if lab:
            nbr[u] |= 1 << v
            nbr[v] |= 1 << u
            if lab == 2:
                s_nbr[u] |= 1 << v
                s_nbr[v] |= 1 << u
    for u in range(n):
        m = s_nbr[u]
        while m:
            low = m & -m
            if nbr[low.bit_length() - 1] & (m ^ low):
                return False
            m ^= low
    return True


def all_trigraphs(n: int) -> Iterator[Trigraph]:
    """Every triangle-free trigraph on ``n`` labelled vertices.

    Each pair takes one of N, C, S (in that order, first pair most
    significant); invalid assignments are skipped.
    """
    if n < 0 or n > TRIGRAPH_MAX_N:
        raise ValueError(f"all_trigraphs supports 0 <= n <= {TRIGRAPH_MAX_N}")
    pairs = _pairs(n)
    for labels in product(range(3), repeat=len(pairs)):
        if _valid_labels(n, labels):
            C = frozenset(p for p, lab in zip(pairs, labels) if lab == 1)
            S = frozenset(p for p, lab in zip(pairs, labels) if lab == 2)
            yield Trigraph(n, C, S)


def random_trigraph(rng: np.random.Generator, n: int, p_s: float = 0.4, p_c: float = 0.3) -> Trigraph:
    """Random valid trigraph built pair by pair in random order.

    A proposed C or S label that would break the triangle-free condition is
    downgraded to a non-edge.
    """
    pairs = _pairs(n)
    order = rng.permutation(len(pairs))
    s_nbr = [0] * n
    nbr = [0] * n
    C, S = set(), set()
    for k in order:
        u, v = pairs[k]
        r = rng.random()
        lab = 2 if r < p_s else 1 if r < p_s + p_c else 0
        if not lab or s_nbr[u] & s_nbr[v]:
            continue
        if lab == 2 and (nbr[v] & s_nbr[u] or nbr[u] & s_nbr[v]):
            continue
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
        if lab == 2:
            s_nbr[u] |= 1 << v
            s_nbr[v] |= 1 << u
            S.add(canon_pair(u, v))
        else:
            C.add(canon_pair(u, v))
    return Trigraph(n, frozenset(C), frozenset(S))


def random_trigraphs(seed: int, count: int, max_n: int = 8) -> Iterator[Trigraph]:
    rng = np.random.Generator(np.random.PCG64(seed))
    for _ in range(count):
        n = int(rng.integers(0, max_n + 1))
        p_s = float(rng.uniform(0.1, 0.9))
        p_c = float(rng.uniform(0.0, 1.0 - p_s))
        yield random_trigraph(rng, n, p_s, p_c)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.m == h.m and canonical_code(g) == canonical_code(h)
