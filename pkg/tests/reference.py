"""Slow, literal reference computations used as independent test oracles."""

from fractions import Fraction
from itertools import combinations, product


def s_(t, a, b):
    return int(a != b and (min(a, b), max(a, b)) in t.S)


def c_(t, a, b):
    return int(a != b and (min(a, b), max(a, b)) in t.C)


def n_(t, a, b):
    return 1 - s_(t, a, b) - c_(t, a, b)


def config_sums(t):
    V = range(t.n)
    p4 = c4 = k13 = d = r = 0
    for u, v, w, x in product(V, repeat=4):
        s, c, n = (lambda a, b: s_(t, a, b)), (lambda a, b: c_(t, a, b)), (lambda a, b: n_(t, a, b))
        p4 += s(u, v) * s(v, w) * s(w, x) * (n(x, u) + c(x, u))
        c4 += s(u, v) * s(v, w) * s(w, x) * s(x, u)
        k13 += s(u, v) * s(u, w) * s(u, x)
        d += (n(u, v) + c(u, v)) * s(u, w) * s(u, x) * n(v, w) * n(v, x)
        r += s(u, v) * s(u, w) * n(w, x) * c(v, x)
    return p4, c4, k13, d, r


def f_literal(t, u, v, w, x):
    s = lambda a, b: s_(t, a, b)  # noqa: E731
    c = lambda a, b: c_(t, a, b)  # noqa: E731
    return s(u, v) * (
        (3 * s(w, x) + c(w, x)) * (s(u, w) + s(v, w)) * (1 - s(u, x) - s(v, x))
        + Fraction(1, 2) * (1 - s(u, w) - s(v, w)) * (1 - s(u, x) - s(v, x))
        + 2 * s(w, x) * s(u, w) * s(v, x)
    )


def bigsum_lhs(t):
    s = lambda a, b: s_(t, a, b)  # noqa: E731
    c = lambda a, b: c_(t, a, b)  # noqa: E731
    total = Fraction(0)
    for u, v, w, x in product(range(t.n), repeat=4):
        total += s(u, v) * c(w, x) * (s(u, w) + s(v, w)) * (1 - s(u, x) - s(v, x))
        total += Fraction(1, 2) * s(u, v) * (1 - s(u, w) - s(v, w)) * (1 - s(u, x) - s(v, x))
    return total


def nbr_s(t, v):
    return {w for w in range(t.n) if s_(t, v, w)}


def outcomes(t):
    """Every run of the cut procedure as (probability, sides) by literal simulation."""
    results = []

    def rec(A, B, prob):
        free = [v for v in range(t.n) if v not in A and v not in B]
        pairs = [(u, v) for u in free for v in free if s_(t, u, v)]
        if pairs:
            for u, v in pairs:
                A2 = A | (nbr_s(t, u) - B)
                B2 = B | (nbr_s(t, v) - A2)
                rec(A2, B2, prob / len(pairs))
            return
        for bits in product((0, 1), repeat=len(free)):
            A2 = A | {v for v, b in zip(free, bits) if b == 0}
            B2 = B | {v for v, b in zip(free, bits) if b == 1}
            results.append((prob / 2 ** len(free), A2, B2))

    rec(frozenset(), frozenset(), Fraction(1))
    return results


def inside_edges(t, A, B):
    return sum((u in A) == (v in A) for u, v in t.C | t.S)


def law(t):
    dist = {}
    for p, A, B in outcomes(t):
        k = inside_edges(t, A, B)
        dist[k] = dist.get(k, 0) + p
    return dict(sorted(dist.items()))


def tau_b_all(g):
    best = None
    for bits in product((0, 1), repeat=g.n):
        val = sum(bits[u] == bits[v] for u, v in g.edges)
        best = val if best is None else min(best, val)
    return best or 0


def subsets(edges):
    edges = sorted(edges)
    for k in range(len(edges) + 1):
        yield from combinations(edges, k)


def triangles(g):
    return [
        (a, b, c)
        for a, b, c in combinations(range(g.n), 3)
        if {(a, b), (a, c), (b, c)} <= g.edges
    ]


def alpha1_brute(g):
    tris = triangles(g)
    best = 0
    for T in subsets(g.edges):
        T = set(T)
        if all(len({(a, b), (a, c), (b, c)} & T) <= 1 for a, b, c in tris):
            best = max(best, len(T))
    return best


def cover_brute(g, demand):
    tris = triangles(g)
    for T in subsets(g.edges):
        T = set(T)
        if all(len({(a, b), (a, c), (b, c)} & T) >= demand for a, b, c in tris):
            return len(T)
