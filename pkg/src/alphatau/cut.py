"""The recursive cut-generating procedure on triangle-free trigraphs.

One step picks an ordered S-pair ``(u, v)`` with both ends unassigned, puts
the unassigned S-neighbours of ``u`` on side A and those of ``v`` on side B,
and recurses on what is left.  When no S-edge remains, leftover vertices are
placed independently and uniformly.

Besides the sampler (:func:`random_cut`) this module provides a
deterministic variant with a certified bound and two exact evaluators of the
expected number of inside edges, one using the half-probability argument for
edges leaving an assigned block and one that branches over every outcome.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .core import A, B, Partition, Trigraph, bar_e, induced_mask, popcount
from .counts import pair_sums_twice

EXACT_MAX_N = 24
DEFAULT_BRANCH_BUDGET = 2_000_000


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _pairs_in(t: Trigraph, z: int) -> list[tuple[int, int]]:
    """Ordered S-pairs with both ends in the vertex mask ``z``."""
    s_nbr = t.s_nbr
    out = []
    for u in _bits(z):
        for v in _bits(s_nbr[u] & z):
            out.append((u, v))
    return out


def _edges_between(t: Trigraph, x: int, y: int) -> int:
    nbr = t.nbr
    return sum(popcount(nbr[v] & y) for v in _bits(x))


def _edges_inside(t: Trigraph, z: int) -> int:
    return _edges_between(t, z, z) // 2


def bound(t: Trigraph) -> Fraction:
    """``n^2/4 - |S|``."""
    return Fraction(t.n * t.n, 4) - len(t.S)


@dataclass(frozen=True)
class Step:
    pair: tuple[int, int]
    added_A: tuple[int, ...]
    added_B: tuple[int, ...]


@dataclass(frozen=True)
class RunTrace:
    steps: tuple[Step, ...]
    tail: tuple[tuple[int, int], ...]

    def replay(self, n: int) -> Partition:
        sides: list = [None] * n
        for st in self.steps:
            for v in st.added_A:
                sides[v] = A
            for v in st.added_B:
                sides[v] = B
        for v, side in self.tail:
            sides[v] = side
        return Partition(tuple(sides))

    def to_obj(self) -> dict:
        return {
            "steps": [
                {"pair": list(st.pair), "A": list(st.added_A), "B": list(st.added_B)}
                for st in self.steps
            ],
            "tail": [[v, "AB"[side]] for v, side in self.tail],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_obj())

    @classmethod
    def from_obj(cls, obj: dict) -> "RunTrace":
        steps = tuple(
            Step(tuple(s["pair"]), tuple(s["A"]), tuple(s["B"])) for s in obj["steps"]
        )
        tail = tuple((v, "AB".index(side)) for v, side in obj["tail"])
        return cls(steps, tail)


@dataclass(frozen=True)
class Level:
    """One step of the deterministic procedure."""

    pair: tuple[int, int]
    pair_sum: Fraction  # g(u, v) on the residual trigraph
    residual_size: int
    flipped: bool


@dataclass(frozen=True)
class CutResult:
    partition: Partition
    bar_e: int
    bound: Fraction
    levels: tuple[Level, ...] = field(default=(), compare=False)

    @property
    def certified(self) -> bool:
        return self.bar_e <= self.bound


def _result(t: Trigraph, sides, levels=()) -> CutResult:
    p = Partition(tuple(sides))
    return CutResult(p, bar_e(t, p), bound(t), tuple(levels))


def random_cut(t: Trigraph, seed: int = 0) -> tuple[CutResult, RunTrace]:
    """One run of the randomized procedure.

    Randomness comes from numpy's PCG64 generator seeded with ``seed``; the
    candidate ordered pairs are listed lexicographically and one is drawn
    with ``integers(len)``.  Leftover vertices are visited in ascending order
    and each gets ``integers(2)`` (0 = A, 1 = B).
    """
    rng = np.random.Generator(np.random.PCG64(seed))
    full = (1 << t.n) - 1
    in_a = in_b = 0
    steps = []
    while True:
        z = full & ~(in_a | in_b)
        pairs = _pairs_in(t, z)
        if not pairs:
            break
        u, v = pairs[int(rng.integers(len(pairs)))]
        new_a = t.s_nbr[u] & ~in_b & ~in_a
        in_a |= new_a
        new_b = t.s_nbr[v] & ~in_a & ~in_b
        in_b |= new_b
        steps.append(Step((u, v), tuple(_bits(new_a)), tuple(_bits(new_b))))
    tail = []
    for v in _bits(full & ~(in_a | in_b)):
        tail.append((v, int(rng.integers(2))))
    trace = RunTrace(tuple(steps), tuple(tail))
    return _result(t, trace.replay(t.n).sides), trace


def derandomized_cut(t: Trigraph) -> CutResult:
    """Deterministic cut with ``bar_e <= n^2/4 - |S|``.

    Each level takes the ordered S-pair of the residual trigraph with the
    smallest pair sum ``g`` (ties: lexicographically smallest), then orients
    the new block so that at most half of its edges to already placed
    vertices land inside a side.  S-free leftovers are placed greedily in
    ascending order on the side with fewer placed neighbours (ties: A).
    """
    full = (1 << t.n) - 1
    sides: list = [None] * t.n
    in_a = in_b = 0
    levels = []
    nbr = t.nbr
    while True:
        z = full & ~(in_a | in_b)
        if not _pairs_in(t, z):
            break
        zs = list(_bits(z))
        sub = induced_mask(t, z)
        g2 = pair_sums_twice(sub)
        best = min(sub.s_pairs, key=lambda p: (int(g2[p]), p))
        u, v = zs[best[0]], zs[best[1]]
        blk_a = t.s_nbr[u] & z
        blk_b = t.s_nbr[v] & z
        keep = _edges_between(t, blk_a, in_a) + _edges_between(t, blk_b, in_b)
        flip = _edges_between(t, blk_a, in_b) + _edges_between(t, blk_b, in_a)
        flipped = flip < keep
        if flipped:
            blk_a, blk_b = blk_b, blk_a
        in_a |= blk_a
        in_b |= blk_b
        levels.append(Level((u, v), Fraction(int(g2[best]), 2), len(zs), flipped))
    for v in _bits(full & ~(in_a | in_b)):
        if popcount(nbr[v] & in_b) < popcount(nbr[v] & in_a):
            in_b |= 1 << v
        else:
            in_a |= 1 << v
    for v in range(t.n):
        sides[v] = B if in_b >> v & 1 else A
    return _result(t, sides, levels)


def _check_exact_size(t: Trigraph) -> None:
    if t.n > EXACT_MAX_N:
        raise ValueError(f"exact evaluation refuses n={t.n} > {EXACT_MAX_N}")


def _expectation_fn(t: Trigraph):
    s_nbr = t.s_nbr

    @lru_cache(maxsize=None)
    def expect(z: int) -> Fraction:
        pairs = _pairs_in(t, z)
        if not pairs:
            return Fraction(_edges_inside(t, z), 2)
        total = Fraction(0)
        for u, v in pairs:
            total += _branch(z, u, v)
        return total / len(pairs)

    def _branch(z: int, u: int, v: int) -> Fraction:
        block = (s_nbr[u] | s_nbr[v]) & z
        rest = z & ~block
        return Fraction(_edges_between(t, block, rest), 2) + expect(rest)

    return expect, _branch


def exact_expectation(t: Trigraph) -> Fraction:
    """Exact expected number of inside edges, memoised on the unassigned set."""
    _check_exact_size(t)
    expect, _ = _expectation_fn(t)
    return expect((1 << t.n) - 1)


def conditional_expectation(t: Trigraph, u: int, v: int) -> Fraction:
    """Expected inside edges given that ``(u, v)`` is picked first."""
    _check_exact_size(t)
    if (min(u, v), max(u, v)) not in t.S:
        raise ValueError(f"({u}, {v}) is not an S-edge")
    _, branch = _expectation_fn(t)
    return branch((1 << t.n) - 1, u, v)


class BranchBudgetExceeded(RuntimeError):
    def __init__(self, explored: int, budget: int):
        self.explored = explored
        self.budget = budget
        super().__init__(f"branch budget {budget} exceeded after {explored} states")


def exhaustive_distribution(t: Trigraph, budget: int = DEFAULT_BRANCH_BUDGET) -> dict:
    """Exact law of ``bar_e`` over every random choice, tracking real sides.

    Returns ``{value: probability}`` with Fraction probabilities summing to 1.
    The state is the pair of assigned masks; identical states are shared.
    """
    _check_exact_size(t)
    full = (1 << t.n) - 1
    s_nbr, nbr = t.s_nbr, t.nbr
    memo: dict = {}
    explored = 0

    def inside_added(new_a, old_a, new_b, old_b):
        # new vertices of one side are pairwise non-adjacent only inside a block
        cnt = 0
        for x in _bits(new_a):
            cnt += popcount(nbr[x] & old_a) + popcount(nbr[x] & new_a & ((1 << x) - 1))
        for x in _bits(new_b):
            cnt += popcount(nbr[x] & old_b) + popcount(nbr[x] & new_b & ((1 << x) - 1))
        return cnt

    def dist(in_a: int, in_b: int) -> Counter:
        nonlocal explored
        key = (in_a, in_b)
        hit = memo.get(key)
        if hit is not None:
            return hit
        explored += 1
        if explored > budget:
            raise BranchBudgetExceeded(explored, budget)
        z = full & ~(in_a | in_b)
        out: Counter = Counter()
        if z == 0:
            out[0] = Fraction(1)
        else:
            pairs = _pairs_in(t, z)
            if pairs:
                w = Fraction(1, len(pairs))
                branches = []
                for u, v in pairs:
                    new_a = s_nbr[u] & z
                    new_b = s_nbr[v] & z & ~new_a
                    branches.append((new_a, new_b))
            else:
                low = z & -z
                w = Fraction(1, 2)
                branches = [(low, 0), (0, low)]
            for new_a, new_b in branches:
                add = inside_added(new_a, in_a, new_b, in_b)
                for val, p in dist(in_a | new_a, in_b | new_b).items():
                    out[val + add] += p * w
        memo[key] = out
        return out

    return dict(sorted(dist(0, 0).items()))


def distribution_mean(dist: dict) -> Fraction:
    return sum((Fraction(k) * p for k, p in dist.items()), Fraction(0))
