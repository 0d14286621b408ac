from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import reference as ref
from alphatau.core import Trigraph, bar_e, cut_counts
from alphatau.counts import f_pair_sum, f_total
from alphatau.cut import (
    BranchBudgetExceeded,
    RunTrace,
    conditional_expectation,
    derandomized_cut,
    distribution_mean,
    exact_expectation,
    exhaustive_distribution,
    random_cut,
)
from alphatau.enumeration import all_trigraphs, random_trigraphs
from alphatau.extremal import clebsch_trigraph
from alphatau.io import parse_trigraph_code
from strategies import trigraphs


@pytest.mark.parametrize("name,value", [("path3", 0), ("c5_all_s", 1), ("k4_matching", 2)])
def test_random_cut_examples(name, value, request):
    t = request.getfixturevalue(name)
    assert ref.law(t) == {value: 1}
    for seed in range(30):
        res, trace = random_cut(t, seed)
        assert res.bar_e == value
    if name == "k4_matching":
        assert res.certified and res.bar_e + len(t.S) == Fraction(16, 4)


def test_random_cut_reproducible_and_replayable(c5_all_s):
    t = Trigraph(6, {(0, 5), (2, 5)}, {(0, 1), (1, 2), (2, 3), (3, 4)})
    for seed in range(20):
        a, ta = random_cut(t, seed)
        b, tb = random_cut(t, seed)
        assert a == b and ta == tb
        assert ta.replay(t.n) == a.partition
        assert RunTrace.from_obj(ta.to_obj()) == ta
        assert bar_e(t, a.partition) == a.bar_e == cut_counts(t, a.partition).bar_e


def test_random_cut_outcomes_are_reachable():
    t = Trigraph(5, {(0, 4)}, {(0, 1), (1, 2), (2, 3)})
    support = set(ref.law(t))
    seen = {random_cut(t, s)[0].bar_e for s in range(200)}
    assert seen <= support


def test_random_cut_frequency_matches_law():
    t = Trigraph(4, {(0, 2)}, {(0, 1)})
    law = ref.law(t)
    runs = 4000
    hits = sum(random_cut(t, s)[0].bar_e == 0 for s in range(runs))
    assert abs(hits / runs - float(law.get(0, 0))) < 0.04


def test_derandomized_examples(k4_matching, k3_plain):
    r = derandomized_cut(k4_matching)
    assert r.bar_e == 2 and r.certified and r.bar_e == r.bound
    r = derandomized_cut(k3_plain)
    assert r.bar_e == 1 and r.certified and r.bound == Fraction(9, 4)
    r = derandomized_cut(Trigraph(0))
    assert r.bar_e == 0 and r.certified


@settings(max_examples=200, deadline=None)
@given(trigraphs(max_n=9))
def test_derandomized_always_certified(t):
    r = derandomized_cut(t)
    assert r.certified
    assert bar_e(t, r.partition) == r.bar_e
    for lvl in r.levels:
        assert 2 * lvl.pair_sum <= lvl.residual_size ** 2


def test_exact_expectation_examples(path3, c5_all_s, k3_plain):
    assert exact_expectation(path3) == 0
    assert exact_expectation(c5_all_s) == 1
    assert exact_expectation(k3_plain) == Fraction(3, 2)
    assert exact_expectation(Trigraph(0)) == 0


def test_exact_expectation_size_guard():
    with pytest.raises(ValueError):
        exact_expectation(Trigraph(25))


def test_distribution_examples(path3):
    assert exhaustive_distribution(path3) == {0: 1}
    assert exhaustive_distribution(Trigraph(2, {(0, 1)}, ())) == {0: Fraction(1, 2), 1: Fraction(1, 2)}
    assert exhaustive_distribution(clebsch_trigraph()) == {12: 1}


def test_distribution_budget(c5_all_s):
    with pytest.raises(BranchBudgetExceeded) as exc:
        exhaustive_distribution(c5_all_s, budget=2)
    assert exc.value.explored > exc.value.budget


@pytest.mark.parametrize("n", range(5))
def test_distribution_matches_literal_simulation(n):
    for t in all_trigraphs(n):
        law = ref.law(t)
        assert exhaustive_distribution(t) == law
        assert distribution_mean(law) == exact_expectation(t)


def test_evaluators_agree_on_random_corpus():
    for t in random_trigraphs(seed=3, count=60, max_n=6):
        d = exhaustive_distribution(t)
        assert sum(d.values()) == 1
        assert distribution_mean(d) == exact_expectation(t)


@settings(max_examples=120, deadline=None)
@given(trigraphs(max_n=7))
def test_local_bound_and_chain(t):
    quarter = Fraction(t.n * t.n, 4)
    e = exact_expectation(t)
    s = len(t.S)
    assert e + s <= quarter
    for u, v in t.s_pairs:
        assert conditional_expectation(t, u, v) + s <= f_pair_sum(t, u, v) / 2
    assert s * (e + s) <= f_total(t).f / 4
    if t.S:
        avg = sum(conditional_expectation(t, u, v) for u, v in t.s_pairs) / len(t.s_pairs)
        assert avg == e


def test_conditional_expectation_rejects_non_edge(path3):
    with pytest.raises(ValueError):
        conditional_expectation(path3, 0, 2)


@settings(max_examples=50, deadline=None)
@given(trigraphs(max_n=7), st.integers(0, 2**63 - 1))
def test_trace_replay_property(t, seed):
    res, trace = random_cut(t, seed)
    assert trace.replay(t.n) == res.partition
    assert RunTrace.from_obj(trace.to_obj()) == trace


def test_derandomized_orientation_flip_needed():
    # keeping the first block on side A leaves this trigraph uncertified
    t = parse_trigraph_code("7:NCSSSNSCNNSSNNNNNSCSC")
    res = derandomized_cut(t)
    assert res.certified
    assert any(level.flipped for level in res.levels)
