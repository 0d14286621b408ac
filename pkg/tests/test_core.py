from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from alphatau.core import (
    EdgeNotInGraph,
    Graph,
    NotTriangleIndependent,
    Partition,
    Trigraph,
    Violation,
    cut_counts,
    edge_label,
    from_graph_and_tis,
    induced,
    is_valid,
    make_trigraph,
    validate,
)
from conftest import complete, cycle
from strategies import graphs, trigraphs


def test_validate_examples():
    assert validate(Trigraph(3, (), {(0, 1), (1, 2)})) == []
    assert validate(Trigraph(3, {(1, 2)}, {(0, 1), (0, 2)})) == [Violation("triangle", (0, 1, 2))]
    assert validate(Trigraph(2, {(0, 1)}, {(0, 1)})) == [Violation("overlap", (0, 1))]


def test_validate_loops_and_asymmetry():
    assert Violation("loop", (1,)) in validate(Trigraph(2, (), {(1, 1)}))
    c = np.zeros((3, 3), dtype=int)
    s = np.zeros((3, 3), dtype=int)
    s[0, 1] = 1
    assert validate((c, s)) == [Violation("asymmetry", (0, 1))]
    s[1, 0] = 1
    assert validate((c, s)) == []


def test_make_trigraph_rejects_invalid():
    with pytest.raises(ValueError):
        make_trigraph(3, {(1, 2)}, {(0, 1), (0, 2)})


def test_from_graph_and_tis_examples():
    k3 = complete(3)
    t = from_graph_and_tis(k3, {(0, 1)})
    assert t.C == {(0, 2), (1, 2)} and t.S == {(0, 1)}
    with pytest.raises(NotTriangleIndependent) as exc:
        from_graph_and_tis(k3, {(0, 1), (0, 2)})
    assert exc.value.triangle == (0, 1, 2)
    c5 = cycle(5)
    t = from_graph_and_tis(c5, c5.edges)
    assert t.C == frozenset() and t.S == c5.edges
    with pytest.raises(EdgeNotInGraph):
        from_graph_and_tis(c5, {(0, 2)})


def test_edge_label_examples(path3):
    assert edge_label(path3, 0, 1) == "S"
    assert edge_label(path3, 0, 2) == "N"
    assert edge_label(path3, 1, 1) == "N"
    with pytest.raises(IndexError):
        edge_label(path3, 0, 3)


def test_cut_counts_examples(path3, k3_plain, k4_matching):
    c = cut_counts(path3, Partition.from_sets(3, {1}, {0, 2}))
    assert (c.bar_e, c.e_cross) == (0, 2)
    assert cut_counts(k3_plain, Partition.from_sets(3, {0}, {1, 2})).bar_e == 1
    assert cut_counts(k4_matching, Partition.from_sets(4, {1, 3}, {0, 2})).bar_e == 2


def test_cut_counts_partial_partition(path3):
    with pytest.raises(ValueError):
        cut_counts(path3, (0, 1))
    with pytest.raises(ValueError):
        Partition.from_sets(3, {0}, {1})


def test_induced_examples(path3, k4_matching):
    sub = induced(path3, {0, 2})
    assert (sub.n, sub.C, sub.S) == (2, frozenset(), frozenset())
    assert induced(k4_matching, {0, 1}).S == {(0, 1)}
    assert induced(k4_matching, set()).n == 0
    with pytest.raises(IndexError):
        induced(path3, {5})


@settings(max_examples=150, deadline=None)
@given(trigraphs(), st.data())
def test_induced_is_hereditary(t, data):
    assert validate(t) == []
    z = data.draw(st.sets(st.integers(0, max(t.n - 1, 0)), max_size=t.n)) if t.n else set()
    assert validate(induced(t, z)) == []


@settings(max_examples=150, deadline=None)
@given(trigraphs(), st.data())
def test_cut_counts_conservation(t, data):
    sides = data.draw(st.lists(st.integers(0, 1), min_size=t.n, max_size=t.n))
    c = cut_counts(t, Partition(tuple(sides)))
    assert c.bar_e + c.e_cross == len(t.C) + len(t.S)
    assert c.s_cross + c.s_inside_A + c.s_inside_B == len(t.S)


@settings(max_examples=100, deadline=None)
@given(trigraphs())
def test_edge_label_symmetric(t):
    for u, v in combinations(range(t.n), 2):
        assert edge_label(t, u, v) == edge_label(t, v, u)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=6), st.data())
def test_from_graph_and_tis_iff_independent(g, data):
    edges = sorted(g.edges)
    S = set(data.draw(st.lists(st.sampled_from(edges), unique=True))) if edges else set()
    bad = any(
        len({(a, b), (a, c), (b, c)} & S) >= 2
        for a, b, c in combinations(range(g.n), 3)
        if {(a, b), (a, c), (b, c)} <= g.edges
    )
    if bad:
        with pytest.raises(NotTriangleIndependent):
            from_graph_and_tis(g, S)
    else:
        t = from_graph_and_tis(g, S)
        assert validate(t) == [] and is_valid(t)


@settings(max_examples=200, deadline=None)
@given(trigraphs())
def test_is_valid_matches_validate(t):
    assert is_valid(t) == (validate(t) == [])


def test_graph_rejects_loops_and_range():
    with pytest.raises(ValueError):
        Graph(2, {(1, 1)})
    with pytest.raises(IndexError):
        Graph(2, {(0, 2)})
    with pytest.raises(ValueError):
        Graph(65)


def test_triangles_of_k4():
    assert complete(4).triangles == ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3))
