from itertools import combinations, permutations

import pytest

from alphatau.core import Graph, Trigraph
from alphatau.cut import exact_expectation
from alphatau.enumeration import all_trigraphs, is_isomorphic
from alphatau.extremal import (
    JoinSpec,
    check_local_conditions,
    check_tightness_conditions,
    clebsch,
    clebsch_trigraph,
    is_join_of_cbb,
    join_specs_up_to,
    make_cjoin_trigraph,
    make_join,
    recognize_cjoin,
    verify_join_identities,
)
from alphatau.oracles import tau_b
from conftest import complete, cycle


def test_make_join_small():
    assert is_isomorphic(make_join(JoinSpec((1, 1))), complete(4))
    assert is_isomorphic(make_join(JoinSpec((2,))), cycle(4))
    g = make_join(JoinSpec((2, 1)))
    assert g.n == 6 and g.m == 13


def test_cjoin_counts():
    t = make_cjoin_trigraph(JoinSpec((1, 1, 1)))
    assert len(t.S) == 3 and len(t.C) == 12
    assert recognize_cjoin(t) == JoinSpec((1, 1, 1))


def test_joinspec_parse():
    assert JoinSpec.parse("2,1,1").parts == (2, 1, 1)
    assert str(JoinSpec.parse("1, 3")) == "1,3"
    assert JoinSpec.parse("1,3").canonical().parts == (3, 1)
    with pytest.raises(ValueError):
        JoinSpec.parse("a,b")
    with pytest.raises(ValueError):
        JoinSpec((0,))


def test_clebsch_properties():
    g = clebsch()
    assert g.n == 16 and g.m == 40
    assert all(bin(g.nbr[v]).count("1") == 5 for v in range(16))
    assert not g.triangles
    # independence number 5
    best = 0
    for size in range(4, 7):
        if any(all(not g.adjacent(u, v) for u, v in combinations(c, 2))
               for c in combinations(range(16), size)):
            best = size
    assert best == 5
    t = clebsch_trigraph()
    assert not t.C and t.S == g.edges


def test_is_join_examples():
    assert is_join_of_cbb(complete(4)) == JoinSpec((1, 1))
    assert is_join_of_cbb(cycle(5)) is None
    assert is_join_of_cbb(cycle(4)) == JoinSpec((2,))
    assert is_join_of_cbb(Graph(0)) == JoinSpec(())
    assert is_join_of_cbb(Graph(1)) is None
    assert is_join_of_cbb(complete(3)) is None


def test_join_round_trip():
    for spec in join_specs_up_to(12):
        assert is_join_of_cbb(make_join(spec)) == spec.canonical()
        assert recognize_cjoin(make_cjoin_trigraph(spec)) == spec.canonical()


def test_join_round_trip_relabelled():
    g = make_join(JoinSpec((2, 1)))
    for perm in list(permutations(range(6)))[::37]:
        assert is_join_of_cbb(g.relabel(perm)) == JoinSpec((2, 1))


def test_join_specs_count():
    assert len(list(join_specs_up_to(10))) == 19


@pytest.mark.parametrize("spec", ["1", "2", "1,1", "2,1", "3", "1,1,1", "2,2"])
def test_join_identities(spec):
    r = verify_join_identities(JoinSpec.parse(spec))
    assert r.all, r


def test_join_taub_closed_form():
    g = make_join(JoinSpec((2, 1)))
    assert tau_b(g).value == 13 - 9


def test_local_conditions_on_cjoins():
    for spec in join_specs_up_to(8):
        if not spec.parts:
            continue
        t = make_cjoin_trigraph(spec)
        assert check_local_conditions(t).all
        assert check_tightness_conditions(t).all
        assert exact_expectation(t) + len(t.S) == spec.n ** 2 / 4


def test_local_conditions_fail(path3, c5_all_s, k3_plain):
    assert not check_local_conditions(path3).all
    assert not check_local_conditions(c5_all_s).all
    assert not check_local_conditions(k3_plain).cond4


def test_tightness_fails_off_family(path3):
    assert not check_tightness_conditions(path3).equal_s_degrees


@pytest.mark.parametrize("n", range(1, 6))
def test_local_conditions_characterise_cjoins(n):
    for t in all_trigraphs(n):
        assert check_local_conditions(t).all == (recognize_cjoin(t) is not None), t


def test_recognize_cjoin_rejects():
    # S-edge plus an isolated vertex
    assert recognize_cjoin(Trigraph(3, frozenset(), frozenset({(0, 1)}))) is None
    # cross pair N instead of C
    t = Trigraph(4, frozenset({(0, 2), (0, 3), (1, 2)}), frozenset({(0, 1), (2, 3)}))
    assert recognize_cjoin(t) is None
