import json
from collections import defaultdict
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import burnside_graph_count, labeled_data, mask_to_edges
from test_graph_core import graphs
from twoswitch import (
    CapacityError,
    NotGraphicalError,
    are_isomorphic,
    canonical_form,
    catalog,
    construct_realization,
    count_realizations,
    degree_sequence,
    enumerate_graphs,
    enumerate_realizations,
    from_edge_list,
    from_graph6,
    graphical_sequences,
    is_graphical,
    transition_graph,
)
from twoswitch.enumeration import components, is_connected, realizations_by_sequence

GRAPH_COUNTS = [1, 1, 2, 4, 11, 34, 156, 1044, 12346]


def codes(gs):
    return {canonical_form(g) for g in gs}


def test_is_graphical_examples():
    assert is_graphical((4, 2, 2, 2, 2, 2))
    assert not is_graphical((3, 1))
    assert not is_graphical((1, 1, 1))
    assert is_graphical(())
    assert not is_graphical((2, -1, 1))


@pytest.mark.parametrize("n", range(0, 7))
def test_is_graphical_matches_labeled_existence(n):
    _, _, degs = labeled_data(n)
    realized = {tuple(r) for r in degs.tolist()}
    for d in product(range(n), repeat=n):
        if list(d) == sorted(d, reverse=True):
            assert is_graphical(d) == (d in realized)


def test_construct_realization_examples():
    assert construct_realization((2, 2, 2)) == catalog("K3")
    assert are_isomorphic(construct_realization((4, 2, 2, 2, 2, 2)), catalog("U"))
    G = construct_realization((3, 2, 2, 2, 1))
    assert any(are_isomorphic(G, catalog(x)) for x in ("4-pan", "co-4-pan"))
    with pytest.raises(NotGraphicalError):
        construct_realization((3, 3, 1))


@given(graphs(10))
def test_construct_realization_has_the_sequence(G):
    d = degree_sequence(G)
    assert degree_sequence(construct_realization(d)) == d


def test_enumerate_realizations_examples():
    assert codes(enumerate_realizations((4, 2, 2, 2, 2, 2))) == codes([catalog("U")])
    assert codes(enumerate_realizations((3, 2, 2, 2, 1))) == codes([catalog("4-pan"), catalog("co-4-pan")])
    assert codes(enumerate_realizations((2,) * 6)) == codes([catalog("C6"), catalog("2K3")])
    assert enumerate_realizations((3, 3, 1)) == []
    assert count_realizations((2, 2, 2, 1, 1)) == 2
    with pytest.raises(CapacityError):
        enumerate_realizations((1,) * 10)


@pytest.mark.parametrize("n", range(0, 7))
def test_enumerate_realizations_match_labeled_filter(n):
    """Realizations of every sequence of length n agree with the classes of
    labelled graphs carrying that sequence (classes by the permutation oracle)."""
    masks, best, degs = labeled_data(n)
    classes = defaultdict(dict)
    for m, b, d in zip(masks.tolist(), best.tolist(), map(tuple, degs.tolist())):
        classes[d].setdefault(b, m)
    assert set(classes) == set(graphical_sequences(n))
    for d, reps in classes.items():
        ours = enumerate_realizations(d)
        assert len(ours) == len(reps)
        assert codes(ours) == codes(from_edge_list(n, mask_to_edges(n, m)) for m in reps.values())
        assert all(degree_sequence(g) == d for g in ours)


def test_enumerate_graphs_small():
    assert len(enumerate_graphs(0)) == 1
    assert len(enumerate_graphs(3)) == 4
    assert len(enumerate_graphs(4)) == 11
    with pytest.raises(CapacityError):
        enumerate_graphs(9)
    with pytest.raises(ValueError):
        enumerate_graphs(3, method="magic")


@pytest.mark.parametrize("n", range(0, 8))
def test_enumerate_graphs_counts(n):
    gs = enumerate_graphs(n)
    assert len(gs) == GRAPH_COUNTS[n] == burnside_graph_count(n)
    assert len(codes(gs)) == len(gs)
    assert codes(gs) == codes(enumerate_graphs(n, method="extend"))


@pytest.mark.parametrize("n", range(0, 7))
def test_enumerate_graphs_match_labeled_oracle(n):
    _, best, _ = labeled_data(n)
    assert len(set(best.tolist())) == len(enumerate_graphs(n))
    assert codes(enumerate_graphs(n, method="labeled")) == codes(enumerate_graphs(n))


def test_enumerate_graphs_n8():
    gs = enumerate_graphs(8)
    assert len(gs) == GRAPH_COUNTS[8] == burnside_graph_count(8)


@pytest.mark.parametrize("n", range(0, 8))
def test_partition_by_sequence(n):
    by_seq = realizations_by_sequence(enumerate_graphs(n))
    for d in graphical_sequences(n):
        assert codes(by_seq[d]) == codes(enumerate_realizations(d))
    assert set(by_seq) == set(graphical_sequences(n))


def test_graphical_sequence_counts():
    assert [len(graphical_sequences(n)) for n in range(8)] == [1, 1, 2, 4, 11, 31, 102, 342]


def test_transition_graph_examples():
    t = transition_graph((2, 2, 1, 1))
    assert len(t.nodes) == 1 and t.edges == ()
    t = transition_graph((2, 2, 2, 1, 1))
    assert codes(t.representatives) == codes([catalog("P5"), catalog("K3+K2")])
    assert t.edges == ((0, 1),) and is_connected(t)
    t = transition_graph((2,) * 6)
    assert codes(t.representatives) == codes([catalog("C6"), catalog("2K3")]) and is_connected(t)
    assert is_connected(transition_graph((3, 2, 2, 2, 1)))
    assert is_connected(transition_graph((4, 2, 2, 2, 2, 2)))
    with pytest.raises(NotGraphicalError):
        transition_graph((3, 3, 1))


def test_transition_graph_export():
    t = transition_graph((2, 2, 2, 1, 1))
    data = t.to_json()
    assert list(data) == ["sequence", "nodes", "edges"]
    assert data["sequence"] == [2, 2, 2, 1, 1] and data["edges"] == [[0, 1]]
    assert [canonical_form(from_graph6(s)) for s in data["nodes"]] == list(t.nodes)
    json.dumps(data)
    dot = t.to_dot()
    assert dot.startswith('graph "2,2,2,1,1" {') and "0 -- 1;" in dot
    for s in data["nodes"]:
        assert f'label="{s}"' in dot


def test_transition_graphs_connected_up_to_6():
    for n in range(1, 7):
        for d in graphical_sequences(n):
            t = transition_graph(d)
            assert is_connected(t)
            assert all(i < j for i, j in t.edges)


def test_components():
    assert components(4, [(0, 1), (2, 3)]) == [[0, 1], [2, 3]]
    assert components(0, []) == []


@given(st.lists(st.integers(0, 6), min_size=1, max_size=7))
def test_realizations_realize(d):
    for g in enumerate_realizations(d):
        assert degree_sequence(g) == tuple(sorted(d, reverse=True))
