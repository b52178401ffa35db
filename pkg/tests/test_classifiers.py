import pytest
from hypothesis import given, settings

from test_graph_core import graphs
from twoswitch import (
    CapacityError,
    ClassProfile,
    RouteDisagreement,
    catalog,
    classify,
    complement,
    complete_graph,
    empty_graph,
    enumerate_graphs,
    forbidden_family,
    is_hereditary_unigraph,
    is_matrogenic,
    is_threshold,
    is_unigraph,
    unigraph_producing,
)
from twoswitch.classifiers import hereditary_unigraph_routes, matrogenic_routes, threshold_routes


def all_graphs(max_n):
    for n in range(max_n + 1):
        yield from enumerate_graphs(n)


def test_threshold_examples():
    assert is_threshold(complete_graph(6))
    assert is_threshold(catalog("K1,5"))
    assert is_threshold(catalog("K3v3K1"))  # complete split graph
    assert not is_threshold(catalog("P4"))
    assert not is_threshold(catalog("U"))


def test_matrogenic_examples():
    assert is_matrogenic(catalog("C5"))
    assert not is_matrogenic(catalog("P5"))
    assert not is_threshold(catalog("C5"))


def test_unigraph_examples():
    assert is_unigraph(catalog("U"))
    assert not is_unigraph(catalog("4-pan"))
    assert all(is_unigraph(g) for g in all_graphs(3))
    with pytest.raises(CapacityError):
        is_unigraph(empty_graph(10))


def test_hereditary_unigraph_examples():
    assert not is_hereditary_unigraph(catalog("U"))
    assert not is_hereditary_unigraph(catalog("P5"))
    assert all(not is_hereditary_unigraph(F) for F in forbidden_family())


def test_unigraph_producing_examples():
    assert unigraph_producing([catalog(x) for x in ("2K2", "C4", "P4")])
    assert unigraph_producing(forbidden_family())
    assert not unigraph_producing([catalog("K3")])
    with pytest.raises(CapacityError):
        unigraph_producing([empty_graph(9)])


def test_routes_agree_exhaustively():
    for G in all_graphs(7):
        assert len(set(threshold_routes(G).values())) == 1
        assert len(set(matrogenic_routes(G).values())) == 1
        routes = ("i", "ii", "iii") if G.n <= 6 else ("ii", "iii")
        assert len(set(hereditary_unigraph_routes(G, routes).values())) == 1


def test_chain_and_complement_closure():
    seen = {"matrogenic-not-threshold": None, "hereditary-not-matrogenic": None, "unigraph-not-hereditary": None}
    for G in all_graphs(7):
        p = classify(G)
        q = classify(complement(G))
        assert (p.threshold, p.matrogenic, p.hereditary_unigraph, p.unigraph) == (
            q.threshold, q.matrogenic, q.hereditary_unigraph, q.unigraph)
        if p.matrogenic and not p.threshold:
            seen["matrogenic-not-threshold"] = G
        if p.hereditary_unigraph and not p.matrogenic:
            seen["hereditary-not-matrogenic"] = G
        if p.unigraph and not p.hereditary_unigraph:
            seen["unigraph-not-hereditary"] = G
    assert all(v is not None for v in seen.values())


def test_profile_witnesses_and_json():
    p = classify(catalog("U"))
    assert (p.threshold, p.matrogenic, p.hereditary_unigraph, p.unigraph) == (False, False, False, True)
    assert p.witnesses["hereditary_unigraph"]["forbidden"] in ("4-pan", "co-4-pan", "P5", "house")
    assert "FIG6" in p.witnesses["matrogenic"]
    assert ClassProfile.from_json(p.to_json()) == p
    assert list(p.to_json()) == ["threshold", "matrogenic", "unigraph", "hereditary_unigraph", "witnesses"]
    q = classify(catalog("4-pan"))
    assert q.witnesses["unigraph"]["realizations"] == 2


def test_profile_chain_is_enforced():
    with pytest.raises(RouteDisagreement):
        ClassProfile(threshold=True, matrogenic=False, unigraph=True, hereditary_unigraph=True)


def test_large_graph_profile():
    G = complete_graph(12)
    p = classify(G)
    assert p.threshold and p.unigraph is True
    C = catalog("C12")
    p = classify(C)
    assert p.unigraph is None and not p.hereditary_unigraph


@settings(max_examples=30, deadline=None)
@given(graphs(9))
def test_random_profiles_consistent(G):
    p = classify(G)
    assert p.hereditary_unigraph == is_hereditary_unigraph(complement(G))
