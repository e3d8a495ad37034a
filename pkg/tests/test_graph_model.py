import pytest
from hypothesis import given, settings, strategies as st

from graphk.graph_model import (
    INF,
    InvalidGraphError,
    SignedGraph,
    SignedMultiplicity,
    classify,
    out_degree,
    validate,
)

from _builders import bouquet, signed_graphs, two_vertex_graph


def test_multiplicity_validation():
    assert SignedMultiplicity(2, 3).total == 5
    assert SignedMultiplicity(INF, 0).is_infinite
    assert SignedMultiplicity(1, INF).total == INF
    assert SignedMultiplicity(4, 1).signed_sum == 3
    with pytest.raises(ValueError):
        SignedMultiplicity(-1, 0)
    with pytest.raises(TypeError):
        SignedMultiplicity(1.5, 0)
    with pytest.raises(ValueError):
        SignedMultiplicity(INF, 0).signed_sum


def test_zero_pairs_are_dropped():
    g = SignedGraph(["v"], {("v", "v"): (0, 0)})
    assert g.multiplicities == {}
    assert g == SignedGraph(["v"])
    assert g.multiplicity("v", "v") == SignedMultiplicity(0, 0)


def test_from_edges_accumulates():
    g = SignedGraph.from_edges(["a", "b"], [("a", "b", 1, 0), ("a", "b", 2, 1), ("b", "a", INF, 0), ("b", "a", 3, 0)])
    assert g.multiplicity("a", "b") == SignedMultiplicity(3, 1)
    assert g.multiplicity("b", "a") == SignedMultiplicity(INF, 0)


def test_out_degree():
    assert out_degree(SignedGraph(["v"]), "v") == 0
    assert out_degree(bouquet(INF), "v") == INF
    g = two_vertex_graph(r=1, s=2, p=3, q=4)
    assert out_degree(g, "w") == 1 + 2 + 3 + 4
    assert out_degree(g, "v") == INF
    with pytest.raises(KeyError):
        out_degree(g, "nope")


def test_classify_bouquet():
    p = classify(bouquet(INF))
    assert p.sinks == () and p.sources == ()
    assert p.infinite_emitters == ("v",)
    assert p.finite_emitters == ()
    assert not p.row_finite
    assert not p.correspondence.left_action_compact
    assert p.correspondence.left_action_injective
    assert p.correspondence.module_full


def test_classify_isolated_vertex():
    p = classify(SignedGraph(["v"]))
    assert p.sinks == ("v",) and p.sources == ("v",)
    assert p.finite_emitters == ("v",)
    assert p.row_finite
    assert not p.correspondence.left_action_injective
    assert not p.correspondence.module_full
    assert p.regular == ()


def test_classify_two_vertex_graph():
    p = classify(two_vertex_graph(r=1, s=0, p=0, q=2))
    assert p.infinite_emitters == ("v",)
    assert p.finite_emitters == ("w",)
    assert p.sinks == ()
    assert p.non_sinks == ("v", "w")


def test_classify_empty_graph():
    p = classify(SignedGraph())
    assert p.row_finite and p.sinks == () and p.finite_emitters == ()


def test_validate():
    assert validate(two_vertex_graph(1, 0, 0, 0)) == []
    problems = validate(SignedGraph(["a"], {("a", "b"): (1, 0)}))
    assert len(problems) == 1 and "('a', 'b')" in problems[0] and "'b'" in problems[0]
    problems = validate(SignedGraph(["a", "a"]))
    assert problems == ["duplicate vertex 'a'"]
    assert validate(SignedGraph(["bad name"])) == ["invalid vertex name 'bad name'"]
    with pytest.raises(InvalidGraphError):
        classify(SignedGraph(["a"], {("a", "b"): (1, 0)}))


@settings(max_examples=200, deadline=None)
@given(signed_graphs(), st.randoms(use_true_random=False))
def test_classification_invariants(g, rnd):
    p = classify(g)
    assert set(p.finite_emitters) | set(p.infinite_emitters) == set(g.vertices)
    assert not set(p.finite_emitters) & set(p.infinite_emitters)
    assert set(p.sinks) <= set(p.finite_emitters)
    infinite_pairs = any(m.is_infinite for m in g.multiplicities.values())
    assert p.row_finite == (not infinite_pairs)
    assert p.correspondence.left_action_compact == p.row_finite
    assert p.correspondence.left_action_injective == (not p.sinks)
    assert p.correspondence.module_full == (not p.sources)

    order = list(g.vertices)
    rnd.shuffle(order)
    q = classify(g.reordered(order))
    for field in ("sinks", "sources", "infinite_emitters", "finite_emitters", "non_sinks"):
        assert set(getattr(p, field)) == set(getattr(q, field))
        assert list(getattr(q, field)) == [v for v in order if v in getattr(p, field)]
