import pytest
from hypothesis import given

from permdual.errors import InvalidCover, LabelOutOfRange, ParseError
from permdual.fixtures import get_fixture
from permdual.perm import long_cycle, product, trajectory
from permdual.trails import (
    LabeledMultigraph,
    NotRealizable,
    Realizable,
    Trail,
    TrailDoubleCover,
    all_realizations,
    check_labeling,
    edge_digraph,
    graph_to_sequence,
    migt,
    migt_cover,
    realize,
    relabel,
    sequence_to_graph,
    tdc_permutation,
    tdc_validate,
)
from tests.strategies import graphs


@pytest.fixture
def graph():
    return LabeledMultigraph.from_sequence(get_fixture("four_vertex"))


def test_graph_text_format(graph):
    assert str(graph) == "n=4; m=5;\n1: 3 4\n2: 1 3\n3: 1 2\n4: 3 4\n5: 2 3"
    assert LabeledMultigraph.parse(str(graph)) == graph


@pytest.mark.parametrize(
    "text",
    [
        "n=3;",
        "n=3; m=2;\n1: 1 2",
        "n=3; m=1;\n1: 1 2\n1: 2 3",
        "n=3; m=1;\n1 - 1 2",
    ],
)
def test_graph_text_format_errors(text):
    with pytest.raises(ParseError):
        LabeledMultigraph.parse(text)


def test_graph_has_no_loops():
    with pytest.raises(ValueError, match="Loop"):
        LabeledMultigraph(3, [(2, 2)])


def test_parallel_edges_are_distinguished_by_label(graph):
    assert graph.edge(1) == graph.edge(4) == (3, 4)


def test_conversions(graph):
    assert graph_to_sequence(graph) == get_fixture("four_vertex")
    assert sequence_to_graph(get_fixture("four_vertex")) == graph


def test_migt_of_the_worked_example(graph):
    assert migt(graph, 3) == Trail([3, 4, 3, 2], [1, 4, 5])
    assert str(migt(graph, 3)) == "3 -1- 4 -4- 3 -5- 2"


def test_migt_cover_of_the_worked_example(graph):
    assert migt_cover(graph) == get_fixture("four_vertex_migts")


def test_migt_of_isolated_vertex():
    graph = LabeledMultigraph(3, [(1, 2)])
    assert migt(graph, 3).is_trivial()
    assert migt(graph, 3) == Trail([3])


def test_migt_checks_the_vertex(graph):
    with pytest.raises(LabelOutOfRange):
        migt(graph, 5)


def test_migt_cover_of_edgeless_graph():
    cover = migt_cover(LabeledMultigraph(3))
    assert all(trail.is_trivial() for trail in cover.trails)
    assert tdc_permutation(cover).is_identity()


@given(graphs())
def test_migt_cover_is_a_trail_double_cover(graph):
    assert tdc_validate(migt_cover(graph)).ok


@given(graphs())
def test_migt_follows_the_trajectory(graph):
    s = graph.to_sequence()
    for x in range(1, graph.n + 1):
        assert migt(graph, x).vertices == trajectory(s, x).points


@given(graphs())
def test_tdc_permutation_is_the_product(graph):
    assert tdc_permutation(migt_cover(graph)) == product(graph.to_sequence())


def test_tdc_permutation_of_the_worked_example():
    assert tdc_permutation(get_fixture("four_vertex_migts")) == long_cycle(4, "down")


def test_tdc_validate_reports_every_condition():
    graph = LabeledMultigraph(3, [(1, 2), (2, 3)])
    cover = TrailDoubleCover(graph, [Trail([1, 2], [1]), Trail([1, 2, 3], [1, 2]), Trail([3])])
    report = tdc_validate(cover)
    kinds = {v.kind for v in report.violations}
    assert kinds == {"start", "double-use", "end"}
    assert not report


def test_tdc_validate_reports_illegal_trails():
    graph = LabeledMultigraph(2, [(1, 2)])
    cover = TrailDoubleCover(graph, [Trail([1, 2], [2]), Trail([2, 1], [1])])
    assert "trail" in {v.kind for v in tdc_validate(cover).violations}


def test_trail_has_no_repeated_edge():
    with pytest.raises(ValueError, match="repeats"):
        Trail([1, 2, 1], [1, 1])


def test_trail_text_format():
    assert Trail.parse("4 -1- 3 -2- 1") == Trail([4, 3, 1], [1, 2])
    assert Trail.parse("4") == Trail([4])
    with pytest.raises(ParseError):
        Trail.parse("4 -1- -2- 1")


def test_cover_text_format():
    cover = get_fixture("two_triangles")
    assert TrailDoubleCover.parse(str(cover)) == cover
    assert str(cover.trail(4)) == "4 -1- 2 -2- 1 -3- 5"


def test_edge_digraph_of_the_worked_example():
    digraph = edge_digraph(get_fixture("four_vertex_migts"))
    assert digraph.nodes == (1, 2, 3, 4, 5)
    assert digraph.arcs == {(1, 2), (2, 3), (3, 5), (1, 4), (4, 5), (2, 4)}
    assert digraph.is_acyclic()


def test_edge_digraph_of_the_non_realizable_cover():
    digraph = edge_digraph(get_fixture("two_triangles"))
    assert digraph.arcs == {(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1)}
    assert not digraph.is_acyclic()


def test_edge_digraph_of_single_edge():
    digraph = edge_digraph(migt_cover(LabeledMultigraph(2, [(1, 2)])))
    assert digraph.nodes == (1,)
    assert not digraph.arcs


def test_realize_the_worked_example():
    cover = get_fixture("four_vertex_migts")
    result = realize(cover)
    assert isinstance(result, Realizable)
    assert result.order == (1, 2, 3, 4, 5)
    assert check_labeling(cover, (1, 2, 4, 3, 5))
    assert not check_labeling(cover, (2, 1, 3, 4, 5))


def test_all_realizations_of_the_worked_example():
    orders = {result.order for result in all_realizations(get_fixture("four_vertex_migts"))}
    assert orders == {(1, 2, 3, 4, 5), (1, 2, 4, 3, 5)}


def test_realize_the_non_realizable_cover():
    result = realize(get_fixture("two_triangles"))
    assert isinstance(result, NotRealizable)
    assert result.cycle == (1, 2, 3, 4, 5, 6)
    assert str(result) == "not realizable: 1 -> 2 -> 3 -> 4 -> 5 -> 6 -> 1"
    assert list(all_realizations(get_fixture("two_triangles"))) == []


def test_realize_edgeless_graph():
    result = realize(migt_cover(LabeledMultigraph(4)))
    assert result
    assert result.labeling == {}


def test_realize_rejects_invalid_covers():
    graph = LabeledMultigraph(2, [(1, 2)])
    with pytest.raises(InvalidCover):
        realize(TrailDoubleCover(graph, [Trail([1, 2], [1]), Trail([2])]))


@given(graphs())
def test_realize_recovers_a_labeling(graph):
    cover = migt_cover(graph)
    result = realize(cover)
    assert result
    relabeled = relabel(graph, result.labeling)
    assert tdc_validate(migt_cover(relabeled)).ok
    assert check_labeling(cover, result.order)


@given(graphs(max_length=6))
def test_every_realization_is_valid(graph):
    cover = migt_cover(graph)
    for result in all_realizations(cover):
        assert check_labeling(cover, result.order)


def test_relabel_checks_bijections(graph):
    with pytest.raises(ValueError, match="bijection"):
        relabel(graph, {1: 1, 2: 1, 3: 3, 4: 4, 5: 5})


def test_all_realizations_checks_every_order(monkeypatch):
    import permdual.trails

    monkeypatch.setattr(permdual.trails, "check_labeling", lambda cover, order: False)
    with pytest.raises(RuntimeError, match="does not realize"):
        list(all_realizations(get_fixture("four_vertex_migts")))
