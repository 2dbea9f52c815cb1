import json

import pytest
from hypothesis import given, strategies as st

from edcolor.coloring import (
    Coloring,
    dominated_classes,
    is_equitable,
    is_proper,
    read_coloring,
    validate,
    write_coloring,
)
from edcolor.graph import Graph, GraphClassSpec, GraphFormatError, build, empty_graph, is_connected

from .conftest import graphs

P11_PATTERN = (1, 2, 1, 3, 4, 3, 5, 6, 5, 7, 8)
# rim v_1..v_11 then hub
W11_PATTERN = (2, 3, 4, 5, 6, 2, 3, 4, 5, 6, 7, 1)


def path(n):
    return build(GraphClassSpec("path", (n,)))


def test_is_proper():
    assert is_proper(path(3), Coloring((1, 2, 1))) == (True, None)
    assert is_proper(path(3), Coloring((1, 1, 2))) == (False, (1, 2))
    assert is_proper(path(11), Coloring(P11_PATTERN))[0]


def test_is_proper_domain_mismatch():
    with pytest.raises(ValueError, match="covers"):
        is_proper(path(3), Coloring((1, 2)))


def test_dominated_classes_p3():
    # N[2] = {1,2,3} holds V_1 = {1,3} and V_2 = {2}
    assert dominated_classes(path(3), Coloring((1, 2, 1)), 2) == {1, 2}
    assert dominated_classes(path(3), Coloring((1, 2, 1)), 1) == {2}


def test_dominated_classes_k4():
    k4 = build(GraphClassSpec("complete", (4,)))
    assert dominated_classes(k4, Coloring((3, 1, 4, 2)), 1) == {1, 2, 3, 4}


def test_isolated_vertex_with_shared_class_dominates_nothing():
    assert dominated_classes(empty_graph(2), Coloring((1, 1)), 1) == frozenset()


def test_is_equitable():
    assert is_equitable(Coloring((1, 1, 2, 2, 3, 4)))
    assert not is_equitable(Coloring((1, 1, 1, 2)))
    assert Coloring(P11_PATTERN).class_sizes() == [2, 1, 2, 1, 2, 1, 1, 1]
    assert is_equitable(Coloring(P11_PATTERN))


def test_validate_p11_pattern():
    report = validate(path(11), Coloring(P11_PATTERN))
    assert report.proper and report.equitable and report.dominator
    assert report.equitable_dominator
    assert report.num_colors == 8


def test_validate_w11_pattern():
    report = validate(build(GraphClassSpec("wheel", (11,))), Coloring(W11_PATTERN))
    assert report.equitable_dominator
    assert report.num_colors == 7


def test_validate_two_disjoint_edges():
    g = Graph.from_edges(4, [(1, 2), (3, 4)])
    report = validate(g, Coloring((1, 2, 1, 2)))
    assert report.proper and report.equitable
    assert not report.dominator
    assert all(d == frozenset() for d in report.dom_classes.values())
    assert {"kind": "no-dom-class", "vertex": 1} in report.violations()


def test_report_json_shape():
    report = validate(path(3), Coloring((1, 1, 2)))
    data = json.loads(report.to_json())
    assert set(data) == {"proper", "equitable", "dominator", "equitable_dominator", "num_colors",
                         "class_sizes", "violations", "dom_classes", "normalized"}
    assert data["proper"] is False
    assert {"kind": "improper", "edge": [1, 2]} in data["violations"]
    assert data["dom_classes"] == {"1": [1], "2": [1, 2], "3": [2]}


def test_sparse_colors_are_normalized():
    c = Coloring.from_sequence([5, 9, 5])
    assert c.colors == (1, 2, 1)
    assert c.normalized
    assert validate(path(3), c).to_dict()["normalized"] is True
    assert not Coloring.from_sequence([2, 1, 2]).normalized


def test_coloring_rejects_gaps_without_normalizing():
    with pytest.raises(ValueError):
        Coloring((1, 3))


def test_coloring_file_round_trip_and_errors():
    c = Coloring(P11_PATTERN)
    assert read_coloring(write_coloring(c)) == c
    with pytest.raises(GraphFormatError, match="twice"):
        read_coloring("1 1\n1 2\n")
    with pytest.raises(GraphFormatError, match="not colored"):
        read_coloring("1 1\n3 2\n")
    with pytest.raises(GraphFormatError):
        read_coloring("1 x\n")


@given(graphs(), st.data())
def test_singleton_rule(g, data):
    colors = data.draw(st.lists(st.integers(1, g.n), min_size=g.n, max_size=g.n))
    c = Coloring.from_sequence(colors)
    if not is_proper(g, c)[0]:
        return
    sizes = c.class_sizes()
    for v in g.vertices:
        own = c[v]
        assert (own in dominated_classes(g, c, v)) == (sizes[own - 1] == 1)


@given(graphs(), st.data())
def test_validate_is_pure_and_consistent(g, data):
    colors = data.draw(st.lists(st.integers(1, g.n), min_size=g.n, max_size=g.n))
    c = Coloring.from_sequence(colors)
    first, second = validate(g, c), validate(g, c)
    assert first == second
    assert first.dominator == all(first.dom_classes.values())
    assert first.equitable == (max(first.class_sizes) - min(first.class_sizes) <= 1)
    for v in g.vertices:
        assert first.dom_classes[v] == dominated_classes(g, c, v)


@given(graphs())
def test_all_distinct_colors_always_valid(g):
    report = validate(g, Coloring(tuple(range(1, g.n + 1))))
    assert report.equitable_dominator
    if g.n >= 2 and is_connected(g):
        # every vertex also dominates a neighbor's singleton class
        assert all(len(report.dom_classes[v]) >= 2 for v in g.vertices)
