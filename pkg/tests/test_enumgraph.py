import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graph
from licci.core import Decoration, complete_intersection, unit_ideal
from licci.enumgraph import (
    classes_by_format,
    enumerate_bfs,
    enumerate_graph,
    enumerate_levels,
    export,
    inverse_tight_double_links,
)
from licci.errors import BudgetOverflow, NeedsKCap
from licci.linkage import tight_double_link


def test_tiny_graph():
    g = enumerate_levels(3, 1)
    assert g.vertices == {unit_ideal(3), complete_intersection(3)}
    assert frozenset((unit_ideal(3), complete_intersection(3))) in g.undirected_pairs()


@pytest.mark.parametrize("c,k", [(2, 6), (3, 7), (4, 5), (5, 4)])
def test_levels_match_bfs(c, k):
    a = enumerate_levels(c, k)
    b = enumerate_bfs(c, k)
    assert a.vertices == b.vertices
    assert a.edges == b.edges
    assert b.complete


def test_level_counts_c3():
    g = graph(3, 4)
    assert [len(g.level(k)) for k in range(5)] == [1, 1, 2, 4, 7]


def test_codim2_one_per_level():
    g = graph(2, 12)
    for k in range(1, 13):
        [v] = g.level(k)
        assert v == Decoration(2, (1,) * (k + 1), (1,) * k)


def test_inverse_recovers_sources():
    g = graph(3, 9)
    for v in g.vertices:
        if v.k >= 2:
            t = tight_double_link(v)[1].target
            assert v in set(inverse_tight_double_links(t, 9))


def test_classes_by_format():
    assert len(classes_by_format(2, 2)) == 2
    assert len(classes_by_format(3, 2)) == 7
    with pytest.raises(NeedsKCap):
        classes_by_format(5, 5)


def test_budget_overflow_keeps_partial():
    with pytest.raises(BudgetOverflow) as info:
        enumerate_bfs(3, 8, max_vertices=50)
    assert not info.value.partial.complete
    assert unit_ideal(3) in info.value.partial.vertices


def test_dot_and_jsonl():
    g = enumerate_graph(3, 2)
    dot = export(g, "dot").decode()
    assert dot.startswith("graph licci_c3 {")
    assert '"1|0"' not in dot and 'label="1,1,1|1|1"' in dot
    lines = export(g, "jsonl").decode().splitlines()
    rows = [json.loads(line) for line in lines]
    assert {r["type"] for r in rows} == {"vertex", "edge"}
    assert sum(r["type"] == "vertex" for r in rows) == 4


@settings(max_examples=10, deadline=None)
@given(st.integers(2, 4), st.integers(1, 5))
def test_export_deterministic(c, k):
    a = export(enumerate_levels(c, k), "dot")
    b = export(enumerate_levels(c, k), "dot")
    assert a == b
    assert export(enumerate_levels(c, k), "jsonl") == export(enumerate_bfs(c, k), "jsonl")
