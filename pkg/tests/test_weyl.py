import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graph
from licci.core import complete_intersection, unit_ideal
from licci.errors import UnknownVertex, WrongCodim
from licci.families import brown, small_k_list
from licci.weyl import (
    Diagram,
    apply_word,
    diagram_for,
    enumerate_vertices,
    membership,
    reconstruct_weight,
    reflect,
    weight_to_partitions,
    weyl_length,
)

D = Diagram(3, 6, 6)


def test_shape():
    assert D.names[:2] == ("x1", "u")
    assert set(D.adjacency[D.index["u"]]) == {D.index["x1"], D.index["y1"], D.index["z1"]}
    assert Diagram(2, 3, 3).start() == Diagram(2, 3, 3).fundamental("u")


def test_start_is_unit():
    assert weight_to_partitions(D, D.start()) == unit_ideal(3)


def test_first_reflections_reach_ci():
    w = apply_word(D, D.start(), ["x1", "u", "z1"])
    assert weight_to_partitions(D, w) == complete_intersection(3)


def test_errors():
    with pytest.raises(UnknownVertex):
        D.vertex("q9")
    with pytest.raises(WrongCodim):
        diagram_for(1, 4)


def test_reconstruct_matches_orbit():
    verts = enumerate_vertices(3, 10)
    for dec, elem in verts.items():
        assert reconstruct_weight(dec) is not None
        assert weyl_length(dec) == elem.length


def test_small_levels_in_orbit():
    for k in range(1, 4):
        for dec in small_k_list(k):
            assert membership(dec)
    assert weyl_length(brown()) is not None


def test_orbit_vertices_are_graph_vertices():
    g = graph(3, 6)
    for dec in enumerate_vertices(3, 12):
        assert dec in g.vertices


@given(st.lists(st.integers(0, D.size - 1), max_size=20), st.integers(0, D.size - 1))
def test_reflection_is_involution(word, i):
    w = apply_word(D, D.start(), word)
    assert reflect(D, reflect(D, w, i), i) == w


@given(st.lists(st.integers(0, D.size - 1), max_size=20))
def test_word_then_reverse_is_identity(word):
    w = apply_word(D, D.start(), word)
    assert apply_word(D, w, list(reversed(word))) == D.start()


def test_codim4_dictionary():
    """x-arm read outward-in: the orbit lands in the graph and covers every k <= 3 class."""
    verts = set(enumerate_vertices(4, 24))
    g = graph(4, max(v.k for v in verts))
    assert verts <= g.vertices
    assert {v for v in g.vertices if v.k <= 3} <= verts
