import pytest
from hypothesis import assume, given

from conftest import walks
from licci.admissibility import is_decoration
from licci.constructions import (
    betti_shape,
    closure_under_hyperplanes,
    doubling,
    doubling_replay,
    hyperplane_section,
    is_hyperplane,
    mapping_cone_shifts,
)
from licci.core import Decoration, complete_intersection, squares_defect
from licci import families as fam
from licci.errors import BadParams, UnknownFamily
from licci.linkage import neighbors


def test_doubling_and_hyperplane():
    ci = complete_intersection(3)
    assert doubling(ci) == Decoration(4, (1, 1, 1, 1), (1,))
    assert hyperplane_section(fam.brown()) == Decoration(4, (3, 2, 2, 1, 1, 1), (2, 1))
    assert is_hyperplane(hyperplane_section(fam.brown()))
    assert not is_hyperplane(fam.brown())


def test_betti_table():
    shape = betti_shape(fam.brown())
    assert shape.ranks == (1, 5, 6, 2)
    assert shape.ends() == ((2, 2, 3, 3, 3), (5, 6))
    assert shape.table().splitlines() == ["0: 0^1", "1: 2^2 3^3", "2: 4^6", "3: 5^1 6^1"]


def test_closure_stops_at_max_c():
    out = closure_under_hyperplanes([complete_intersection(2)], 5)
    assert sorted(d.c for d in out) == [2, 3, 4, 5]


def test_gor4_lists():
    assert [len(fam.gor4_list(b)) for b in (6, 7, 8)] == [1, 2, 10]
    for b in (6, 7, 8):
        for dec in fam.gor4_list(b):
            assert dec.c == 4 and dec.t == 1 and dec.b == b
            assert is_decoration(dec)


def test_nine_generator_doublings():
    for n in range(2, 6):
        dec = fam.gor4_9gen(n)
        assert dec.b == 9 and dec.t == 1
        assert is_decoration(dec)


def test_dev2_family():
    for a in range(0, 5):
        dec = fam.dev2_c7(a)
        assert dec.c == 7 and dec.d == 2
        assert squares_defect(dec) == 0


def test_families_registry():
    assert fam.family("closest", "6") == fam.closest(6)
    with pytest.raises(UnknownFamily):
        fam.family("nope")
    with pytest.raises(BadParams):
        fam.family("closest", "1")


def test_dynkin_lists_are_licci():
    for key in ("6,7,2", "5,7,3", "7,8,2", "5,8,4"):
        for dec in fam.dynkin_list(key):
            assert is_decoration(dec), dec


def test_expand_exponents():
    assert fam.expand_exponents("3^2,1^3,2") == (3, 3, 1, 1, 1, 2)


@given(walks())
def test_hyperplane_preserves_admissibility(dec):
    assume(dec.k >= 1)
    h = hyperplane_section(dec)
    assert h.c == dec.c + 1 and h.k == dec.k
    assert is_decoration(h)


@given(walks())
def test_doubling_is_gorenstein(dec):
    assume(dec.k >= 1)
    d = doubling(dec)
    assert d.t == 1 and d.c == dec.c + 1
    assert squares_defect(d) == 0


@given(walks(c=3))
def test_doubling_replay_property(dec):
    assume(dec.k >= 2)
    replayed, expected = doubling_replay(dec)
    assert replayed == expected


@given(walks(c=3))
def test_mapping_cone_matches_target(dec):
    for r in neighbors(dec):
        cone = mapping_cone_shifts(dec, r.choice)
        assert cone.ends() == betti_shape(r.target).ends()
