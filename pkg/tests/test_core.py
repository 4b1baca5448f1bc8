import json

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import raw_pairs, walks
from licci.core import (
    Decoration,
    canonical_partition,
    complete_intersection,
    decoration_new,
    dominance_leq,
    format_of,
    remove_parts,
    squares_defect,
    unit_ideal,
)
from licci.errors import CodimMismatch, NegativePart, SumIdentityViolated, WrongCodim


def test_canonical_form():
    d = decoration_new(3, [1, 2, 1, 0, 1], [1, 0, 1])
    assert d.lam == (2, 1, 1, 1)
    assert d.mu == (1, 1)
    assert d == Decoration(3, (1, 1, 2, 1), (1, 1))
    assert hash(d) == hash(Decoration(3, (2, 1, 1, 1), (1, 1)))


def test_invariants():
    d = Decoration(3, (2, 2, 1, 1, 1), (2, 1))
    assert (d.k, d.b, d.t, d.d) == (3, 5, 2, 2)
    assert format_of(d).ranks == (1, 5, 6, 2)


def test_units_and_ci():
    assert unit_ideal(4).k == 0 and unit_ideal(4).lam == (1,)
    ci = complete_intersection(5)
    assert ci.lam == (1,) * 5 and ci.mu == (1,) and ci.k == 1


def test_rejections():
    with pytest.raises(SumIdentityViolated):
        Decoration(3, (2, 2), (1,))
    with pytest.raises(NegativePart):
        Decoration(3, (-1, 2, 1), (1,))
    with pytest.raises(WrongCodim):
        Decoration(1, (1,), ())


def test_format_codim2_and_high():
    assert format_of(Decoration(2, (1, 1, 1), (1, 1))).ranks == (1, 3, 2)
    f = format_of(complete_intersection(5))
    assert f.ranks == (1, 5, None, None, None, 1)
    assert not f.is_complete()
    assert str(f) == "(1,5,?,?,?,1)"


def test_remove_parts():
    assert remove_parts((3, 2, 2, 1), (2, 0, 1)) == (3, 2)
    assert remove_parts((3, 2), (4,)) is None


def test_text_and_json_round_trip():
    d = Decoration(3, (2, 2, 1, 1, 1), (2, 1))
    assert str(d) == "c=3 λ=2,2,1,1,1 μ=2,1"
    assert Decoration.parse(str(d)) == d
    assert Decoration.parse("c=3 lambda=2,2,1,1,1 mu=2,1") == d
    assert Decoration.from_json(json.dumps(d.to_json())) == d
    assert d.short() == "(2,2,1,1,1);(2,1)"


def test_dominance_codim_mismatch():
    with pytest.raises(CodimMismatch):
        dominance_leq(unit_ideal(3), unit_ideal(4))


@given(st.lists(st.integers(0, 9)))
def test_canonical_idempotent(parts):
    once = canonical_partition(parts)
    assert canonical_partition(once) == once
    assert 0 not in once
    assert sum(once) == sum(parts)


@given(walks())
def test_squares_identity_on_reachable(dec):
    assert squares_defect(dec) == 0


@given(raw_pairs())
def test_round_trip_arbitrary(dec):
    assert Decoration.from_json(dec.to_json()) == dec
    assert Decoration.parse(str(dec)) == dec


@given(walks(c=3))
def test_format_euler_characteristic(dec):
    assume(dec.k > 0)
    r = format_of(dec).ranks
    assert r[0] - r[1] + r[2] - r[3] == 0


@given(walks(c=3, max_steps=6), walks(c=3, max_steps=6), walks(c=3, max_steps=6))
def test_dominance_partial_order(a, b, c):
    assert dominance_leq(a, a)
    if dominance_leq(a, b) and dominance_leq(b, a):
        assert a == b
    if dominance_leq(a, b) and dominance_leq(b, c):
        assert dominance_leq(a, c)
