import pytest
from hypothesis import assume, given

from conftest import graph, walks
from licci.core import Decoration, complete_intersection, dominance_leq, unit_ideal
from licci.errors import NotApplicable, WrongCodim
from licci.families import aci_even, brown, closest, gorenstein3, hyperplane3
from licci.torclass import (
    class_G_rank,
    dominated_by_huneke,
    huneke_family,
    koszul_pairs,
    p0_link,
    pairing_indices,
    tor_profile,
)


def test_labels():
    assert tor_profile(unit_ideal(3)).label == "unit"
    assert tor_profile(complete_intersection(3)).label == "CI"
    assert tor_profile(gorenstein3(4)).label == "Gorenstein"
    assert tor_profile(brown()).label == "koszul"
    assert tor_profile(closest(6)).label == "G(5)"


def test_koszul_pairs_are_one_based():
    assert koszul_pairs(brown()) == ((1, 2),)
    assert pairing_indices(closest(4)) == ((1, 1), (2, 1), (3, 1))


def test_closest_rank():
    for k in range(4, 12):
        dec = closest(k)
        assert class_G_rank(dec) == dec.b - 3 == k - 1


def test_huneke_family():
    assert huneke_family(1) == Decoration(3, (1, 1, 1), (1,))
    assert huneke_family(2) == Decoration(3, (2, 2, 1, 1, 1), (2, 1))
    h3 = huneke_family(3)
    assert h3.lam == (4, 4, 2, 2, 1, 1, 1) and h3.mu == (4, 2, 1)
    assert koszul_pairs(h3)
    assert dominated_by_huneke(brown())


def test_p0_link():
    assert p0_link(brown()) == Decoration(3, (2, 2, 2, 1), (1, 1, 1))
    with pytest.raises(NotApplicable):
        p0_link(closest(6))


def test_wrong_codim():
    with pytest.raises(WrongCodim):
        koszul_pairs(complete_intersection(4))


def test_hyperplane_and_aci_have_mu1_one():
    for dec in (hyperplane3(5), aci_even(1)):
        assert dec.mu[0] == 1


@given(walks(c=3))
def test_huneke_members_are_licci_pairs(dec):
    assume(1 <= dec.t <= 4)
    h = huneke_family(dec.t)
    assert sum(h.lam) == 2 * h.k + 1
    assert dominance_leq(h, h)


@given(walks(c=3))
def test_gorenstein_iff_lambda1_is_one(dec):
    assume(dec.k >= 1)
    assert (dec.t == 1) == (dec.lam[0] == 1)


def test_mu1_one_means_aci_or_hyperplane():
    for dec in graph(3, 12).vertices:
        if dec.k >= 2 and dec.mu[0] == 1:
            assert dec.b == 4 or dec.lam[0] == dec.k, dec


def test_no_large_pairing():
    for dec in graph(3, 12).vertices:
        rank = class_G_rank(dec)
        if dec.t > 1 and rank is not None:
            assert rank <= dec.b - 3, dec
