"""Tor-algebra multiplication read off from a codimension 3 decoration.

A product of two generators of the first module is nonzero modulo the
maximal ideal exactly when ``lam_i + lam_j = k + 1`` (a Koszul pair), and a
product of a first and a second module generator pairs perfectly exactly when
``lam_i + mu_j = k + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import Decoration, dominance_leq
from .errors import NotApplicable, WrongCodim


@dataclass(frozen=True)
class TorProfile:
    koszul_pairs: tuple[tuple[int, int], ...]
    pairing_indices: tuple[tuple[int, int], ...]
    label: str
    g_rank: Optional[int]

    def to_json(self) -> dict:
        return {
            "koszul_pairs": [list(p) for p in self.koszul_pairs],
            "pairing_indices": [list(p) for p in self.pairing_indices],
            "class": self.label,
            "g_rank": self.g_rank,
        }


def _require_c3(dec: Decoration) -> None:
    if dec.c != 3:
        raise WrongCodim(f"Tor classification is for c = 3, got c = {dec.c}")


def koszul_pairs(dec: Decoration) -> tuple[tuple[int, int], ...]:
    _require_c3(dec)
    lam, k = dec.lam, dec.k
    return tuple(
        (i + 1, j + 1)
        for i in range(len(lam))
        for j in range(i + 1, len(lam))
        if lam[i] + lam[j] == k + 1
    )


def pairing_indices(dec: Decoration) -> tuple[tuple[int, int], ...]:
    _require_c3(dec)
    k = dec.k
    return tuple(
        (i + 1, j + 1)
        for i, a in enumerate(dec.lam)
        for j, m in enumerate(dec.mu)
        if a + m == k + 1
    )


def class_G_rank(dec: Decoration) -> Optional[int]:
    """Number of ``i`` with ``lam_i + mu_1 = k + 1``; None when a Koszul pair exists."""
    _require_c3(dec)
    if dec.t == 0 or koszul_pairs(dec):
        return None
    return sum(1 for a in dec.lam if a + dec.mu[0] == dec.k + 1)


def tor_profile(dec: Decoration) -> TorProfile:
    kp = koszul_pairs(dec)
    pi = pairing_indices(dec)
    rank = class_G_rank(dec)
    if dec.k == 0:
        label = "unit"
    elif dec.k == 1:
        label = "CI"
    elif dec.t == 1:
        label = "Gorenstein"
    elif kp:
        label = "koszul"
    elif rank:
        label = f"G({rank})"
    else:
        label = "trivial"
    return TorProfile(kp, pi, label, rank)


def huneke_family(t: int) -> Decoration:
    """``H_t``: the largest decoration of type ``t`` with a Koszul pair."""
    if t < 1:
        raise ValueError("t must be >= 1")
    lam = []
    for e in range(t - 1, 0, -1):
        lam += [2**e, 2**e]
    lam += [1, 1, 1]
    mu = [2**e for e in range(t - 1, -1, -1)]
    return Decoration(3, tuple(lam), tuple(mu))


def p0_link(dec: Decoration) -> Decoration:
    """``(lam_1, lam_2, mu) ; (lam_3, ...)``, the link with ``p = 0``."""
    _require_c3(dec)
    if dec.b < 2 or dec.lam[0] + dec.lam[1] != dec.k + 1:
        raise NotApplicable("p0 needs lam_1 + lam_2 = k + 1")
    return Decoration(3, dec.lam[:2] + dec.mu, dec.lam[2:])


def dominated_by_huneke(dec: Decoration) -> bool:
    return dominance_leq(dec, huneke_family(dec.t))
