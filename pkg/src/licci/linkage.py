"""The linkage formula on decorations.

A link is specified by a choice of ``c`` parts of ``lam`` (zeros allowed).
With ``p = (c-2) k + 1 - sum(choice)`` the linked pair is::

    lam' = rsort(choice_1 + p, ..., choice_c + p, mu_1, ..., mu_t)
    mu'  = lam minus choice
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .core import Decoration, checked, remove_parts, rsort
from .errors import InvalidChoice, NegativePartProduced, TooFewParts


@dataclass(frozen=True)
class LinkResult:
    source: Decoration
    choice: tuple[int, ...]
    p: int
    target: Decoration

    @property
    def reverse_choice(self) -> tuple[int, ...]:
        return rsort(x + self.p for x in self.choice)

    def to_json(self) -> dict:
        return {"choice": list(self.choice), "p": self.p, "target": self.target.to_json()}


def normalize_choice(dec: Decoration, choice: Iterable[int]) -> tuple[int, ...]:
    choice = rsort(choice)
    if len(choice) != dec.c:
        raise InvalidChoice(f"a choice needs exactly {dec.c} entries, got {len(choice)}")
    if any(x < 0 for x in choice):
        raise InvalidChoice(f"negative entry in choice {choice}")
    if remove_parts(dec.lam, choice) is None:
        raise InvalidChoice(f"{choice} is not a sub-multiset of lambda={dec.lam}")
    return choice


def _link_unchecked(dec: Decoration, choice: tuple[int, ...]) -> LinkResult:
    c, k = dec.c, dec.k
    p = checked((c - 2) * k + 1 - sum(choice))
    shifted = [x + p for x in choice]
    if min(shifted) < 0:
        raise NegativePartProduced(
            f"choice {choice} with p={p} gives negative part {min(shifted)}"
        )
    mu_new = remove_parts(dec.lam, choice)
    target = Decoration(c, tuple(shifted) + dec.mu, mu_new)
    return LinkResult(dec, choice, p, target)


def link(dec: Decoration, choice: Iterable[int]) -> LinkResult:
    return _link_unchecked(dec, normalize_choice(dec, choice))


def smallest_minimal_link(dec: Decoration) -> LinkResult:
    """Link choosing the ``c`` largest parts of lambda."""
    if dec.b < dec.c:
        raise TooFewParts(f"b={dec.b} < c={dec.c}")
    return _link_unchecked(dec, dec.lam[: dec.c])


def largest_minimal_link(dec: Decoration) -> LinkResult:
    """Link choosing the ``c`` smallest positive parts of lambda."""
    if dec.b < dec.c:
        raise TooFewParts(f"b={dec.b} < c={dec.c}")
    return _link_unchecked(dec, dec.lam[dec.d : dec.d + dec.c])


def generic_link(dec: Decoration) -> LinkResult:
    return _link_unchecked(dec, (0,) * dec.c)


def tight_double_link(dec: Decoration) -> tuple[LinkResult, LinkResult]:
    """Smallest minimal link followed by the choice ``(lam_1+p, ..., lam_{c-1}+p, mu_1)``.

    The total level change is ``p + lam_c - mu_1``.
    """
    if dec.t < 1:
        raise TooFewParts("tight double link needs t >= 1")
    first = smallest_minimal_link(dec)
    p = first.p
    second_choice = rsort([x + p for x in dec.lam[: dec.c - 1]] + [dec.mu[0]])
    second = _link_unchecked(first.target, normalize_choice(first.target, second_choice))
    return first, second


def sub_multisets(parts: tuple[int, ...], size: int) -> list[tuple[int, ...]]:
    """All distinct multisets of ``size`` entries drawn from ``parts`` padded with zeros."""
    padded = tuple(parts) + (0,) * size
    return sorted(set(combinations(padded, size)), reverse=True)


def neighbors(dec: Decoration) -> list[LinkResult]:
    """Every formal neighbor, one per distinct choice; negative results are skipped."""
    out = []
    for choice in sub_multisets(dec.lam, dec.c):
        try:
            out.append(_link_unchecked(dec, choice))
        except NegativePartProduced:
            continue
    return out
