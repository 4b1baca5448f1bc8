"""Doubling, hyperplane sections and graded Betti shapes."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .core import Decoration, remove_parts
from .linkage import link, normalize_choice, tight_double_link


def doubling(dec: Decoration) -> Decoration:
    """Gorenstein decoration ``(lam + mu ; (k))`` one codimension up."""
    return Decoration(dec.c + 1, dec.lam + dec.mu, (dec.k,))


def hyperplane_section(dec: Decoration) -> Decoration:
    return Decoration(dec.c + 1, (dec.k,) + dec.lam, dec.mu)


def is_hyperplane(dec: Decoration) -> bool:
    return dec.k > 0 and dec.lam[0] == dec.k


def doubling_replay(dec: Decoration) -> tuple[Decoration, Decoration]:
    """Double link of ``D(S)`` that lands on ``D`` of the tight double link of ``S``.

    Returns the pair (replayed result, expected doubling).
    """
    c = dec.c
    doubled = doubling(dec)
    first = link(doubled, dec.lam[:c] + (dec.mu[0],))
    p = first.p
    second_choice = [x + p for x in dec.lam[: c - 1]] + [dec.mu[0] + p, dec.k]
    second = link(first.target, second_choice)
    _, expected = tight_double_link(dec)
    return second.target, doubling(expected.target)


@dataclass(frozen=True)
class BettiShape:
    c: int
    first_shifts: tuple[int, ...]
    last_shifts: tuple[int, ...]
    middle: Optional[tuple[int, int]] = None  # (rank, shift), codimension 3 only

    @property
    def ranks(self) -> tuple[Optional[int], ...]:
        inner: tuple[Optional[int], ...]
        if self.middle is not None:
            inner = (self.middle[0],)
        else:
            inner = (None,) * (self.c - 2)
        return (1, len(self.first_shifts)) + inner + (len(self.last_shifts),)

    def ends(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return self.first_shifts, self.last_shifts

    def to_json(self) -> dict:
        out = {"c": self.c, "first_shifts": list(self.first_shifts), "last_shifts": list(self.last_shifts)}
        if self.middle is not None:
            out["middle"] = {"rank": self.middle[0], "shift": self.middle[1]}
        return out

    def table(self) -> str:
        """One line per homological degree: ``i: shift^multiplicity ...``."""
        rows = ["0: 0^1", f"1: {_grouped(self.first_shifts)}"]
        if self.middle is not None:
            rows.append(f"2: {self.middle[1]}^{self.middle[0]}")
        else:
            rows += [f"{i}: ?" for i in range(2, self.c)]
        rows.append(f"{self.c}: {_grouped(self.last_shifts)}")
        return "\n".join(rows)


def _grouped(shifts: Iterable[int]) -> str:
    counts: dict[int, int] = {}
    for s in shifts:
        counts[s] = counts.get(s, 0) + 1
    return " ".join(f"{s}^{n}" for s, n in sorted(counts.items())) or "-"


def betti_shape(dec: Decoration) -> BettiShape:
    k, c = dec.k, dec.c
    first = tuple(sorted(k + 1 - x for x in dec.lam))
    last = tuple(sorted(k + c - 2 + m for m in dec.mu))
    middle = (dec.d + dec.t + 2, k + 1) if c == 3 and k > 0 else None
    return BettiShape(c, first, last, middle)


def mapping_cone_shifts(dec: Decoration, choice: Iterable[int]) -> BettiShape:
    """Ends of the resolution of the link, from the dual of the mapping cone.

    The regular sequence has degrees ``k + 1 - choice_j``.  New generators come
    from the sequence (those not cancelled) and from the dual of the last
    module; the new last module is dual to the surviving first-module
    generators.
    """
    choice = normalize_choice(dec, choice)
    c, k = dec.c, dec.k
    total = c * (k + 1) - sum(choice)
    p = (c - 2) * k + 1 - sum(choice)
    first = [k + 1 - x for x in choice if x + p > 0]
    first += [total - (k + c - 2 + m) for m in dec.mu]
    survivors = remove_parts(dec.lam, choice)
    last = [total - (k + 1 - x) for x in survivors]
    middle = None
    if c == 3 and k + p > 0:
        b_new, t_new = len(first), len(last)
        middle = (b_new - 3 + t_new + 2, k + p + 1)
    return BettiShape(c, tuple(sorted(first)), tuple(sorted(last)), middle)


def closure_under_hyperplanes(bases: Iterable[Decoration], max_c: int) -> set[Decoration]:
    out = set()
    for dec in bases:
        while dec.c <= max_c:
            out.add(dec)
            dec = hyperplane_section(dec)
    return out

