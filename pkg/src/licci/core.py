"""Partition pairs labelling vertices of the licci graph.

A :class:`Decoration` is a codimension ``c`` together with two partitions
``lam`` and ``mu`` satisfying ``sum(lam) == (c - 1) * sum(mu) + 1``.  Parts are
stored as non-increasing tuples of positive integers; every constructor
canonicalizes, so equality and hashing are on canonical form.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import CodimMismatch, NegativePart, SumIdentityViolated, WrongCodim

INT64_MAX = 2**63 - 1


def checked(value: int) -> int:
    """Guard against values that would not fit a signed 64-bit integer."""
    if abs(value) > INT64_MAX:
        raise OverflowError(f"{value} exceeds the 64-bit range")
    return value


def canonical_partition(parts: Iterable[int]) -> tuple[int, ...]:
    """Sort non-increasing and drop zeros; raise on negative entries."""
    parts = list(parts)
    for p in parts:
        if p < 0:
            raise NegativePart(f"negative part {p} in {parts}")
    return tuple(sorted((p for p in parts if p), reverse=True))


def part(parts: Sequence[int], j: int) -> int:
    """1-based part access with implicit trailing zeros."""
    return parts[j - 1] if 1 <= j <= len(parts) else 0


def rsort(values: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(values, reverse=True))


def remove_parts(parts: Sequence[int], chosen: Iterable[int]) -> Optional[tuple[int, ...]]:
    """Multiset difference ``parts \\ chosen`` ignoring zeros in ``chosen``.

    Returns None when some positive chosen entry is not available.
    """
    remaining = list(parts)
    for x in chosen:
        if x == 0:
            continue
        try:
            remaining.remove(x)
        except ValueError:
            return None
    return tuple(remaining)


@dataclass(frozen=True, order=False)
class Format:
    """Ranks ``(1, r_1, ..., r_c)``; interior ranks are None when unknown."""

    ranks: tuple[Optional[int], ...]

    @property
    def c(self) -> int:
        return len(self.ranks) - 1

    def is_complete(self) -> bool:
        return all(r is not None for r in self.ranks)

    def __str__(self) -> str:
        return "(" + ",".join("?" if r is None else str(r) for r in self.ranks) + ")"


@dataclass(frozen=True)
class Decoration:
    c: int
    lam: tuple[int, ...]
    mu: tuple[int, ...]
    k: int = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.c < 2:
            raise WrongCodim(f"codimension must be >= 2, got {self.c}")
        lam = canonical_partition(self.lam)
        mu = canonical_partition(self.mu)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mu", mu)
        k = sum(mu)
        if sum(lam) != checked((self.c - 1) * k + 1):
            raise SumIdentityViolated(
                f"sum(lambda)={sum(lam)} but (c-1)*sum(mu)+1={(self.c - 1) * k + 1}"
            )
        object.__setattr__(self, "k", k)

    # derived invariants
    @property
    def b(self) -> int:
        return len(self.lam)

    @property
    def t(self) -> int:
        return len(self.mu)

    @property
    def d(self) -> int:
        return self.b - self.c

    def lam_part(self, j: int) -> int:
        return part(self.lam, j)

    def mu_part(self, j: int) -> int:
        return part(self.mu, j)

    def is_unit(self) -> bool:
        return self.k == 0

    def is_ci(self) -> bool:
        return self.k == 1

    def is_gorenstein(self) -> bool:
        return self.t == 1

    def sort_key(self) -> tuple:
        return (self.c, self.k, self.lam, self.mu)

    def __lt__(self, other: "Decoration") -> bool:
        return self.sort_key() < other.sort_key()

    # serialization
    def to_json(self) -> dict:
        return {"c": self.c, "lambda": list(self.lam), "mu": list(self.mu)}

    @classmethod
    def from_json(cls, obj) -> "Decoration":
        if isinstance(obj, str):
            obj = json.loads(obj)
        return decoration_new(obj["c"], obj["lambda"], obj["mu"])

    def __str__(self) -> str:
        lam = ",".join(map(str, self.lam))
        mu = ",".join(map(str, self.mu))
        return f"c={self.c} λ={lam} μ={mu}"

    @classmethod
    def parse(cls, text: str) -> "Decoration":
        m = re.fullmatch(r"\s*c=(\d+)\s+(?:λ|lambda)=([\d,]*)\s+(?:μ|mu)=([\d,]*)\s*", text)
        if not m:
            raise ValueError(f"cannot parse decoration {text!r}")
        return decoration_new(int(m[1]), _int_list(m[2]), _int_list(m[3]))

    def short(self) -> str:
        """Compact ``(λ);(μ)`` form used in tables and DOT labels."""
        return f"({','.join(map(str, self.lam))});({','.join(map(str, self.mu))})"


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def decoration_new(c: int, lam: Iterable[int], mu: Iterable[int]) -> Decoration:
    return Decoration(c, tuple(lam), tuple(mu))


def unit_ideal(c: int = 3) -> Decoration:
    return Decoration(c, (1,), ())


def complete_intersection(c: int = 3) -> Decoration:
    return Decoration(c, (1,) * c, (1,))


def level(dec: Decoration) -> int:
    return dec.k


def gens(dec: Decoration) -> int:
    return dec.b


def cmtype(dec: Decoration) -> int:
    return dec.t


def deviation(dec: Decoration) -> int:
    return dec.d


def format_of(dec: Decoration) -> Format:
    c, d, t = dec.c, dec.d, dec.t
    if c == 3:
        return Format((1, 3 + d, 2 + d + t, t))
    if c == 2:
        # Hilbert-Burch: an n x (n-1) presentation
        return Format((1, dec.b, dec.b - 1))
    return Format((1, c + d) + (None,) * (c - 2) + (t,))


def squares_defect(dec: Decoration) -> int:
    """``sum(lam^2) + sum(mu^2) - ((c-2) k^2 + 2k + 1)``; zero on decorations."""
    lhs = sum(checked(x * x) for x in dec.lam) + sum(checked(x * x) for x in dec.mu)
    k = dec.k
    return checked(lhs - ((dec.c - 2) * checked(k * k) + 2 * k + 1))


def dominance_leq(a: Decoration, b: Decoration) -> bool:
    if a.c != b.c:
        raise CodimMismatch(f"cannot compare codimension {a.c} with {b.c}")
    if len(a.lam) > len(b.lam) or len(a.mu) > len(b.mu):
        return False
    return all(x <= y for x, y in zip(a.lam, b.lam)) and all(
        x <= y for x, y in zip(a.mu, b.mu)
    )
