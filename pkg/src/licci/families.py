"""Named decorations and infinite families, with replay of their link chains."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from typing import Callable

from .constructions import doubling
from .core import Decoration, complete_intersection
from .errors import BadParams, UnknownFamily
from .linkage import largest_minimal_link, link, smallest_minimal_link
from .torclass import huneke_family


def expand_exponents(text: str) -> tuple[int, ...]:
    """``"3^2,2,1^3"`` -> ``(3, 3, 2, 1, 1, 1)``."""
    out: list[int] = []
    for tok in filter(None, (t.strip() for t in text.split(","))):
        base, _, exp = tok.partition("^")
        out += [int(base)] * (int(exp) if exp else 1)
    return tuple(out)


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise BadParams(msg)


def gorenstein3(k: int) -> Decoration:
    _need(k >= 1, "k >= 1")
    return Decoration(3, (1,) * (2 * k + 1), (k,))


def aci_even(j: int) -> Decoration:
    _need(j >= 1, "j >= 1")
    return Decoration(3, (j + 1, j, j, j), (1,) * (2 * j))


def aci_odd(j: int) -> Decoration:
    _need(j >= 2, "j >= 2")
    return Decoration(3, (j, j, j, j - 1), (1,) * (2 * j - 1))


def hyperplane3(k: int) -> Decoration:
    _need(k >= 1, "k >= 1")
    return Decoration(3, (k,) + (1,) * (k + 1), (1,) * k)


def brown() -> Decoration:
    return Decoration(3, (2, 2, 1, 1, 1), (2, 1))


def e6() -> Decoration:
    return Decoration(3, (2, 2, 2, 2, 1), (2, 2))


def closest(k: int) -> Decoration:
    """Class ``G(k-1)`` family ``(2^{k-1},1,1,1);(k-1,1)``."""
    _need(k >= 2, "k >= 2")
    return Decoration(3, (2,) * (k - 1) + (1, 1, 1), (k - 1, 1))


def closest_link_up(k: int) -> Decoration:
    """Intermediate ``(k+1,k-1,k-1,k-1,1);(2^{k-2},1,1,1)`` between ``closest(k)`` and ``closest(k+2)``."""
    _need(k >= 2, "k >= 2")
    return Decoration(3, (k + 1, k - 1, k - 1, k - 1, 1), (2,) * (k - 2) + (1, 1, 1))


def _a(n: int) -> int:
    return n * (3 * n + 1) // 2


def f1683_I(n: int) -> Decoration:
    _need(n >= 1, "n >= 1")
    a = _a(n)
    return Decoration(3, (a + 2, a, a) + (a - 2 * n + 1,) * 3, (a - n + 1, a - n + 1, a - n))


def f1683_H(n: int) -> Decoration:
    _need(n >= 2, "n >= 2")
    a = _a(n)
    lam = (a - n + 1, a - n + 1, a - n, a - 3 * n + 3, a - 3 * n + 1, a - 3 * n + 1)
    return Decoration(3, lam, (a - 2 * n + 1,) * 3)


def f1683_J(n: int) -> Decoration:
    _need(n >= 2, "n >= 2")
    a = _a(n)
    lam = (a - 2 * n + 1,) * 3 + (a - 4 * n + 3, a - 4 * n + 3, a - 4 * n + 2)
    return Decoration(3, lam, (a - 3 * n + 3, a - 3 * n + 1, a - 3 * n + 1))


GOR4 = {
    6: ["2,1^5;2"],
    7: ["2^3,1^4;3", "2^6,1;4"],
    8: [
        "3,1^7;3", "3,2^3,1^4;4", "3^2,2^4,1^2;5", "4,3,2^6;6", "3^4,2^3,1;6",
        "4,3^4,2^3;7", "3^7,1;7", "4^2,3^5,2;8", "4^4,3^4;9", "4^7,3;10",
    ],
}

ACI4_TYPE2 = ["2,2,1,1,1;1,1", "2^5;2,1"]

DEV2 = {
    5: ["2,2,1^5;2", "2^6,1;3"],
    6: ["2^3,1^5;2", "3,2^6,1;3", "3^5,2^3;4", "4^2,3^6;5", "4^7,3;6"],
}

SMALL_K_LISTS = {
    1: ["1,1,1;1"],
    2: ["1^5;2", "2,1,1,1;1,1"],
    3: ["1^7;3", "2,2,1,1,1;2,1", "3,1,1,1,1;1,1,1", "2,2,2,1;1,1,1"],
    4: [
        "1^9;4", "2,2,2,1,1,1;3,1", "3,2,1,1,1,1;2,2", "2,2,2,2,1;2,2",
        "3,2,2,1,1;2,1,1", "4,1^5;1^4", "3,2,2,2;1^4",
    ],
}

# Bases, as (c, pair), whose iterated hyperplane sections give every class of level at most 3.
SMALL_K_BASES = [
    (2, "1,1;1"),
    (2, "1,1,1;1,1"),
    (3, "1^5;2"),
    (2, "1^4;1^3"),
    (3, "2,2,2,1;1,1,1"),
    (3, "2,2,1,1,1;2,1"),
    (3, "1^7;3"),
    (4, "2^5;2,1"),
    (4, "2,2,2,1,1,1,1;3"),
    (5, "2^6,1;3"),
]


def parse_pair(c: int, text: str) -> Decoration:
    lam, mu = text.split(";")
    return Decoration(c, expand_exponents(lam), expand_exponents(mu))


def gor4_list(n: int) -> list[Decoration]:
    _need(n in GOR4, "n must be 6, 7 or 8")
    return [parse_pair(4, s) for s in GOR4[n]]


def gor4_9gen(n: int) -> Decoration:
    """Gorenstein codimension 4 with 9 generators: doubling of ``f1683_I(n)``."""
    return doubling(f1683_I(n))


def aci4_type2() -> list[Decoration]:
    return [parse_pair(4, s) for s in ACI4_TYPE2]


def dev2_list(c: int) -> list[Decoration]:
    _need(c in DEV2, "c must be 5 or 6")
    return [parse_pair(c, s) for s in DEV2[c]]


def _half(num: int, den: int) -> int:
    if num % den:
        raise AssertionError(f"{num}/{den} is not an integer")
    return num // den


def dev2_c7(a: int) -> Decoration:
    _need(a >= 0, "a >= 0")
    top = _half(3 * a * a + 7 * a + 4, 2)
    low = _half(3 * a * a + 5 * a + 2, 2)
    if a % 2 == 0:
        x = _half(3 * a * a + 6 * a + 4, 2)
        y = _half(3 * a * a + 6 * a + 2, 2)
        m = _half(9 * a * a + 18 * a + 8, 4)
    else:
        x = _half(3 * a * a + 6 * a + 5, 2)
        y = _half(3 * a * a + 6 * a + 3, 2)
        m = _half(9 * a * a + 18 * a + 9, 4)
    return Decoration(7, (top,) * 3 + (x, y, y) + (low,) * 3, (m,))


def small_k_list(k: int) -> list[Decoration]:
    _need(k in SMALL_K_LISTS, "k must be 1..4")
    return [parse_pair(3, s) for s in SMALL_K_LISTS[k]]


def small_k_bases() -> list[Decoration]:
    return [parse_pair(c, s) for c, s in SMALL_K_BASES]


def load_dynkin_lists() -> dict:
    with resources.files("licci").joinpath("data/dynkin_lists.json").open() as fh:
        return json.load(fh)


def dynkin_list(fmt: str) -> list[Decoration]:
    """Listed classes (level 5 and above) for a Dynkin format such as ``"7,8,2"``."""
    data = load_dynkin_lists()["formats"]
    key = fmt.replace("1,", "", 1) if fmt.count(",") == 3 else fmt
    if key not in data:
        raise BadParams(f"no list for format {fmt}")
    return [Decoration(3, expand_exponents(l), expand_exponents(m)) for l, m in data[key]["classes"]]


FAMILIES: dict[str, Callable] = {
    "ci": lambda c=3: complete_intersection(int(c)),
    "gorenstein3": lambda k: gorenstein3(int(k)),
    "aci_even": lambda j: aci_even(int(j)),
    "aci_odd": lambda j: aci_odd(int(j)),
    "hyperplane3": lambda k: hyperplane3(int(k)),
    "brown": brown,
    "e6": e6,
    "closest": lambda k: closest(int(k)),
    "Ht": lambda t: huneke_family(int(t)),
    "f1683_I": lambda n: f1683_I(int(n)),
    "f1683_H": lambda n: f1683_H(int(n)),
    "f1683_J": lambda n: f1683_J(int(n)),
    "gor4_list": lambda n: gor4_list(int(n)),
    "gor4_9gen": lambda n: gor4_9gen(int(n)),
    "aci4_type2": aci4_type2,
    "dev2_list": lambda c: dev2_list(int(c)),
    "dev2_c7": lambda a: dev2_c7(int(a)),
    "dynkin_list": dynkin_list,
    "small_k": lambda k: small_k_list(int(k)),
}


def family(name: str, *params):
    try:
        fn = FAMILIES[name]
    except KeyError:
        raise UnknownFamily(f"unknown family {name!r}") from None
    try:
        return fn(*params)
    except TypeError as exc:
        raise BadParams(str(exc)) from None
    except ValueError as exc:
        if isinstance(exc, BadParams):
            raise
        raise BadParams(str(exc)) from None


@dataclass
class ChainReport:
    name: str
    steps: int = 0
    mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {"name": self.name, "steps": self.steps, "ok": self.ok, "mismatches": self.mismatches}


def _expect(report: ChainReport, got: Decoration, want: Decoration, where: str) -> None:
    report.steps += 1
    if got != want:
        report.mismatches.append(f"{where}: got {got.short()}, expected {want.short()}")


def chain_1683(max_n: int = 6) -> ChainReport:
    """Smallest minimal links go ``I_n, H_n, J_n, I_{n-1}``; largest minimal links go back."""
    rep = ChainReport("f1683")
    for n in range(2, max_n + 1):
        seq = [f1683_I(n), f1683_H(n), f1683_J(n), f1683_I(n - 1)]
        for a, b in zip(seq, seq[1:]):
            _expect(rep, smallest_minimal_link(a).target, b, f"n={n} smallest {a.short()}")
            _expect(rep, largest_minimal_link(b).target, a, f"n={n} largest {b.short()}")
    return rep


def chain_closest(max_k: int = 12) -> ChainReport:
    """``closest(k)`` links to the intermediate via ``(2,0,0)``, then to ``closest(k+2)``."""
    rep = ChainReport("closest")
    for k in range(4, max_k + 1):
        mid = link(closest(k), (2, 0, 0)).target
        _expect(rep, mid, closest_link_up(k), f"k={k} first")
        _expect(rep, link(mid, (k - 1,) * 3).target, closest(k + 2), f"k={k} second")
    return rep


def chain_dev2(max_a: int = 4) -> ChainReport:
    """Six largest minimal links take ``dev2_c7(a-1)`` to ``dev2_c7(a)``."""
    rep = ChainReport("dev2_c7")
    for a in range(1, max_a + 1):
        cur = dev2_c7(a - 1)
        for _ in range(6):
            cur = largest_minimal_link(cur).target
        _expect(rep, cur, dev2_c7(a), f"a={a}")
    return rep


CHAINS = {"f1683": chain_1683, "closest": chain_closest, "dev2_c7": chain_dev2}


def family_chain_check(name: str, bound: int | None = None) -> ChainReport:
    try:
        fn = CHAINS[name]
    except KeyError:
        raise UnknownFamily(f"no chain for family {name!r}") from None
    return fn() if bound is None else fn(bound)
