"""Bounded enumeration of decorations and export of the licci graph.

Two enumerators are provided.

``enumerate_bfs`` walks ``neighbors`` outward from the unit ideal, keeping
intermediate vertices up to a working level budget.

``enumerate_levels`` inverts the tight double link.  If ``T`` is the tight
double link of ``S`` then ``S`` is recovered from ``T`` by picking ``c - 1``
parts ``A`` and one part ``m`` of ``lam(T)`` together with a part ``w`` of
``mu(T)`` (or ``w = 0``)::

    s = sum(A) + w - 1 - (c - 2) k(T)      # level change, negative
    p = w - m
    lam(S) = (A_i - s, m, lam(T) minus A and m)
    mu(S)  = (m - s + p, mu(T) minus w)

Every decoration of level ``k >= 2`` arises this way from a decoration of
strictly lower level, so walking levels upward is complete with no search
budget.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional

from .core import Decoration, complete_intersection, remove_parts, unit_ideal
from .errors import BudgetOverflow, NegativePart, NeedsKCap, SumIdentityViolated, TooFewParts
from .linkage import neighbors, tight_double_link

# Largest level of a class in each Dynkin format of codimension 3, keyed by (d, t).
DYNKIN_CAPS = {(2, 2): 4, (3, 2): 8, (2, 3): 9, (4, 2): 20, (2, 4): 24}


@dataclass
class LicciGraph:
    c: int
    max_k: int
    vertices: set[Decoration] = field(default_factory=set)
    edges: set[tuple[Decoration, tuple[int, ...], int, Decoration]] = field(default_factory=set)
    complete: bool = True

    def by_level(self) -> dict[int, list[Decoration]]:
        out: dict[int, list[Decoration]] = {}
        for v in sorted(self.vertices):
            out.setdefault(v.k, []).append(v)
        return out

    def level(self, k: int) -> list[Decoration]:
        return sorted(v for v in self.vertices if v.k == k)

    def with_format(self, d: int, t: int) -> list[Decoration]:
        return sorted(v for v in self.vertices if v.d == d and v.t == t)

    def undirected_pairs(self) -> set[frozenset]:
        return {frozenset((a, b)) for a, _, _, b in self.edges}


def add_edges(graph: LicciGraph) -> LicciGraph:
    """Attach every neighbor edge whose endpoints both lie in the vertex set."""
    for v in graph.vertices:
        for r in neighbors(v):
            if r.target in graph.vertices:
                graph.edges.add((v, r.choice, r.p, r.target))
    return graph


def inverse_tight_double_links(target: Decoration, max_k: int) -> Iterable[Decoration]:
    """Pairs whose tight double link is ``target`` and whose level is at most ``max_k``."""
    c, kt = target.c, target.k
    lam_t, mu_t = target.lam, target.mu
    seen = set()
    for m in sorted(set(lam_t)):
        rest = remove_parts(lam_t, (m,))
        for a in set(combinations(rest + (0,) * (c - 1), c - 1)):
            others = remove_parts(rest, a)
            for w in set(mu_t) | {0}:
                s = sum(a) + w - 1 - (c - 2) * kt
                if s >= 0 or kt - s > max_k:
                    continue
                p = w - m
                mu_first = m - s + p
                mu_rest = remove_parts(mu_t, (w,))
                try:
                    cand = Decoration(c, tuple(x - s for x in a) + (m,) + others, (mu_first,) + mu_rest)
                except (NegativePart, SumIdentityViolated):
                    continue
                if cand in seen:
                    continue
                seen.add(cand)
                try:
                    _, second = tight_double_link(cand)
                except (TooFewParts, ValueError):
                    continue
                if second.target == target:
                    yield cand


def enumerate_levels(c: int, max_k: int, with_edges: bool = True) -> LicciGraph:
    if max_k < 0:
        raise ValueError("max_k must be non-negative")
    levels: dict[int, set[Decoration]] = {k: set() for k in range(max_k + 1)}
    levels[0].add(unit_ideal(c))
    if max_k >= 1:
        levels[1].add(complete_intersection(c))
    for k in range(1, max_k):
        for t in sorted(levels[k]):
            for s in inverse_tight_double_links(t, max_k):
                levels[s.k].add(s)
    graph = LicciGraph(c, max_k, set().union(*levels.values()))
    return add_edges(graph) if with_edges else graph


def enumerate_bfs(
    c: int, max_k: int, budget: Optional[int] = None, max_vertices: int = 2_000_000
) -> LicciGraph:
    """Breadth-first search over ``neighbors`` from the unit ideal.

    Intermediate vertices up to level ``budget`` (default ``max(2K-2, K)``)
    are explored; the output keeps only levels ``<= max_k``.
    """
    if max_k < 1:
        raise ValueError("max_k must be >= 1")
    default = max(2 * max_k - 2, max_k)
    if budget is None:
        budget = default
    start = unit_ideal(c)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            for r in neighbors(v):
                u = r.target
                if u.k <= budget and u not in seen:
                    seen.add(u)
                    nxt.append(u)
        if len(seen) > max_vertices:
            partial = LicciGraph(c, max_k, {v for v in seen if v.k <= max_k}, complete=False)
            raise BudgetOverflow(f"more than {max_vertices} vertices explored", partial)
        frontier = nxt
    graph = LicciGraph(c, max_k, {v for v in seen if v.k <= max_k}, complete=budget >= default)
    return add_edges(graph)


def enumerate_graph(c: int, max_k: int, method: str = "levels", **kwargs) -> LicciGraph:
    if method == "bfs":
        return enumerate_bfs(c, max_k, **kwargs)
    return enumerate_levels(c, max_k, **kwargs)


def classes_by_format(d: int, t: int, max_k: Optional[int] = None, c: int = 3) -> list[Decoration]:
    """All classes of codimension 3 with ``b = 3 + d`` generators and type ``t``."""
    if max_k is None:
        if c != 3 or (d, t) not in DYNKIN_CAPS:
            raise NeedsKCap(f"format d={d}, t={t} needs an explicit level cap")
        max_k = DYNKIN_CAPS[(d, t)]
    graph = enumerate_levels(c, max_k, with_edges=False)
    return graph.with_format(d, t)


def _label(v: Decoration) -> str:
    return f"{','.join(map(str, v.lam))}|{','.join(map(str, v.mu))}|{v.k}"


def _edge_rows(graph: LicciGraph) -> list[tuple]:
    """One row per unordered pair of endpoints and choice class, sorted."""
    rows = set()
    for a, choice, p, b in graph.edges:
        if b.sort_key() < a.sort_key():
            a, b, choice, p = b, a, tuple(sorted((x + p for x in choice), reverse=True)), -p
        rows.add((a.sort_key(), b.sort_key(), choice, p, a, b))
    return sorted(rows, key=lambda r: r[:4])


def export_dot(graph: LicciGraph) -> str:
    verts = sorted(graph.vertices)
    ids = {v: f"v{i}" for i, v in enumerate(verts)}
    lines = [f"graph licci_c{graph.c} {{"]
    for v in verts:
        lines.append(f'  {ids[v]} [label="{_label(v)}"];')
    for _, _, choice, p, a, b in _edge_rows(graph):
        lines.append(f'  {ids[a]} -- {ids[b]} [label="{",".join(map(str, choice))};p={p}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_jsonl(graph: LicciGraph) -> str:
    out = []
    for v in sorted(graph.vertices):
        out.append(json.dumps({"type": "vertex", **v.to_json(), "k": v.k}, sort_keys=True))
    for _, _, choice, p, a, b in _edge_rows(graph):
        out.append(
            json.dumps(
                {"type": "edge", "source": a.to_json(), "target": b.to_json(), "choice": list(choice), "p": p},
                sort_keys=True,
            )
        )
    return "".join(line + "\n" for line in out)


def export(graph: LicciGraph, fmt: str = "dot") -> bytes:
    text = export_dot(graph) if fmt == "dot" else export_jsonl(graph)
    return text.encode("utf-8")
