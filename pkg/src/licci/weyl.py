"""Weyl group of the T-shaped diagram acting on weights.

The diagram has a central node ``u`` with three arms: ``x_1 .. x_{c-2}``
(``x_1`` next to ``u``), ``y_1 .. y_D`` and ``z_1 .. z_T``.  Weights are
integer vectors of fundamental-weight coefficients.  The simple reflection
``s_i`` negates ``a_i`` and adds the old ``a_i`` to every neighbour of ``i``.

Vertices of the licci graph are orbit weights of the fundamental weight at the
tip of the x-arm that are non-negative away from ``z_1``; the partition pair is
read off from partial sums of coefficients along the arms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterator, Optional

from .core import Decoration
from .errors import ArmTooShort, BudgetExceeded, NotCosetDominant, UnknownVertex, WrongCodim

Weight = tuple[int, ...]


@dataclass(frozen=True)
class Diagram:
    c: int
    dmax: int
    tmax: int

    @cached_property
    def names(self) -> tuple[str, ...]:
        xs = [f"x{i}" for i in range(1, self.c - 1)]
        ys = [f"y{i}" for i in range(1, self.dmax + 2)]
        zs = [f"z{i}" for i in range(1, self.tmax + 2)]
        return tuple(xs + ["u"] + ys + zs)

    @cached_property
    def index(self) -> dict[str, int]:
        return {n: i for i, n in enumerate(self.names)}

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[set[int]] = [set() for _ in self.names]

        def join(a: str, b: str) -> None:
            i, j = self.index[a], self.index[b]
            adj[i].add(j)
            adj[j].add(i)

        for arm, length in (("x", self.c - 2), ("y", self.dmax + 1), ("z", self.tmax + 1)):
            if length:
                join("u", f"{arm}1")
            for i in range(1, length):
                join(f"{arm}{i}", f"{arm}{i + 1}")
        return tuple(tuple(sorted(s)) for s in adj)

    @property
    def size(self) -> int:
        return len(self.names)

    @cached_property
    def lam_positions(self) -> tuple[int, ...]:
        xs = [f"x{i}" for i in range(self.c - 2, 0, -1)]
        ys = [f"y{i}" for i in range(1, self.dmax + 2)]
        return tuple(self.index[n] for n in xs + ["u"] + ys)

    @cached_property
    def mu_positions(self) -> tuple[int, ...]:
        return tuple(self.index[f"z{i}"] for i in range(2, self.tmax + 2))

    @cached_property
    def boundary(self) -> tuple[int, int]:
        return self.index[f"y{self.dmax + 1}"], self.index[f"z{self.tmax + 1}"]

    @cached_property
    def arm_swap(self) -> tuple[int, ...]:
        """Permutation exchanging the y- and z-arms (requires dmax == tmax)."""
        perm = list(range(self.size))
        for i in range(1, self.dmax + 2):
            a, b = self.index[f"y{i}"], self.index[f"z{i}"]
            perm[a], perm[b] = b, a
        return tuple(perm)

    def vertex(self, name: str) -> int:
        try:
            return self.index[name]
        except KeyError:
            raise UnknownVertex(name) from None

    def fundamental(self, name: str) -> Weight:
        w = [0] * self.size
        w[self.vertex(name)] = 1
        return tuple(w)

    def start(self) -> Weight:
        return self.fundamental(f"x{self.c - 2}" if self.c > 2 else "u")

    def weight_from_dict(self, coeffs: dict[str, int]) -> Weight:
        w = [0] * self.size
        for name, a in coeffs.items():
            w[self.vertex(name)] = a
        return tuple(w)

    def weight_to_dict(self, w: Weight) -> dict[str, int]:
        return {self.names[i]: a for i, a in enumerate(w) if a}


def diagram_for(c: int, max_length: int) -> Diagram:
    if c < 2:
        raise WrongCodim(f"codimension must be >= 2, got {c}")
    return Diagram(c, max_length + 2, max_length + 2)


def reflect(diagram: Diagram, w: Weight, i) -> Weight:
    if isinstance(i, str):
        i = diagram.vertex(i)
    elif not 0 <= i < diagram.size:
        raise UnknownVertex(i)
    a = w[i]
    if a == 0:
        return w
    out = list(w)
    out[i] = -a
    for j in diagram.adjacency[i]:
        out[j] += a
    return tuple(out)


def apply_word(diagram: Diagram, w: Weight, word) -> Weight:
    """Apply reflections left to right (the first letter acts first)."""
    for i in word:
        w = reflect(diagram, w, i)
    return w


def weight_to_partitions(diagram: Diagram, w: Weight) -> Decoration:
    z1 = diagram.index["z1"]
    for i, a in enumerate(w):
        if a < 0 and i != z1:
            raise NotCosetDominant(f"a_{diagram.names[i]} = {a} < 0")
    lam = _tail_sums([w[i] for i in diagram.lam_positions])
    mu = _tail_sums([w[i] for i in diagram.mu_positions])
    return Decoration(diagram.c, lam, mu)


def _tail_sums(values: list[int]) -> tuple[int, ...]:
    out = []
    acc = 0
    for v in reversed(values):
        acc += v
        out.append(acc)
    return tuple(reversed(out))


@dataclass(frozen=True)
class OrbitElement:
    weight: Weight
    length: int
    word: tuple[int, ...]

    def to_json(self, diagram: Diagram) -> dict:
        return {
            "weight": diagram.weight_to_dict(self.weight),
            "length": self.length,
            "word": [diagram.names[i] for i in self.word],
        }


def orbit(diagram: Diagram, max_length: int) -> Iterator[OrbitElement]:
    """Breadth-first orbit of the start weight up to ``max_length``.

    ``s_j`` lengthens the element exactly when ``a_j > 0``.  The boundary nodes
    of both truncated arms must never become active.
    """
    start = diagram.start()
    seen = {start}
    frontier = [OrbitElement(start, 0, ())]
    by, bz = diagram.boundary
    while frontier:
        nxt = []
        for el in frontier:
            yield el
            if el.length == max_length:
                continue
            w = el.weight
            for j, a in enumerate(w):
                if a > 0:
                    v = reflect(diagram, w, j)
                    if v[by] or v[bz]:
                        raise ArmTooShort(f"orbit reaches the end of an arm at length {el.length + 1}")
                    if v not in seen:
                        seen.add(v)
                        nxt.append(OrbitElement(v, el.length + 1, el.word + (j,)))
        frontier = nxt


def _dominant_away(w: Weight, skip: tuple[int, ...]) -> bool:
    return all(a >= 0 for i, a in enumerate(w) if i not in skip)


def enumerate_vertices(c: int, max_length: int) -> dict[Decoration, OrbitElement]:
    diagram = diagram_for(c, max_length)
    z1 = diagram.index["z1"]
    out: dict[Decoration, OrbitElement] = {}
    for el in orbit(diagram, max_length):
        if _dominant_away(el.weight, (z1,)):
            dec = weight_to_partitions(diagram, el.weight)
            if dec not in out:
                out[dec] = el
    return out


def clear_negatives(diagram: Diagram, w: Weight, keep: int) -> tuple[Weight, tuple[int, ...]]:
    """Reflect at negative coefficients other than ``keep`` until none remain."""
    word = []
    while True:
        for i, a in enumerate(w):
            if a < 0 and i != keep:
                w = reflect(diagram, w, i)
                word.append(i)
                break
        else:
            return w, tuple(word)


def enumerate_edges(
    c: int, max_length: int
) -> set[tuple[Decoration, Decoration, tuple[int, ...]]]:
    """Edges witnessed by orbit weights dominant away from ``y_1`` and ``z_1``.

    Each such weight gives one endpoint by clearing negatives off ``z_1`` and
    the other by clearing negatives off ``y_1`` and swapping the y/z arms.
    """
    diagram = diagram_for(c, max_length)
    y1, z1 = diagram.index["y1"], diagram.index["z1"]
    swap = diagram.arm_swap
    out = set()
    for el in orbit(diagram, max_length):
        w = el.weight
        if not _dominant_away(w, (y1, z1)):
            continue
        a, _ = clear_negatives(diagram, w, z1)
        b, _ = clear_negatives(diagram, w, y1)
        b = tuple(b[swap[i]] for i in range(diagram.size))
        src = weight_to_partitions(diagram, a)
        dst = weight_to_partitions(diagram, b)
        out.add((src, dst, el.word))
    return out


def edge_pairs(edges) -> set[frozenset]:
    return {frozenset((a, b)) for a, b, _ in edges}


def reconstruct_weight(dec: Decoration, diagram: Optional[Diagram] = None) -> Weight:
    """Invert the partition dictionary (codimension 3).

    ``a_{z_1}`` is fixed by the orbit identity ``sum j a_{y_j} = sum j a_{z_j}``.
    """
    if dec.c != 3:
        raise WrongCodim("weight reconstruction is available for c = 3 only")
    if diagram is None:
        diagram = Diagram(3, dec.b + 1, dec.t + 1)
    w = [0] * diagram.size
    lam = list(dec.lam) + [0] * (len(diagram.lam_positions) + 1)
    for j, pos in enumerate(diagram.lam_positions):
        w[pos] = lam[j] - lam[j + 1]
    mu = list(dec.mu) + [0] * (len(diagram.mu_positions) + 1)
    for j, pos in enumerate(diagram.mu_positions):
        w[pos] = mu[j] - mu[j + 1]
    idx = diagram.index
    ysum = sum(j * w[idx[f"y{j}"]] for j in range(1, diagram.dmax + 2))
    zsum = sum(j * w[idx[f"z{j}"]] for j in range(2, diagram.tmax + 2))
    w[idx["z1"]] = ysum - zsum
    return tuple(w)


def _root_coordinates(diagram: Diagram, delta: Weight) -> Optional[tuple[Fraction, ...]]:
    """Solve ``C n = delta`` for the Cartan matrix ``C``; None when singular."""
    n = diagram.size
    rows = []
    for i in range(n):
        row = [Fraction(0)] * n
        row[i] = Fraction(2)
        for j in diagram.adjacency[i]:
            row[j] = Fraction(-1)
        rows.append(row + [Fraction(delta[i])])
    for col in range(n):
        piv = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if piv is None:
            return None
        rows[col], rows[piv] = rows[piv], rows[col]
        lead = rows[col][col]
        rows[col] = [x / lead for x in rows[col]]
        for r in range(n):
            if r != col and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
    return tuple(row[-1] for row in rows)


def _membership_diagram(dec: Decoration) -> Diagram:
    dmax, tmax = dec.b + 1, dec.t + 1
    # arms of 2, q, r vertices from the centre: skip the affine shapes 1/2 + 1/q + 1/r = 1
    while Fraction(1, 2) + Fraction(1, dmax + 2) + Fraction(1, tmax + 2) == 1:
        dmax += 1
    return Diagram(3, dmax, tmax)


def weyl_length(dec: Decoration, budget: int = 100_000) -> Optional[int]:
    """Length of the orbit element for ``dec`` (c = 3), or None if not in the orbit.

    Orbit elements lie below the start weight by a non-negative integer
    combination of simple roots, and each reflection at a negative
    coefficient lowers that combination, so the walk is finite.
    """
    if dec.c != 3:
        raise WrongCodim("membership is available for c = 3 only")
    diagram = _membership_diagram(dec)
    w = reconstruct_weight(dec, diagram)
    target = diagram.start()
    coords = _root_coordinates(diagram, tuple(a - b for a, b in zip(target, w)))
    if coords is None or any(x < 0 or x.denominator != 1 for x in coords):
        return None
    n = [int(x) for x in coords]
    if sum(n) > budget:
        raise BudgetExceeded(f"root height {sum(n)} exceeds budget {budget}")
    steps = 0
    while True:
        if w == target:
            return steps
        i = next((i for i, a in enumerate(w) if a < 0), None)
        if i is None:
            return None
        n[i] += w[i]
        if n[i] < 0:
            return None
        w = reflect(diagram, w, i)
        steps += 1


def membership(dec: Decoration, budget: int = 100_000) -> bool:
    return weyl_length(dec, budget) is not None


@dataclass
class OracleReport:
    c: int
    max_length: int
    oracle_vertices: set
    formula_vertices: set
    oracle_edges: set
    formula_edges: set

    @property
    def vertices_agree(self) -> bool:
        return self.oracle_vertices == self.formula_vertices

    @property
    def edges_agree(self) -> bool:
        return self.oracle_edges == self.formula_edges

    def to_json(self) -> dict:
        def show(vs):
            return sorted(v.short() for v in vs)

        return {
            "c": self.c,
            "max_length": self.max_length,
            "vertices": len(self.oracle_vertices),
            "edges": len(self.oracle_edges),
            "vertices_agree": self.vertices_agree,
            "edges_agree": self.edges_agree,
            "oracle_only": show(self.oracle_vertices - self.formula_vertices),
            "formula_only": show(self.formula_vertices - self.oracle_vertices),
            "edge_mismatches": len(self.oracle_edges ^ self.formula_edges),
        }


def verify_against_formula(max_length: int, witness_length: Optional[int] = None) -> OracleReport:
    """Compare the orbit (length ``<= max_length``) with the linkage formula, c = 3.

    The formula side enumerates every decoration up to the largest level the
    orbit reaches and keeps those whose orbit length, recomputed by descending
    the reconstructed weight, is at most ``max_length``.  Edges are compared on
    that vertex set; oracle edge witnesses may be longer than their endpoints,
    so they are searched up to ``witness_length`` (default twice the length).
    """
    from .enumgraph import enumerate_levels
    from .linkage import neighbors

    vertices = enumerate_vertices(3, max_length)
    oracle_v = set(vertices)
    top = max(v.k for v in oracle_v)
    formula_v = {
        v for v in enumerate_levels(3, top, with_edges=False).vertices if weyl_length(v) <= max_length
    }
    if witness_length is None:
        witness_length = 2 * max_length
    oracle_e = {e for e in edge_pairs(enumerate_edges(3, witness_length)) if e <= oracle_v}
    formula_e = set()
    for v in formula_v:
        for r in neighbors(v):
            if r.target in formula_v:
                formula_e.add(frozenset((v, r.target)))
    return OracleReport(3, max_length, oracle_v, formula_v, oracle_e, formula_e)
