"""Palette graphs of color sets and of colored diagrams.

Vertices are sum-classes b = a1+a2 of pairs drawn from a color set (or the
classes of the arcs of a colored diagram); an edge joins two classes when
representing pairs can sit around a crossing, and carries the label
2^{-1}(b1+b2), the forced class of the over-arc.  The key decision is
whether the graph contains a connected subgraph, on at least three
vertices, all of whose edge labels are again vertices of the subgraph.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from knotcol.coloring import DehnColoring, fox_from_dehn
from knotcol.diagram import Diagram
from knotcol.exactalg import _require_odd_prime, inv_mod_p


@dataclass(frozen=True)
class PaletteGraph:
    p: int
    vertices: frozenset
    edges: dict  # (u, v) with u < v -> label

    def __post_init__(self):
        for (u, v), label in self.edges.items():
            if u == v:
                raise ValueError("loops are not allowed")
            if u not in self.vertices or v not in self.vertices:
                raise ValueError("edge endpoint is not a vertex")
            expected = (inv_mod_p(2, self.p) * (u + v)) % self.p
            if label != expected:
                raise ValueError(f"edge ({u},{v}) label {label} != {expected}")

    def neighbors(self, u):
        for (a, b) in self.edges:
            if a == u:
                yield b
            elif b == u:
                yield a


@dataclass(frozen=True)
class RSubgraph:
    vertices: frozenset
    edges: frozenset  # of (u, v) pairs, u < v


def palette_graph(colors, p: int) -> PaletteGraph:
    """The full palette graph of a set of residues."""
    _require_odd_prime(p)
    s = sorted({a % p for a in colors})
    if not s:
        raise ValueError("color set must be nonempty")
    vertices = {(a1 + a2) % p for a1 in s for a2 in s}
    half = inv_mod_p(2, p)
    edges = {}
    for u in sorted(vertices):
        for v in sorted(vertices):
            if u >= v:
                continue
            if _pairs_admit_crossing(s, u, v, p):
                edges[(u, v)] = (half * (u + v)) % p
    return PaletteGraph(p, frozenset(vertices), edges)


def _pairs_admit_crossing(s, b1, b2, p):
    # some a1+a2 = b1, a3+a4 = b2 with a1+a3 = a2+a4 (mod p); swapping
    # a3 and a4 covers the other displayed condition
    for a1 in s:
        a2 = (b1 - a1) % p
        if a2 not in s:
            continue
        for a3 in s:
            a4 = (b2 - a3) % p
            if a4 in s and (a1 + a3 - a2 - a4) % p == 0:
                return True
    return False


def is_r_subgraph(h: RSubgraph, g: PaletteGraph) -> bool:
    """h is a subgraph of g whose every edge label is a vertex of h."""
    if not h.vertices <= g.vertices:
        return False
    for e in h.edges:
        if e not in g.edges:
            return False
        if e[0] not in h.vertices or e[1] not in h.vertices:
            return False
        if g.edges[e] not in h.vertices:
            return False
    return True


NO_WITNESS = "none"


def connected_r_witness(g: PaletteGraph):
    """Vertex set of a connected label-closed subgraph with >= 3 vertices,
    or "none".

    Greatest-fixpoint edge deletion: repeatedly drop any edge whose label
    lies in a different connected component than its endpoints.  Any
    label-closed connected subgraph survives every round, and at the
    fixpoint each component is itself label-closed, so a component with
    at least three vertices is exactly a witness.
    """
    for e, label in g.edges.items():
        if label not in g.vertices:
            raise ValueError("not a full palette graph: edge label is not a vertex")
    edges = dict(g.edges)
    while True:
        comp = _components(g.vertices, edges)
        doomed = [e for e, label in edges.items() if comp[label] != comp[e[0]]]
        if not doomed:
            break
        for e in doomed:
            del edges[e]
    sizes = {}
    for v, c in comp.items():
        sizes.setdefault(c, set()).add(v)
    qualifying = [vs for vs in sizes.values() if len(vs) >= 3]
    if not qualifying:
        return NO_WITNESS
    return frozenset(min(qualifying, key=min))


def _components(vertices, edges):
    comp = {v: v for v in vertices}

    def find(x):
        while comp[x] != x:
            comp[x] = comp[comp[x]]
            x = comp[x]
        return x

    for (u, v) in edges:
        comp[find(u)] = find(v)
    return {v: find(v) for v in vertices}


def palette_graph_of_diagram(d: Diagram, c: DehnColoring) -> PaletteGraph:
    """Palette graph on the arc classes of a colored diagram.

    One vertex per arc sum-class; one edge per crossing whose two
    under-arcs carry distinct classes.
    """
    fox = fox_from_dehn(d, c)
    vertices = frozenset(fox.values)
    half = inv_mod_p(2, c.p)
    edges = {}
    for a, b, cc, dd in d.pd.crossings:
        b1 = fox.values[d.arc_of_semiarc[a]]
        b2 = fox.values[d.arc_of_semiarc[cc]]
        if b1 == b2:
            continue
        u, v = min(b1, b2), max(b1, b2)
        edges[(u, v)] = (half * (u + v)) % c.p
    return PaletteGraph(c.p, vertices, edges)


def to_rsubgraph(g: PaletteGraph) -> RSubgraph:
    return RSubgraph(g.vertices, frozenset(g.edges))


def to_json(g: PaletteGraph) -> str:
    doc = {
        "p": g.p,
        "vertices": sorted(g.vertices),
        "edges": [
            {"u": u, "v": v, "label": label}
            for (u, v), label in sorted(g.edges.items())
        ],
    }
    return json.dumps(doc, sort_keys=True, separators=(", ", ": "))


def to_dot(g: PaletteGraph) -> str:
    lines = ["graph palette {"]
    for v in sorted(g.vertices):
        lines.append(f'  "{v}";')
    for (u, v), label in sorted(g.edges.items()):
        lines.append(f'  "{u}" -- "{v}" [label="{label}"];')
    lines.append("}")
    return "\n".join(lines)
