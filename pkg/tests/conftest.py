"""Shared brute-force oracles, kept independent of the library paths they
check."""

from itertools import combinations, product
from math import gcd

import pytest

from knotcol.coloring import DehnColoring, is_valid_coloring
from knotcol.diagram import CATALOG, catalog_diagram


def det_cofactor(rows):
    """Determinant by cofactor expansion, memoized on column subsets."""
    n = len(rows)
    cache = {}

    def expand(r, cols):
        if r == n:
            return 1
        key = (r, cols)
        if key in cache:
            return cache[key]
        total = 0
        sign = 1
        for idx, c in enumerate(cols):
            if rows[r][c]:
                rest = cols[:idx] + cols[idx + 1:]
                total += sign * rows[r][c] * expand(r + 1, rest)
            sign = -sign
        cache[key] = total
        return total

    return expand(0, tuple(range(n)))


def gcd_of_minors(rows, k):
    """gcd of all k x k minors, minors computed by cofactor expansion."""
    nr, nc = len(rows), len(rows[0])
    g = 0
    for rsel in combinations(range(nr), k):
        for csel in combinations(range(nc), k):
            minor = det_cofactor([[rows[r][c] for c in csel] for r in rsel])
            g = gcd(g, minor)
    return g


def brute_dehn_colorings(d, p):
    """All Dehn colorings by exhausting p^(#regions) region assignments."""
    found = []
    for vals in product(range(p), repeat=len(d.regions)):
        c = DehnColoring(p, vals)
        if is_valid_coloring(d, c):
            found.append(c)
    return found


def brute_fox_count(d, p):
    """#Fox colorings by exhausting p^(#arcs) arc assignments."""
    count = 0
    crossings = d.pd.crossings
    arc = d.arc_of_semiarc
    for vals in product(range(p), repeat=len(d.arcs)):
        if all((vals[arc[a]] + vals[arc[c]] - 2 * vals[arc[b]]) % p == 0
               for a, b, c, _ in crossings):
            count += 1
    return count


def brute_r_witness_exists(g):
    """Exhaustive vertex-subset search for a connected label-closed
    subgraph with >= 3 vertices, using the maximal admissible edge set."""
    verts = sorted(g.vertices)
    for r in range(3, len(verts) + 1):
        for subset in combinations(verts, r):
            vs = set(subset)
            edges = [e for e, label in g.edges.items()
                     if e[0] in vs and e[1] in vs and label in vs]
            if _connected_spanning(vs, edges):
                return True
    return False


def _connected_spanning(vs, edges):
    if not vs:
        return False
    start = next(iter(vs))
    seen = {start}
    frontier = [start]
    while frontier:
        u = frontier.pop()
        for a, b in edges:
            for x, y in ((a, b), (b, a)):
                if x == u and y not in seen:
                    seen.add(y)
                    frontier.append(y)
    return seen == vs


def dividing_primes(det, limit=32):
    return [p for p in (3, 5, 7, 11, 13, 17, 19, 23, 29, 31)
            if p < limit and det % p == 0]


@pytest.fixture(scope="session")
def catalog():
    return {name: catalog_diagram(name) for name in CATALOG}
