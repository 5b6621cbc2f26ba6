"""PD codes and the combinatorial structure of knot diagrams.

A PD code lists one quadruple of semiarc labels per crossing, given
counterclockwise starting at the incoming under-strand; positions 0 and 2
carry the under-strand, positions 1 and 3 the over-strand.  From the code
we recover regions (faces of the 4-valent plane graph), over-arcs, the
quadrant incidence at each crossing, and the checkerboard shading.

A dart is one of the two slot occurrences of a semiarc, written
(crossing index, position).  Faces are the orbits of "cross the semiarc,
then rotate one position counterclockwise", which for a planar code yields
exactly n + 2 faces.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field


class PDError(ValueError):
    pass


@dataclass(frozen=True)
class PDCode:
    crossings: tuple  # tuple of 4-tuples of semiarc labels

    @property
    def n(self) -> int:
        return len(self.crossings)

    def semiarcs(self):
        return sorted({a for q in self.crossings for a in q})


def parse_pd(text: str) -> PDCode:
    """Parse `X[a,b,c,d] ...` or a JSON array of 4-element arrays."""
    text = text.strip()
    if text.startswith("["):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise PDError(f"cannot parse PD JSON: {e}") from e
        if not isinstance(data, list) or not all(isinstance(q, list) for q in data):
            raise PDError("PD JSON must be an array of 4-element arrays")
        quads = data
    else:
        found = re.findall(r"X\s*\[([^\]]*)\]", text)
        if not found or re.sub(r"X\s*\[[^\]]*\]|[\s,;]", "", text):
            raise PDError("cannot parse PD text")
        quads = [[int(x) for x in grp.split(",")] for grp in found]
    for q in quads:
        if len(q) != 4:
            raise PDError(f"crossing {q} does not have 4 semiarc labels")
        if not all(isinstance(x, int) for x in q):
            raise PDError(f"non-integer semiarc label in {q}")
    return validate_pd(PDCode(tuple(tuple(q) for q in quads)))


def validate_pd(pd: PDCode) -> PDCode:
    counts = {}
    for q in pd.crossings:
        for a in q:
            counts[a] = counts.get(a, 0) + 1
    bad = [a for a, c in counts.items() if c != 2]
    if bad:
        raise PDError(f"invalid PD code: labels {sorted(bad)} do not appear exactly twice")
    if len(counts) != 2 * pd.n:
        raise PDError(
            f"invalid PD code: {len(counts)} semiarc labels for {pd.n} crossings"
        )
    _require_single_component(pd)
    return pd


def _require_single_component(pd: PDCode) -> None:
    # strand continuation joins positions 0-2 (under) and 1-3 (over)
    parent = {a: a for a in pd.semiarcs()}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b, c, d in pd.crossings:
        parent[find(a)] = find(c)
        parent[find(b)] = find(d)
    roots = {find(a) for a in parent}
    if len(roots) != 1:
        raise PDError(
            f"PD code describes a link with {len(roots)} components; only knots are supported"
        )


@dataclass(frozen=True)
class Diagram:
    pd: PDCode
    regions: tuple       # each region: tuple of darts (crossing, position)
    region_of_dart: dict  # dart -> region index
    arcs: tuple          # each arc: frozenset of semiarc labels
    arc_of_semiarc: dict  # semiarc label -> arc index
    quadrants: tuple     # per crossing: (q01, q12, q23, q30) region indices

    @property
    def n(self) -> int:
        return self.pd.n

    def semiarc_regions(self, semiarc: int):
        """The two region indices on either side of a semiarc."""
        darts = [d for d in self.region_of_dart if self.pd.crossings[d[0]][d[1]] == semiarc]
        return tuple(self.region_of_dart[d] for d in sorted(darts))

    def crossing_relation_regions(self, i: int):
        """Regions (x1, x2, x3, x4) at crossing i with x1+x3 = x2+x4.

        q30 and q01 flank the incoming under semiarc; q01/q12 lie on one
        side of the under-strand and q23/q30 on the other.
        """
        q01, q12, q23, q30 = self.quadrants[i]
        return (q01, q30, q12, q23)


def build_diagram(pd: PDCode) -> Diagram:
    n = pd.n
    # pair up the two darts of each semiarc
    occurrences = {}
    for ci, quad in enumerate(pd.crossings):
        for pos, label in enumerate(quad):
            occurrences.setdefault(label, []).append((ci, pos))
    other = {}
    for label, darts in occurrences.items():
        (d1, d2) = darts
        other[d1] = d2
        other[d2] = d1

    # face traversal: next dart = rotate(other(dart))
    seen = set()
    faces = []
    for start in sorted(other):
        if start in seen:
            continue
        face = []
        d = start
        while d not in seen:
            seen.add(d)
            face.append(d)
            c2, p2 = other[d]
            d = (c2, (p2 + 1) % 4)
        if d != start:
            raise PDError("non-planar or corrupt PD code: face traversal did not close")
        faces.append(tuple(face))
    if len(faces) != n + 2:
        raise PDError(
            f"non-planar or corrupt PD code: {len(faces)} faces, expected {n + 2}"
        )

    # deterministic region order: sort by minimal (semiarc label, side) slot
    def side(dart):
        c, p = dart
        label = pd.crossings[c][p]
        return 0 if dart == min(occurrences[label]) else 1

    def face_key(face):
        return min((pd.crossings[c][p], side((c, p))) for c, p in face)

    faces.sort(key=face_key)
    region_of_dart = {}
    for ri, face in enumerate(faces):
        for d in face:
            region_of_dart[d] = ri

    # over-arcs: semiarcs at positions 1 and 3 of a crossing belong to one arc
    labels = pd.semiarcs()
    parent = {a: a for a in labels}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for quad in pd.crossings:
        parent[find(quad[1])] = find(quad[3])
    groups = {}
    for a in labels:
        groups.setdefault(find(a), []).append(a)
    arcs = tuple(frozenset(g) for _, g in sorted(groups.items()))
    arc_of_semiarc = {a: i for i, g in enumerate(arcs) for a in g}

    # the face orbit reaching dart (c, p+1) turns through the corner
    # between positions p and p+1, so that corner lies in its face
    quadrants = []
    for ci in range(n):
        quadrants.append(tuple(
            region_of_dart[(ci, (p + 1) % 4)] for p in range(4)
        ))

    return Diagram(pd, tuple(faces), region_of_dart, arcs, arc_of_semiarc,
                   tuple(quadrants))


@dataclass(frozen=True)
class Checkerboard:
    shading: tuple  # region index -> 0 or 1


def checkerboard(d: Diagram) -> Checkerboard:
    """Proper 2-shading of the regions, with region 0 shaded 0."""
    shade = [None] * len(d.regions)
    shade[0] = 0
    queue = [0]
    adjacency = [[] for _ in d.regions]
    for label in d.pd.semiarcs():
        r1, r2 = d.semiarc_regions(label)
        adjacency[r1].append(r2)
        adjacency[r2].append(r1)
    while queue:
        r = queue.pop()
        for nb in adjacency[r]:
            if shade[nb] is None:
                shade[nb] = 1 - shade[r]
                queue.append(nb)
            elif shade[nb] == shade[r]:
                raise PDError("diagram not checkerboard-colorable; corrupt input")
    if any(s is None for s in shade):
        raise PDError("disconnected region adjacency; corrupt input")
    return Checkerboard(tuple(shade))


# Small-knot PD codes from standard tables.  Each entry is validated at
# import by region count and by its classical determinant (see tests).
CATALOG = {
    "3_1": "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]",
    "4_1": "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]",
    "5_1": "X[1,6,2,7] X[3,8,4,9] X[5,10,6,1] X[7,2,8,3] X[9,4,10,5]",
    "5_2": "X[1,4,2,5] X[3,8,4,9] X[5,10,6,1] X[9,6,10,7] X[7,2,8,3]",
    "6_1": "X[1,4,2,5] X[7,10,8,11] X[3,9,4,8] X[9,3,10,2] X[5,12,6,1] X[11,6,12,7]",
    "6_2": "X[1,4,2,5] X[5,10,6,11] X[3,9,4,8] X[9,3,10,2] X[7,12,8,1] X[11,6,12,7]",
    "6_3": "X[4,2,5,1] X[8,4,9,3] X[12,9,1,10] X[10,5,11,6] X[6,11,7,12] X[2,8,3,7]",
    "7_1": ("X[1,8,2,9] X[3,10,4,11] X[5,12,6,13] X[7,14,8,1] "
            "X[9,2,10,3] X[11,4,12,5] X[13,6,14,7]"),
    # 7_4 written as the pretzel P(3,1,3)
    "7_4": ("X[14,9,1,10] X[8,1,9,2] X[2,7,3,8] X[10,3,11,4] "
            "X[4,13,5,14] X[12,5,13,6] X[6,11,7,12]"),
}

# classical determinants, used to validate the catalog
CATALOG_DETERMINANTS = {
    "3_1": 3, "4_1": 5, "5_1": 5, "5_2": 7, "6_1": 9,
    "6_2": 11, "6_3": 13, "7_1": 7, "7_4": 15,
}


def catalog_diagram(name: str) -> Diagram:
    if name not in CATALOG:
        raise KeyError(f"unknown catalog knot {name!r}; available: {sorted(CATALOG)}")
    return build_diagram(parse_pd(CATALOG[name]))
