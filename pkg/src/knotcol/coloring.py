"""Dehn colorings of a diagram: solution space, classification, affine
action, per-diagram minimum colors, the Fox correspondence, and the knot
determinant."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

from knotcol import exactalg
from knotcol.diagram import Diagram, checkerboard
from knotcol.exactalg import IntMatrix, _require_odd_prime

DEFAULT_BUDGET = 10 ** 6

ONE_TRIVIAL = "one_trivial"
TWO_TRIVIAL = "two_trivial"
NONTRIVIAL = "nontrivial"


class NotAColoringError(ValueError):
    pass


@dataclass(frozen=True)
class DehnColoring:
    p: int
    values: tuple  # region index -> residue

    def colors_used(self) -> frozenset:
        return frozenset(self.values)


@dataclass(frozen=True)
class ColoringClass:
    kind: str
    colors_used: frozenset


@dataclass(frozen=True)
class FoxColoring:
    p: int
    values: tuple  # arc index -> residue


def coloring_matrix(d: Diagram) -> IntMatrix:
    """n x (n+2) matrix of the crossing relations x1 - x2 + x3 - x4 = 0."""
    nreg = len(d.regions)
    rows = []
    for i in range(d.n):
        x1, x2, x3, x4 = d.crossing_relation_regions(i)
        row = [0] * nreg
        row[x1] += 1
        row[x3] += 1
        row[x2] -= 1
        row[x4] -= 1
        rows.append(row)
    return IntMatrix.from_rows(rows)


def is_valid_coloring(d: Diagram, c: DehnColoring) -> bool:
    if len(c.values) != len(d.regions):
        return False
    for i in range(d.n):
        x1, x2, x3, x4 = d.crossing_relation_regions(i)
        if (c.values[x1] + c.values[x3] - c.values[x2] - c.values[x4]) % c.p:
            return False
    return True


def checkerboard_coloring(d: Diagram, p: int) -> DehnColoring:
    """The 2-trivial coloring with image {0, 1} and region 0 colored 0."""
    return DehnColoring(p, checkerboard(d).shading)


@dataclass(frozen=True)
class ColoringSpace:
    p: int
    basis: tuple       # of DehnColoring
    dimension: int
    count: int
    enumerated: tuple  # all colorings, or () when count exceeds the budget


def colorings(d: Diagram, p: int, budget: int = DEFAULT_BUDGET) -> ColoringSpace:
    _require_odd_prime(p)
    basis = exactalg.nullspace_mod_p(coloring_matrix(d), p)
    dim = len(basis)
    count = p ** dim
    enumerated = ()
    if count <= budget:
        enumerated = tuple(
            DehnColoring(p, v) for v in _span(basis, p, len(d.regions))
        )
    return ColoringSpace(p, tuple(DehnColoring(p, b.entries) for b in basis),
                         dim, count, enumerated)


def _span(basis, p, width):
    vecs = [b.entries for b in basis]
    for coeffs in product(range(p), repeat=len(vecs)):
        yield tuple(
            sum(c * v[j] for c, v in zip(coeffs, vecs)) % p for j in range(width)
        )


def classify(d: Diagram, c: DehnColoring) -> ColoringClass:
    if not is_valid_coloring(d, c):
        raise NotAColoringError("not a coloring: a crossing relation fails")
    colors = c.colors_used()
    all_trivial = True
    for i in range(d.n):
        x1, x2, x3, x4 = d.crossing_relation_regions(i)
        if not (c.values[x1] % c.p == c.values[x4] % c.p
                and c.values[x2] % c.p == c.values[x3] % c.p):
            all_trivial = False
            break
    if all_trivial:
        return ColoringClass(ONE_TRIVIAL if len(colors) == 1 else TWO_TRIVIAL,
                             colors)
    return ColoringClass(NONTRIVIAL, colors)


def affine_transform(c: DehnColoring, s: int, t: int) -> DehnColoring:
    """Region-wise s*C + t; requires s invertible mod p."""
    if s % c.p == 0:
        raise ValueError("not a regular transformation: scale factor is 0 mod p")
    return DehnColoring(c.p, tuple((s * v + t) % c.p for v in c.values))


NO_NONTRIVIAL = "no nontrivial coloring"


@dataclass(frozen=True)
class MinColorsResult:
    min_colors: object  # int, or NO_NONTRIVIAL
    witness: DehnColoring | None
    lower_bound: int


def theorem_lower_bound(p: int) -> int:
    return math.floor(math.log2(p)) + 2


def min_colors_diagram(d: Diagram, p: int,
                       budget: int = DEFAULT_BUDGET) -> MinColorsResult:
    """Minimum #colors over the nontrivial colorings of this diagram.

    Falls back to one representative per affine class (region 0 pinned to
    0, first nonzero coordinate scaled to 1) when full enumeration would
    exceed the budget; the color count is an affine invariant, so the
    quotient loses nothing.
    """
    _require_odd_prime(p)
    space = colorings(d, p, budget=0)
    bound = theorem_lower_bound(p)
    if space.dimension <= 2:
        return MinColorsResult(NO_NONTRIVIAL, None, bound)
    nreg = len(d.regions)
    if p ** space.dimension <= budget:
        candidates = _span([exactalg.ModVector(p, b.values) for b in space.basis],
                           p, nreg)
    else:
        candidates = _affine_representatives(space, p, nreg)
    best = None
    witness = None
    for values in candidates:
        c = DehnColoring(p, values)
        if classify(d, c).kind != NONTRIVIAL:
            continue
        ncol = len(set(values))
        if best is None or (ncol, values) < (best, witness.values):
            best, witness = ncol, c
    if best is None:
        return MinColorsResult(NO_NONTRIVIAL, None, bound)
    return MinColorsResult(best, witness, bound)


def _affine_representatives(space: ColoringSpace, p: int, nreg: int):
    """Vectors with value 0 at region 0 and first nonzero coordinate 1."""
    # basis of the subspace vanishing at region 0: subtract the all-ones
    # direction (itself a coloring) from each basis vector
    shifted = []
    for b in space.basis:
        w = tuple((v - b.values[0]) % p for v in b.values)
        if any(w):
            shifted.append(w)
    # prune to an independent set mod p
    basis = []
    rows = []
    for w in shifted:
        if exactalg.rank_mod_p(rows + [list(w)], p) > len(basis):
            basis.append(exactalg.ModVector(p, w))
            rows.append(list(w))
    for values in _span(basis, p, nreg):
        first = next((v for v in values if v), None)
        if first == 1:
            yield values


def fox_from_dehn(d: Diagram, c: DehnColoring) -> FoxColoring:
    """Arc coloring: each arc gets the sum of the region colors across any
    of its semiarcs."""
    if not is_valid_coloring(d, c):
        raise NotAColoringError("not a coloring")
    values = []
    for arc in d.arcs:
        sums = set()
        for semiarc in arc:
            r1, r2 = d.semiarc_regions(semiarc)
            sums.add((c.values[r1] + c.values[r2]) % c.p)
        assert len(sums) == 1, "arc color is not constant along the arc"
        values.append(sums.pop())
    return FoxColoring(c.p, tuple(values))


def fox_is_valid(d: Diagram, f: FoxColoring) -> bool:
    for a, b, cc, dd in d.pd.crossings:
        u = d.arc_of_semiarc[a]
        u2 = d.arc_of_semiarc[cc]
        w = d.arc_of_semiarc[b]
        if (f.values[u] + f.values[u2] - 2 * f.values[w]) % f.p:
            return False
    return True


def fox_colorings_count(d: Diagram, p: int) -> int:
    """#Fox colorings, by rank of the arc relation system mod p."""
    _require_odd_prime(p)
    narcs = len(d.arcs)
    rows = []
    for a, b, cc, dd in d.pd.crossings:
        row = [0] * narcs
        row[d.arc_of_semiarc[a]] += 1
        row[d.arc_of_semiarc[cc]] += 1
        row[d.arc_of_semiarc[b]] -= 2
        rows.append(row)
    return p ** (narcs - exactalg.rank_mod_p(rows, p))


def alexander_matrix_at_minus_one(d: Diagram) -> IntMatrix:
    """The (n+1) x (n+2) coloring matrix augmented with the unit row e1."""
    base = coloring_matrix(d).row_list()
    extra = [0] * len(d.regions)
    extra[0] = 1
    return IntMatrix.from_rows(base + [extra])


def knot_determinant(d: Diagram) -> int:
    """gcd of the (n+1)-minors, via the product of invariant factors."""
    factors = exactalg.smith_invariant_factors(alexander_matrix_at_minus_one(d))
    det = 1
    for f in factors[:d.n + 1]:
        det *= f
    return det
