"""Determinant certificates for the minimum-color lower bound.

Given a nontrivially colored diagram, augment the coloring matrix with a
unit row (variant A) or a difference row (variant B), merge columns that
share a color, and extract a square submatrix whose exact determinant is a
nonzero multiple of p bounded by 2^(colors-1).  Together these force
#colors >= log2(p) + 1.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from knotcol import exactalg
from knotcol.coloring import (
    NONTRIVIAL,
    DehnColoring,
    alexander_matrix_at_minus_one,
    checkerboard_coloring,
    classify,
    coloring_matrix,
)
from knotcol.diagram import Diagram
from knotcol.exactalg import IntMatrix

VARIANT_A = "A"  # unit extra row, colors refine the checkerboard shading
VARIANT_B = "B"  # difference row e_i - e_j across the shading


class TrivialColoringError(ValueError):
    pass


class CertificateError(RuntimeError):
    pass


@dataclass(frozen=True)
class AugmentedMatrix:
    variant: str
    base: IntMatrix          # n x (n+2) coloring matrix
    extra_row: tuple
    indices: tuple           # (0,) for variant A, (i, j) for variant B
    coloring: DehnColoring   # variant A: shifted so region 0 has color 0

    def full(self) -> IntMatrix:
        return IntMatrix.from_rows(self.base.row_list() + [list(self.extra_row)])


@dataclass(frozen=True)
class Certificate:
    ell: int                 # number of colors
    merged: IntMatrix        # (n+1) x ell column-merged matrix
    row_indices: tuple
    col_indices: tuple
    det_value: int
    star_rows_ok: tuple      # per selected row of the submatrix
    violations: tuple        # human-readable invariant violations, if any


def augmented_matrix(d: Diagram, c: DehnColoring) -> AugmentedMatrix:
    if classify(d, c).kind != NONTRIVIAL:
        raise TrivialColoringError("certificate requires nontrivial coloring")
    p = c.p
    shading = checkerboard_coloring(d, p).values
    base = coloring_matrix(d)
    nreg = len(d.regions)
    # variant B applies when some color class crosses the shading
    pair = None
    for i, j in combinations(range(nreg), 2):
        if c.values[i] == c.values[j] and shading[i] != shading[j]:
            pair = (i, j)
            break
    if pair is None:
        shifted = DehnColoring(p, tuple((v - c.values[0]) % p for v in c.values))
        extra = [0] * nreg
        extra[0] = 1
        return AugmentedMatrix(VARIANT_A, base, tuple(extra), (0,), shifted)
    extra = [0] * nreg
    extra[pair[0]] = 1
    extra[pair[1]] = -1
    return AugmentedMatrix(VARIANT_B, base, tuple(extra), pair, c)


@dataclass(frozen=True)
class RankCheck:
    claim: str
    ok: bool
    detail: str


def rank_checks(d: Diagram, c: DehnColoring, p: int) -> list:
    """Verify the rank statements for M, A_D(-1), and B on this instance."""
    if c.p != p:
        raise ValueError("coloring modulus does not match p")
    if classify(d, c).kind != NONTRIVIAL:
        raise TrivialColoringError("rank checks require a nontrivial coloring")
    n = d.n
    m = coloring_matrix(d)
    report = []

    rz = exactalg.rank_int(m)
    report.append(RankCheck("rank_Z M = n", rz == n, f"rank_Z M = {rz}, n = {n}"))
    rp = exactalg.rank_mod_p(m, p)
    report.append(RankCheck("rank_p M <= n-1", rp <= n - 1,
                            f"rank_{p} M = {rp}, n-1 = {n - 1}"))

    a = alexander_matrix_at_minus_one(d)
    rza = exactalg.rank_int(a)
    report.append(RankCheck("rank_Z A = n+1", rza == n + 1,
                            f"rank_Z A = {rza}, n+1 = {n + 1}"))
    rpa = exactalg.rank_mod_p(a, p)
    report.append(RankCheck("rank_p A <= n", rpa <= n,
                            f"rank_{p} A = {rpa}, n = {n}"))

    aug = augmented_matrix(d, c)
    if aug.variant == VARIANT_B:
        b = aug.full()
        rzb = exactalg.rank_int(b)
        report.append(RankCheck("rank_Z B = n+1", rzb == n + 1,
                                f"rank_Z B = {rzb}, n+1 = {n + 1}"))
        rpb = exactalg.rank_mod_p(b, p)
        report.append(RankCheck("rank_p B <= n", rpb <= n,
                                f"rank_{p} B = {rpb}, n = {n}"))
    return report


def merge_columns(m: AugmentedMatrix, c: DehnColoring | None = None) -> IntMatrix:
    """Sum together the columns of regions sharing a color.

    Output columns are ordered by increasing color value, so the merged
    matrix has one column per color used.
    """
    if c is None:
        c = m.coloring
    rows = m.full().row_list()
    colors = sorted(set(c.values))
    merged = []
    for row in rows:
        merged.append([
            sum(e for e, v in zip(row, c.values) if v == color)
            for color in colors
        ])
    return IntMatrix.from_rows(merged)


def extract_certificate(d: Diagram, c: DehnColoring, p: int) -> Certificate:
    if c.p != p:
        raise ValueError("coloring modulus does not match p")
    aug = augmented_matrix(d, c)
    m2 = merge_columns(aug)
    rows = m2.row_list()
    ell = m2.cols
    k = ell - 1
    for cols in combinations(range(ell), k):
        for rsel in combinations(range(m2.rows), k):
            sub = [[rows[r][cc] for cc in cols] for r in rsel]
            det = exactalg.det_int(sub)
            if det == 0:
                continue
            violations = []
            if det % p != 0:
                violations.append(f"det {det} not divisible by p={p}")
            if not (p <= abs(det) <= 2 ** k):
                violations.append(
                    f"|det| = {abs(det)} outside [{p}, 2^{k} = {2 ** k}]"
                )
            star = tuple(check_star(sub))
            if not all(star):
                violations.append("a selected row violates the multiset condition")
            return Certificate(ell, m2, rsel, cols, det, star, tuple(violations))
    raise CertificateError(
        "certificate extraction failed: no nonsingular submatrix found"
    )


# admissible nonzero-entry multisets; rows drawn from these keep the
# determinant of an order-k matrix within 2**k in absolute value
STAR_MULTISETS = frozenset({
    (-2,), (-1,), (1,), (2,),
    (-2, 1), (-2, 2), (-1, -1), (-1, 1), (-1, 2), (1, 1),
    (-2, 1, 1), (-1, -1, 1), (-1, -1, 2), (-1, 1, 1),
    (-1, -1, 1, 1),
})


def check_star(m) -> list:
    """Per-row test: nonzero entries form one of the admissible multisets.

    A zero row passes vacuously (its determinant contribution is 0).
    """
    result = []
    for row in exactalg._rows_of(m):
        nonzero = tuple(sorted(e for e in row if e))
        result.append(nonzero == () or nonzero in STAR_MULTISETS)
    return result


def random_star_matrix(k: int, seed: int) -> IntMatrix:
    """Random order-k matrix whose rows all satisfy the multiset condition."""
    if k < 1:
        raise ValueError("order must be >= 1")
    rng = random.Random(seed)
    choices = sorted(ms for ms in STAR_MULTISETS if len(ms) <= k)
    rows = []
    for _ in range(k):
        ms = list(rng.choice(choices))
        rng.shuffle(ms)
        positions = rng.sample(range(k), len(ms))
        row = [0] * k
        for pos, e in zip(positions, ms):
            row[pos] = e
        rows.append(row)
    return IntMatrix.from_rows(rows)
