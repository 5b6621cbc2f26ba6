"""Pure-Python implementations of the hot kernels.

Used when the compiled extension is unavailable or when KNOTCOL_PURE=1.
Semantics must match knotcol._kernels._speedups exactly; the test suite
compares the two backends on random inputs.
"""


def canonical_affine_min(elems, p):
    """Lexicographically smallest sorted image of elems under x -> s*x + t.

    The minimum always starts with 0, so it suffices to scan s over the
    units and align each element to 0 instead of scanning all p values
    of t.
    """
    best = None
    for s in range(1, p):
        for e in elems:
            img = sorted((s * (x - e)) % p for x in elems)
            if best is None or img < best:
                best = img
    return tuple(best)


def det_bareiss_small(flat, k):
    """Bareiss determinant of a k x k matrix given row-major as flat.

    Exact for any integer entries here; the compiled twin is only safe
    for small orders/entries, which callers must gate on.
    """
    a = [list(flat[i * k:(i + 1) * k]) for i in range(k)]
    sign = 1
    prev = 1
    for col in range(k - 1):
        if a[col][col] == 0:
            piv = next((i for i in range(col + 1, k) if a[i][col]), None)
            if piv is None:
                return 0
            a[col], a[piv] = a[piv], a[col]
            sign = -sign
        for i in range(col + 1, k):
            for j in range(col + 1, k):
                a[i][j] = (a[i][j] * a[col][col] - a[i][col] * a[col][j]) // prev
            a[i][col] = 0
        prev = a[col][col]
    return sign * a[k - 1][k - 1]
