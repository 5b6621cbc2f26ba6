# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the hot kernels in _fallback.py.

canonical_affine_min dominates the candidate-table sweep; det_bareiss_small
dominates the random bounded-determinant campaign.  Both are exact integer
routines; det_bareiss_small assumes the caller gated order/entry size so
that Bareiss intermediates fit in int64.
"""

from libc.string cimport memcpy

DEF MAXK = 64


cdef void _insertion_sort(long long *a, int k) noexcept nogil:
    cdef int i, j
    cdef long long v
    for i in range(1, k):
        v = a[i]
        j = i - 1
        while j >= 0 and a[j] > v:
            a[j + 1] = a[j]
            j -= 1
        a[j + 1] = v


def canonical_affine_min(elems, int p):
    """Lex-min sorted image of elems under x -> s*x + t over all units s."""
    cdef int k = len(elems)
    if k > MAXK:
        raise ValueError("too many elements")
    cdef long long base[MAXK]
    cdef long long img[MAXK]
    cdef long long best[MAXK]
    cdef int i, ei, s
    cdef long long e
    cdef bint have_best = False, smaller
    for i in range(k):
        base[i] = elems[i]
    for s in range(1, p):
        for ei in range(k):
            e = base[ei]
            for i in range(k):
                img[i] = (s * (base[i] - e)) % p
                if img[i] < 0:
                    img[i] += p
            _insertion_sort(img, k)
            if not have_best:
                memcpy(best, img, k * sizeof(long long))
                have_best = True
                continue
            smaller = False
            for i in range(k):
                if img[i] != best[i]:
                    smaller = img[i] < best[i]
                    break
            if smaller:
                memcpy(best, img, k * sizeof(long long))
    return tuple(best[i] for i in range(k))


def det_bareiss_small(flat, int k):
    """Bareiss determinant of a small k x k integer matrix (row-major)."""
    cdef long long a[MAXK * MAXK]
    cdef int i, j, col, piv
    cdef long long sign = 1, prev = 1, tmp
    if k > MAXK:
        raise ValueError("matrix too large for compiled kernel")
    for i in range(k * k):
        a[i] = flat[i]
    for col in range(k - 1):
        if a[col * k + col] == 0:
            piv = -1
            for i in range(col + 1, k):
                if a[i * k + col] != 0:
                    piv = i
                    break
            if piv < 0:
                return 0
            for j in range(k):
                tmp = a[col * k + j]
                a[col * k + j] = a[piv * k + j]
                a[piv * k + j] = tmp
            sign = -sign
        for i in range(col + 1, k):
            for j in range(col + 1, k):
                a[i * k + j] = (a[i * k + j] * a[col * k + col]
                                - a[i * k + col] * a[col * k + j]) // prev
            a[i * k + col] = 0
        prev = a[col * k + col]
    return int(sign * a[(k - 1) * k + (k - 1)])
