# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the hot inner loops.

Exact mirror of `cyclat._pykernels`; see that module for the data
layout conventions.  Inputs small enough for C stack buffers (n is
bounded by the enumeration cap, far below MAXN).
"""

from libc.stdlib cimport free, malloc

DEF MAXN = 64
DEF MAXPAIRS = 2016  # MAXN * (MAXN - 1) // 2

BACKEND = "cython"


cdef inline void _check_n(int n) except *:
    if n > MAXN:
        raise ValueError(f"compiled kernels support n <= {MAXN}, got {n}")


cpdef int pair_index(int n, int i, int j):
    """Flat index of the pair (i, j), 1 <= i < j <= n."""
    return (i - 1) * (2 * n - i) // 2 + (j - i - 1)


cpdef tuple canonical_rotation(tuple word):
    """The unique rotation of `word` beginning with the letter 1."""
    cdef int k = word.index(1)
    return word[k:] + word[:k]


cpdef int word_rank(tuple word):
    """Signed inversion count grading the circular-permutation order."""
    cdef int n = len(word)
    _check_n(n)
    cdef int pos[MAXN + 1]
    cdef int p, i, j, k
    cdef int total = 0, inversions = 0
    for p in range(n):
        pos[<int> word[p]] = p
    for k in range(1, n):
        if pos[k + 1] < pos[k]:
            total += k * (n - k)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if pos[j] < pos[i]:
                inversions += 1
    return total - inversions


cpdef tuple word_vector(tuple word):
    """Flat triangular vector of `word` (rotation-invariant)."""
    cdef int n = len(word)
    _check_n(n)
    cdef int pos[MAXN + 1]
    cdef int cum[MAXN + 1]
    cdef int p, i, j, gamma
    for p in range(n):
        pos[<int> word[p]] = p
    cum[0] = 0
    for p in range(1, n):
        cum[p] = cum[p - 1] + (1 if pos[p + 1] < pos[p] else 0)
    cum[n] = cum[n - 1]
    out = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            gamma = 1 if pos[j] < pos[i] else 0
            out.append(-gamma + cum[j - 1] - cum[i - 1])
    return tuple(out)


cpdef tuple word_descent_labels(tuple word):
    """Labels (r, s) of the large circular descents of (word)."""
    cdef int n = len(word)
    cdef int t, r, s
    labels = []
    for t in range(n):
        s = <int> word[t]
        r = <int> word[(t + 1) % n]
        if s > r + 1:
            labels.append((r, s))
    labels.sort()
    return tuple(labels)


cpdef tuple word_ascent_labels(tuple word):
    """Labels (r, s) of the large circular ascents of (word)."""
    cdef int n = len(word)
    cdef int t, r, s
    labels = []
    for t in range(n):
        r = <int> word[t]
        s = <int> word[(t + 1) % n]
        if s > r + 1:
            labels.append((r, s))
    labels.sort()
    return tuple(labels)


cdef tuple _swap_cyclic(tuple word, int t):
    cdef int n = len(word)
    cdef int t2 = (t + 1) % n
    u = list(word)
    u[t], u[t2] = u[t2], u[t]
    cdef int k = u.index(1)
    return tuple(u[k:] + u[:k])


cpdef tuple word_covers_up(tuple word):
    """All ((r, s), word') with (word) -> (word'), sorted by label."""
    cdef int n = len(word)
    cdef int t, r, s
    results = []
    for t in range(n):
        s = <int> word[t]
        r = <int> word[(t + 1) % n]
        if s > r + 1:
            results.append((r, s, _swap_cyclic(word, t)))
    results.sort()
    return tuple(results)


cpdef tuple word_covers_down(tuple word):
    """All ((r, s), word') with (word') -> (word), sorted by label."""
    cdef int n = len(word)
    cdef int t, r, s
    results = []
    for t in range(n):
        r = <int> word[t]
        s = <int> word[(t + 1) % n]
        if s > r + 1:
            results.append((r, s, _swap_cyclic(word, t)))
    results.sort()
    return tuple(results)


cpdef int descent_count(tuple word):
    """Number of large circular descents of (word)."""
    cdef int n = len(word)
    cdef int t, count = 0
    for t in range(n):
        if <int> word[t] > <int> word[(t + 1) % n] + 1:
            count += 1
    return count


cpdef tuple join_flat(int n, tuple u, tuple v):
    """Least upper bound of two flat admitted vectors."""
    _check_n(n)
    cdef int buf[MAXPAIRS]
    cdef int d, i, j, p, ij, best, cand
    cdef int size = n * (n - 1) // 2
    for ij in range(size):
        buf[ij] = 0
    for d in range(2, n):
        for i in range(1, n - d + 1):
            j = i + d
            ij = pair_index(n, i, j)
            best = <int> u[ij]
            cand = <int> v[ij]
            if cand > best:
                best = cand
            for p in range(i + 1, j):
                cand = buf[pair_index(n, i, p)] + buf[pair_index(n, p, j)]
                if cand > best:
                    best = cand
            buf[ij] = best
    return tuple([buf[ij] for ij in range(size)])


cpdef tuple meet_flat(int n, tuple u, tuple v):
    """Greatest lower bound of two flat admitted vectors."""
    _check_n(n)
    cdef int buf[MAXPAIRS]
    cdef int d, i, j, p, ij, best, cand
    cdef int size = n * (n - 1) // 2
    for ij in range(size):
        buf[ij] = 0
    for d in range(2, n):
        for i in range(1, n - d + 1):
            j = i + d
            ij = pair_index(n, i, j)
            best = <int> u[ij]
            cand = <int> v[ij]
            if cand < best:
                best = cand
            for p in range(i + 1, j):
                cand = buf[pair_index(n, i, p)] + buf[pair_index(n, p, j)] + 1
                if cand < best:
                    best = cand
            buf[ij] = best
    return tuple([buf[ij] for ij in range(size)])


cpdef bint leq_flat(tuple u, tuple v):
    """Componentwise u <= v."""
    cdef Py_ssize_t t
    for t in range(len(u)):
        if <int> u[t] > <int> v[t]:
            return False
    return True


cpdef bint is_admitted_flat(int n, tuple v):
    """True iff v has zero adjacent entries and all triple defects in {0, 1}."""
    _check_n(n)
    cdef int buf[MAXPAIRS]
    cdef int i, j, k, d
    cdef int size = n * (n - 1) // 2
    for i in range(size):
        buf[i] = <int> v[i]
    for i in range(1, n):
        if buf[pair_index(n, i, i + 1)] != 0:
            return False
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for k in range(j + 1, n + 1):
                d = (buf[pair_index(n, i, k)] - buf[pair_index(n, i, j)]
                     - buf[pair_index(n, j, k)])
                if d != 0 and d != 1:
                    return False
    return True


cpdef object sd_scan(tuple joins, tuple meets):
    """First semidistributivity violation in the given join/meet tables.

    Same scan order and result convention as the pure mirror.
    """
    cdef int size = len(joins)
    cdef int *J = <int *> malloc(size * size * sizeof(int))
    cdef int *M = <int *> malloc(size * size * sizeof(int))
    if J == NULL or M == NULL:
        free(J)
        free(M)
        raise MemoryError()
    cdef int x, y, z, jxy, mxy
    cdef object witness = None
    try:
        for x in range(size):
            row_j = joins[x]
            row_m = meets[x]
            for y in range(size):
                J[x * size + y] = <int> row_j[y]
                M[x * size + y] = <int> row_m[y]
        for x in range(size):
            for y in range(size):
                jxy = J[x * size + y]
                mxy = M[x * size + y]
                for z in range(size):
                    if J[x * size + z] == jxy and \
                            J[x * size + M[y * size + z]] != jxy:
                        witness = (x, y, z, "SD-join")
                        return witness
                    if M[x * size + z] == mxy and \
                            M[x * size + J[y * size + z]] != mxy:
                        witness = (x, y, z, "SD-meet")
                        return witness
        return None
    finally:
        free(J)
        free(M)
