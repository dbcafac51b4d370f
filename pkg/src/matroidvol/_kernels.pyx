# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot loops; ``_kernels_py`` is the reference."""

from libc.stdlib cimport malloc, free
from libc.string cimport memset


def rank_table(bases, int ground_size):
    """Rank of every subset of ``range(ground_size)``, indexed by bitmask."""
    cdef Py_ssize_t size = (<Py_ssize_t>1) << ground_size
    cdef Py_ssize_t mask, rest, low, m, r, best
    cdef unsigned char *indep = <unsigned char *>malloc(size)
    cdef int *rank = <int *>malloc(size * sizeof(int))
    if indep == NULL or rank == NULL:
        free(indep)
        free(rank)
        raise MemoryError()
    try:
        memset(indep, 0, size)
        for b in bases:
            indep[<Py_ssize_t>b] = 1
        with nogil:
            mask = size - 1
            while mask >= 0:
                if not indep[mask]:
                    rest = ~mask & (size - 1)
                    while rest:
                        low = rest & -rest
                        if indep[mask | low]:
                            indep[mask] = 1
                            break
                        rest ^= low
                mask -= 1
            rank[0] = 0
            for mask in range(1, size):
                if indep[mask]:
                    r = 0
                    m = mask
                    while m:
                        m &= m - 1
                        r += 1
                    rank[mask] = r
                else:
                    best = 0
                    m = mask
                    while m:
                        low = m & -m
                        if rank[mask ^ low] > best:
                            best = rank[mask ^ low]
                        m ^= low
                    rank[mask] = best
        return [rank[i] for i in range(size)]
    finally:
        free(indep)
        free(rank)


cdef int _bisect(unsigned long long *arr, Py_ssize_t n, unsigned long long key) noexcept nogil:
    cdef Py_ssize_t lo = 0, hi = n, mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if arr[mid] < key:
            lo = mid + 1
        else:
            hi = mid
    return lo < n and arr[lo] == key


def exchange_violation(bases):
    """First ``(B1, B2, x)`` violating basis exchange, or ``None``."""
    ordered = sorted(set(bases))
    cdef Py_ssize_t n = len(ordered)
    cdef unsigned long long *arr = <unsigned long long *>malloc(max(n, 1) * sizeof(unsigned long long))
    if arr == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j
    cdef unsigned long long b1, b2, only1, only2, x, y, xs, ys, base
    cdef int found
    cdef Py_ssize_t bad_i = -1, bad_j = -1
    cdef unsigned long long bad_x = 0
    try:
        for i in range(n):
            arr[i] = ordered[i]
        with nogil:
            for i in range(n):
                b1 = arr[i]
                for j in range(n):
                    if i == j:
                        continue
                    b2 = arr[j]
                    only1 = b1 & ~b2
                    only2 = b2 & ~b1
                    xs = only1
                    while xs:
                        x = xs & (~xs + 1)
                        xs ^= x
                        base = b1 ^ x
                        found = 0
                        ys = only2
                        while ys:
                            y = ys & (~ys + 1)
                            ys ^= y
                            if _bisect(arr, n, base | y):
                                found = 1
                                break
                        if not found:
                            bad_i = i
                            bad_j = j
                            bad_x = x
                            break
                    if bad_i >= 0:
                        break
                if bad_i >= 0:
                    break
        if bad_i < 0:
            return None
        return ordered[bad_i], ordered[bad_j], (<object>bad_x).bit_length() - 1
    finally:
        free(arr)


cdef struct _Search:
    int m
    long long t
    long long *partial
    long long *bounds
    int *start
    int *items


cdef long long _count(_Search *s, int k, long long rem) noexcept nogil:
    cdef int a, b, idx
    cdef long long v, lo, hi, count = 0
    cdef int ok
    a = s.start[k]
    b = s.start[k + 1]
    if k == s.m - 1:
        if rem > s.t:
            return 0
        for idx in range(a, b):
            if s.partial[s.items[idx]] + rem > s.bounds[s.items[idx]]:
                return 0
        return 1
    lo = rem - s.t * (s.m - k - 1)
    if lo < 0:
        lo = 0
    hi = rem if rem < s.t else s.t
    v = lo
    while v <= hi:
        ok = 1
        for idx in range(a, b):
            if s.partial[s.items[idx]] + v > s.bounds[s.items[idx]]:
                ok = 0
                break
        if not ok:
            break
        for idx in range(a, b):
            s.partial[s.items[idx]] += v
        count += _count(s, k + 1, rem - v)
        for idx in range(a, b):
            s.partial[s.items[idx]] -= v
        v += 1
    return count


def count_lattice_points(int ground_size, long long t, long long total, masks, bounds):
    """Count integer ``x`` with ``0 <= x_i <= t``, ``sum x = total`` and ``x(F) <= bound`` per mask."""
    cdef int m = ground_size
    if m == 0:
        return 1 if total == 0 else 0
    if total < 0 or total > t * m:
        return 0
    masks = list(masks)
    bounds = list(bounds)
    cdef int nc = len(masks)
    by_elem = [[j for j in range(nc) if (masks[j] >> e) & 1] for e in range(m)]
    cdef int n_items = sum(len(lst) for lst in by_elem)
    cdef _Search s
    cdef long long result
    cdef int e, pos
    s.m = m
    s.t = t
    s.partial = <long long *>malloc(max(nc, 1) * sizeof(long long))
    s.bounds = <long long *>malloc(max(nc, 1) * sizeof(long long))
    s.start = <int *>malloc((m + 1) * sizeof(int))
    s.items = <int *>malloc(max(n_items, 1) * sizeof(int))
    if s.partial == NULL or s.bounds == NULL or s.start == NULL or s.items == NULL:
        free(s.partial)
        free(s.bounds)
        free(s.start)
        free(s.items)
        raise MemoryError()
    try:
        for e in range(nc):
            s.partial[e] = 0
            s.bounds[e] = bounds[e]
        pos = 0
        for e in range(m):
            s.start[e] = pos
            for j in by_elem[e]:
                s.items[pos] = j
                pos += 1
        s.start[m] = pos
        with nogil:
            result = _count(&s, 0, total)
        return result
    finally:
        free(s.partial)
        free(s.bounds)
        free(s.start)
        free(s.items)
