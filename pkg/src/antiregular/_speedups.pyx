# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled subset-enumeration kernel; mirrors kernels._independence_counts_py."""

from libc.stdlib cimport free, malloc

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    #define AR_POPCOUNT64(x) __builtin_popcountll(x)
    #else
    static int AR_POPCOUNT64(unsigned long long x) {
        int c = 0;
        while (x) { x &= x - 1; c++; }
        return c;
    }
    #endif
    """
    int AR_POPCOUNT64(unsigned long long) nogil


def independence_counts(int n, masks):
    """Count subsets of {0..n-1} containing no edge mask, by subset size."""
    if n < 0 or n > 30:
        raise ValueError("kernel supports 0 <= n <= 30")
    cdef Py_ssize_t m = len(masks)
    cdef Py_ssize_t j
    cdef unsigned long long *em = <unsigned long long *> malloc(
        (m if m else 1) * sizeof(unsigned long long))
    if em == NULL:
        raise MemoryError()
    cdef long long counts[31]
    cdef unsigned long long w, e, full
    cdef bint ok
    try:
        for j in range(m):
            em[j] = masks[j]
        for j in range(31):
            counts[j] = 0
        full = (<unsigned long long> 1) << n
        with nogil:
            w = 0
            while w < full:
                ok = True
                for j in range(m):
                    e = em[j]
                    if (w & e) == e:
                        ok = False
                        break
                if ok:
                    counts[AR_POPCOUNT64(w)] += 1
                w += 1
        return [counts[j] for j in range(n + 1)]
    finally:
        free(em)
