# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled enumeration kernel for the brute-force Hilbert function oracle.

Same contract as ``_oracle_py.count_outside``.  Exponents and the total count
must fit in 64-bit integers; the caller enforces an enumeration cap well below
that.
"""

from libc.stdlib cimport free, malloc


cdef long long _compositions(long long total, int parts):
    # binomial(total + parts - 1, parts - 1), exact for capped inputs
    cdef long long result = 1
    cdef int i
    for i in range(1, parts):
        result = result * (total + i) // i
    return result


cdef long long _walk(int pos, int arity, long long rem,
                     long long* gens, int ngens,
                     char* active, char* scratch):
    cdef long long count = 0, e
    cdef int i, nactive
    if pos == arity - 1:
        for i in range(ngens):
            if active[i] and gens[i * arity + pos] <= rem:
                return 0
        return 1
    for e in range(rem + 1):
        nactive = 0
        for i in range(ngens):
            scratch[i] = 1 if (active[i] and gens[i * arity + pos] <= e) else 0
            nactive += scratch[i]
        if nactive == 0:
            count += _compositions(rem - e, arity - pos - 1)
        else:
            count += _walk(pos + 1, arity, rem - e, gens, ngens,
                           scratch, scratch + ngens)
    return count


def count_outside(int arity, long long degree, gens):
    """Count degree-``degree`` monomials in ``arity`` variables outside the
    ideal generated by ``gens`` (sequences of exponents)."""
    cdef int ngens = len(gens)
    cdef int i, j
    cdef long long result
    if arity == 1:
        for g in gens:
            if g[0] <= degree:
                return 0
        return 1
    cdef long long* flat = <long long*> malloc(ngens * arity * sizeof(long long))
    # one active-flag row per recursion level
    cdef char* flags = <char*> malloc((arity + 1) * max(ngens, 1) * sizeof(char))
    if (flat == NULL and ngens > 0) or flags == NULL:
        free(flat)
        free(flags)
        raise MemoryError()
    try:
        for i in range(ngens):
            for j in range(arity):
                flat[i * arity + j] = gens[i][j]
        for i in range(max(ngens, 1)):
            flags[i] = 1
        result = _walk(0, arity, degree, flat, ngens, flags, flags + max(ngens, 1))
    finally:
        free(flat)
        free(flags)
    return result
