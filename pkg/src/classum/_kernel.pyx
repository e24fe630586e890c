# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Word-size cyclic convolution kernels.

Coefficients are nonnegative integers below the modulus.  With the limits
enforced by supports() (modulus <= 2^57, length <= 8192) the accumulated
convolution sum stays below 2^127, so one unsigned-128-bit accumulator and a
single reduction per output coefficient suffice.
"""

from libc.stdlib cimport free, malloc

cdef extern from *:
    ctypedef unsigned long long u128 "unsigned __int128"

ctypedef unsigned long long u64

MODULUS_LIMIT = 1 << 57
LENGTH_LIMIT = 8192


def supports(length, modulus):
    """True when the compiled path can run this ring exactly."""
    return 0 < length <= LENGTH_LIMIT and 0 < modulus <= MODULUS_LIMIT


cdef void _conv(u64* out, const u64* u, const u64* v, Py_ssize_t m, u64 M) noexcept nogil:
    cdef Py_ssize_t i, j, k
    cdef u128 acc
    for k in range(m):
        acc = 0
        j = k
        for i in range(m):
            acc += <u128> u[i] * <u128> v[j]
            j -= 1
            if j < 0:
                j += m
        out[k] = <u64> (acc % M)


cdef u64* _alloc(Py_ssize_t m) except NULL:
    cdef u64* buf = <u64*> malloc(m * sizeof(u64))
    if buf == NULL:
        raise MemoryError()
    return buf


cdef void _fill(u64* buf, seq, Py_ssize_t m):
    cdef Py_ssize_t i
    for i in range(m):
        buf[i] = seq[i]


def cyclic_mul(u, v, modulus):
    """Product of two coefficient sequences in (Z/modulus)[x]/(x^m - 1)."""
    cdef Py_ssize_t m = len(u)
    cdef Py_ssize_t i
    if len(v) != m:
        raise ValueError("operands differ in length")
    cdef u64 M = modulus
    cdef u64* a = NULL
    cdef u64* b = NULL
    cdef u64* out = NULL
    try:
        a = _alloc(m)
        b = _alloc(m)
        out = _alloc(m)
        _fill(a, u, m)
        _fill(b, v, m)
        with nogil:
            _conv(out, a, b, m, M)
        return [out[i] for i in range(m)]
    finally:
        free(a)
        free(b)
        free(out)


def cyclic_pow(base, exponent, modulus):
    """Square-and-multiply power of a coefficient sequence; exponent >= 0."""
    cdef Py_ssize_t m = len(base)
    cdef Py_ssize_t i
    cdef u64 M = modulus
    cdef u64* res = NULL
    cdef u64* sq = NULL
    cdef u64* tmp = NULL
    cdef u64* swap = NULL
    if exponent < 0:
        raise ValueError("negative exponent")
    e = exponent
    try:
        res = _alloc(m)
        sq = _alloc(m)
        tmp = _alloc(m)
        for i in range(m):
            res[i] = 0
        res[0] = 1 % M
        _fill(sq, base, m)
        while e > 0:
            if e & 1:
                with nogil:
                    _conv(tmp, res, sq, m, M)
                swap = res
                res = tmp
                tmp = swap
            e >>= 1
            if e:
                with nogil:
                    _conv(tmp, sq, sq, m, M)
                swap = sq
                sq = tmp
                tmp = swap
        return [res[i] for i in range(m)]
    finally:
        free(res)
        free(sq)
        free(tmp)
