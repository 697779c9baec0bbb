# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled square-detection kernels; see ``_pykernels`` for the reference."""

from libc.stdlib cimport malloc, free
from libc.string cimport memcmp


cdef inline bint _eq(const unsigned char *a, const unsigned char *b, Py_ssize_t p) noexcept nogil:
    return memcmp(a, b, p) == 0


def find_square(const unsigned char[:] w):
    cdef Py_ssize_t n = w.shape[0], i, p
    if n < 2:
        return None
    cdef const unsigned char *s = &w[0]
    for i in range(n - 1):
        for p in range(1, (n - i) // 2 + 1):
            if _eq(s + i, s + i + p, p):
                return i, p
    return None


def find_circular_square(const unsigned char[:] w):
    cdef Py_ssize_t n = w.shape[0], i, p
    if n < 2:
        return None
    cdef bytes doubled = bytes(w) + bytes(w)
    cdef const unsigned char *d = doubled
    for i in range(n):
        for p in range(1, n // 2 + 1):
            if _eq(d + i, d + i + p, p):
                return i, p
    return None


cdef bint _square_suffix(const unsigned char *s, Py_ssize_t n) noexcept nogil:
    cdef Py_ssize_t p
    for p in range(1, n // 2 + 1):
        if _eq(s + n - 2 * p, s + n - p, p):
            return True
    return False


def has_square_suffix(const unsigned char[:] w):
    cdef Py_ssize_t n = w.shape[0]
    if n < 2:
        return False
    return _square_suffix(&w[0], n)


def square_free_words(Py_ssize_t n, bytes alphabet=b"abc"):
    """All square-free words of length ``n`` over ``alphabet``, lexicographic."""
    if n == 0:
        return [b""]
    cdef Py_ssize_t k = len(alphabet), depth = 0
    cdef const unsigned char *alpha = alphabet
    cdef bytearray buf = bytearray(n)
    cdef unsigned char *s = buf
    # choice[d] is the alphabet index tried at depth d
    cdef Py_ssize_t *choice = <Py_ssize_t *>malloc((n + 1) * sizeof(Py_ssize_t))
    if choice == NULL:
        raise MemoryError()
    out = []
    choice[0] = 0
    try:
        while depth >= 0:
            if choice[depth] >= k:
                depth -= 1
                if depth >= 0:
                    choice[depth] += 1
                continue
            s[depth] = alpha[choice[depth]]
            if _square_suffix(s, depth + 1):
                choice[depth] += 1
                continue
            if depth + 1 == n:
                out.append(bytes(buf))
                choice[depth] += 1
                continue
            depth += 1
            choice[depth] = 0
    finally:
        free(choice)
    return out
