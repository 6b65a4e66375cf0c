# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: bitmask split compatibility and exhaustive clique counting.

Vertex sets are packed into arrays of 64-bit words so graphs with hundreds of
vertices (501 divisors at n = 10) stay in C.
"""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport uint64_t, int64_t

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil

cnp.import_array()


def compatibility_matrix(blocks, int n):
    cdef Py_ssize_t m = len(blocks)
    cdef Py_ssize_t i, j
    if n > 64:
        raise ValueError("n > 64 not supported by the bitmask kernel")
    cdef uint64_t full = <uint64_t>0xFFFFFFFFFFFFFFFF if n == 64 else ((<uint64_t>1 << n) - 1)
    cdef uint64_t[::1] b = np.array([int(x) for x in blocks], dtype=np.uint64) if m else np.zeros(0, dtype=np.uint64)
    out = np.zeros((m, m), dtype=np.uint8)
    cdef cnp.uint8_t[:, ::1] o = out
    cdef uint64_t a, ac, c, cc
    for i in range(m):
        a = b[i]
        ac = full ^ a
        for j in range(m):
            c = b[j]
            cc = full ^ c
            if (a & c) == 0 or (a & cc) == 0 or (ac & c) == 0 or (ac & cc) == 0:
                o[i, j] = 1
    return out


cdef inline int _lowest(uint64_t *s, Py_ssize_t words) noexcept nogil:
    cdef Py_ssize_t w
    for w in range(words):
        if s[w]:
            return <int>(w * 64 + __builtin_ctzll(s[w]))
    return -1


cdef void _extend(uint64_t *cand, uint64_t *rows, uint64_t *stack,
                  Py_ssize_t words, int depth, int64_t *counts) noexcept nogil:
    # cand is consumed; children are written to stack + depth * words
    cdef uint64_t *nxt = stack + depth * words
    cdef Py_ssize_t w
    cdef int v
    cdef uint64_t *row
    cdef bint any_bit
    while True:
        v = _lowest(cand, words)
        if v < 0:
            return
        cand[v >> 6] &= ~((<uint64_t>1) << (v & 63))
        counts[depth] += 1
        row = rows + v * words
        any_bit = False
        for w in range(words):
            nxt[w] = cand[w] & row[w]
            if nxt[w]:
                any_bit = True
        if any_bit:
            _extend(nxt, rows, stack, words, depth + 1, counts)


def clique_counts(adj):
    """Number of cliques of each size (index 0 is the empty clique)."""
    cdef cnp.uint8_t[:, ::1] a = np.ascontiguousarray(adj, dtype=np.uint8)
    cdef Py_ssize_t m = a.shape[0]
    cdef Py_ssize_t words = (m + 63) // 64 if m else 1
    cdef Py_ssize_t i, j
    rows_arr = np.zeros(m * words + 1, dtype=np.uint64)
    stack_arr = np.zeros((m + 2) * words, dtype=np.uint64)
    counts_arr = np.zeros(m + 2, dtype=np.int64)
    cdef uint64_t[::1] rows = rows_arr
    cdef uint64_t[::1] stack = stack_arr
    cdef int64_t[::1] counts = counts_arr
    for i in range(m):
        for j in range(i + 1, m):
            if a[i, j]:
                rows[i * words + (j >> 6)] |= (<uint64_t>1) << (j & 63)
    for i in range(m):
        stack[i >> 6] |= (<uint64_t>1) << (i & 63)
    counts[0] = 1
    if m:
        with nogil:
            _extend(&stack[0], &rows[0], &stack[0], words, 1, &counts[0])
    result = [int(c) for c in counts_arr[: m + 1]]
    while len(result) > 1 and result[len(result) - 1] == 0:
        result.pop()
    return result
