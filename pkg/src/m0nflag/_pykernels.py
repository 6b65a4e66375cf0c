"""Pure-Python kernels.  Same signatures and results as ``_ckernels``."""

from __future__ import annotations

import sys
from typing import Sequence

import numpy as np


def compatibility_matrix(blocks: Sequence[int], n: int) -> np.ndarray:
    """``m x m`` uint8 matrix, entry 1 iff splits ``blocks[i]``, ``blocks[j]`` are compatible."""
    full = (1 << n) - 1
    m = len(blocks)
    out = np.zeros((m, m), dtype=np.uint8)
    for i in range(m):
        a = blocks[i]
        ac = full ^ a
        row = out[i]
        for j in range(m):
            b = blocks[j]
            bc = full ^ b
            if not (a & b) or not (a & bc) or not (ac & b) or not (ac & bc):
                row[j] = 1
    return out


def _upper_rows(adj: np.ndarray) -> list[int]:
    m = adj.shape[0]
    rows = []
    for i in range(m):
        r = 0
        for j in np.flatnonzero(adj[i, i + 1:]):
            r |= 1 << int(i + 1 + j)
        rows.append(r)
    return rows


def clique_counts(adj: np.ndarray) -> list[int]:
    """Number of cliques of each size (index 0 is the empty clique).

    ``adj`` is a symmetric 0/1 matrix; the diagonal is ignored.  Every clique
    is visited exactly once by extending with strictly larger vertices only.
    """
    adj = np.asarray(adj)
    m = adj.shape[0]
    rows = _upper_rows(adj)
    counts = [0] * (m + 1)
    counts[0] = 1
    limit = sys.getrecursionlimit()
    if m + 50 > limit:
        sys.setrecursionlimit(m + 100)

    def extend(cand: int, depth: int) -> None:
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            counts[depth] += 1
            nxt = cand & rows[v]
            if nxt:
                extend(nxt, depth + 1)

    extend((1 << m) - 1, 1)
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return counts
