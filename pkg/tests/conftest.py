"""Shared fixtures and independent oracles.

The oracles here use plain Python sets and itertools only, never the
package's bitmask code, so they can check it.
"""

import itertools
import random

import pytest

from m0nflag.splits import Split, is_stable, make_split


def brute_stable_bipartitions(n):
    """Stable bipartitions of {1..n} as frozensets of two frozensets."""
    labels = set(range(1, n + 1))
    out = set()
    for k in range(2, n - 1):
        for side in itertools.combinations(sorted(labels), k):
            a = frozenset(side)
            out.add(frozenset([a, frozenset(labels - a)]))
    return out


def set_compatible(p, q):
    """Compatibility of two bipartitions given as pairs of frozensets."""
    return any(not (x & y) for x in p for y in q)


def as_sets(s: Split):
    labels = frozenset(range(1, s.n + 1))
    block = frozenset(i for i in range(1, s.n + 1) if s.block >> (i - 1) & 1)
    return block, labels - block


def compatible_systems(n):
    """Every pairwise-compatible set of stable splits, via set-based recursion."""
    splits = sorted(make_split(n, sorted(min(p, key=sorted))) for p in brute_stable_bipartitions(n))
    sets = [as_sets(s) for s in splits]
    out = []

    def grow(chosen, start):
        out.append([splits[i] for i in chosen])
        for j in range(start, len(splits)):
            if all(set_compatible(sets[i], sets[j]) for i in chosen):
                grow(chosen + [j], j + 1)

    grow([], 0)
    return out


def binary_count(n):
    """(2n-5)!! via b(n) = (2n-5) b(n-1), b(3) = 1."""
    b = 1
    for k in range(4, n + 1):
        b *= 2 * k - 5
    return b


def random_stable_split(rng, n):
    # small sides are far more likely to stay compatible, so favour them
    while True:
        k = min(2 + int(rng.expovariate(0.5)), n - 2)
        s = make_split(n, rng.sample(range(1, n + 1), k))
        if is_stable(s):
            return s


def greedy_system(rng, n, attempts=None):
    """Grow a compatible system by rejection: keep random splits compatible with all chosen."""
    chosen = []
    sets = []
    attempts = attempts if attempts is not None else 12 * n
    for _ in range(attempts):
        s = random_stable_split(rng, n)
        ss = as_sets(s)
        if s in chosen:
            continue
        if all(set_compatible(ss, t) for t in sets):
            chosen.append(s)
            sets.append(ss)
    return chosen


@pytest.fixture
def rng():
    return random.Random(20261015)
