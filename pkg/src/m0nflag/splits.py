"""
Splits (bipartitions) of the taxon set {1, ..., n}.

A split is stored as a bitmask ``block`` over the labels, bit ``i - 1`` set
when label ``i`` lies in the block.  The block is always the side that does
NOT contain the largest label ``n``, so two splits are equal exactly when
their blocks are equal.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    EmptyOrFullSubset,
    LabelOutOfRange,
    NotStable,
    ParseError,
    TaxonCountMismatch,
    TaxonCountTooLarge,
    TaxonCountTooSmall,
)

MAX_TAXA = 64


def check_taxon_count(n: int) -> int:
    """Validate a taxon count and return it as an int."""
    if n < 3:
        raise TaxonCountTooSmall(f"need at least 3 taxa, got n={n}")
    if n > MAX_TAXA:
        raise TaxonCountTooLarge(f"bitmask encoding supports n <= {MAX_TAXA}, got n={n}")
    return int(n)


def full_mask(n: int) -> int:
    return (1 << n) - 1


def mask_of(labels: Iterable[int]) -> int:
    m = 0
    for label in labels:
        m |= 1 << (label - 1)
    return m


def labels_of(mask: int) -> tuple[int, ...]:
    """Ascending labels encoded in ``mask``."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


@dataclass(frozen=True, order=True)
class Split:
    """A canonical split ``I | J`` of {1..n}; ``I`` is the block without ``n``."""

    n: int
    block: int

    def __post_init__(self):
        check_taxon_count(self.n)
        if self.block <= 0 or self.block >= full_mask(self.n):
            raise EmptyOrFullSubset("split block must be a nonempty proper subset")
        if self.block >> (self.n - 1):
            raise ValueError("block must exclude label n (use make_split to canonicalize)")

    @property
    def complement(self) -> int:
        return full_mask(self.n) ^ self.block

    @property
    def sides(self) -> tuple[int, int]:
        """The pair ``(I, J)`` as bitmasks."""
        return self.block, self.complement

    @property
    def size(self) -> int:
        """Cardinality of the smaller side."""
        k = self.block.bit_count()
        return min(k, self.n - k)

    def __str__(self) -> str:
        return format_split(self)

    def __repr__(self) -> str:
        return f"Split({format_split(self)!r})"


def make_split(n: int, subset: Iterable[int]) -> Split:
    """Build the canonical split with ``subset`` as one of its sides.

    >>> format_split(make_split(4, {3, 4}))
    '1,2|3,4'
    """
    check_taxon_count(n)
    m = 0
    for label in subset:
        if not 1 <= label <= n:
            raise LabelOutOfRange(f"label {label} outside 1..{n}")
        m |= 1 << (label - 1)
    return split_from_mask(n, m)


def split_from_mask(n: int, mask: int) -> Split:
    """Canonical split from a bitmask of either side."""
    full = full_mask(n)
    if mask <= 0 or mask >= full:
        if mask == 0 or mask == full:
            raise EmptyOrFullSubset("subset must be nonempty and proper")
        raise LabelOutOfRange(f"mask has bits outside 1..{n}")
    if mask >> (n - 1):
        mask ^= full
    return Split(n, mask)


def is_stable(s: Split) -> bool:
    """True iff both sides have at least two labels."""
    k = s.block.bit_count()
    return 2 <= k <= s.n - 2


def _same_n(s1: Split, s2: Split) -> None:
    if s1.n != s2.n:
        raise TaxonCountMismatch(f"splits on n={s1.n} and n={s2.n}")


def compatible(s1: Split, s2: Split) -> bool:
    """True iff one of the four side intersections is empty."""
    _same_n(s1, s2)
    i, j = s1.sides
    k, l = s2.sides
    return not (i & k) or not (i & l) or not (j & k) or not (j & l)


def keel_intersects(s1: Split, s2: Split) -> bool:
    """Containment criterion for the boundary divisors of two stable splits.

    True iff ``I <= K``, ``I <= L``, ``K <= I`` or ``L <= I`` (non-strict).
    """
    _same_n(s1, s2)
    if not is_stable(s1) or not is_stable(s2):
        raise NotStable("keel_intersects is defined for stable splits only")
    i = s1.block
    k, l = s2.sides
    return (i & ~k) == 0 or (i & ~l) == 0 or (k & ~i) == 0 or (l & ~i) == 0


def enumerate_stable_splits(n: int) -> list[Split]:
    """All stable splits of {1..n}, ascending by block bitmask."""
    check_taxon_count(n)
    out = []
    # canonical blocks are exactly the subsets of {1..n-1}
    for block in range(1, 1 << (n - 1)):
        k = block.bit_count()
        if 2 <= k <= n - 2:
            out.append(Split(n, block))
    return out


class SplitSystem:
    """An immutable, duplicate-free set of splits on a common ``n``.

    Iteration is in canonical (ascending block) order.
    """

    __slots__ = ("n", "_splits")

    def __init__(self, n: int, splits: Iterable[Split] = ()):
        check_taxon_count(n)
        members = frozenset(splits)
        for s in members:
            if not isinstance(s, Split):
                raise TypeError(f"expected Split, got {type(s).__name__}")
            if s.n != n:
                raise TaxonCountMismatch(f"split {s} is on n={s.n}, system on n={n}")
        self.n = n
        self._splits = members

    @property
    def splits(self) -> frozenset[Split]:
        return self._splits

    def __iter__(self) -> Iterator[Split]:
        return iter(sorted(self._splits))

    def __len__(self) -> int:
        return len(self._splits)

    def __contains__(self, s) -> bool:
        return s in self._splits

    def __eq__(self, other) -> bool:
        if not isinstance(other, SplitSystem):
            return NotImplemented
        return self.n == other.n and self._splits == other._splits

    def __hash__(self) -> int:
        return hash((self.n, self._splits))

    def __le__(self, other: SplitSystem) -> bool:
        return self.n == other.n and self._splits <= other._splits

    def __or__(self, other: SplitSystem) -> SplitSystem:
        if self.n != other.n:
            raise TaxonCountMismatch("cannot merge split systems on different n")
        return SplitSystem(self.n, self._splits | other._splits)

    def __repr__(self) -> str:
        return f"SplitSystem({self.n}, [{', '.join(format_split(s) for s in self)}])"


def first_incompatible_pair(splits: Iterable[Split]) -> tuple[Split, Split] | None:
    """The lexicographically first incompatible pair in canonical order, if any."""
    ordered = sorted(splits)
    for a, b in itertools.combinations(ordered, 2):
        if not compatible(a, b):
            return a, b
    return None


def is_pairwise_compatible(sys: Iterable[Split]) -> bool:
    return first_incompatible_pair(sys) is None


_SIDE = r"\s*\d+\s*(?:,\s*\d+\s*)*"
_SPLIT_RE = re.compile(rf"^({_SIDE})\|({_SIDE})$")


def parse_split(text: str, n: int) -> Split:
    """Read ``"a,b,...|c,d,..."``; the two sides must partition {1..n}."""
    check_taxon_count(n)
    m = _SPLIT_RE.match(text.strip())
    if m is None:
        raise ParseError(f"malformed split text: {text!r}")
    masks = []
    for side in m.groups():
        mask = 0
        for tok in side.split(","):
            label = int(tok)
            if not 1 <= label <= n:
                raise ParseError(f"label {label} outside 1..{n} in {text!r}")
            bit = 1 << (label - 1)
            if mask & bit:
                raise ParseError(f"duplicate label {label} in {text!r}")
            mask |= bit
        masks.append(mask)
    a, b = masks
    if a & b:
        raise ParseError(f"sides overlap in {text!r}")
    if a | b != full_mask(n):
        raise ParseError(f"sides of {text!r} do not partition 1..{n}")
    return split_from_mask(n, a)


def format_split(s: Split) -> str:
    left = ",".join(map(str, labels_of(s.block)))
    right = ",".join(map(str, labels_of(s.complement)))
    return f"{left}|{right}"


def permute_split(s: Split, perm: dict[int, int]) -> Split:
    """Relabel ``s`` by the permutation ``perm`` of {1..n}."""
    return make_split(s.n, (perm[i] for i in labels_of(s.block)))
