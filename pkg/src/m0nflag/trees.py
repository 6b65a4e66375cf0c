"""
Phylogenetic trees on taxa 1..n.

Leaves are the positive integers 1..n; internal vertices carry negative
integer ids.  Trees are immutable: every operation returns a new tree.

Public API
----------
  PhylogeneticTree(n, edges)
  star_tree(n)
  splits_of_tree(t)
  pop_split(t, s)
  tree_from_splits(n, splits)
  is_binary(t)
  enumerate_trees(n, max_n=10)
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import (
    DegreeViolation,
    EnumerationTooLarge,
    IncompatibleSplit,
    IncompatibleSystem,
    InvalidTree,
    NotStable,
    TaxonCountMismatch,
)
from .splits import (
    Split,
    SplitSystem,
    check_taxon_count,
    first_incompatible_pair,
    format_split,
    full_mask,
    is_stable,
)

DEFAULT_ENUMERATION_CEILING = 10


class PhylogeneticTree:
    """An unrooted tree with leaves labelled 1..n and no degree-2 vertices.

    Parameters
    ----------
    n : int
        Number of taxa.
    edges : iterable of (int, int)
        Undirected edges.  Positive endpoints are leaves, negative ones are
        internal vertices.

    Two trees compare equal when they are leaf-label isomorphic, i.e. when
    their canonical Newick strings coincide.
    """

    __slots__ = ("n", "_adj", "_newick", "_masks")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        check_taxon_count(n)
        adj: dict[int, list[int]] = {}
        count = 0
        for u, v in edges:
            if u == v:
                raise InvalidTree(f"loop at vertex {u}")
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
            count += 1
        self.n = n
        self._adj = {v: tuple(sorted(nb)) for v, nb in adj.items()}
        self._newick = None
        self._masks = None
        self._validate(count)

    @classmethod
    def _from_adjacency(cls, n: int, adj: dict[int, tuple[int, ...]]) -> PhylogeneticTree:
        # trusted constructor for internal operations that preserve validity
        t = object.__new__(cls)
        t.n = n
        t._adj = adj
        t._newick = None
        t._masks = None
        return t

    def _validate(self, edge_count: int) -> None:
        n, adj = self.n, self._adj
        leaves = sorted(v for v in adj if v > 0)
        if leaves != list(range(1, n + 1)):
            raise InvalidTree(f"leaf labels must be exactly 1..{n}, got {leaves}")
        if any(v == 0 for v in adj):
            raise InvalidTree("vertex id 0 is reserved")
        for v, nb in adj.items():
            if len(set(nb)) != len(nb):
                raise InvalidTree(f"parallel edges at vertex {v}")
            if v > 0 and len(nb) != 1:
                raise InvalidTree(f"leaf {v} has degree {len(nb)}")
            if v < 0 and len(nb) == 2:
                raise DegreeViolation(f"internal vertex {v} has degree 2")
            if v < 0 and len(nb) < 2:
                raise InvalidTree(f"internal vertex {v} has degree {len(nb)}")
        if edge_count != len(adj) - 1:
            raise InvalidTree("edge count is not |V| - 1")
        seen = {1}
        todo = [1]
        while todo:
            u = todo.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        if len(seen) != len(adj):
            raise InvalidTree("graph is not connected")

    # ---- structure ---------------------------------------------------- #

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self._adj))

    @property
    def internal_vertices(self) -> tuple[int, ...]:
        return tuple(sorted((v for v in self._adj if v < 0), reverse=True))

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted((u, v) for u in self._adj for v in self._adj[u] if u < v))

    @property
    def internal_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u, v in self.edges if v < 0)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def rooted_masks(self) -> dict[int, tuple[int, int]]:
        """Map each vertex ``v != n`` to ``(parent, leafmask)`` with the tree rooted at leaf ``n``.

        ``leafmask`` is the set of leaves separated from ``n`` by the edge
        ``v -- parent``; it never contains ``n``, so it is already a
        canonical split block.
        """
        if self._masks is not None:
            return self._masks
        adj = self._adj
        root = self.n
        parent = {root: 0}
        order = [root]
        i = 0
        while i < len(order):
            u = order[i]
            i += 1
            for w in adj[u]:
                if w != parent[u]:
                    parent[w] = u
                    order.append(w)
        mask: dict[int, int] = {}
        for u in reversed(order):
            if u > 0:
                mask[u] = 1 << (u - 1)
            else:
                m = 0
                for w in adj[u]:
                    if w != parent[u]:
                        m |= mask[w]
                mask[u] = m
        out = {v: (parent[v], mask[v]) for v in order[1:]}
        self._masks = out
        return out

    # ---- identity ----------------------------------------------------- #

    def newick(self) -> str:
        if self._newick is None:
            from .newick import to_newick

            self._newick = to_newick(self)
        return self._newick

    def __eq__(self, other) -> bool:
        if not isinstance(other, PhylogeneticTree):
            return NotImplemented
        return self.n == other.n and self.newick() == other.newick()

    def __hash__(self) -> int:
        return hash((self.n, self.newick()))

    def __repr__(self) -> str:
        return f"PhylogeneticTree({self.n}, {self.newick()!r})"


def star_tree(n: int) -> PhylogeneticTree:
    """One internal vertex joined to all ``n`` leaves."""
    check_taxon_count(n)
    return PhylogeneticTree(n, [(-1, i) for i in range(1, n + 1)])


def splits_of_tree(t: PhylogeneticTree) -> SplitSystem:
    """Splits induced by the internal edges of ``t``."""
    masks = t.rooted_masks()
    return SplitSystem(
        t.n, [Split(t.n, m) for v, (p, m) in masks.items() if v < 0 and p < 0]
    )


def is_binary(t: PhylogeneticTree) -> bool:
    return all(len(nb) == 3 for v, nb in t._adj.items() if v < 0)


def internal_degrees_ok(t: PhylogeneticTree) -> bool:
    """True iff every internal vertex has degree >= 3."""
    return all(len(nb) >= 3 for v, nb in t._adj.items() if v < 0)


def _check_insertable(t: PhylogeneticTree, s: Split) -> None:
    if s.n != t.n:
        raise TaxonCountMismatch(f"split on n={s.n}, tree on n={t.n}")
    if not is_stable(s):
        raise NotStable(f"split {format_split(s)} is not stable")


def pop_split(t: PhylogeneticTree, s: Split) -> PhylogeneticTree:
    """Refine ``t`` by the split ``s``.

    Finds the unique vertex ``v`` all of whose branches lie on one side of
    ``s``, and pulls it apart into an edge ``v_A -- v_B``.  Returns ``t``
    itself when ``s`` is already a split of ``t``.

    Raises
    ------
    IncompatibleSplit
        When no such vertex exists.
    """
    _check_insertable(t, s)
    masks = t.rooted_masks()
    a = s.block
    b = s.complement
    for v, (p, m) in masks.items():
        if m == a and v < 0 and p < 0:
            return t
    adj = t._adj
    full = full_mask(t.n)

    def branch(v: int, w: int) -> int:
        # leaves of the component of t - v containing neighbour w
        pv, mv = masks[v]
        return full ^ mv if w == pv else masks[w][1]

    target = None
    for v in adj:
        if v < 0 and all(not (branch(v, w) & a and branch(v, w) & b) for w in adj[v]):
            target = v
            break
    if target is None:
        raise IncompatibleSplit(f"split {format_split(s)} is incompatible with the tree")

    side_a, side_b = [], []
    for w in adj[target]:
        (side_a if branch(target, w) & b == 0 else side_b).append(w)
    if len(side_a) < 2 or len(side_b) < 2:
        raise IncompatibleSplit(f"split {format_split(s)} does not refine vertex {target}")

    new = min(adj) - 1
    out = dict(adj)
    out[target] = tuple(sorted(side_a + [new]))
    out[new] = tuple(sorted(side_b + [target]))
    for w in side_b:
        out[w] = tuple(sorted(new if x == target else x for x in adj[w]))
    return PhylogeneticTree._from_adjacency(t.n, out)


def tree_from_splits(n: int, splits: Iterable[Split]) -> PhylogeneticTree:
    """The phylogenetic tree whose split set is ``splits``.

    Splits are inserted one at a time into the star tree in canonical order.

    Raises
    ------
    IncompatibleSystem
        If two splits are incompatible; ``exc.pair`` holds the first such pair.
    """
    check_taxon_count(n)
    ordered = sorted(set(splits))
    for s in ordered:
        if s.n != n:
            raise TaxonCountMismatch(f"split {format_split(s)} is on n={s.n}, expected {n}")
        if not is_stable(s):
            raise NotStable(f"split {format_split(s)} is not stable")
    bad = first_incompatible_pair(ordered)
    if bad is not None:
        raise IncompatibleSystem(
            f"incompatible splits {format_split(bad[0])} and {format_split(bad[1])}", bad
        )
    t = star_tree(n)
    for s in ordered:
        t = pop_split(t, s)
    return t


def relabel_tree(t: PhylogeneticTree, perm: dict[int, int]) -> PhylogeneticTree:
    """Apply a permutation of the leaf labels."""
    def f(v):
        return perm[v] if v > 0 else v

    return PhylogeneticTree(t.n, [(f(u), f(v)) for u, v in t.edges])


def _grow(t: PhylogeneticTree) -> Iterator[PhylogeneticTree]:
    """All trees obtained by attaching leaf ``t.n + 1`` to ``t``."""
    n = t.n + 1
    adj = t._adj
    new = min(adj) - 1
    for v in adj:
        if v < 0:
            out = dict(adj)
            out[v] = adj[v] + (n,)
            out[n] = (v,)
            yield PhylogeneticTree._from_adjacency(n, out)
    for u, v in t.edges:
        out = dict(adj)
        out[u] = tuple(new if x == v else x for x in adj[u])
        out[v] = tuple(new if x == u else x for x in adj[v])
        out[new] = (u, v, n)
        out[n] = (new,)
        yield PhylogeneticTree._from_adjacency(n, out)


def enumerate_trees(n: int, max_n: int = DEFAULT_ENUMERATION_CEILING) -> list[PhylogeneticTree]:
    """Every phylogenetic tree on 1..n exactly once, sorted by canonical Newick.

    Built by leaf addition from the star on three leaves: leaf ``k`` either
    joins an existing internal vertex or subdivides an edge.  Counts grow
    quickly (2752 trees for n = 7, 39208 for n = 8, 660032 for n = 9).
    """
    check_taxon_count(n)
    if n > max_n:
        raise EnumerationTooLarge(f"n={n} exceeds the enumeration ceiling {max_n}")
    level = [star_tree(3)]
    for _ in range(4, n + 1):
        level = [child for t in level for child in _grow(t)]
    level.sort(key=PhylogeneticTree.newick)
    return level
