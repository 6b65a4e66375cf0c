"""
Boundary divisors and strata of the moduli space of stable n-pointed
rational curves, the dual complex of its boundary, and an exhaustive
machine check that this complex is flag.

Everything is combinatorial: a stratum is its dual tree, a boundary divisor
is a stable split, and "intersect" means nonempty set-theoretic intersection.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from . import kernels
from .complexes import SimplicialComplex, f_vector, is_flag
from .errors import EnumerationTooLarge, IncompatibleSplit, IncompatibleSystem, NotStable, TaxonCountMismatch
from .splits import (
    Split,
    check_taxon_count,
    enumerate_stable_splits,
    format_split,
    is_stable,
    keel_intersects,
)
from .trees import (
    DEFAULT_ENUMERATION_CEILING,
    PhylogeneticTree,
    enumerate_trees,
    pop_split,
    splits_of_tree,
    star_tree,
    tree_from_splits,
)

DEFAULT_VERIFY_CEILING = 8
REPORT_VERSION = 1


@dataclass(frozen=True, order=True)
class BoundaryDivisor:
    """The divisor ``D_{I,J}`` indexed by a stable split."""

    split: Split

    def __post_init__(self):
        if not is_stable(self.split):
            raise NotStable(f"{format_split(self.split)} does not index a boundary divisor")

    @property
    def n(self) -> int:
        return self.split.n

    def __str__(self) -> str:
        return format_split(self.split)

    def __repr__(self) -> str:
        return f"D[{format_split(self.split)}]"


@dataclass(frozen=True)
class Stratum:
    """A boundary stratum, identified by its dual tree."""

    tree: PhylogeneticTree
    codimension: int

    @property
    def n(self) -> int:
        return self.tree.n

    @property
    def divisors(self) -> list[BoundaryDivisor]:
        return [BoundaryDivisor(s) for s in splits_of_tree(self.tree)]


def boundary_divisors(n: int) -> list[BoundaryDivisor]:
    """One divisor per stable split, in ascending block order."""
    return [BoundaryDivisor(s) for s in enumerate_stable_splits(n)]


def divisors_intersect(a: BoundaryDivisor, b: BoundaryDivisor) -> bool:
    return keel_intersects(a.split, b.split)


def stratum_of_divisor_set(n: int, divisors: Iterable[BoundaryDivisor]) -> Stratum | None:
    """The stratum cut out by ``divisors``, or ``None`` if they have empty intersection.

    The empty set gives the whole space (the star tree, codimension 0).
    """
    check_taxon_count(n)
    splits = set()
    for d in divisors:
        if d.n != n:
            raise TaxonCountMismatch(f"divisor {d} is on n={d.n}, expected {n}")
        splits.add(d.split)
    try:
        t = tree_from_splits(n, splits)
    except IncompatibleSystem:
        return None
    return Stratum(t, len(splits))


def enumerate_strata(n: int, max_n: int = DEFAULT_ENUMERATION_CEILING) -> tuple[list[Stratum], list[int]]:
    """All strata (one per phylogenetic tree) and their counts by codimension."""
    trees = enumerate_trees(n, max_n=max_n)
    strata = [Stratum(t, len(splits_of_tree(t))) for t in trees]
    counts = [0] * (n - 2)
    for s in strata:
        counts[s.codimension] += 1
    return strata, counts


def _check_ceiling(n: int, max_n: int) -> None:
    if n > max_n:
        raise EnumerationTooLarge(f"n={n} exceeds the ceiling {max_n}")


def dual_complex(n: int, max_n: int = DEFAULT_ENUMERATION_CEILING) -> SimplicialComplex:
    """The dual complex of the boundary.

    Vertices are the boundary divisors.  A set of divisors is a face iff
    some stratum lies in all of them, i.e. iff it is the split set of some
    phylogenetic tree.  Faces are read off the enumerated trees, so no
    compatibility test enters the construction.
    """
    check_taxon_count(n)
    if n < 4:
        raise ValueError("the boundary is empty for n = 3")
    _check_ceiling(n, max_n)
    divs = boundary_divisors(n)
    index = {d.split: i for i, d in enumerate(divs)}
    masks = set()
    for t in enumerate_trees(n, max_n=max_n):
        m = 0
        for s in splits_of_tree(t):
            m |= 1 << index[s]
        masks.add(m)
    return SimplicialComplex.from_masks(divs, masks)


def compatibility_clique_counts(n: int) -> list[int]:
    """Cliques of the split compatibility graph on stable splits, by size.

    Independent of tree enumeration; runs on the compiled kernel when built.
    """
    blocks = [s.block for s in enumerate_stable_splits(n)]
    if not blocks:
        return [1]
    adj = kernels.compatibility_matrix(blocks, n)
    np.fill_diagonal(adj, 0)
    return kernels.clique_counts(adj)


@dataclass
class FlagReport:
    """Outcome of :func:`verify_flag_theorem`."""

    n: int
    divisor_count: int
    edge_count: int
    clique_counts: list[int]
    f_vector: list[int]
    max_face_size: int
    strata_by_codim: list[int]
    strata_match: bool
    is_flag: bool
    witness: list[str] | None = None
    realized_non_edges: list[list[str]] = field(default_factory=list)

    def to_dict(self) -> dict:
        d = {
            "version": REPORT_VERSION,
            "n": self.n,
            "divisor_count": self.divisor_count,
            "edge_count": self.edge_count,
            "clique_counts": self.clique_counts,
            "f_vector": self.f_vector,
            "max_face_size": self.max_face_size,
            "strata_by_codim": self.strata_by_codim,
            "strata_match": self.strata_match,
            "is_flag": self.is_flag,
        }
        if self.witness is not None:
            d["witness"] = self.witness
        if self.realized_non_edges:
            d["realized_non_edges"] = self.realized_non_edges
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def verify_flag_theorem(n: int, max_n: int = DEFAULT_VERIFY_CEILING) -> FlagReport:
    """Check that every set of pairwise intersecting boundary divisors has a common stratum.

    Every clique of the divisor intersection graph (edges from the
    containment criterion) is visited in lexicographic order.  A clique is
    realized when inserting its splits into the star tree, in order,
    succeeds and the resulting tree has exactly those splits.  Each clique
    reuses the tree of its prefix, so the work per clique is one insertion.

    Pairs failing the containment criterion are also checked to have no
    realizing tree, so the graph really is the 1-skeleton of the dual complex.

    Rough cost: n = 7 (2752 cliques) well under a second; n = 8 (39208
    cliques) a few seconds.
    """
    check_taxon_count(n)
    if n < 4:
        raise ValueError("verification needs n >= 4")
    _check_ceiling(n, max_n)

    divs = boundary_divisors(n)
    splits = [d.split for d in divs]
    m = len(divs)
    star = star_tree(n)

    upper = [0] * m
    realized_non_edges = []
    single = [pop_split(star, s) for s in splits]
    for i in range(m):
        for j in range(i + 1, m):
            if divisors_intersect(divs[i], divs[j]):
                upper[i] |= 1 << j
            else:
                try:
                    pop_split(single[i], splits[j])
                except IncompatibleSplit:
                    continue
                realized_non_edges.append([str(divs[i]), str(divs[j])])
    edge_count = sum(u.bit_count() for u in upper)

    clique_counts = [1] + [0] * m
    face_counts = [1] + [0] * m
    witness: list[int] | None = None

    def realized(t: PhylogeneticTree, members: list[int]) -> bool:
        got = splits_of_tree(t)
        return len(got) == len(members) and all(splits[k] in got for k in members)

    def extend(members: list[int], tree: PhylogeneticTree | None, cand: int) -> None:
        nonlocal witness
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            grown = members + [v]
            size = len(grown)
            clique_counts[size] += 1
            child = None
            if tree is not None:
                try:
                    child = pop_split(tree, splits[v])
                except IncompatibleSplit:
                    child = None
                if child is not None and not realized(child, grown):
                    child = None
            if child is not None:
                face_counts[size] += 1
            elif witness is None:
                witness = grown
            nxt = cand & upper[v]
            if nxt:
                extend(grown, child, nxt)

    extend([], star, (1 << m) - 1)

    while len(clique_counts) > 1 and clique_counts[-1] == 0:
        clique_counts.pop()
    face_counts = face_counts[: len(clique_counts)]
    while len(face_counts) > 1 and face_counts[-1] == 0:
        face_counts.pop()

    _, strata_counts = enumerate_strata(n, max_n=max_n)
    padded = face_counts + [0] * (len(strata_counts) - len(face_counts))
    verdict = witness is None and not realized_non_edges
    return FlagReport(
        n=n,
        divisor_count=m,
        edge_count=edge_count,
        clique_counts=clique_counts,
        f_vector=face_counts[1:],
        max_face_size=len(face_counts) - 1,
        strata_by_codim=strata_counts,
        strata_match=padded == strata_counts,
        is_flag=verdict,
        witness=None if witness is None else [str(divs[k]) for k in witness],
        realized_non_edges=realized_non_edges,
    )


def complex_to_dict(n: int, c: SimplicialComplex) -> dict:
    """Versioned JSON-ready description of a dual complex."""
    fv = f_vector(c)
    return {
        "version": REPORT_VERSION,
        "n": n,
        "divisor_count": len(c.vertices),
        "vertices": [str(v) for v in c.vertices],
        "maximal_faces": [[str(v) for v in f] for f in sorted(sorted(f) for f in c.maximal_faces)],
        "f_vector": fv,
        "max_face_size": len(fv),
        "dimension": c.dimension,
        "is_flag": is_flag(c),
    }
