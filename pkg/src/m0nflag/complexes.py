"""
Abstract simplicial complexes stored by their maximal faces, clique
complexes of graphs, and the flag test.

Vertices may be any hashable values; internally each vertex gets an index
and faces are bitmasks over those indices.
"""

from __future__ import annotations

import itertools
from typing import Hashable, Iterable, Iterator, Sequence


class SimplicialComplex:
    """A finite simplicial complex.

    Parameters
    ----------
    vertices : sequence of hashable
        Vertex set, in the order used for reporting.
    faces : iterable of iterables
        Any generating family of faces.  The complex is their downward
        closure; every vertex is also a face.

    Only the maximal faces are stored.  ``F in c`` tests whether ``F`` is
    contained in some maximal face.
    """

    def __init__(self, vertices: Sequence[Hashable], faces: Iterable[Iterable[Hashable]] = ()):
        self.vertices = tuple(vertices)
        self._index = {v: i for i, v in enumerate(self.vertices)}
        if len(self._index) != len(self.vertices):
            raise ValueError("duplicate vertices")
        masks = {self._mask(f) for f in faces}
        masks.update(1 << i for i in range(len(self.vertices)))
        masks.discard(0)
        self._maximal = _maximal_masks(masks)
        self._maximal_set = frozenset(self._maximal)

    @classmethod
    def from_masks(cls, vertices: Sequence[Hashable], masks: Iterable[int]) -> SimplicialComplex:
        c = cls(vertices)
        allm = set(masks)
        allm.update(1 << i for i in range(len(c.vertices)))
        allm.discard(0)
        c._maximal = _maximal_masks(allm)
        c._maximal_set = frozenset(c._maximal)
        return c

    def _mask(self, face: Iterable[Hashable]) -> int:
        m = 0
        for v in face:
            try:
                m |= 1 << self._index[v]
            except KeyError:
                raise ValueError(f"{v!r} is not a vertex of the complex") from None
        return m

    def _unmask(self, m: int) -> frozenset:
        return frozenset(self.vertices[i] for i in _bits(m))

    @property
    def maximal_face_masks(self) -> tuple[int, ...]:
        return self._maximal

    @property
    def maximal_faces(self) -> list[frozenset]:
        return [self._unmask(m) for m in self._maximal]

    def __contains__(self, face) -> bool:
        try:
            m = self._mask(face)
        except ValueError:
            return False
        if m == 0:
            return True
        return any(m & ~f == 0 for f in self._maximal)

    def contains_mask(self, m: int) -> bool:
        return m == 0 or any(m & ~f == 0 for f in self._maximal)

    @property
    def dimension(self) -> int:
        """Largest face size minus one; -1 for the void complex."""
        return max((f.bit_count() for f in self._maximal), default=0) - 1

    def face_masks(self) -> set[int]:
        """Every nonempty face as a bitmask."""
        out: set[int] = set()
        for f in self._maximal:
            out.update(_submasks(f))
        return out

    def faces(self, size: int | None = None) -> Iterator[frozenset]:
        for m in sorted(self.face_masks()):
            if size is None or m.bit_count() == size:
                yield self._unmask(m)

    def one_skeleton(self) -> list[tuple[Hashable, Hashable]]:
        """Edges of the complex as vertex pairs in index order."""
        pairs = set()
        for f in self._maximal:
            idx = list(_bits(f))
            pairs.update(itertools.combinations(idx, 2))
        return [(self.vertices[i], self.vertices[j]) for i, j in sorted(pairs)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        if set(self.vertices) != set(other.vertices):
            return False
        return {frozenset(f) for f in self.maximal_faces} == {
            frozenset(f) for f in other.maximal_faces
        }

    def __repr__(self) -> str:
        return (
            f"SimplicialComplex({len(self.vertices)} vertices, "
            f"{len(self._maximal)} maximal faces, dim {self.dimension})"
        )


def _bits(m: int) -> Iterator[int]:
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


def _submasks(m: int) -> Iterator[int]:
    sub = m
    while sub:
        yield sub
        sub = (sub - 1) & m


def _maximal_masks(masks: set[int]) -> tuple[int, ...]:
    """Inclusion-maximal members of ``masks``, ascending."""
    # a face with a one-vertex extension in the family is not maximal; for
    # downward-closed families this test is exact and linear
    if _is_downward_closed(masks):
        width = max(masks, default=0).bit_length()
        return tuple(sorted(f for f in masks if not _has_extension(f, masks, width)))
    kept: list[int] = []
    for f in sorted(masks, key=lambda x: -x.bit_count()):
        if not any(f & ~g == 0 for g in kept):
            kept.append(f)
    return tuple(sorted(kept))


def _is_downward_closed(masks: set[int]) -> bool:
    for f in masks:
        if f.bit_count() > 1:
            for b in _bits(f):
                if f ^ (1 << b) not in masks:
                    return False
    return True


def _has_extension(f: int, masks: set[int], width: int) -> bool:
    for i in range(width):
        b = 1 << i
        if not f & b and (f | b) in masks:
            return True
    return False


def maximal_cliques(vertex_count: int, neighbours: Sequence[int]) -> list[int]:
    """Every maximal clique of a graph, as bitmasks (Bron-Kerbosch with pivoting).

    ``neighbours[i]`` is the bitmask of vertices adjacent to ``i`` (no loops).
    Isolated vertices are returned as singleton cliques.
    """
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        px = p | x
        pivot = max(_bits(px), key=lambda u: (neighbours[u] & p).bit_count())
        for v in list(_bits(p & ~neighbours[pivot])):
            bit = 1 << v
            expand(r | bit, p & neighbours[v], x & neighbours[v])
            p &= ~bit
            x |= bit

    if vertex_count:
        expand(0, (1 << vertex_count) - 1, 0)
    return sorted(out)


def flag_complex_of_graph(vertices: Sequence[Hashable], edges: Iterable[tuple[Hashable, Hashable]]) -> SimplicialComplex:
    """The clique complex: faces are exactly the cliques of the graph."""
    c = SimplicialComplex(vertices)
    nb = [0] * len(c.vertices)
    for a, b in edges:
        i, j = c._index[a], c._index[b]
        if i == j:
            raise ValueError(f"loop at vertex {a!r}")
        nb[i] |= 1 << j
        nb[j] |= 1 << i
    cliques = maximal_cliques(len(c.vertices), nb)
    c._maximal = tuple(cliques)
    c._maximal_set = frozenset(cliques)
    return c


def skeleton_neighbours(c: SimplicialComplex) -> list[int]:
    nb = [0] * len(c.vertices)
    for f in c.maximal_face_masks:
        for i in _bits(f):
            nb[i] |= f ^ (1 << i)
    return nb


def is_flag(c: SimplicialComplex) -> bool:
    """True iff every clique of the 1-skeleton is a face.

    Since faces are closed under subsets it is enough to look at maximal
    cliques, and a maximal clique is a face iff it is a maximal face.
    """
    nb = skeleton_neighbours(c)
    return all(q in c._maximal_set for q in maximal_cliques(len(c.vertices), nb))


def non_face_cliques(c: SimplicialComplex) -> list[frozenset]:
    """Maximal cliques of the 1-skeleton that are not faces."""
    nb = skeleton_neighbours(c)
    return [c._unmask(q) for q in maximal_cliques(len(c.vertices), nb) if q not in c._maximal_set]


def f_vector(c: SimplicialComplex) -> list[int]:
    """Entry ``k`` is the number of faces with ``k + 1`` vertices."""
    counts = [0] * (c.dimension + 1)
    for m in c.face_masks():
        counts[m.bit_count() - 1] += 1
    return counts
