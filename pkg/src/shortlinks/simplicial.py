"""Pure simplicial n-complexes stored by their facets.

A complex is determined by its set of facets (maximal faces, all of
cardinality n+1); lower-dimensional faces are enumerated on demand.  The
central notion is the link of an (n-2)-face: the cycles formed by the
edges that complete it to a facet.  Complexes whose links all have length
3 or 4 are classified elsewhere (see :mod:`shortlinks.partitions`).
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass

Face = frozenset  # a face is a frozenset of positive integer vertex ids


def make_face(vertices) -> Face:
    """Build a face from an iterable of distinct positive vertex ids."""
    vs = list(vertices)
    face = frozenset(vs)
    if not face:
        raise ValueError("a face must be nonempty")
    if len(face) != len(vs):
        raise ValueError(f"duplicate vertices in face {sorted(vs)}")
    if any(not isinstance(v, int) or v < 1 for v in face):
        raise ValueError(f"vertex ids must be positive integers: {sorted(vs)}")
    return face


class SimplicialComplex:
    """A pure simplicial complex of dimension ``dim`` given by its facets.

    Facets are deduplicated frozensets of vertex ids, each of cardinality
    ``dim + 1``; the vertex set is their union.  Instances are immutable
    and hashable; derived data (faces, ridge incidences) is cached.
    """

    __slots__ = ("dim", "facets", "_faces", "_ridge_facets")

    def __init__(self, dim: int, facets) -> None:
        if dim < 1:
            raise ValueError(f"dimension must be >= 1, got {dim}")
        fset = frozenset(make_face(f) for f in facets)
        if not fset:
            raise ValueError("a complex needs at least one facet")
        for f in fset:
            if len(f) != dim + 1:
                raise ValueError(
                    f"facet {sorted(f)} has {len(f)} vertices, expected {dim + 1}")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "facets", fset)
        object.__setattr__(self, "_faces", {})
        object.__setattr__(self, "_ridge_facets", None)

    def __setattr__(self, name, value):
        raise AttributeError("SimplicialComplex is immutable")

    @classmethod
    def from_facets(cls, facets) -> "SimplicialComplex":
        """Infer the dimension from the first facet."""
        facets = [make_face(f) for f in facets]
        if not facets:
            raise ValueError("a complex needs at least one facet")
        return cls(len(facets[0]) - 1, facets)

    @property
    def vertices(self) -> tuple:
        return tuple(sorted(frozenset.union(*self.facets)))

    @property
    def num_facets(self) -> int:
        return len(self.facets)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.dim == other.dim and self.facets == other.facets

    def __hash__(self) -> int:
        return hash((self.dim, self.facets))

    def __repr__(self) -> str:
        return (f"SimplicialComplex(dim={self.dim}, "
                f"facets={self.num_facets}, vertices={len(self.vertices)})")

    def ridge_facets(self) -> dict:
        """Map each (n-1)-face to the sorted list of facets containing it."""
        if self._ridge_facets is None:
            inc = defaultdict(list)
            for f in self.facets:
                for v in f:
                    inc[f - {v}].append(f)
            object.__setattr__(self, "_ridge_facets", dict(inc))
        return self._ridge_facets


@dataclass(frozen=True)
class ClosednessReport:
    """Verdict of the pseudomanifold check.

    ``status`` is ``"closed"`` (every ridge in exactly two facets),
    ``"boundary"`` (some ridges in exactly one, none in more), or
    ``"bad"`` (some ridge in three or more facets).
    """

    status: str
    boundary: tuple = ()
    bad_face: Face | None = None
    bad_count: int = 0

    @property
    def is_closed(self) -> bool:
        return self.status == "closed"


@dataclass(frozen=True)
class LinkReport:
    """The link of an (n-2)-face: a family of vertex cycles.

    ``cycles`` are cyclic vertex sequences (each of length >= 3); ``sizes``
    is the sorted multiset of their lengths.  The total number of edges on
    the cycles equals the number of facets containing the face.
    """

    face: Face
    cycles: tuple
    sizes: tuple


def faces_of_dim(K: SimplicialComplex, k: int) -> set:
    """All k-dimensional faces of ``K`` (the (k+1)-subsets of its facets)."""
    if not 0 <= k <= K.dim:
        raise ValueError(f"face dimension {k} out of range [0, {K.dim}]")
    cached = K._faces.get(k)
    if cached is None:
        cached = set()
        for f in K.facets:
            for comb in itertools.combinations(sorted(f), k + 1):
                cached.add(frozenset(comb))
        K._faces[k] = cached
    return set(cached)


def is_closed_pseudomanifold(K: SimplicialComplex) -> ClosednessReport:
    """Check that every (n-1)-face lies in exactly two facets."""
    boundary = []
    for ridge, facs in K.ridge_facets().items():
        if len(facs) > 2:
            return ClosednessReport("bad", bad_face=ridge, bad_count=len(facs))
        if len(facs) == 1:
            boundary.append(ridge)
    if boundary:
        boundary.sort(key=sorted)
        return ClosednessReport("boundary", boundary=tuple(boundary))
    return ClosednessReport("closed")


def _cycles_from_edges(edges) -> list:
    """Decompose a set of edges into cycles; raise if not 2-regular."""
    adj = defaultdict(list)
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    for v, nb in adj.items():
        if len(nb) != 2:
            raise ValueError(
                f"link edges do not decompose into cycles: vertex {v} has "
                f"degree {len(nb)} (complex is not closed)")
    cycles = []
    remaining = {frozenset(e) for e in edges}
    while remaining:
        a, b = sorted(min(remaining, key=sorted))
        cyc = [a, b]
        remaining.discard(frozenset((a, b)))
        while True:
            prev, cur = cyc[-2], cyc[-1]
            nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
            remaining.discard(frozenset((cur, nxt)))
            if nxt == cyc[0]:
                break
            cyc.append(nxt)
        cycles.append(tuple(cyc))
    cycles.sort(key=lambda c: (len(c), c))
    return cycles


def link_of_face(K: SimplicialComplex, F) -> LinkReport:
    """Link of the (n-2)-face ``F``: cycles of the completing edges.

    Each facet containing ``F`` contributes the unique edge that extends
    ``F`` to it.  For ``dim == 1`` the only (n-2)-face is the empty face,
    whose link is the whole complex (a union of cycles).
    """
    face = frozenset(F)
    want = K.dim - 1
    if len(face) != want:
        raise ValueError(
            f"expected an (n-2)-face with {want} vertices, got {sorted(face)}")
    if face and face not in faces_of_dim(K, K.dim - 2):
        raise ValueError(f"{sorted(face)} is not a face of the complex")
    edges = [tuple(sorted(f - face)) for f in K.facets if face <= f]
    cycles = _cycles_from_edges(edges)
    sizes = tuple(sorted(len(c) for c in cycles))
    return LinkReport(face=face, cycles=tuple(cycles), sizes=sizes)


def complex_type(K: SimplicialComplex) -> set:
    """The set of all link cycle lengths over the (n-2)-faces of ``K``."""
    sizes = set()
    if K.dim == 1:
        return set(link_of_face(K, ()).sizes)
    for face in faces_of_dim(K, K.dim - 2):
        sizes.update(link_of_face(K, face).sizes)
    return sizes


def skeleton(K: SimplicialComplex):
    """The graph of vertices and 1-faces of ``K``."""
    from .metric import Graph

    edges = {tuple(sorted(e)) for f in K.facets
             for e in itertools.combinations(f, 2)}
    return Graph(K.vertices, edges)


def euler_characteristic(K: SimplicialComplex) -> int:
    """Alternating sum of face counts over all dimensions."""
    return sum((-1) ** k * len(faces_of_dim(K, k)) for k in range(K.dim + 1))


def characteristic_partition(K: SimplicialComplex, delta):
    """Partition of a facet's vertices induced by the length-3 links.

    Vertices i, j of the facet fall in the same part exactly when the link
    of the facet minus {i, j} is a triangle.  Defined for closed complexes
    of type within {3, 4}; the induced graph must be a disjoint union of
    cliques, otherwise the input is rejected as corrupt.
    """
    from .partitions import Partition

    delta = frozenset(delta)
    if delta not in K.facets:
        raise ValueError(f"{sorted(delta)} is not a facet of the complex")
    verts = sorted(delta)
    if K.dim == 1:
        # the empty face is the unique (n-2)-face; use the cycle through delta
        report = link_of_face(K, ())
        for cyc in report.cycles:
            if delta <= set(cyc):
                break
        else:  # pragma: no cover - delta is an edge of some cycle by closedness
            raise ValueError("facet not on any link cycle")
        if len(cyc) not in (3, 4):
            raise ValueError(f"complex type is not within {{3, 4}}: "
                             f"link of the empty face has length {len(cyc)}")
        parts = [tuple(verts)] if len(cyc) == 3 else [(verts[0],), (verts[1],)]
        return Partition(parts)

    same = defaultdict(set)
    for i, j in itertools.combinations(verts, 2):
        report = link_of_face(K, delta - {i, j})
        if len(report.cycles) != 1 or report.sizes[0] not in (3, 4):
            raise ValueError(
                f"complex type is not within {{3, 4}}: link of "
                f"{sorted(delta - {i, j})} has sizes {report.sizes}")
        if report.sizes[0] == 3:
            same[i].add(j)
            same[j].add(i)
    parts = []
    left = set(verts)
    while left:
        v = min(left)
        comp = {v}
        stack = [v]
        while stack:
            for w in same[stack.pop()]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        for a in comp:
            if same[a] != comp - {a}:
                raise ValueError(
                    "the 3-link graph on the facet is not a union of cliques "
                    "(corrupt input)")
        parts.append(tuple(sorted(comp)))
        left -= comp
    return Partition(parts)


def are_isomorphic(K1: SimplicialComplex, K2: SimplicialComplex):
    """A vertex bijection mapping facets onto facets, or None.

    Cheap invariants (dimension, vertex/facet counts, degree sequences)
    rule out most non-isomorphic pairs; for complexes that both classify
    as type {3, 4} the characteristic partitions decide (two such
    complexes are isomorphic exactly when their part-size multisets
    agree).  A positive answer is always returned as an explicit
    bijection found by backtracking.
    """
    from ._bijections import find_bijection
    from .partitions import classify

    if K1.dim != K2.dim:
        return None
    if len(K1.vertices) != len(K2.vertices) or K1.num_facets != K2.num_facets:
        return None
    try:
        p1, p2 = classify(K1), classify(K2)
    except ValueError:
        pass
    else:
        if p1.sizes != p2.sizes:
            return None
    return find_bijection(K1.facets, K2.facets)
