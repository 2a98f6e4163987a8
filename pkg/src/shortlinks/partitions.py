"""The K(P) construction and its classification invariants.

Every closed simplicial complex whose (n-2)-face links all have length 3
or 4 arises, up to isomorphism, from a partition P of {1..n+1}: fold the
n-hyperoctahedron by merging the primed vertices within each part and
rejecting the facets that become degenerate.  This module builds K(P),
its closed-form combinatorial summary, the dual-of-a-product-of-simplices
model of the same complex, and the inverse direction: recovering the
partition from a complex.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass

from .simplicial import SimplicialComplex, characteristic_partition, complex_type, \
    is_closed_pseudomanifold


class Partition:
    """An ordered partition of a finite set of positive integers.

    Parts are stored in canonical order (by size, then smallest element).
    Equality and hashing are on the canonical form.
    """

    __slots__ = ("parts",)

    def __init__(self, parts) -> None:
        norm = []
        seen = set()
        for p in parts:
            fp = frozenset(p)
            if not fp:
                raise ValueError("empty part in partition")
            if any(not isinstance(v, int) or v < 1 for v in fp):
                raise ValueError(f"partition elements must be positive integers: {sorted(fp)}")
            if seen & fp:
                raise ValueError(f"parts are not disjoint: {sorted(seen & fp)} repeated")
            seen |= fp
            norm.append(fp)
        if not norm:
            raise ValueError("partition needs at least one part")
        norm.sort(key=lambda p: (len(p), min(p)))
        object.__setattr__(self, "parts", tuple(norm))

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    @property
    def ground_set(self) -> frozenset:
        return frozenset().union(*self.parts)

    @property
    def m(self) -> int:
        """Number of elements partitioned (n+1 for a dimension-n complex)."""
        return len(self.ground_set)

    @property
    def t(self) -> int:
        """Number of parts."""
        return len(self.parts)

    @property
    def sizes(self) -> tuple:
        """Sorted part sizes."""
        return tuple(len(p) for p in self.parts)

    @property
    def h(self) -> int:
        """Number of singleton parts."""
        return sum(1 for p in self.parts if len(p) == 1)

    def size_counts(self) -> Counter:
        """m_u: how many parts have size u."""
        return Counter(len(p) for p in self.parts)

    def covers_range(self) -> bool:
        """True when the ground set is exactly {1..m}."""
        return self.ground_set == frozenset(range(1, self.m + 1))

    @classmethod
    def from_spec(cls, text: str) -> "Partition":
        """Parse the CLI syntax, e.g. ``"1,2|3,4,5"``."""
        parts = []
        for chunk in text.split("|"):
            items = [s.strip() for s in chunk.split(",")]
            if any(not s.isdigit() or int(s) < 1 for s in items):
                raise ValueError(f"bad partition spec {text!r}")
            parts.append([int(s) for s in items])
        return cls(parts)

    def to_spec(self) -> str:
        return "|".join(",".join(str(v) for v in sorted(p)) for p in self.parts)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Partition({self.to_spec()!r})"


@dataclass(frozen=True)
class KpSummary:
    """Closed-form combinatorial data of K(P)."""

    facet_count: int
    skeleton_m: int
    skeleton_h: int
    aut_order: int
    cox_order: int
    vertex_orbit_count: int


def _require_range_partition(p: Partition) -> None:
    if not p.covers_range():
        raise ValueError(
            f"partition must cover {{1..{p.m}}} with no gaps, got {p.to_spec()}")
    if p.m < 2:
        raise ValueError("partition must have at least two elements (n >= 1)")


def build_kp(p: Partition) -> SimplicialComplex:
    """Fold the (m-1)-hyperoctahedron along the partition ``p``.

    Vertices are 1..m for the unprimed hyperoctahedron vertices plus one
    vertex m+j for each part P_j (in canonical part order).  Each of the
    2^m hyperoctahedron facets maps the primed vertex i' to the vertex of
    i's part; the image is kept only if its m entries stay distinct.
    """
    _require_range_partition(p)
    m = p.m
    part_vertex = {}
    for j, part in enumerate(p.parts, start=1):
        for i in part:
            part_vertex[i] = m + j
    facets = set()
    for primed in itertools.product((False, True), repeat=m):
        image = [part_vertex[i] if primed[i - 1] else i for i in range(1, m + 1)]
        if len(set(image)) == m:
            facets.add(frozenset(image))
    return SimplicialComplex(m - 1, facets)


def kp_summary(p: Partition) -> KpSummary:
    """Closed-form counts for K(P); no complex is built."""
    _require_range_partition(p)
    sizes = p.sizes
    facet_count = math.prod(s + 1 for s in sizes)
    cox = math.prod(math.factorial(s + 1) for s in sizes)
    aut = cox * math.prod(math.factorial(c) for c in p.size_counts().values())
    return KpSummary(
        facet_count=facet_count,
        skeleton_m=p.m + p.t,
        skeleton_h=p.h,
        aut_order=aut,
        cox_order=cox,
        vertex_orbit_count=len(set(sizes)),
    )


def product_dual(p: Partition) -> SimplicialComplex:
    """The dual of the product of simplices with dimensions |P_1|..|P_t|.

    Block j carries |P_j|+1 vertices (one simplex per part); every choice
    of one vertex per block yields the facet consisting of all remaining
    vertices.  Isomorphic to build_kp(p).
    """
    _require_range_partition(p)
    blocks = []
    next_id = 1
    for part in p.parts:
        blocks.append(tuple(range(next_id, next_id + len(part) + 1)))
        next_id += len(part) + 1
    all_vertices = frozenset(range(1, next_id))
    facets = set()
    for choice in itertools.product(*blocks):
        facets.add(all_vertices - frozenset(choice))
    return SimplicialComplex(p.m - 1, facets)


def classify(K: SimplicialComplex) -> Partition:
    """Recover the partition P with K isomorphic to K(P).

    The characteristic partition of one facet is taken and the same
    part-size multiset is verified on every facet; global vertex and
    facet counts are checked against the closed forms.  The returned
    partition is the canonical one on {1..n+1} with those part sizes.
    """
    verdict = is_closed_pseudomanifold(K)
    if not verdict.is_closed:
        raise ValueError(f"complex is not closed ({verdict.status})")
    ty = complex_type(K)
    if not ty <= {3, 4}:
        raise ValueError(f"complex type is {sorted(ty)}, not within {{3, 4}}")
    sizes = None
    for facet in sorted(K.facets, key=sorted):
        cp = characteristic_partition(K, facet)
        if sizes is None:
            sizes = cp.sizes
        elif cp.sizes != sizes:
            raise ValueError(
                "facets disagree on the characteristic partition (corrupt input)")
    canonical = _canonical_partition(sizes)
    expected = kp_summary(canonical)
    if (len(K.vertices) != expected.skeleton_m
            or K.num_facets != expected.facet_count):
        raise ValueError(
            "complex is not of the K(P) form: vertex or facet count does not "
            "match its characteristic partition (corrupt input)")
    return canonical


def _canonical_partition(sizes) -> Partition:
    parts = []
    start = 1
    for s in sorted(sizes):
        parts.append(range(start, start + s))
        start += s
    return Partition(parts)


def enumerate_partitions(m: int) -> list:
    """Canonical partitions of {1..m}, one per multiset of part sizes.

    Ordered by number of parts, then lexicographically by sorted sizes;
    the count is the integer-partition number p(m).
    """
    if m < 2:
        raise ValueError(f"need m >= 2, got {m}")

    def int_partitions(rest: int, least: int):
        if rest == 0:
            yield ()
            return
        for k in range(least, rest + 1):
            for tail in int_partitions(rest - k, k):
                yield (k, *tail)

    all_sizes = sorted(int_partitions(m, 1), key=lambda s: (len(s), s))
    return [_canonical_partition(s) for s in all_sizes]
