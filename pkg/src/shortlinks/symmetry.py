"""Brute-force symmetry groups of small complexes.

Automorphisms are found by exhaustive backtracking over vertex bijections
preserving the facet set; orbits are computed from generator applications.
The reflection group Cox(K) attached to a partition is realized on a
small permutation domain and its order is obtained by explicit closure,
so the closed-form orders elsewhere in the package can be checked against
something that does not share their algebra.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from ._bijections import all_automorphism_images
from .errors import GuardExceeded
from .partitions import Partition
from .simplicial import SimplicialComplex

AUTOMORPHISM_VERTEX_GUARD = 12
COXETER_ORDER_GUARD = 10 ** 7


class Permutation:
    """A bijection on a finite set of vertex ids."""

    __slots__ = ("mapping", "_key")

    def __init__(self, mapping: dict) -> None:
        if set(mapping) != set(mapping.values()):
            raise ValueError("mapping is not a bijection on its domain")
        object.__setattr__(self, "mapping", dict(mapping))
        object.__setattr__(self, "_key", tuple(sorted(self.mapping.items())))

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @classmethod
    def identity(cls, domain) -> "Permutation":
        return cls({v: v for v in domain})

    def __call__(self, v):
        return self.mapping[v]

    def apply(self, element):
        """Image of a vertex or of a face (any iterable of vertices)."""
        if isinstance(element, int):
            return self.mapping[element]
        return frozenset(self.mapping[v] for v in element)

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: (self * other)(v) = self(other(v))."""
        return Permutation({v: self.mapping[w] for v, w in other.mapping.items()})

    def inverse(self) -> "Permutation":
        return Permutation({w: v for v, w in self.mapping.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        moved = {v: w for v, w in self._key if v != w}
        return f"Permutation({moved or 'id'})"


def _check_vertex_guard(K: SimplicialComplex) -> None:
    if len(K.vertices) > AUTOMORPHISM_VERTEX_GUARD:
        raise GuardExceeded(
            f"automorphism search is limited to {AUTOMORPHISM_VERTEX_GUARD} "
            f"vertices, complex has {len(K.vertices)}")


def automorphisms(K: SimplicialComplex) -> list:
    """All vertex permutations of ``K`` preserving its facet set."""
    _check_vertex_guard(K)
    verts = K.vertices
    perms = [Permutation({verts[i]: verts[im[i]] for i in range(len(verts))})
             for im in all_automorphism_images(K.facets)]
    perms.sort(key=lambda p: p._key)
    return perms


def automorphism_count(K: SimplicialComplex) -> int:
    """Order of Aut(K) by the same search as :func:`automorphisms`.

    Nothing is materialized, so complexes whose group order runs into the
    millions stay within memory.
    """
    _check_vertex_guard(K)
    return sum(1 for _ in all_automorphism_images(K.facets))


def orbits(perms, domain) -> list:
    """Orbits of the group generated by ``perms`` on ``domain``.

    Domain elements are vertices (ints) or faces (iterables of vertices);
    the given permutations are treated as generators, so callers need not
    pass a whole group.  Orbits are returned sorted by their smallest
    element.
    """
    norm = [e if isinstance(e, int) else frozenset(e) for e in domain]
    pending = set(norm)
    result = []
    while pending:
        seed = min(pending, key=_orbit_sort_key)
        orbit = {seed}
        queue = deque([seed])
        while queue:
            x = queue.popleft()
            for p in perms:
                y = p.apply(x)
                if y not in orbit:
                    if y not in pending:
                        raise ValueError(
                            f"domain is not closed under the permutations: "
                            f"reached {y}")
                    orbit.add(y)
                    queue.append(y)
        result.append(orbit)
        pending -= orbit
    result.sort(key=lambda o: _orbit_sort_key(min(o, key=_orbit_sort_key)))
    return result


def _orbit_sort_key(x):
    return (0, x, ()) if isinstance(x, int) else (1, min(x), tuple(sorted(x)))


@dataclass(frozen=True)
class CoxeterPresentation:
    """Generators g_i and exponents m_ij with (g_i g_j)^(m_ij) = 1.

    m_ii = 1, and m_ij is 3 when i and j share a part of the partition,
    otherwise 2.
    """

    generators: tuple
    matrix: tuple

    def exponent(self, i: int, j: int) -> int:
        return self.matrix[self.generators.index(i)][self.generators.index(j)]


def coxeter_presentation(p: Partition) -> CoxeterPresentation:
    """Presentation of the reflection group attached to K(P)."""
    gens = tuple(sorted(p.ground_set))
    part_of = {}
    for k, part in enumerate(p.parts):
        for i in part:
            part_of[i] = k
    matrix = tuple(
        tuple(1 if a == b else (3 if part_of[a] == part_of[b] else 2)
              for b in gens)
        for a in gens)
    return CoxeterPresentation(generators=gens, matrix=matrix)


def coxeter_order_bruteforce(p: Partition) -> int:
    """Order of the generated permutation group realizing the presentation.

    Each generator g_i (i in part P_j) acts as the transposition (i, aux_j)
    on P_j plus one auxiliary point per part; the group is closed by
    breadth-first products.  Must equal the product of (|P_i|+1)!.
    """
    expected = math.prod(math.factorial(len(part) + 1) for part in p.parts)
    if expected > COXETER_ORDER_GUARD:
        raise GuardExceeded(
            f"coxeter closure is limited to {COXETER_ORDER_GUARD} elements, "
            f"presentation would generate {expected}")
    points = sorted(p.ground_set)
    index = {v: k for k, v in enumerate(points)}
    size = len(points) + p.t
    tables = []
    for j, part in enumerate(p.parts):
        aux = len(points) + j
        for i in sorted(part):
            table = list(range(size))
            table[index[i]], table[aux] = table[aux], table[index[i]]
            tables.append(bytes(table) + bytes(range(size, 256)))
    identity = bytes(range(size))
    seen = {identity}
    frontier = [identity]
    while frontier:
        new = []
        for element in frontier:
            for table in tables:
                product = element.translate(table)
                if product not in seen:
                    seen.add(product)
                    new.append(product)
        frontier = new
    return len(seen)
