"""Backtracking search for vertex bijections carrying one facet set onto another.

The search assigns vertex images one at a time, restricting candidates to
vertices with matching local invariants (skeleton degree, facet membership
count, pairwise co-facet counts) and checking a facet's image as soon as
all of its vertices are mapped.  When the complement of a facet is smaller
than the facet itself, the complement family is checked instead (a
bijection preserves one family exactly when it preserves the other).

Intended for desk-scale inputs (at most ~16 vertices); callers enforce
their own guards.
"""

from __future__ import annotations

import itertools
from collections import defaultdict


class _Instance:
    """Preprocessed facet family of one complex, on vertices 0..N-1."""

    def __init__(self, facets):
        self.verts = sorted(frozenset().union(*facets))
        self.n = len(self.verts)
        idx = {v: i for i, v in enumerate(self.verts)}
        self.idx = idx
        nfac = [frozenset(idx[v] for v in f) for f in facets]
        fsize = len(next(iter(nfac)))
        full = frozenset(range(self.n))
        # check whichever of the two mirror families has smaller members
        if self.n - fsize < fsize:
            self.family = [full - f for f in nfac]
        else:
            self.family = nfac
        self.fam_masks = set()
        for f in self.family:
            m = 0
            for v in f:
                m |= 1 << v
            self.fam_masks.add(m)
        self.adj = [0] * self.n
        for f in nfac:
            for a, b in itertools.combinations(f, 2):
                self.adj[a] |= 1 << b
                self.adj[b] |= 1 << a
        memb = [0] * self.n
        pair = [[0] * self.n for _ in range(self.n)]
        for f in self.family:
            for v in f:
                memb[v] += 1
            for a, b in itertools.combinations(f, 2):
                pair[a][b] += 1
                pair[b][a] += 1
        self.memb = memb
        self.pair = pair
        self.sig = [(memb[v], bin(self.adj[v]).count("1")) for v in range(self.n)]

    def signature_multiset(self):
        return sorted(self.sig)


def _vertex_order(inst: _Instance) -> list:
    """Order vertices so that family members become fully mapped early."""
    order = []
    placed = set()
    famsets = inst.family
    while len(order) < inst.n:
        best, best_key = -1, None
        for v in range(inst.n):
            if v in placed:
                continue
            completes = sum(1 for f in famsets if v in f and f - placed == {v})
            key = (completes, inst.memb[v], -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        order.append(best)
        placed.add(best)
    return order


def _search(src: _Instance, dst: _Instance, order):
    """Yield image tuples (indexed by src vertex index) of valid bijections."""
    n = src.n
    pos = {v: i for i, v in enumerate(order)}
    triggers = defaultdict(list)
    for f in src.family:
        triggers[max(pos[v] for v in f)].append(sorted(f, key=pos.get))
    trig = [triggers.get(d, ()) for d in range(n)]

    src_counts = {src.pair[a][b] for a in range(n) for b in range(n) if a != b}
    dst_counts = {dst.pair[a][b] for a in range(n) for b in range(n) if a != b}
    pair_constant = src_counts == dst_counts and len(src_counts) <= 1
    src_adj, dst_adj = src.adj, dst.adj
    src_pair, dst_pair = src.pair, dst.pair
    dst_masks = dst.fam_masks
    cands = [[w for w in range(n) if dst.sig[w] == src.sig[v]] for v in range(n)]
    img = [-1] * n

    def rec(depth: int, used: int):
        if depth == n:
            yield tuple(img)
            return
        v = order[depth]
        av = src_adj[v]
        for w in cands[v]:
            bit = 1 << w
            if used & bit:
                continue
            aw = dst_adj[w]
            ok = True
            for i in range(depth):
                u = order[i]
                iu = img[u]
                if ((av >> u) & 1) != ((aw >> iu) & 1):
                    ok = False
                    break
                if not pair_constant and src_pair[v][u] != dst_pair[w][iu]:
                    ok = False
                    break
            if not ok:
                continue
            img[v] = w
            ok = True
            for f in trig[depth]:
                m = 0
                for u in f:
                    m |= 1 << img[u]
                if m not in dst_masks:
                    ok = False
                    break
            if ok:
                yield from rec(depth + 1, used | bit)
        img[v] = -1

    yield from rec(0, 0)


def _compatible(src: _Instance, dst: _Instance) -> bool:
    return (src.n == dst.n
            and len(src.family) == len(dst.family)
            and sorted(map(len, src.family)) == sorted(map(len, dst.family))
            and src.signature_multiset() == dst.signature_multiset())


def find_bijection(facets1, facets2):
    """First vertex bijection carrying facets1 onto facets2, or None."""
    src, dst = _Instance(facets1), _Instance(facets2)
    if not _compatible(src, dst):
        return None
    order = _vertex_order(src)
    for images in _search(src, dst, order):
        return {src.verts[v]: dst.verts[images[v]] for v in range(src.n)}
    return None


def all_automorphism_images(facets):
    """Yield every facet-preserving bijection as an image tuple.

    Tuples are indexed by position in the sorted vertex list; the sorted
    vertex list itself is obtained from ``sorted(set().union(*facets))``.
    """
    inst = _Instance(facets)
    order = _vertex_order(inst)
    yield from _search(inst, inst, order)
