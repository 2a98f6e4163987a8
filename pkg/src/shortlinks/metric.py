"""Graph path-metrics and hypercube embeddability.

A graph embeds in a hypercube up to scale lambda when its vertices map to
binary addresses whose Hamming distances are exactly lambda times the
path-metric; scale 1 is the partial-cube case.  Necessary conditions come
from the hypermetric (in particular 5-gonal) inequalities; the exact
decision is membership of the metric in the cut cone, solved here as an
exact rational feasibility problem over all cuts.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .errors import GuardExceeded
from .exactlp import solve_nonnegative

CUT_CONE_VERTEX_GUARD = 13
EMBED_VERTEX_GUARD = 8
EMBED_DIMENSION_GUARD = 12


class Graph:
    """Simple undirected graph with cached all-pairs hop distances."""

    __slots__ = ("vertices", "edges", "_index", "_adj", "_dist")

    def __init__(self, vertices, edges) -> None:
        verts = tuple(sorted(set(vertices)))
        if not verts:
            raise ValueError("graph needs at least one vertex")
        vset = set(verts)
        eset = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if u not in vset or v not in vset:
                raise ValueError(f"edge ({u}, {v}) leaves the vertex set")
            eset.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", tuple(sorted(eset)))
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(verts)})
        adj = {v: set() for v in verts}
        for u, v in eset:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "_adj", {v: frozenset(nb) for v, nb in adj.items()})
        object.__setattr__(self, "_dist", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def neighbors(self, v) -> frozenset:
        return self._adj[v]

    def degree(self, v) -> int:
        return len(self._adj[v])

    def has_edge(self, u, v) -> bool:
        return v in self._adj[u]

    def _distance_rows(self):
        if self._dist is None:
            rows = []
            for s in self.vertices:
                row = [-1] * self.num_vertices
                row[self._index[s]] = 0
                queue = deque([s])
                while queue:
                    u = queue.popleft()
                    du = row[self._index[u]]
                    for w in self._adj[u]:
                        iw = self._index[w]
                        if row[iw] < 0:
                            row[iw] = du + 1
                            queue.append(w)
                if min(row) < 0:
                    raise ValueError(
                        "graph is disconnected; the path-metric is undefined")
                rows.append(row)
            object.__setattr__(self, "_dist", rows)
        return self._dist

    def distance(self, u, v) -> int:
        """Path-metric (number of hops on a shortest path)."""
        return self._distance_rows()[self._index[u]][self._index[v]]

    def is_connected(self) -> bool:
        try:
            self._distance_rows()
        except ValueError:
            return False
        return True

    def is_bipartite(self) -> bool:
        color = {}
        for s in self.vertices:
            if s in color:
                continue
            color[s] = 0
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self._adj[u]:
                    if w not in color:
                        color[w] = 1 - color[u]
                        queue.append(w)
                    elif color[w] == color[u]:
                        return False
        return True

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges))

    def __repr__(self) -> str:
        return f"Graph({self.num_vertices} vertices, {self.num_edges} edges)"


def complete_graph(m: int) -> Graph:
    """K_m on vertices 1..m."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return Graph(range(1, m + 1), itertools.combinations(range(1, m + 1), 2))


def complete_minus_matching(m: int, h: int) -> Graph:
    """K_m - hK_2: the complete graph minus h disjoint edges {2k-1, 2k}."""
    if not 0 <= 2 * h <= m:
        raise ValueError(f"need 0 <= h <= m/2, got m={m}, h={h}")
    removed = {(2 * k + 1, 2 * k + 2) for k in range(h)}
    edges = set(itertools.combinations(range(1, m + 1), 2)) - removed
    return Graph(range(1, m + 1), edges)


def complete_minus_cycle(m: int, h: int) -> Graph:
    """K_m - C_h: the complete graph minus a cycle on vertices 1..h."""
    if not 3 <= h <= m:
        raise ValueError(f"need 3 <= h <= m, got m={m}, h={h}")
    removed = {tuple(sorted((k + 1, (k + 1) % h + 1))) for k in range(h)}
    edges = set(itertools.combinations(range(1, m + 1), 2)) - removed
    return Graph(range(1, m + 1), edges)


def cycle_graph(m: int) -> Graph:
    """C_m on vertices 1..m."""
    if m < 3:
        raise ValueError("cycle needs m >= 3")
    return Graph(range(1, m + 1),
                 (tuple(sorted((k + 1, (k + 1) % m + 1))) for k in range(m)))


def hypercube_graph(dim: int) -> Graph:
    """Q_dim on vertices 1..2^dim; vertex v encodes address v-1."""
    if dim < 1:
        raise ValueError("hypercube dimension must be >= 1")
    n = 1 << dim
    edges = []
    for a in range(n):
        for b in range(dim):
            c = a ^ (1 << b)
            if a < c:
                edges.append((a + 1, c + 1))
    return Graph(range(1, n + 1), edges)


_GRAPH_KINDS = {
    "complete": complete_graph,
    "complete_minus_matching": complete_minus_matching,
    "complete_minus_cycle": complete_minus_cycle,
    "cycle": cycle_graph,
    "hypercube": hypercube_graph,
}


def make_graph(kind: str, **params) -> Graph:
    """Dispatch to the named constructor (see ``_GRAPH_KINDS`` keys)."""
    try:
        ctor = _GRAPH_KINDS[kind]
    except KeyError:
        raise ValueError(f"unknown graph kind {kind!r}") from None
    return ctor(**params)


def is_isometric_cycle(G: Graph, cycle) -> bool:
    """Is the cycle's own metric equal to the graph metric on its vertices?"""
    cyc = list(cycle)
    L = len(cyc)
    if L < 3 or len(set(cyc)) != L:
        raise ValueError("cycle must list at least 3 distinct vertices")
    for k in range(L):
        if not G.has_edge(cyc[k], cyc[(k + 1) % L]):
            raise ValueError(
                f"({cyc[k]}, {cyc[(k + 1) % L]}) is not an edge of the graph")
    for i, j in itertools.combinations(range(L), 2):
        around = min(j - i, L - (j - i))
        if G.distance(cyc[i], cyc[j]) != around:
            return False
    return True


@dataclass(frozen=True)
class GonalVector:
    """Integer vertex weights b with sum 1, as in the hypermetric inequalities."""

    coefficients: tuple  # sorted tuple of (vertex, nonzero coefficient)

    def __post_init__(self):
        if sum(c for _, c in self.coefficients) != 1:
            raise ValueError("gonal vector coefficients must sum to 1")

    def as_dict(self) -> dict:
        return dict(self.coefficients)

    def value(self, G: Graph) -> int:
        """Left-hand side sum b_i b_j d(i, j); positive means violated."""
        total = 0
        for (u, bu), (v, bv) in itertools.combinations(self.coefficients, 2):
            total += bu * bv * G.distance(u, v)
        return total


def kgonal_violations(G: Graph, bound: int = 3) -> list:
    """All violated k-gonal inequalities with sum |b_i| <= 2*bound + 1.

    Bound 2 covers the 5-gonal inequalities, bound 3 adds the 7-gonal
    ones, and so on.  An empty list certifies "hypermetric up to the
    bound"; full hypermetricity is an infinite family and is not decided
    here.
    """
    if bound < 2:
        raise ValueError("bound must be >= 2")
    budget = 2 * bound + 1
    verts = G.vertices
    n = len(verts)
    violations = []
    coeffs = [0] * n

    def extend(i: int, left: int, total: int):
        if i == n:
            if total == 1:
                vec = GonalVector(tuple(
                    (verts[k], coeffs[k]) for k in range(n) if coeffs[k]))
                if vec.value(G) > 0:
                    violations.append(vec)
            return
        last = i == n - 1
        for c in range(-left, left + 1):
            # the rest must still be able to reach a total of exactly 1
            rest = left - abs(c)
            if abs(1 - (total + c)) > rest:
                continue
            if last and total + c != 1:
                continue
            coeffs[i] = c
            extend(i + 1, rest, total + c)
        coeffs[i] = 0

    extend(0, budget, 0)
    violations.sort(key=lambda v: v.coefficients)
    return violations


@dataclass(frozen=True)
class PartialCubeLabeling:
    """Scale-1 hypercube addresses: Hamming distance equals the path-metric."""

    dimension: int
    address: dict

    def hamming(self, u, v) -> int:
        return sum(a != b for a, b in zip(self.address[u], self.address[v]))


def partial_cube(G: Graph):
    """Recognize isometric hypercube subgraphs and label them.

    Edges are grouped by the distance split they induce (the two sides
    closer to either endpoint); each group becomes one coordinate, set to
    1 on the side away from a base vertex.  The labeling is returned only
    if every pairwise Hamming distance reproduces the path-metric, which
    certifies the verdict; if the graph is not a partial cube this check
    (or bipartiteness) necessarily fails and None is returned.
    """
    if not G.is_connected():
        raise ValueError("partial-cube recognition needs a connected graph")
    if not G.is_bipartite():
        return None
    verts = G.vertices
    idx = {v: i for i, v in enumerate(verts)}
    splits = {}
    for u, v in G.edges:
        side_u = frozenset(w for w in verts
                           if G.distance(w, u) < G.distance(w, v))
        side_v = frozenset(w for w in verts
                           if G.distance(w, v) < G.distance(w, u))
        key = (side_u, side_v) if min(side_u) < min(side_v) else (side_v, side_u)
        splits.setdefault(key, []).append((u, v))
    classes = sorted(splits, key=lambda key: sorted(map(min, key)))
    base = verts[0]
    address = {}
    for v in verts:
        bits = []
        for side_a, side_b in classes:
            if v in side_a:
                bits.append(0 if base in side_a else 1)
            elif v in side_b:
                bits.append(0 if base in side_b else 1)
            else:
                return None  # split does not cover the graph
        address[v] = tuple(bits)
    labeling = PartialCubeLabeling(dimension=len(classes), address=address)
    for u, v in itertools.combinations(verts, 2):
        if labeling.hamming(u, v) != G.distance(u, v):
            return None
    return labeling


@dataclass(frozen=True)
class CutDecomposition:
    """Nonnegative cut weights reproducing a graph metric exactly.

    Cuts are identified with their side not containing the base vertex
    (the smallest one); ``sum w_S * delta_S(i, j)`` equals the metric for
    every pair.
    """

    weights: dict          # frozenset -> positive Fraction
    vertices: tuple
    metric: dict           # (u, v) with u < v -> int

    def separation(self, u, v) -> Fraction:
        total = Fraction(0)
        for S, w in self.weights.items():
            if (u in S) != (v in S):
                total += w
        return total


def cut_cone_decompose(G: Graph):
    """Exact cut-cone membership of the path-metric.

    Feasibility of d = sum w_S delta_S with w >= 0 over all cuts is decided
    by the exact phase-1 simplex; a decomposition certificate is returned,
    or None when the metric is provably outside the cut cone (hence not
    L1-embeddable, hence not hypercube-embeddable at any scale).
    """
    n = G.num_vertices
    if n > CUT_CONE_VERTEX_GUARD:
        raise GuardExceeded(
            f"cut-cone solver is limited to {CUT_CONE_VERTEX_GUARD} vertices, "
            f"graph has {n}")
    verts = G.vertices
    pairs = list(itertools.combinations(verts, 2))
    rhs = [G.distance(u, v) for u, v in pairs]
    if n == 1:
        return CutDecomposition(weights={}, vertices=verts, metric={})
    base = verts[0]
    others = verts[1:]
    cuts = []
    columns = []
    for r in range(1, len(others) + 1):
        for combo in itertools.combinations(others, r):
            S = frozenset(combo)
            cuts.append(S)
            columns.append([1 if ((u in S) != (v in S)) else 0
                            for u, v in pairs])
    solution = solve_nonnegative(columns, rhs)
    if solution is None:
        return None
    weights = {cuts[j]: w for j, w in enumerate(solution) if w > 0}
    dec = CutDecomposition(
        weights=weights,
        vertices=verts,
        metric={(u, v): G.distance(u, v) for u, v in pairs},
    )
    for (u, v), d in dec.metric.items():
        if dec.separation(u, v) != d:
            raise AssertionError("cut decomposition failed its audit")
    return dec


def embedding_from_cuts(dec: CutDecomposition):
    """Turn a cut decomposition into scaled binary addresses.

    The scale is the least common multiple of the weight denominators;
    each cut contributes scale*weight coordinates that are 1 exactly on
    its side.  Returns (scale, address dict); the Hamming distances are
    audited against scale times the metric.
    """
    scale = 1
    for w in dec.weights.values():
        scale = scale * w.denominator // math.gcd(scale, w.denominator)
    order = sorted(dec.weights, key=lambda S: (len(S), sorted(S)))
    address = {}
    for v in dec.vertices:
        bits = []
        for S in order:
            count = dec.weights[S] * scale
            bits.extend([1 if v in S else 0] * int(count))
        address[v] = tuple(bits)
    for (u, v), d in dec.metric.items():
        ham = sum(a != b for a, b in zip(address[u], address[v]))
        if ham != scale * d:
            raise AssertionError("scaled embedding failed its audit")
    return scale, address


def find_scaled_embedding(G: Graph, scale: int, dim: int):
    """Search for addresses in {0,1}^dim with Hamming = scale * distance.

    Exhaustive backtracking over vertex addresses, vertices in decreasing
    degree order; the first vertex is pinned to the zero address and the
    second to a left-packed address, which are free normalizations.
    Returns an address dict or None when no embedding exists at exactly
    these parameters.
    """
    if G.num_vertices > EMBED_VERTEX_GUARD:
        raise GuardExceeded(
            f"embedding search is limited to {EMBED_VERTEX_GUARD} vertices, "
            f"graph has {G.num_vertices}")
    if dim > EMBED_DIMENSION_GUARD:
        raise GuardExceeded(
            f"embedding search is limited to dimension "
            f"{EMBED_DIMENSION_GUARD}, requested {dim}")
    if scale < 1:
        raise ValueError("scale must be a positive integer")
    order = sorted(G.vertices, key=lambda v: (-G.degree(v), v))
    n = len(order)
    need = [[scale * G.distance(order[i], order[j]) for j in range(n)]
            for i in range(n)]
    if any(need[i][j] > dim for i in range(n) for j in range(n)):
        return None
    masks_by_weight = [[] for _ in range(dim + 1)]
    for mask in range(1 << dim):
        masks_by_weight[mask.bit_count()].append(mask)
    assigned = [0] * n

    def rec(k: int):
        if k == n:
            return True
        if k == 1:
            w = need[0][1]
            assigned[1] = (1 << w) - 1  # left-packed, unique up to column order
            return rec(2)
        nk = need[k]
        for mask in masks_by_weight[nk[0]]:
            ok = True
            for i in range(1, k):
                if (assigned[i] ^ mask).bit_count() != nk[i]:
                    ok = False
                    break
            if ok:
                assigned[k] = mask
                if rec(k + 1):
                    return True
        return False

    assigned[0] = 0
    found = rec(1) if n > 1 else True
    if not found:
        return None
    return {order[i]: tuple((assigned[i] >> (dim - 1 - b)) & 1
                            for b in range(dim))
            for i in range(n)}


def a_m(m: int) -> int:
    """Minimal known scale for embedding K_{m+1}-K_2 and K_{2m}-mK_2."""
    if m < 3:
        raise ValueError("m must be >= 3")
    if m % 2 == 0:
        return math.comb(m - 2, m // 2 - 1)
    return 2 * math.comb(m - 2, (m - 3) // 2)
