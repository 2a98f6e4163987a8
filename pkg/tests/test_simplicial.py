import itertools

import pytest

from shortlinks import (
    Partition,
    SimplicialComplex,
    are_isomorphic,
    build_kp,
    characteristic_partition,
    complex_type,
    euler_characteristic,
    faces_of_dim,
    is_closed_pseudomanifold,
    link_of_face,
    make_face,
    skeleton,
)
from conftest import read_fixture
from shortlinks.formats import parse_complex


def tetrahedron_boundary():
    return SimplicialComplex(2, itertools.combinations(range(1, 5), 3))


def octahedron():
    return build_kp(Partition.from_spec("1|2|3"))


def figure1():
    return parse_complex(read_fixture("figure1.txt"))


def same_cycle(a, b) -> bool:
    """Cyclic sequences equal up to rotation and reflection."""
    if len(a) != len(b):
        return False
    doubled = list(b) + list(b)
    fwd = any(doubled[i:i + len(a)] == list(a) for i in range(len(b)))
    rev = list(reversed(a))
    bwd = any(doubled[i:i + len(a)] == rev for i in range(len(b)))
    return fwd or bwd


class TestFaceBasics:
    def test_make_face_sorted_set(self):
        assert make_face([3, 1, 2]) == frozenset({1, 2, 3})

    def test_make_face_rejects_duplicates(self):
        with pytest.raises(ValueError):
            make_face([1, 1, 2])

    def test_make_face_rejects_empty(self):
        with pytest.raises(ValueError):
            make_face([])

    def test_make_face_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            make_face([0, 1])

    def test_complex_purity_enforced(self):
        with pytest.raises(ValueError):
            SimplicialComplex(2, [[1, 2, 3], [4, 5]])

    def test_complex_deduplicates_facets(self):
        K = SimplicialComplex(1, [[1, 2], [2, 1], [2, 3], [1, 3]])
        assert K.num_facets == 3


class TestFacesOfDim:
    def test_tetrahedron_edges(self):
        assert len(faces_of_dim(tetrahedron_boundary(), 1)) == 6

    def test_octahedron_vertices(self):
        assert len(faces_of_dim(octahedron(), 0)) == 6

    def test_figure1_edge_count(self):
        # 13 facets span every pair on 7 vertices except one
        assert len(faces_of_dim(figure1(), 1)) == 20

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            faces_of_dim(octahedron(), 3)
        with pytest.raises(ValueError):
            faces_of_dim(octahedron(), -1)


class TestClosedness:
    def test_octahedron_closed(self):
        assert is_closed_pseudomanifold(octahedron()).is_closed

    def test_single_triangle_boundary(self):
        verdict = is_closed_pseudomanifold(SimplicialComplex(2, [[1, 2, 3]]))
        assert verdict.status == "boundary"
        assert len(verdict.boundary) == 3

    def test_figure1_closed(self):
        assert is_closed_pseudomanifold(figure1()).is_closed

    def test_overfull_ridge_detected(self):
        K = SimplicialComplex(2, [[1, 2, 3], [1, 2, 4], [1, 2, 5]])
        verdict = is_closed_pseudomanifold(K)
        assert verdict.status == "bad"
        assert verdict.bad_face == frozenset({1, 2})
        assert verdict.bad_count == 3


class TestLinks:
    def test_octahedron_vertex_link_is_square(self):
        K = octahedron()
        report = link_of_face(K, [1])
        assert report.sizes == (4,)

    def test_figure1_link_of_67(self):
        report = link_of_face(figure1(), [6, 7])
        assert report.sizes == (5,)
        assert same_cycle(report.cycles[0], (1, 2, 3, 4, 5))

    def test_simplex_boundary_links_are_triangles(self):
        assert link_of_face(tetrahedron_boundary(), [1]).sizes == (3,)
        four_simplex_boundary = SimplicialComplex(
            3, itertools.combinations(range(1, 6), 4))
        assert link_of_face(four_simplex_boundary, [1, 2]).sizes == (3,)

    def test_edge_count_conservation(self):
        K = figure1()
        for face in faces_of_dim(K, K.dim - 2):
            report = link_of_face(K, face)
            containing = sum(1 for f in K.facets if face <= f)
            assert sum(report.sizes) == containing

    def test_wrong_size_face_rejected(self):
        with pytest.raises(ValueError):
            link_of_face(octahedron(), [1, 2])

    def test_non_face_rejected(self):
        with pytest.raises(ValueError):
            link_of_face(octahedron(), [99])

    def test_boundary_complex_link_fails(self):
        K = SimplicialComplex(2, [[1, 2, 3]])
        with pytest.raises(ValueError):
            link_of_face(K, [1])


class TestComplexType:
    @pytest.mark.parametrize("m", [3, 4, 5])
    def test_simplex_type(self, m):
        K = build_kp(Partition([range(1, m + 1)]))
        assert complex_type(K) == {3}

    @pytest.mark.parametrize("m", [3, 4, 5])
    def test_hyperoctahedron_type(self, m):
        K = build_kp(Partition([[i] for i in range(1, m + 1)]))
        assert complex_type(K) == {4}

    def test_dual_triangular_prism_type(self):
        assert complex_type(build_kp(Partition.from_spec("1|2,3"))) == {3, 4}

    def test_dim1_triangle_and_square(self):
        assert complex_type(build_kp(Partition.from_spec("1,2"))) == {3}
        assert complex_type(build_kp(Partition.from_spec("1|2"))) == {4}

    def test_figure1_type(self):
        assert complex_type(figure1()) == {3, 4, 5}


class TestSkeleton:
    def test_simplex_skeleton_complete(self):
        G = skeleton(tetrahedron_boundary())
        assert G.num_vertices == 4 and G.num_edges == 6

    def test_octahedron_skeleton_cocktail_party(self):
        G = skeleton(octahedron())
        assert G.num_vertices == 6 and G.num_edges == 12
        non_edges = [(u, v) for u, v in itertools.combinations(G.vertices, 2)
                     if not G.has_edge(u, v)]
        assert len(non_edges) == 3
        assert len({v for e in non_edges for v in e}) == 6  # disjoint pairs

    def test_figure1_skeleton_misses_exactly_25(self):
        G = skeleton(figure1())
        non_edges = [(u, v) for u, v in itertools.combinations(G.vertices, 2)
                     if not G.has_edge(u, v)]
        assert non_edges == [(2, 5)]


class TestEuler:
    def test_octahedron(self):
        assert euler_characteristic(octahedron()) == 2

    def test_triangle_boundary(self):
        assert euler_characteristic(build_kp(Partition.from_spec("1,2"))) == 0

    @pytest.mark.parametrize("spec", ["1,2,3,4", "1|2,3,4", "1,2|3,4",
                                      "1|2|3,4", "1|2|3|4"])
    def test_three_sphere_chi_zero(self, spec):
        assert euler_characteristic(build_kp(Partition.from_spec(spec))) == 0


class TestCharacteristicPartition:
    def test_octahedron_all_singletons(self):
        K = octahedron()
        facet = next(iter(K.facets))
        assert characteristic_partition(K, facet).sizes == (1, 1, 1)

    def test_simplex_single_part(self):
        K = tetrahedron_boundary()
        facet = next(iter(K.facets))
        assert characteristic_partition(K, facet).sizes == (3,)

    def test_dual_prism_exact_parts(self):
        K = build_kp(Partition.from_spec("1|2,3"))
        cp = characteristic_partition(K, [1, 2, 3])
        assert cp == Partition([[1], [2, 3]])

    def test_rejects_non_facet(self):
        with pytest.raises(ValueError):
            characteristic_partition(octahedron(), [1, 2, 3, 4])

    def test_rejects_long_links(self):
        K = figure1()
        facet = next(iter(sorted(K.facets, key=sorted)))
        with pytest.raises(ValueError):
            characteristic_partition(K, facet)


class TestIsomorphism:
    def test_same_skeleton_different_complexes(self):
        K1 = build_kp(Partition.from_spec("1,2|3,4,5,6"))
        K2 = build_kp(Partition.from_spec("1,2,3|4,5,6"))
        for K in (K1, K2):
            G = skeleton(K)
            assert G.num_vertices == 8 and G.num_edges == 28  # K8
        assert are_isomorphic(K1, K2) is None

    def test_relabeled_partitions_isomorphic(self):
        K1 = build_kp(Partition.from_spec("1|2,3"))
        K2 = build_kp(Partition([[2], [1, 3]]))
        phi = are_isomorphic(K1, K2)
        assert phi is not None
        assert {frozenset(phi[v] for v in f) for f in K1.facets} == K2.facets

    def test_different_facet_counts(self):
        assert are_isomorphic(tetrahedron_boundary(), octahedron()) is None

    def test_identity_case(self):
        K = octahedron()
        phi = are_isomorphic(K, K)
        assert phi is not None
        assert {frozenset(phi[v] for v in f) for f in K.facets} == K.facets
