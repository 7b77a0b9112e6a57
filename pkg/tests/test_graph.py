import itertools

import pytest

from mbresolve.errors import DisconnectedError, LoopEdgeError, VertexRangeError
from mbresolve.families import FamilySpec, gen_family
from mbresolve.graph import (
    TwinClassKind,
    all_pairs_distances,
    are_twins,
    build_graph,
    truncated_distance,
    twin_partition,
)


def petersen():
    return gen_family(FamilySpec.make("petersen")).graph


class TestBuildGraph:
    def test_triangle(self):
        g = build_graph(3, [(0, 1), (1, 2), (0, 2)])
        assert g.n == 3
        assert g.edge_count == 3
        assert g.neighbors(0) == {1, 2}

    def test_path_p4(self):
        g = build_graph(4, [(0, 1), (1, 2), (2, 3)])
        assert g.degree(0) == 1
        assert g.degree(1) == 2
        assert g.is_tree()

    def test_disconnected_rejected(self):
        with pytest.raises(DisconnectedError):
            build_graph(4, [(0, 1), (2, 3)])

    def test_loop_rejected(self):
        with pytest.raises(LoopEdgeError):
            build_graph(2, [(0, 0), (0, 1)])

    def test_vertex_out_of_range(self):
        with pytest.raises(VertexRangeError):
            build_graph(3, [(0, 1), (1, 5)])

    def test_duplicates_tolerated_and_logged(self, caplog):
        with caplog.at_level("WARNING"):
            g = build_graph(3, [(0, 1), (1, 0), (1, 2)])
        assert g.edge_count == 2
        assert any("duplicate" in rec.message for rec in caplog.records)

    def test_single_vertex(self):
        g = build_graph(1, [])
        assert g.n == 1 and g.edge_count == 0

    def test_labels_length_checked(self):
        with pytest.raises(VertexRangeError):
            build_graph(2, [(0, 1)], labels=["a"])


class TestDistances:
    def test_p4_end_to_end(self):
        g = build_graph(4, [(0, 1), (1, 2), (2, 3)])
        dm = all_pairs_distances(g)
        assert dm[0, 3] == 3
        assert dm.diameter == 3

    def test_petersen_diameter_two(self):
        dm = all_pairs_distances(petersen())
        assert dm.diameter == 2

    def test_complete_all_ones(self):
        g = gen_family(FamilySpec.make("complete", n=5)).graph
        dm = all_pairs_distances(g)
        assert all(dm[u, v] == 1 for u in range(5) for v in range(5) if u != v)
        assert dm.diameter == 1

    def test_symmetry_and_triangle_inequality(self):
        g = gen_family(FamilySpec.make("thm_e", alpha=3)).graph
        dm = all_pairs_distances(g)
        for u, v, w in itertools.product(range(g.n), repeat=3):
            assert dm[u, v] == dm[v, u]
            assert dm[u, w] <= dm[u, v] + dm[v, w]
        assert all(dm[u, u] == 0 for u in range(g.n))


class TestTruncatedDistance:
    def test_p4_truncation(self):
        g = build_graph(4, [(0, 1), (1, 2), (2, 3)])
        dm = all_pairs_distances(g)
        assert truncated_distance(dm, 1, 0, 3) == 2

    def test_identity_is_zero(self):
        dm = all_pairs_distances(petersen())
        assert all(truncated_distance(dm, k, v, v) == 0 for v in range(10) for k in (1, 2, 5))

    def test_equals_distance_beyond_diameter(self):
        g = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
        dm = all_pairs_distances(g)
        k = dm.diameter - 1
        for u in range(5):
            for v in range(5):
                assert truncated_distance(dm, k, u, v) == dm[u, v]

    def test_monotone_in_k_with_ceiling(self):
        g = gen_family(FamilySpec.make("cycle", n=9)).graph
        dm = all_pairs_distances(g)
        for u in range(9):
            for v in range(9):
                values = [truncated_distance(dm, k, u, v) for k in range(1, 7)]
                assert values == sorted(values)
                assert all(val <= k + 1 for k, val in zip(range(1, 7), values))

    def test_k_zero_rejected(self):
        dm = all_pairs_distances(build_graph(2, [(0, 1)]))
        with pytest.raises(ValueError):
            truncated_distance(dm, 0, 0, 1)


class TestTwinPartition:
    def test_star_leaves_form_independent_class(self):
        g = gen_family(FamilySpec.make("star", beta=4)).graph
        tp = twin_partition(g)
        assert ((1, 2, 3, 4) in tp.classes) and ((0,) in tp.classes)
        kinds = dict(zip(tp.classes, tp.kinds))
        assert kinds[(1, 2, 3, 4)] is TwinClassKind.INDEPENDENT
        assert kinds[(0,)] is TwinClassKind.SINGLETON

    def test_petersen_all_singletons(self):
        g = petersen()
        tp = twin_partition(g)
        assert len(tp.classes) == 10
        assert all(kind is TwinClassKind.SINGLETON for kind in tp.kinds)
        # oracle: direct pairwise neighborhood comparison
        assert not any(are_twins(g, u, w) for u in range(10) for w in range(u + 1, 10))

    def test_complete_single_clique_class(self):
        g = gen_family(FamilySpec.make("complete", n=6)).graph
        tp = twin_partition(g)
        assert tp.classes == ((0, 1, 2, 3, 4, 5),)
        assert tp.kinds == (TwinClassKind.CLIQUE,)

    def test_classes_partition_vertices(self):
        for family, kw in [("thm_d", {}), ("fig1", {"alpha": 2}), ("wheel", {"n": 6})]:
            g = gen_family(FamilySpec.make(family, **kw)).graph
            tp = twin_partition(g)
            seen = sorted(v for cls in tp.classes for v in cls)
            assert seen == list(range(g.n))

    def test_twin_swap_is_automorphism(self):
        # swapping two twins fixes the edge set; checked by explicit permutation
        for family, kw in [("thm_d", {}), ("star", {"beta": 4}), ("cycle", {"n": 4})]:
            g = gen_family(FamilySpec.make(family, **kw)).graph
            tp = twin_partition(g)
            for cls in tp.classes_of_size(2):
                u, w = cls[0], cls[1]
                perm = list(range(g.n))
                perm[u], perm[w] = w, u
                assert g.relabel(tuple(perm)).edges == g.edges

    def test_dimension_lower_bound(self):
        g = gen_family(FamilySpec.make("star", beta=4)).graph
        assert twin_partition(g).dimension_lower_bound() == 3
