import pytest

from dchain import (
    STAR,
    THRACKLE,
    Coloring,
    SegmentId,
    all_segments,
    build_graph,
    classify_class,
    classify_coloring,
    coloring_from_json,
    coloring_to_json,
    construct_double_chain_coloring,
    dsatur_upper,
    double_chain_chi,
    gen_convex,
    gen_double_chain,
    load_coloring,
    remove_star_apices,
    save_coloring,
    thrackle_edge_bound_ok,
    verify_coloring,
    verify_report_to_json,
)


def flat_coloring(n_points, pairs_to_colors):
    """Coloring from a {(i, j): color} dict; colors must already be contiguous."""
    count = max(pairs_to_colors.values()) + 1
    return Coloring(n_points, pairs_to_colors, count)


class TestColoringType:
    def test_rejects_partial_assignment(self):
        with pytest.raises(ValueError):
            Coloring(4, {(0, 1): 0}, 1)

    def test_rejects_noncontiguous_colors(self):
        segs = all_segments(3)
        with pytest.raises(ValueError):
            Coloring(3, {s: 2 * i for i, s in enumerate(segs)}, 5)

    def test_rejects_wrong_color_count(self):
        segs = all_segments(3)
        with pytest.raises(ValueError):
            Coloring(3, {s: 0 for s in segs}, 2)

    def test_normalizes_reversed_pairs(self):
        c = flat_coloring(3, {(1, 0): 0, (2, 0): 1, (2, 1): 2})
        assert c.assignment[SegmentId(0, 1)] == 0

    def test_vertex_colors_roundtrip(self):
        colors = [0, 1, 2, 0, 1, 2]
        c = Coloring.from_vertex_colors(4, colors)
        assert c.vertex_colors() == colors
        assert c.color_count == 3

    def test_classes_partition_segments(self):
        c = Coloring.from_vertex_colors(4, [0, 1, 2, 0, 1, 2])
        classes = c.classes()
        assert sorted(classes) == [0, 1, 2]
        assert sum(len(s) for s in classes.values()) == 6


class TestVerifyColoring:
    def test_star_plus_cap_coloring_is_proper(self):
        # the two-color pattern: all cap segments one color, cup star the other
        ps = gen_double_chain(1, 3)
        g = build_graph(ps)
        c = flat_coloring(4, {(0, 1): 1, (0, 2): 1, (0, 3): 1,
                              (1, 2): 0, (1, 3): 0, (2, 3): 0})
        report = verify_coloring(g, c)
        assert report.proper and report.violations == ()

    def test_disjoint_pair_same_color_reported(self):
        ps = gen_double_chain(1, 3)
        g = build_graph(ps)
        c = flat_coloring(4, {(0, 2): 0, (1, 3): 0,
                              (0, 1): 1, (0, 3): 2, (1, 2): 3, (2, 3): 4})
        report = verify_coloring(g, c)
        assert not report.proper
        assert (1, 4) in report.violations  # ranks of (0,2) and (1,3)

    def test_all_distinct_colors_proper(self):
        g = build_graph(gen_convex(5))
        c = Coloring.from_vertex_colors(5, list(range(10)))
        assert verify_coloring(g, c).proper

    def test_rejects_mismatched_point_count(self):
        g = build_graph(gen_convex(4))
        c = Coloring.from_vertex_colors(5, [0] * 10)
        with pytest.raises(ValueError):
            verify_coloring(g, c)


class TestClassify:
    def test_common_endpoint_star(self):
        ps = gen_convex(5)
        kind = classify_class(ps, [(0, 1), (0, 2), (0, 4)])
        assert kind.kind == STAR and kind.apex == 0

    def test_triangle_is_thrackle(self):
        ps = gen_convex(4)
        kind = classify_class(ps, [(0, 1), (1, 2), (0, 2)])
        assert kind.kind == THRACKLE and kind.apex is None

    def test_singleton_reports_smaller_endpoint(self):
        ps = gen_convex(4)
        kind = classify_class(ps, [(3, 1)])
        assert kind.kind == STAR and kind.apex == 1

    def test_rejects_empty_class(self):
        with pytest.raises(ValueError):
            classify_class(gen_convex(4), [])


class TestConstruction:
    def test_smallest_chain_uses_two_colors(self):
        c = construct_double_chain_coloring(1, 3)
        g = build_graph(gen_double_chain(1, 3))
        assert c.color_count == 2
        assert verify_coloring(g, c).proper

    @pytest.mark.parametrize("k,l", [(2, 4), (1, 5), (3, 3), (2, 5), (5, 7), (8, 8)])
    def test_matches_prediction_with_optimal_provider(self, k, l):
        c = construct_double_chain_coloring(k, l)
        g = build_graph(gen_double_chain(k, l))
        assert verify_coloring(g, c).proper
        assert c.color_count == double_chain_chi(k, l)

    def test_class_structure(self):
        # cup-incident classes are stars at cup points; the rest stay inside the cap
        k, l = 3, 4
        ps = gen_double_chain(k, l)
        c = construct_double_chain_coloring(k, l)
        kinds = classify_coloring(ps, c)
        upper = set(ps.partition.upper)
        for color, segs in c.classes().items():
            touches_cup = any(s.i in upper or s.j in upper for s in segs)
            if touches_cup:
                assert kinds[color].kind == STAR and kinds[color].apex in upper
            else:
                assert all(s.i not in upper and s.j not in upper for s in segs)

    def test_suboptimal_provider_still_proper(self):
        k, l = 2, 4
        provider_counts = []

        def greedy_provider(cap):
            coloring = dsatur_upper(build_graph(cap))
            provider_counts.append(coloring.color_count)
            return coloring

        c = construct_double_chain_coloring(k, l, greedy_provider)
        g = build_graph(gen_double_chain(k, l))
        assert verify_coloring(g, c).proper
        assert c.color_count == provider_counts[0] + k

    def test_rejects_improper_provider(self):
        def bad_provider(cap):
            # one color for everything is improper once the cap has a disjoint pair
            return Coloring.from_vertex_colors(cap.n, [0] * len(all_segments(cap.n)))

        with pytest.raises(ValueError, match="not proper"):
            construct_double_chain_coloring(2, 4, bad_provider)

    def test_rejects_bad_sizes(self):
        with pytest.raises(ValueError):
            construct_double_chain_coloring(3, 2)
        with pytest.raises(ValueError):
            construct_double_chain_coloring(1, 2)


class TestRemoveStarApices:
    def test_empty_removal_is_identity(self):
        ps = gen_double_chain(1, 3)
        c = construct_double_chain_coloring(1, 3)
        new_ps, new_c = remove_star_apices(ps, c, [])
        assert new_ps == ps
        assert new_c == c

    def test_removing_cup_stars_leaves_cap_coloring(self):
        k, l = 2, 4
        ps = gen_double_chain(k, l)
        c = construct_double_chain_coloring(k, l)
        new_ps, new_c = remove_star_apices(ps, c, list(ps.partition.upper))
        assert new_ps.n == l
        assert new_c.color_count == c.color_count - k
        assert verify_coloring(build_graph(new_ps), new_c).proper

    def test_rejects_non_star_apex(self):
        ps = gen_double_chain(1, 3)
        c = construct_double_chain_coloring(1, 3)
        # the cap points are not apices: the cap class has no common endpoint
        with pytest.raises(ValueError, match="not the apex"):
            remove_star_apices(ps, c, [1])

    def test_rejects_duplicate_apices(self):
        ps = gen_double_chain(2, 4)
        c = construct_double_chain_coloring(2, 4)
        with pytest.raises(ValueError, match="duplicate"):
            remove_star_apices(ps, c, [0, 0])

    def test_rejects_improper_coloring(self):
        ps = gen_double_chain(1, 3)
        c = flat_coloring(4, {(0, 2): 0, (1, 3): 0,
                              (0, 1): 1, (0, 3): 2, (1, 2): 3, (2, 3): 4})
        with pytest.raises(ValueError, match="not proper"):
            remove_star_apices(ps, c, [0])


class TestThrackleBound:
    def test_single_class_at_boundary(self):
        assert thrackle_edge_bound_ok(5, [5]) is True

    def test_two_classes_at_boundary(self):
        assert thrackle_edge_bound_ok(5, [5, 4]) is True

    def test_two_classes_over_budget(self):
        assert thrackle_edge_bound_ok(5, [5, 5]) is False

    def test_no_thrackles_trivially_ok(self):
        assert thrackle_edge_bound_ok(5, []) is True

    def test_rejects_small_n_and_bad_sizes(self):
        with pytest.raises(ValueError):
            thrackle_edge_bound_ok(2, [1])
        with pytest.raises(ValueError):
            thrackle_edge_bound_ok(5, [0])


class TestColoringJson:
    def test_roundtrip(self, tmp_path):
        c = construct_double_chain_coloring(2, 4)
        path = tmp_path / "coloring.json"
        save_coloring(c, path)
        assert load_coloring(path) == c

    def test_rank_sorted_rows(self):
        c = construct_double_chain_coloring(1, 3)
        data = coloring_to_json(c)
        pairs = [(i, j) for i, j, _ in data["colors"]]
        assert pairs == sorted(pairs)
        assert coloring_from_json(data) == c

    def test_verdict_json(self):
        g = build_graph(gen_convex(4))
        report = verify_coloring(g, Coloring.from_vertex_colors(4, list(range(6))))
        assert verify_report_to_json(report) == {"proper": True, "violations": []}
