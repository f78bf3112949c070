"""Tests for facets, wall crossings, the monodromy graph, and tree
labelings with fiber counts."""

import json

import pytest

from growth.cylgrowth import cgd_enumerate, cgd_validate
from growth.decgd import decgd_enumerate, decgd_validate
from growth.goldens import golden_diagram, golden_figure_entries, load_golden
from growth.moduli import (
    LabeledTree, MonodromyGraph, Wall, all_trees, build_cover_graph,
    canonical_order, caterpillar_tree, cross_cgd, cross_decgd, cross_facet,
    export, facets, fiber_count, graph_components, graph_to_json,
    node_labelings, star_tree, transport_cgd, walls,
)
from growth.partitions import Frame, complement, lr_coefficient, syt_count

F24 = Frame(2, 4)
F25 = Frame(2, 5)
BOX = (1,)


class TestFacets:
    @pytest.mark.parametrize("r,count", [(3, 1), (4, 3), (5, 12), (6, 60)])
    def test_counts(self, r, count):
        assert len(facets(r)) == count

    def test_canonical_form(self):
        for order in facets(5):
            assert order[0] == 1
            canon, gmap = canonical_order(order)
            assert canon == order and gmap == ("rot", 0)

    def test_reflection_identified(self):
        assert canonical_order((1, 3, 2))[0] == canonical_order((1, 2, 3))[0]


class TestWalls:
    @pytest.mark.parametrize("r,count", [(4, 2), (5, 5), (6, 9)])
    def test_chord_counts(self, r, count):
        assert len(walls(r)) == count == r * (r - 3) // 2

    def test_interval_bounds(self):
        with pytest.raises(ValueError):
            Wall(1, 1, 4)
        with pytest.raises(ValueError):
            Wall(1, 3, 4)

    def test_complementary_same_positions(self):
        for w in walls(6):
            c = w.complementary()
            assert c.positions == frozenset(range(1, 7)) - w.positions


class TestCrossFacet:
    def test_r4_example(self):
        w = Wall(2, 3, 4)
        assert cross_facet((1, 2, 3, 4), w)[0] == (1, 3, 2, 4)

    def test_involution(self):
        # reversing the same positions twice restores the raw order
        for order in facets(5):
            for w in walls(5):
                raw = list(order)
                span = [((x - 1) % 5) for x in range(w.a, w.b + 1)]
                vals = [raw[q] for q in span]
                for q, v in zip(span, reversed(vals)):
                    raw[q] = v
                again = list(raw)
                vals = [again[q] for q in span]
                for q, v in zip(span, reversed(vals)):
                    again[q] = v
                assert tuple(again) == order

    def test_complement_interval_same_facet(self):
        for order in facets(5):
            for w in walls(5):
                assert cross_facet(order, w)[0] == \
                    cross_facet(order, w.complementary())[0]


class TestCrossCgd:
    def test_wall_figure(self):
        top = golden_diagram("growth_example")
        wall_data = load_golden("wall_example")
        a, b = wall_data["wall"]
        crossed = cross_cgd(top, Wall(a, b, 6))
        for i, j, expected in golden_figure_entries("wall_example"):
            assert crossed.get(i, j) == expected

    def test_triangle_conditions(self):
        top = golden_diagram("growth_example")
        w = Wall(4, 6, 6)
        crossed = cross_cgd(top, w)
        a, b = w.a, w.b
        for i in range(a, b + 2):
            for j in range(i, b + 2):
                assert crossed.get(i, j) == top.get(i, j)
        for i in range(b + 1, a + 7):
            for j in range(i, a + 7):
                assert crossed.get(i, j) == \
                    top.get(a + b + 1 - j, a + b + 1 - i)

    def test_reflection_interchanges_22_31(self):
        top = golden_diagram("growth_example")
        crossed = cross_cgd(top, Wall(4, 6, 6))
        assert top.get(3, 7) == (2, 2) and crossed.get(3, 7) == (3, 1) or \
            top.get(3, 7) == (3, 1) and crossed.get(3, 7) == (2, 2)

    def test_involution_everywhere(self):
        for frame in (F24, F25):
            for g in cgd_enumerate(frame):
                for w in walls(frame.size):
                    crossed = cross_cgd(g, w)
                    assert cgd_validate(crossed)[0]
                    assert cross_cgd(crossed, w) == g

    def test_complementary_wall_same_crossing(self):
        for g in cgd_enumerate(F24):
            for w in walls(4):
                assert cross_cgd(g, w) == cross_cgd(g, w.complementary())


class TestCrossDecgd:
    def test_all_box_matches_cgd(self):
        from growth.decgd import lift_decgd
        for d in decgd_enumerate(F24, [BOX] * 4):
            for w in walls(4):
                crossed = cross_decgd(d, w)
                fine = cross_cgd(lift_decgd(d), w)
                assert crossed.gamma == fine.rows
                ok, problems = decgd_validate(crossed)
                assert ok, problems

    def test_involution(self):
        for d in decgd_enumerate(F24, [BOX] * 4):
            for w in walls(4):
                assert cross_decgd(cross_decgd(d, w), w) == d

    def test_lift_cross_restrict_two_blocks(self):
        # crossing the lifted diagram along one block of a two-block
        # restriction, then restricting, is an involution on restrictions
        from growth.decgd import lift_decgd, restrict_cgd
        from growth.moduli import cross_cgd
        w = Wall(3, 4, 4)
        for g in cgd_enumerate(F24):
            d = restrict_cgd(g, (2, 2))
            crossed = restrict_cgd(cross_cgd(lift_decgd(d), w), (2, 2))
            ok, problems = decgd_validate(crossed)
            assert ok, problems
            again = restrict_cgd(cross_cgd(lift_decgd(crossed), w), (2, 2))
            assert again == d

    def test_block_permutation(self):
        # the crossed diagram agrees with the original over the wall blocks
        # a+1 .. b+1 and reflects the complementary blocks, so the sizes of
        # blocks b+2 .. a+r reverse
        for shape in [((2,), BOX, BOX), ((2,), (1, 1), BOX, BOX)]:
            for d in decgd_enumerate(F25 if sum(map(sum, shape)) == 6 else F24,
                                     shape):
                for w in walls(d.r):
                    crossed = cross_decgd(d, w)
                    expect = list(d.sizes)
                    for m in range(w.b + 2, w.a + d.r + 1):
                        src = w.a + w.b + 2 - m
                        expect[(m - 1) % d.r] = d.sizes[(src - 1) % d.r]
                    assert list(crossed.sizes) == expect
                    ok, problems = decgd_validate(crossed)
                    assert ok, problems


class TestCoverGraph:
    def test_r4_six_cycle(self):
        graph = build_cover_graph(F24, [BOX] * 4)
        assert len(graph.nodes) == 6
        assert len(graph.edges) == 6
        assert graph_components(graph) == 1
        degree = {i: 0 for i in range(6)}
        for u, v, _ in graph.edges:
            degree[u] += 1
            degree[v] += 1
        assert all(dg == 2 for dg in degree.values())
        # every facet carries the same fiber
        per_facet = {}
        for facet, _ in graph.nodes:
            per_facet[facet] = per_facet.get(facet, 0) + 1
        assert set(per_facet.values()) == {2}

    def test_six_cycle_label_sequence(self):
        # walking the cycle, the short-diagonal entry over each crossed
        # wall alternates between the two intermediate shapes
        graph = build_cover_graph(F24, [BOX] * 4)
        adj = {i: [] for i in range(6)}
        for u, v, wall in graph.edges:
            adj[u].append((v, wall))
            adj[v].append((u, wall))
        labels = []
        prev, cur = None, 0
        for _ in range(6):
            nxt, wall = [x for x in adj[cur] if x[0] != prev][0]
            a, b = wall
            _, diagram = graph.nodes[cur]
            labels.append(diagram.get(a, b + 1))
            prev, cur = cur, nxt
        assert cur == 0
        assert set(labels) == {(2,), (1, 1)}
        assert labels == labels[:2] * 3  # alternating period two

    def test_r5_decgd_cover(self):
        shape = ((2,), BOX, BOX)
        graph = build_cover_graph(F24, shape)
        c = lr_coefficient(F24.rectangle(), list(shape))
        assert len(graph.nodes) == len(facets(3)) * c
        # r=3 has no walls at all
        assert graph.edges == ()

    def test_fiber_constant_25(self):
        graph = build_cover_graph(F25, [BOX] * 6)
        assert len(graph.nodes) == 60 * 5
        per_facet = {}
        for facet, _ in graph.nodes:
            per_facet[facet] = per_facet.get(facet, 0) + 1
        assert set(per_facet.values()) == {5}
        assert len(graph.edges) == len(graph.nodes) * 9 // 2

    def test_r4_mixed_shape_cover(self):
        shape = ((2,), BOX, BOX, (1, 1))
        if lr_coefficient(F25.rectangle(), list(shape)) == 0:
            pytest.skip("empty cover")
        graph = build_cover_graph(F25, shape)
        per_facet = {}
        for facet, _ in graph.nodes:
            per_facet[facet] = per_facet.get(facet, 0) + 1
        assert len(set(per_facet.values())) == 1
        degree = {i: 0 for i in range(len(graph.nodes))}
        for u, v, _ in graph.edges:
            degree[u] += 1
            degree[v] += 1
        assert set(degree.values()) == {2}

    def test_size_mismatch_empty_graph(self):
        graph = build_cover_graph(F24, [BOX] * 3)
        assert graph.nodes == () and graph.edges == ()


class TestExport:
    def test_json_schema_round_trip(self):
        graph = build_cover_graph(F24, [BOX] * 4)
        data = json.loads(export(graph, "json").decode())
        assert len(data["nodes"]) == 6
        assert len(data["edges"]) == 6
        assert all(set(e) == {"from", "to", "wall"} for e in data["edges"])

    def test_dot(self):
        graph = build_cover_graph(F24, [BOX] * 4)
        dot = export(graph, "dot").decode()
        assert dot.startswith("graph cover {")
        assert dot.count(" -- ") == 6
        assert export(graph, "dot") == export(graph, "dot")

    def test_empty_graph(self):
        graph = build_cover_graph(F24, [BOX] * 3)
        data = json.loads(export(graph, "json").decode())
        assert data["nodes"] == [] and data["edges"] == []

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            export(build_cover_graph(F24, [BOX] * 4), "yaml")


class TestTrees:
    def test_counts(self):
        assert len(all_trees(4)) == 4
        assert len(all_trees(5)) == 26

    def test_star_and_caterpillar_present(self):
        trees4 = all_trees(4)
        assert star_tree(4) in trees4
        # caterpillar on 4 leaves = one internal edge splitting {1,2}|{3,4}
        cat = caterpillar_tree(4)
        assert cat in trees4

    def test_caterpillar_labelings_all_box(self):
        # labelings of the path tree with all-box leaves are saturated chains
        for frame in (F24, F25):
            tree = caterpillar_tree(frame.size)
            shape = [BOX] * frame.size
            labelings = node_labelings(tree, shape, frame)
            assert len(labelings) == syt_count(frame.rectangle())

    def test_r4_internal_edge_labels(self):
        tree = caterpillar_tree(4)
        labelings = node_labelings(tree, [BOX] * 4, F24)
        edge_labels = set()
        for lab in labelings:
            for (v, w), nu in lab.items():
                if w < 0:
                    edge_labels.add(nu)
        assert edge_labels == {(2,), (1, 1)}

    def test_overbudget_vertex_empty(self):
        tree = star_tree(4)
        assert node_labelings(tree, [(2, 2), BOX, BOX, (1, 1)], F24) == [] \
            or fiber_count(tree, [(2, 2), BOX, BOX, (1, 1)], F24) == 0

    def test_fiber_counts_tree_independent(self):
        cases = [
            (F24, [BOX] * 4),
            (F24, [(2,), (1,), (1,)]),
            (F24, [(1, 1), BOX, BOX]),
            (F25, [(2,), BOX, BOX, BOX, BOX]),
            (F25, [(2,), (2,), BOX, BOX]),
        ]
        for frame, shape in cases:
            r = len(shape)
            expected = lr_coefficient(frame.rectangle(), shape)
            for tree in all_trees(r):
                assert fiber_count(tree, shape, frame) == expected, (shape, tree)
