import pytest
from hypothesis import given

import strategies
from kmajority import (
    BuildError,
    EdgeColouring,
    InputError,
    PreconditionError,
    build_graph,
    check_majority,
    components,
    eulerian_circuit,
    general_lower_bound,
    is_bipartite,
)
from kmajority.graph import circuit_vertices, edge_subgraph


def test_cycle_construction():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert g.degrees() == (2, 2, 2, 2)
    assert g.edge_count == 4
    # adjacency lists carry (neighbour, edge index) in edge order
    assert g.adjacency[0] == ((1, 0), (3, 3))


def test_forbidden_inputs():
    with pytest.raises(BuildError, match="self-loop"):
        build_graph(2, [(0, 0)])
    with pytest.raises(BuildError, match="duplicate"):
        build_graph(3, [(0, 1), (0, 1)])
    with pytest.raises(BuildError, match="duplicate"):
        build_graph(3, [(0, 1), (1, 0)])
    with pytest.raises(BuildError, match="outside"):
        build_graph(3, [(0, 3)])


def test_components():
    c4 = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert components(c4) == ((0, 1, 2, 3),)
    two = build_graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    assert components(two) == ((0, 1, 2), (3, 4, 5))
    assert components(build_graph(3, [])) == ((0,), (1,), (2,))


def test_bipartite_sides():
    c4 = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    check = is_bipartite(c4)
    assert check.bipartite
    assert check.sides[0] == check.sides[2] != check.sides[1] == check.sides[3]


def test_odd_cycle_witness():
    triangle = build_graph(3, [(0, 1), (1, 2), (2, 0)])
    check = is_bipartite(triangle)
    assert not check.bipartite
    assert len(check.odd_cycle) == 3
    assert sorted(check.odd_cycle) == [0, 1, 2]


def test_pendant_keeps_bipartite():
    g = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 0), (2, 4)])
    check = is_bipartite(g)
    assert check.bipartite
    assert check.sides[4] != check.sides[2]


def _assert_closed_trail(graph, circuit):
    assert sorted(circuit) == list(range(graph.edge_count))
    order = circuit_vertices(graph, circuit)
    assert order[0] == order[-1]
    for step, e in enumerate(circuit):
        assert set(graph.edges[e]) == {order[step], order[step + 1]}


def test_euler_triangle():
    triangle = build_graph(3, [(0, 1), (1, 2), (2, 0)])
    circuit = eulerian_circuit(triangle)
    assert len(circuit) == 3
    _assert_closed_trail(triangle, circuit)


def test_euler_bowtie():
    bowtie = build_graph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
    circuit = eulerian_circuit(bowtie)
    assert len(circuit) == 6
    _assert_closed_trail(bowtie, circuit)


def test_euler_rejects_odd_degree_and_disconnected():
    with pytest.raises(PreconditionError, match="odd-degree"):
        eulerian_circuit(build_graph(3, [(0, 1), (1, 2)]))
    two_triangles = build_graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    with pytest.raises(PreconditionError, match="connected"):
        eulerian_circuit(two_triangles)


def test_majority_pass_on_alternating_cycle():
    c4 = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    verdict = check_majority(c4, EdgeColouring((1, 2, 1, 2), 2), 2)
    assert verdict.passed and verdict.witness is None
    assert all(row == (1, 1) for row in verdict.counts)


def test_majority_star_always_fails():
    star = build_graph(4, [(0, 1), (0, 2), (0, 3)])
    verdict = check_majority(star, EdgeColouring((1, 2, 3), 3), 2)
    assert not verdict.passed
    v, colour, count, cap = verdict.witness
    assert cap == 0 and star.degree(v) == 1


def test_majority_witness_is_lexicographic():
    g = general_lower_bound(2)
    colours = [10] * g.edge_count
    first, second = [e for _, e in g.adjacency[0]][:2]
    colours[first] = colours[second] = 1
    verdict = check_majority(g, EdgeColouring(tuple(colours), 10), 2)
    assert verdict.witness == (0, 1, 2, 1)


def test_majority_input_errors():
    c4 = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    with pytest.raises(InputError):
        check_majority(c4, EdgeColouring((1, 2, 1, 9), 3), 2)
    with pytest.raises(InputError):
        check_majority(c4, EdgeColouring((1, 2, 1), 3), 2)
    with pytest.raises(InputError):
        check_majority(c4, EdgeColouring((1, 2, 1, 2), 2), 1)


@given(strategies.graphs())
def test_adjacency_consistency(g):
    appearances = [0] * g.edge_count
    for v in range(g.vertex_count):
        for u, e in g.adjacency[v]:
            assert g.edges[e] in ((u, v), (v, u))
            appearances[e] += 1
    assert all(count == 2 for count in appearances)
    assert sum(g.degrees()) == 2 * g.edge_count


@given(strategies.graphs())
def test_components_partition(g):
    blocks = components(g)
    seen = [v for block in blocks for v in block]
    assert sorted(seen) == list(range(g.vertex_count))
    assert all(block == tuple(sorted(block)) for block in blocks)


@given(strategies.graphs(min_vertices=2))
def test_bipartite_witness_is_odd_closed_walk(g):
    check = is_bipartite(g)
    if check.bipartite:
        for u, v in g.edges:
            assert check.sides[u] != check.sides[v]
    else:
        cyc = check.odd_cycle
        assert len(cyc) % 2 == 1
        order = circuit_vertices(g, list(cyc) + [cyc[0]])
        # consecutive edges share endpoints and the walk closes up
        for step, e in enumerate(cyc):
            assert set(g.edges[e]) == {order[step], order[step + 1]}


@given(strategies.graphs_with_weights(max_denominator=1))
def test_colour_counts_sum_to_degree(gw):
    g, _ = gw
    if g.edge_count == 0:
        return
    colours = tuple(e % 3 + 1 for e in range(g.edge_count))
    verdict = check_majority(g, EdgeColouring(colours, 3), 2)
    for v in range(g.vertex_count):
        assert sum(verdict.counts[v]) == g.degree(v)


def test_edge_subgraph_keeps_vertices_and_maps_edges():
    g = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 3)])
    sub, emap = edge_subgraph(g, [5, 1, 3])
    assert sub.vertex_count == 5
    assert emap == (1, 3, 5)
    assert [sub.edges[j] for j in range(3)] == [g.edges[e] for e in emap]
