from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings

import oracles
import strategies
from kmajority import (
    InputError,
    build_graph,
    enforce_condition_ii,
    find_kernel_direction,
    is_bipartite,
    pendant_direction,
    resolve_cycles,
    round_weights,
)
from kmajority.rounding import vertex_sums

HALF = Fraction(1, 2)
THIRD = Fraction(1, 3)


def triangle():
    return build_graph(3, [(0, 1), (1, 2), (2, 0)])


def c4():
    return build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


# --------------------------------------------------------------------------
# round_weights examples
# --------------------------------------------------------------------------


def test_integral_weights_pass_through():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    z = [1, 0, 1, 0, 1]
    result = round_weights(g, z)
    assert result.x == (1, 0, 1, 0, 1)
    assert result.exceptional == ()


def test_single_edge_two_fifths_rounds_up():
    # x = 0 would leave both endpoint sums deficient, violating (ii)
    result = round_weights(build_graph(2, [(0, 1)]), [Fraction(2, 5)])
    assert result.x == (1,)
    assert result.exceptional == ()


def test_half_triangle_matches_enumeration():
    g = triangle()
    z = [HALF] * 3
    valid = {
        bits
        for bits in product((0, 1), repeat=3)
        if oracles.check_conditions(g, z, [Fraction(b) for b in bits])
    }
    # exactly the three rotations: both edges at one vertex set to 1
    assert valid == {(1, 0, 1), (1, 1, 0), (0, 1, 1)}
    result = round_weights(g, z)
    assert result.x in valid
    (v, cycle), = result.exceptional
    assert sorted(cycle) == [0, 1, 2]
    assert result.x == (1, 0, 1) and v == 0  # designated vertex carries both 1s


def test_half_square_is_a_perfect_matching():
    g = c4()
    z = [HALF] * 4
    valid = {
        bits
        for bits in product((0, 1), repeat=4)
        if oracles.check_conditions(g, z, [Fraction(b) for b in bits])
    }
    assert valid == {(1, 0, 1, 0), (0, 1, 0, 1)}
    result = round_weights(g, z)
    assert result.x in valid
    assert result.exceptional == ()


def test_round_weights_combines_disjoint_odd_cycles():
    # two vertex-disjoint triangles joined by a bridge: the only kernel
    # directions pair the cycles through the connecting path
    g = build_graph(6, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 5), (5, 3)])
    z = [THIRD] * 7
    result = round_weights(g, z)
    assert oracles.check_conditions(g, z, [Fraction(b) for b in result.x])


def test_round_weights_through_lollipop_component():
    # pendant edge on an odd cycle: saturation must use the lollipop direction
    g = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 1)])
    z = [Fraction(2, 5)] * 4
    result = round_weights(g, z)
    assert oracles.check_conditions(g, z, [Fraction(b) for b in result.x])


def test_weight_validation():
    g = build_graph(2, [(0, 1)])
    with pytest.raises(InputError):
        round_weights(g, [Fraction(3, 2)])
    with pytest.raises(InputError):
        round_weights(g, [0.5])
    with pytest.raises(InputError):
        round_weights(g, [])


# --------------------------------------------------------------------------
# kernel and pendant directions
# --------------------------------------------------------------------------


def direction_sums(graph, direction):
    sums = {}
    for e, coeff in direction.items():
        u, v = graph.edges[e]
        sums[u] = sums.get(u, 0) + coeff
        sums[v] = sums.get(v, 0) + coeff
    return sums


def test_kernel_direction_even_cycle():
    g = c4()
    direction = find_kernel_direction(g, range(4), range(4))
    assert direction is not None
    assert sorted(abs(c) for c in direction.values()) == [1, 1, 1, 1]
    assert all(s == 0 for s in direction_sums(g, direction).values())


def test_kernel_direction_two_triangles_and_bridge():
    g = build_graph(
        6, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 5), (5, 3)]
    )
    direction = find_kernel_direction(g, range(7), range(6))
    assert direction is not None
    assert all(s == 0 for s in direction_sums(g, direction).values())
    assert abs(direction[3]) == 2  # the bridge edge carries the doubled step


def test_kernel_direction_shared_vertex_cycles():
    bowtie = build_graph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
    direction = find_kernel_direction(bowtie, range(6), range(5))
    assert direction is not None
    assert all(s == 0 for s in direction_sums(bowtie, direction).values())


def test_trees_have_no_kernel_direction():
    tree = build_graph(5, [(0, 1), (1, 2), (1, 3), (3, 4)])
    assert find_kernel_direction(tree, range(4), range(5)) is None
    odd = triangle()
    assert find_kernel_direction(odd, range(3), range(3)) is None


def test_pendant_direction_path():
    path = build_graph(3, [(0, 1), (1, 2)])
    direction = pendant_direction(path, range(2), range(3))
    assert direction_sums(path, direction)[1] == 0
    assert sorted(direction.values()) == [-1, 1]


def test_pendant_direction_lollipop():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 1)])  # pendant 0, triangle 1-2-3
    direction = pendant_direction(g, range(4), range(4))
    assert abs(direction[0]) == 1
    assert sorted(abs(c) for e, c in direction.items() if e != 0) == [HALF] * 3
    sums = direction_sums(g, direction)
    assert sums[1] == sums[2] == sums[3] == 0


def test_pendant_direction_star():
    star = build_graph(4, [(0, 1), (0, 2), (0, 3)])
    direction = pendant_direction(star, range(3), range(4))
    assert direction_sums(star, direction)[0] == 0
    assert sorted(direction.values()) == [-1, 1]


# --------------------------------------------------------------------------
# odd-cycle resolution
# --------------------------------------------------------------------------


def test_merge_of_adjacent_bad_cycles():
    g = build_graph(
        6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3)]
    )
    x = [HALF] * 6 + [Fraction(0)]
    before = vertex_sums(g, x)
    out, ledger = resolve_cycles(g, x, [(0, 1, 2), (3, 4, 5)])
    assert ledger == []
    assert all(value.denominator == 1 for value in out)
    assert out[6] == 1  # the joining edge flipped to absorb both cycles
    assert vertex_sums(g, out) == before


def test_isolated_bad_triangle_designates_one_vertex():
    g = triangle()
    x = [HALF] * 3
    before = vertex_sums(g, x)
    out, ledger = resolve_cycles(g, x, [(0, 1, 2)])
    (v, cycle), = ledger
    after = vertex_sums(g, out)
    assert after[v] == before[v] + 1
    assert all(after[u] == before[u] for u in range(3) if u != v)
    assert len(cycle) == 3


def test_mixed_cycle_rounds_within_open_interval():
    g = build_graph(7, [(i, (i + 1) % 7) for i in range(7)])
    values = [Fraction(1, 4), Fraction(3, 4), Fraction(1, 4), Fraction(3, 4), HALF, HALF, HALF]
    before = vertex_sums(g, values)
    out, ledger = resolve_cycles(g, values, [tuple(range(7))])
    assert ledger == []
    after = vertex_sums(g, out)
    for v in range(7):
        assert abs(after[v] - before[v]) < 1
    assert all(value in (0, 1) for value in out)


# --------------------------------------------------------------------------
# condition (ii)
# --------------------------------------------------------------------------


def test_condition_ii_flips_single_edge():
    g = build_graph(2, [(0, 1)])
    out = enforce_condition_ii(g, [Fraction(2, 5)], [Fraction(0)])
    assert out == [1]


def test_condition_ii_keeps_satisfying_assignment():
    g = c4()
    x = [Fraction(1), Fraction(0), Fraction(1), Fraction(0)]
    assert enforce_condition_ii(g, [HALF] * 4, x) == x


def test_condition_ii_path_one_flip():
    g = build_graph(3, [(0, 1), (1, 2)])
    out = enforce_condition_ii(g, [THIRD, THIRD], [Fraction(0), Fraction(0)])
    assert sum(out) == 1
    # the middle vertex is no longer deficient after the flip
    assert vertex_sums(g, out)[1] >= Fraction(2, 3)


# --------------------------------------------------------------------------
# certified properties on random inputs
# --------------------------------------------------------------------------


@given(strategies.graphs_with_weights())
@settings(max_examples=120)
def test_rounding_conditions_hold(gw):
    graph, weights = gw
    result = round_weights(graph, weights)
    assert oracles.check_conditions(graph, weights, [Fraction(b) for b in result.x])
    # the ledger lists exactly the excess vertices
    sums_x = vertex_sums(graph, list(result.x))
    sums_z = vertex_sums(graph, weights)
    excess = {v for v in range(graph.vertex_count) if sums_x[v] == sums_z[v] + 1}
    assert {v for v, _ in result.exceptional} == excess


@given(strategies.graphs_with_weights())
@settings(max_examples=60)
def test_bipartite_rounding_is_exact(gw):
    graph, weights = gw
    if not is_bipartite(graph).bipartite:
        return
    result = round_weights(graph, weights)
    assert result.exceptional == ()
    sums_x = vertex_sums(graph, list(result.x))
    sums_z = vertex_sums(graph, weights)
    for v in range(graph.vertex_count):
        if sums_z[v].denominator == 1:
            assert sums_x[v] == sums_z[v]


@given(strategies.graphs_with_weights(max_vertices=6, max_denominator=4))
@settings(max_examples=40)
def test_rounding_is_deterministic(gw):
    graph, weights = gw
    assert round_weights(graph, weights) == round_weights(graph, weights)
