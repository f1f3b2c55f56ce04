from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from palette_index.coloring import palette_summary, verify_proper
from palette_index.decompose import (eulerian_circuit, konig_coloring,
                                     matching_covering_max_degree,
                                     maximum_matching, parity_split,
                                     split_part_vertices, two_factorization)
from palette_index.graph import (GraphError, bipartition, biregular_profile,
                                 build_graph, gen_complete_bipartite,
                                 gen_random_biregular,
                                 gen_random_even_bipartite)

from conftest import bipartite_graphs


def cycle(n):
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def test_eulerian_circuit_c4():
    circuits = eulerian_circuit(cycle(4))
    assert len(circuits) == 1
    assert sorted(circuits[0]) == [0, 1, 2, 3]


def test_eulerian_circuit_k24_single_circuit():
    circuits = eulerian_circuit(gen_complete_bipartite(2, 4))
    assert len(circuits) == 1 and len(circuits[0]) == 8


def test_eulerian_circuit_rejects_odd_degree():
    with pytest.raises(GraphError):
        eulerian_circuit(build_graph(3, [(0, 1), (1, 2)]))


def test_eulerian_circuit_consecutive_edges_share_vertices():
    g = gen_random_even_bipartite(4, 5)
    for circuit in eulerian_circuit(g):
        for e1, e2 in zip(circuit, circuit[1:] + circuit[:1]):
            assert set(g.edges[e1]) & set(g.edges[e2])


def test_two_factorization_c6_is_itself():
    factors = two_factorization(cycle(6)).factors
    assert len(factors) == 1 and factors[0] == frozenset(range(6))


def _factor_degrees(g, factor):
    deg = [0] * g.vertex_count
    for eid in factor:
        u, v = g.edges[eid]
        deg[u] += 1
        deg[v] += 1
    return deg


def test_two_factorization_k44():
    g = gen_complete_bipartite(4, 4)
    factors = two_factorization(g).factors
    assert len(factors) == 2
    for factor in factors:
        assert all(d == 2 for d in _factor_degrees(g, factor))


def test_two_factorization_k5():
    k5 = build_graph(5, [(i, j) for i in range(5) for j in range(i + 1, 5)])
    factors = two_factorization(k5).factors
    assert len(factors) == 2
    seen = set()
    for factor in factors:
        assert all(d == 2 for d in _factor_degrees(k5, factor))
        seen |= factor
    assert seen == set(range(10))


def test_two_factorization_with_loops():
    g = build_graph(2, [(0, 1), (0, 1), (0, 0), (1, 1)], loop_allowed=True)
    factors = two_factorization(g).factors  # 4-regular with loops
    assert len(factors) == 2


def test_two_factorization_rejects_odd_regular():
    with pytest.raises(GraphError):
        two_factorization(gen_complete_bipartite(3, 3))


def test_maximum_matching_sizes():
    k33 = gen_complete_bipartite(3, 3)
    assert len(maximum_matching(k33, bipartition(k33))) == 3
    k13 = gen_complete_bipartite(1, 3)
    assert len(maximum_matching(k13, bipartition(k13))) == 1
    c6 = cycle(6)
    assert len(maximum_matching(c6, bipartition(c6))) == 3


def test_maximum_matching_is_a_matching():
    g = gen_random_biregular(3, 5, 2, 9)
    matching = maximum_matching(g, bipartition(g))
    touched = set()
    for eid in matching.edge_ids:
        u, v = g.edges[eid]
        assert u not in touched and v not in touched
        touched.update((u, v))


def test_konig_k33_single_palette():
    g = gen_complete_bipartite(3, 3)
    coloring = konig_coloring(g, bipartition(g))
    assert coloring.colors_used() == 3
    assert palette_summary(g, coloring).distinct == 1


def test_konig_k23():
    g = gen_complete_bipartite(2, 3)
    coloring = konig_coloring(g, bipartition(g))
    assert not verify_proper(g, coloring)
    assert coloring.colors_used() == 3
    summary = palette_summary(g, coloring)
    full = frozenset({1, 2, 3})
    for v in range(g.vertex_count):
        if g.degrees[v] == 3:
            assert summary.palette_of[v] == full


def test_konig_single_edge():
    g = build_graph(2, [(0, 1)])
    assert konig_coloring(g, bipartition(g)).color_of == {0: 1}


@settings(deadline=None)
@given(bipartite_graphs())
def test_konig_properness_and_color_count(g):
    bip = bipartition(g)
    coloring = konig_coloring(g, bip)
    assert not verify_proper(g, coloring)
    assert coloring.colors_used() == g.max_degree
    full = frozenset(range(1, g.max_degree + 1))
    summary = palette_summary(g, coloring)
    for v in range(g.vertex_count):
        if g.degrees[v] == g.max_degree:
            assert summary.palette_of[v] == full


def test_matching_covering_k23():
    g = gen_complete_bipartite(2, 3)
    matching = matching_covering_max_degree(g, bipartition(g))
    assert len(matching) == 2
    covered = {v for eid in matching.edge_ids for v in g.edges[eid]}
    assert {0, 1} <= covered  # both degree-3 vertices


def test_matching_covering_regular_is_perfect():
    g = gen_complete_bipartite(3, 3)
    matching = matching_covering_max_degree(g, bipartition(g))
    assert len(matching) == 3


def test_matching_covering_star():
    g = gen_complete_bipartite(1, 3)
    matching = matching_covering_max_degree(g, bipartition(g))
    assert len(matching) == 1
    eid = next(iter(matching.edge_ids))
    assert 0 in g.edges[eid]


@settings(deadline=None)
@given(bipartite_graphs())
def test_matching_covering_minimality(g):
    bip = bipartition(g)
    matching = matching_covering_max_degree(g, bip)
    delta = g.max_degree
    maxdeg_vertices = {v for v in range(g.vertex_count) if g.degrees[v] == delta}
    covered = {v for eid in matching.edge_ids for v in g.edges[eid]}
    assert maxdeg_vertices <= covered
    # removing any member uncovers some max-degree vertex
    for eid in matching.edge_ids:
        rest = {v for other in matching.edge_ids if other != eid
                for v in g.edges[other]}
        assert not (maxdeg_vertices <= rest)


def test_split_part_vertices_k24():
    g = gen_complete_bipartite(2, 4)  # sides: 2 vertices of degree 4
    bip = bipartition(g)
    split, back = split_part_vertices(g, bip, "X", 2)
    assert set(split.degrees) == {2}
    assert split.edge_count == g.edge_count
    # merging back via the map recovers the original edge multiset
    merged = sorted(tuple(sorted((back[u], back[v]))) for u, v in split.edges)
    assert merged == sorted(tuple(sorted(e)) for e in g.edges)


def test_split_identity_when_target_is_degree():
    g = gen_complete_bipartite(2, 4)
    split, back = split_part_vertices(g, bipartition(g), "X", 4)
    assert split.vertex_count == g.vertex_count
    assert split.edges == g.edges


def test_split_k36_to_cubic():
    g = gen_complete_bipartite(3, 6)  # X side: 3 vertices of degree 6
    split, _ = split_part_vertices(g, bipartition(g), "X", 3)
    assert set(split.degrees) == {3}


def test_split_rejects_indivisible():
    g = gen_complete_bipartite(2, 3)
    with pytest.raises(GraphError):
        split_part_vertices(g, bipartition(g), "X", 2)


def test_parity_split_c4():
    red, blue = parity_split(cycle(4))
    assert {frozenset(red), frozenset(blue)} == {frozenset({0, 2}), frozenset({1, 3})}


def test_parity_split_k24_half_degrees():
    g = gen_complete_bipartite(2, 4)
    red, blue = parity_split(g)
    for v in range(g.vertex_count):
        in_red = sum(1 for e in g.incidence[v] if e in red)
        assert in_red == g.degrees[v] // 2
    halves = [biregular_profile(
        build_graph(g.vertex_count, [g.edges[e] for e in sorted(side)]))
        for side in (red, blue)]
    assert all(p is not None and (p.a, p.b) == (1, 2) for p in halves)


def test_parity_split_rejects_odd_edge_count():
    with pytest.raises(GraphError):
        parity_split(cycle(3))


@settings(deadline=None)
@given(st.integers(2, 3), st.integers(0, 30))
def test_parity_split_property(half, seed):
    g = gen_random_even_bipartite(2 * half, seed)
    if any(len(c) % 2 for c in eulerian_circuit(g)):
        return  # odd component edge count is a documented error case
    red, blue = parity_split(g)
    assert red | blue == set(range(g.edge_count)) and not (red & blue)
    for v in range(g.vertex_count):
        in_red = sum(1 for e in g.incidence[v] if e in red)
        assert in_red == g.degrees[v] // 2
