from __future__ import annotations

import pytest

from palette_index.coloring import (ColoringError, EdgeColoring,
                                    palette_summary, verify_proper)
from palette_index.decompose import konig_coloring
from palette_index.graph import bipartition, build_graph, gen_complete_bipartite


def c4():
    return build_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])


def test_verify_proper_alternating_c4():
    assert verify_proper(c4(), EdgeColoring({0: 1, 1: 2, 2: 1, 3: 2})) == []


def test_verify_proper_bad_c4():
    violations = verify_proper(c4(), EdgeColoring({0: 1, 1: 1, 2: 2, 3: 2}))
    assert len(violations) == 2
    assert {(v.vertex, tuple(sorted((v.edge_a, v.edge_b)))) for v in violations} \
        == {(1, (0, 1)), (3, (2, 3))}


def test_verify_proper_k3_rainbow():
    k3 = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert verify_proper(k3, EdgeColoring({0: 1, 1: 2, 2: 3})) == []


def test_verify_rejects_partial():
    with pytest.raises(ColoringError):
        verify_proper(c4(), EdgeColoring({0: 1}))


def test_verify_rejects_nonpositive_color():
    with pytest.raises(ColoringError):
        verify_proper(c4(), EdgeColoring({0: 0, 1: 1, 2: 2, 3: 3}))


def test_palette_summary_c5():
    c5 = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    summary = palette_summary(c5, EdgeColoring({0: 1, 1: 2, 2: 1, 3: 2, 4: 3}))
    assert summary.distinct == 3
    assert summary.palette_of[0] == frozenset({1, 3})
    assert sum(summary.multiplicity.values()) == 5


def test_palette_summary_konig_regular():
    g = gen_complete_bipartite(3, 3)
    assert palette_summary(g, konig_coloring(g, bipartition(g))).distinct == 1


def test_palette_summary_star_all_distinct():
    star = gen_complete_bipartite(1, 3)
    summary = palette_summary(star, EdgeColoring({0: 1, 1: 2, 2: 3}))
    assert summary.distinct == 4


def test_palette_summary_rejects_improper():
    with pytest.raises(ColoringError):
        palette_summary(c4(), EdgeColoring({0: 1, 1: 1, 2: 2, 3: 2}))
