"""Palette extraction, the bound catalog, and structural characterizations:
which graphs need as many palettes as they have vertices, and which can be
colored with exactly two distinct palettes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .coloring import (ColoringError, EdgeColoring, PaletteSummary, Violation,
                       distinct_palettes, palette_summary, verify_proper)
from .constructions import (color_2_odd, color_3_3r, color_3_5, color_4_4r,
                            color_5_5r, color_deg5, color_even_bipartite,
                            color_grid_on, color_r_2r, color_via_doubling,
                            _complete_on_graph, _is_complete_bipartite,
                            _konig_result, doubling_palette_bound,
                            grid_palette_value, profile_bipartition,
                            recognize_grid)
from .decompose import maximum_matching
from .exact import BudgetExhausted, SearchLimits, palette_index_exact
from .graph import (Graph, GraphError, bipartition, biregular_profile,
                    components, without_isolated)

__all__ = [
    "BoundEntry", "BoundReport", "ColoringError", "EdgeColoring",
    "PaletteSummary", "PaletteTwoCertificate", "Violation",
    "classify_full_palette", "decide_palette_two", "distinct_palettes",
    "palette_lower_bound", "palette_summary", "recognize_grid",
    "upper_bound_catalog", "verify_proper",
]


@dataclass(frozen=True)
class BoundEntry:
    value: int
    direction: str  # "lower" or "upper"
    tag: str
    note: str
    constructed: bool = False  # a witness coloring backs this entry


@dataclass
class BoundReport:
    lower: tuple[int, str]
    upper: tuple[int, str]
    entries: list[BoundEntry]
    witness: EdgeColoring | None


def _lower_entries(g: Graph, chi_prime: int | None) -> list[BoundEntry]:
    entries = [BoundEntry(len(g.degree_set()), "lower", "degree-count",
                          "palettes of different sizes are distinct")]
    prof = biregular_profile(g)
    if prof is not None and prof.a < prof.b:
        entries.append(BoundEntry(
            1 + math.ceil(prof.b / prof.a), "lower", "biregular-ratio",
            f"({prof.a},{prof.b})-biregular"))
        if (prof.a, prof.b) == (3, 5):
            entries.append(BoundEntry(5, "lower", "deg35",
                                      "(3,5)-biregular graphs need 5 palettes"))
        if prof.a == 2 and prof.b % 2 == 1:
            entries.append(BoundEntry(prof.b // 2 + 2, "lower", "two-odd",
                                      f"(2,{prof.b})-biregular"))
    if chi_prime is not None and len(g.degree_set()) == 1:
        if chi_prime == g.max_degree:
            entries.append(BoundEntry(1, "lower", "regular-class1", "regular, class 1"))
        else:
            entries.append(BoundEntry(3, "lower", "regular-class2",
                                      "regular class 2 graphs need 3 palettes"))
    dims = recognize_grid(g)
    if dims is not None:
        entries.append(BoundEntry(grid_palette_value(*dims), "lower", "grid",
                                  f"grid {dims[0]}x{dims[1]}, exact value"))
    return entries


def palette_lower_bound(g: Graph, chi_prime: int | None = None) -> tuple[int, str]:
    """Largest applicable lower bound on the palette index, with its tag."""
    if g.has_isolated_vertices():
        raise GraphError("isolated vertices are not allowed here")
    if g.vertex_count == 0:
        return (0, "empty")
    best: BoundEntry | None = None
    for entry in _lower_entries(g, chi_prime):
        if best is None or entry.value > best.value:
            best = entry
    assert best is not None
    return (best.value, best.tag)


def upper_bound_catalog(g: Graph) -> BoundReport:
    """Every applicable palette upper bound with its justification, plus a
    witness coloring for the best constructible one."""
    if g.has_isolated_vertices():
        raise GraphError("isolated vertices are not allowed here")
    if g.edge_count == 0:
        return BoundReport((0, "empty"), (0, "empty"), [], None)
    delta = g.max_degree
    entries = _lower_entries(g, None)
    uppers: list[tuple[BoundEntry, object]] = []  # (entry, witness thunk or None)

    def add(value: int, tag: str, note: str, run=None) -> None:
        uppers.append((BoundEntry(value, "upper", tag, note, run is not None), run))

    add(2 ** (delta + 1) - 2, "power-general", "any graph, from a maxdeg+1 coloring")
    bip = bipartition(g)
    if bip is not None:
        add(2 ** delta - 1, "power-bipartite", "bipartite, from a maxdeg coloring")
        add((delta + 2) * 2 ** ((delta + 1) // 2), "half-power-bipartite", "bipartite")
        add(doubling_palette_bound(g), "doubling", "bipartite",
            lambda: color_via_doubling(g))
        if g.is_even():
            even_bound = sum(math.comb(delta // 2, d // 2) for d in g.degree_set())
            add(even_bound, "even-pairs", "even bipartite",
                lambda: color_even_bipartite(g))
            if delta == 4:
                add(3, "even-deg4", "even bipartite, maxdeg 4",
                    lambda: color_even_bipartite(g))
            if delta == 6:
                add(7, "even-deg6", "even bipartite, maxdeg 6",
                    lambda: color_even_bipartite(g))
            if delta == 8:
                add(13, "even-deg8-stated", "even bipartite, maxdeg 8; "
                    "stated, not constructed")
        if delta == 4:
            add(11, "deg4", "bipartite, maxdeg 4", lambda: color_via_doubling(g))
            if g.min_degree >= 2:
                add(7, "deg4-no-pendant", "bipartite, maxdeg 4, no pendants",
                    lambda: color_via_doubling(g))
        if delta == 5:
            add(23, "deg5", "bipartite, maxdeg 5", lambda: color_deg5(g))
            if 2 * len(maximum_matching(g, bip)) == g.vertex_count:
                add(12, "deg5-perfect-matching",
                    "bipartite, maxdeg 5, perfect matching",
                    lambda: color_deg5(g))
    if delta - g.min_degree <= 2:
        add(delta * delta + delta + 1, "near-regular-stated",
            "degree spread at most 2; stated, not constructed")
    prof = biregular_profile(g)
    if prof is not None:
        a, b = prof.a, prof.b
        pbip = profile_bipartition(g, prof)
        if a == b:
            add(1, "konig-regular", "regular bipartite",
                lambda: _konig_result(g, prof, pbip))
        else:
            add(1 + math.comb(b, a), "konig-biregular", f"({a},{b})-biregular",
                lambda: _konig_result(g, prof, pbip))
            if b % 2 == 0 and a in (2, b - 2):
                add(b // 2 + 1, "even-family", f"({a},{b})-biregular",
                    lambda: color_even_bipartite(g))
            if a == 2 and b % 2 == 1:
                add(b + 1, "two-odd-family", f"(2,{b})-biregular",
                    lambda: color_2_odd(g))
            if b % 3 == 0 and b // 3 >= 2 and a in (3, b - 3):
                add((b // 3) ** 2 + 1, "deg3-family", f"({a},{b})-biregular",
                    lambda: color_3_3r(g))
            if b % 4 == 0 and b // 4 >= 2 and a in (4, b - 4):
                add((b // 4) ** 2 + 1, "deg4-family", f"({a},{b})-biregular",
                    lambda: color_4_4r(g))
            if a == 5 and b % 5 == 0 and b // 5 >= 2:
                add((b // 5) ** 3 + 1, "deg5-family", f"(5,{b})-biregular",
                    lambda: color_5_5r(g))
            if b == 2 * a and a >= 2:
                add(2 ** ((a + 1) // 2) + 1, "half-family", f"({a},{b})-biregular",
                    lambda: color_r_2r(g))
            if (a, b) == (3, 5):
                add(7, "deg35-family", "(3,5)-biregular", lambda: color_3_5(g))
            if _is_complete_bipartite(g, prof):
                add(1 + b // math.gcd(a, b), "complete-bipartite",
                    f"complete bipartite K_{{{a},{b}}}",
                    lambda: _complete_on_graph(g, prof))
    dims = recognize_grid(g)
    if dims is not None:
        add(grid_palette_value(*dims), "grid", f"grid {dims[0]}x{dims[1]}",
            lambda: color_grid_on(g))

    best_value = min(entry.value for entry, _ in uppers)
    witness: EdgeColoring | None = None
    best_tag = None
    for entry, run in uppers:
        if entry.value == best_value and run is not None:
            witness = run().coloring
            best_tag = entry.tag
            break
    if best_tag is None:
        best_tag = next(e.tag for e, _ in uppers if e.value == best_value)
    lower = palette_lower_bound(g)
    entries.extend(e for e, _ in uppers)
    assert lower[0] <= best_value, "lower bound exceeds upper bound"
    return BoundReport(lower, (best_value, best_tag), entries, witness)


# ----------------------------------------------------------------------
# graphs whose palette index equals the vertex count
# ----------------------------------------------------------------------

def classify_full_palette(g: Graph) -> tuple[bool, str]:
    """Decide whether every proper coloring of g needs |V| distinct palettes.

    True exactly for the triangle, stars with >= 2 leaves, a triangle with
    pendants hung on one corner, a triangle bridged to a star center with
    >= 3 leaves, and the disjoint union of a triangle and such a star.  One
    isolated vertex on top of any of these keeps the property.
    """
    if not g.is_simple():
        raise GraphError("classification requires a simple graph")
    isolated = [v for v in range(g.vertex_count) if g.degrees[v] == 0]
    if len(isolated) > 1:
        return (False, "none")
    if len(isolated) == 1:
        if g.vertex_count == 1:
            return (False, "none")
        trimmed, _ = without_isolated(g)
        return classify_full_palette(trimmed)
    if _is_triangle(g):
        return (True, "triangle")
    if _star_leaves(g) is not None and _star_leaves(g) >= 2:
        return (True, "star")
    if _is_triangle_pendants(g):
        return (True, "triangle-pendants")
    if _is_triangle_star_bridge(g):
        return (True, "triangle-star-bridge")
    if _is_triangle_plus_star(g):
        return (True, "triangle-plus-star")
    return (False, "none")


def _is_triangle(g: Graph) -> bool:
    return g.vertex_count == 3 and g.edge_count == 3


def _star_leaves(g: Graph) -> int | None:
    """Leaf count when g is a star (one hub, rest leaves), else None."""
    n = g.vertex_count
    if n < 3 or g.edge_count != n - 1:
        return None
    degs = sorted(g.degrees)
    if degs[-1] != n - 1 or any(d != 1 for d in degs[:-1]):
        return None
    return n - 1


def _is_triangle_pendants(g: Graph) -> bool:
    n, m = g.vertex_count, g.edge_count
    j = n - 3
    if j < 1 or m != n:
        return False
    if sorted(g.degrees) != [1] * j + [2, 2] + [j + 2]:
        return False
    hub = max(range(n), key=lambda v: g.degrees[v])
    two = [v for v in range(n) if g.degrees[v] == 2]
    leaves = [v for v in range(n) if g.degrees[v] == 1]
    pairs = {tuple(sorted(e)) for e in g.edges}
    if tuple(sorted(two)) not in pairs:
        return False
    if any(tuple(sorted((hub, v))) not in pairs for v in two):
        return False
    return all(tuple(sorted((hub, leaf))) in pairs for leaf in leaves)


def _is_triangle_star_bridge(g: Graph) -> bool:
    n, m = g.vertex_count, g.edge_count
    j = n - 4
    if j < 3 or m != n:
        return False
    if sorted(g.degrees) != [1] * j + [2, 2, 3] + [j + 1]:
        return False
    center = max(range(n), key=lambda v: g.degrees[v])
    bridge = next(v for v in range(n) if g.degrees[v] == 3)
    two = [v for v in range(n) if g.degrees[v] == 2]
    leaves = [v for v in range(n) if g.degrees[v] == 1]
    pairs = {tuple(sorted(e)) for e in g.edges}
    if not all(tuple(sorted((center, leaf))) in pairs for leaf in leaves):
        return False
    if tuple(sorted((center, bridge))) not in pairs:
        return False
    if tuple(sorted(two)) not in pairs:
        return False
    return all(tuple(sorted((bridge, v))) in pairs for v in two)


def _is_triangle_plus_star(g: Graph) -> bool:
    comps = components(g)
    if len(comps) != 2:
        return False
    first, second = comps[0].graph, comps[1].graph
    for tri, star in ((first, second), (second, first)):
        if _is_triangle(tri):
            leaves = _star_leaves(star)
            if leaves is not None and leaves >= 3:
                return True
    return False


# ----------------------------------------------------------------------
# palette index two
# ----------------------------------------------------------------------

@dataclass
class PaletteTwoCertificate:
    """The structural witness for a two-palette graph: edge-disjoint regular
    class-1 subgraphs whose vertex sets are nested and whose union is g."""

    h1_edges: frozenset[int]  # the d1-d2 extra colors, on big-degree vertices
    h2_edges: frozenset[int]  # the shared colors, spanning every vertex
    coloring: EdgeColoring  # normalized two-palette coloring


def decide_palette_two(g: Graph, limits: SearchLimits | None = None
                       ) -> tuple[bool, PaletteTwoCertificate | None]:
    """Decide whether g can be properly colored with exactly two distinct
    palettes, extracting the regular-decomposition certificate when it can."""
    result = palette_index_exact(g, limits)
    if not result.proved:
        raise BudgetExhausted("palette search ran out of budget before deciding")
    if result.value != 2:
        return (False, None)
    coloring = EdgeColoring(dict(result.witness.color_of))
    degree_values = sorted(set(g.degrees), reverse=True)
    assert len(degree_values) == 2, "two palettes force exactly two degrees"
    d1, d2 = degree_values
    big = [v for v in range(g.vertex_count) if g.degrees[v] == d1]
    small = [v for v in range(g.vertex_count) if g.degrees[v] == d2]

    def colors_at(verts: list[int]) -> set[int]:
        out: set[int] = set()
        for v in verts:
            out.update(coloring.color_of[eid] for eid in g.incidence[v])
        return out

    c1, c2 = colors_at(big), colors_at(small)
    while not c2 <= c1:
        j = min(c2 - c1)
        k = min(c1 - c2)
        for eid, col in coloring.color_of.items():
            if col == j:
                coloring.color_of[eid] = k
        c1, c2 = colors_at(big), colors_at(small)
    assert not verify_proper(g, coloring)
    assert distinct_palettes(g, coloring) == 2
    h2 = frozenset(eid for eid, col in coloring.color_of.items() if col in c2)
    h1 = frozenset(eid for eid, col in coloring.color_of.items() if col in c1 - c2)
    _check_regular_on_support(g, h1)
    _check_regular_on_support(g, h2)
    v1 = {v for eid in h1 for v in g.edges[eid]}
    v2 = {v for eid in h2 for v in g.edges[eid]}
    assert v1 <= v2, "vertex sets of the certificate are not nested"
    assert v2 == set(range(g.vertex_count))
    return (True, PaletteTwoCertificate(h1, h2, coloring))


def _check_regular_on_support(g: Graph, edge_ids: frozenset[int]) -> None:
    deg: dict[int, int] = {}
    for eid in edge_ids:
        u, v = g.edges[eid]
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    assert len(set(deg.values())) <= 1, "certificate subgraph is not regular"
