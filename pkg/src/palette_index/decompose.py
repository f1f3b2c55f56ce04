"""Decompositions the colorings are built from: Eulerian circuits,
2-factorizations, bipartite matchings, degree-many edge colorings of
bipartite graphs, vertex splitting, and alternating parity splits.

Everything here is deterministic: trails start at the smallest vertex id,
edge scans go in ascending edge-id order, and augmenting paths are explored
in that same order.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass

from .coloring import EdgeColoring
from .graph import SIDE_X, SIDE_Y, Bipartition, Graph, GraphError, components


@dataclass(frozen=True)
class Matching:
    """A set of edge ids of a host graph, no two sharing an endpoint."""

    edge_ids: frozenset[int]

    def __len__(self) -> int:
        return len(self.edge_ids)


@dataclass(frozen=True)
class FactorSet:
    """Disjoint edge-id sets partitioning the host's edges; for a
    2-factorization every factor is spanning and 2-regular (loops count 2)."""

    factors: tuple[frozenset[int], ...]


def eulerian_circuit(g: Graph) -> list[list[int]]:
    """One closed Eulerian trail per component with edges, as edge-id lists.

    Requires every degree to be even.  Each trail starts at the smallest
    vertex id of its component and is produced by Hierholzer stitching with
    smallest-unused-edge tie-breaking.
    """
    for v, d in enumerate(g.degrees):
        if d % 2 != 0:
            raise GraphError(f"vertex {v} has odd degree {d}; no Eulerian circuit")
    circuits: list[list[int]] = []
    for comp in components(g):
        if comp.graph.edge_count == 0:
            continue
        local = _hierholzer(comp.graph, 0)
        circuits.append([comp.edge_ids[eid] for eid in local])
    return circuits


def _hierholzer(g: Graph, start: int) -> list[int]:
    """Edge ids of a closed Eulerian trail of a connected even graph."""
    used = [False] * g.edge_count
    ptr = [0] * g.vertex_count
    stack: list[tuple[int, int]] = [(start, -1)]  # (vertex, edge used to arrive)
    trail: list[int] = []
    while stack:
        v, in_edge = stack[-1]
        inc = g.incidence[v]
        while ptr[v] < len(inc) and used[inc[ptr[v]]]:
            ptr[v] += 1
        if ptr[v] == len(inc):
            stack.pop()
            if in_edge >= 0:
                trail.append(in_edge)
        else:
            eid = inc[ptr[v]]
            used[eid] = True
            stack.append((g.other_end(eid, v), eid))
    trail.reverse()
    assert len(trail) == g.edge_count
    return trail


def directed_circuits(g: Graph) -> list[list[tuple[int, int, int]]]:
    """Eulerian circuits as (edge id, tail, head) triples per component."""
    result = []
    for circuit in eulerian_circuit(g):
        # the trail starts at the component's smallest vertex
        cur = min(min(g.edges[eid]) for eid in circuit)
        walk = []
        for eid in circuit:
            head = g.other_end(eid, cur)
            walk.append((eid, cur, head))
            cur = head
        assert cur == walk[0][1]
        result.append(walk)
    return result


def two_factorization(g: Graph) -> FactorSet:
    """Split a 2r-regular multigraph (loops allowed, counting 2) into r
    2-factors.

    Each component's Eulerian circuit is oriented; the resulting in/out
    bipartite realization graph is r-regular, and peeling r perfect
    matchings from it pulls back to r spanning 2-regular factors.
    """
    degs = set(g.degrees)
    if len(degs) > 1:
        raise GraphError(f"graph is not regular: degrees {sorted(degs)}")
    if not degs:
        return FactorSet(())
    d = degs.pop()
    if d % 2 != 0:
        raise GraphError(f"degree {d} is odd; 2-factorization needs even regularity")
    r = d // 2
    if r == 0:
        return FactorSet(())
    n = g.vertex_count
    arcs: list[tuple[int, int]] = []
    arc_source: list[int] = []
    for walk in directed_circuits(g):
        for eid, tail, head in walk:
            arcs.append((tail, n + head))
            arc_source.append(eid)
    realization = Graph(2 * n, tuple(arcs))
    bip = Bipartition(tuple([SIDE_X] * n + [SIDE_Y] * n))
    matchings = peel_perfect_matchings(realization, bip, r)
    factors = tuple(frozenset(arc_source[a] for a in matching)
                    for matching in matchings)
    _check_two_factors(g, factors)
    return FactorSet(factors)


def _check_two_factors(g: Graph, factors: tuple[frozenset[int], ...]) -> None:
    seen: set[int] = set()
    for factor in factors:
        assert not (factor & seen), "factors overlap"
        seen |= factor
        deg = [0] * g.vertex_count
        for eid in factor:
            u, v = g.edges[eid]
            deg[u] += 1
            deg[v] += 1
        assert all(x == 2 for x in deg), "factor is not spanning 2-regular"
    assert len(seen) == g.edge_count, "factors do not cover all edges"


def maximum_matching(g: Graph, bip: Bipartition) -> Matching:
    """Maximum-cardinality matching by augmenting paths, scanning X-side
    vertices and their edges in ascending order."""
    match_edge: list[int | None] = [None] * g.vertex_count
    xs = [v for v in range(g.vertex_count) if bip.side_of[v] == SIDE_X]

    def augment(x: int, visited: set[int]) -> bool:
        for eid in g.incidence[x]:
            y = g.other_end(eid, x)
            if y in visited:
                continue
            visited.add(y)
            other = match_edge[y]
            if other is None:
                match_edge[x] = eid
                match_edge[y] = eid
                return True
            x2 = g.other_end(other, y)
            if augment(x2, visited):
                match_edge[x] = eid
                match_edge[y] = eid
                return True
        return False

    limit = sys.getrecursionlimit()
    needed = 2 * g.vertex_count + 100
    if needed > limit:
        sys.setrecursionlimit(needed)
    for x in xs:
        if match_edge[x] is None:
            augment(x, set())
    ids = {eid for eid in match_edge if eid is not None}
    return Matching(frozenset(ids))


def peel_perfect_matchings(g: Graph, bip: Bipartition,
                           rounds: int) -> list[frozenset[int]]:
    """Extract `rounds` pairwise-disjoint perfect matchings from a regular
    bipartite multigraph (they exist by Hall's condition at every stage)."""
    remaining = list(range(g.edge_count))
    result: list[frozenset[int]] = []
    for _ in range(rounds):
        sub_edges = tuple(g.edges[eid] for eid in remaining)
        sub = Graph(g.vertex_count, sub_edges, g.loop_allowed)
        matching = maximum_matching(sub, bip)
        if 2 * len(matching) != g.vertex_count:
            raise GraphError(
                "perfect matching missing while peeling a regular bipartite graph")
        chosen = {remaining[local] for local in matching.edge_ids}
        result.append(frozenset(chosen))
        remaining = [eid for eid in remaining if eid not in chosen]
    return result


def konig_coloring(g: Graph, bip: Bipartition) -> EdgeColoring:
    """Proper edge coloring of a bipartite multigraph with exactly
    max-degree many colors.

    The graph is padded with dummy vertices and edges to a regular bipartite
    multigraph, which splits into perfect matchings; each matching restricted
    to the real edges is one color class.  Every maximum-degree vertex ends
    up with the full palette 1..max degree.
    """
    delta = g.max_degree
    if delta == 0:
        return EdgeColoring({})
    xs = list(bip.x_vertices())
    ys = list(bip.y_vertices())
    side = max(len(xs), len(ys))
    # dummy vertices occupy ids after the real ones
    total = g.vertex_count + (side - len(xs)) + (side - len(ys))
    pad_x = list(range(g.vertex_count, g.vertex_count + side - len(xs)))
    pad_y = list(range(g.vertex_count + len(pad_x), total))
    all_x = xs + pad_x
    all_y = ys + pad_y
    deg = {v: 0 for v in all_x + all_y}
    for v, d in enumerate(g.degrees):
        deg[v] = d
    edges = list(g.edges)
    deficient_x = [v for v in all_x if deg[v] < delta]
    deficient_y = [v for v in all_y if deg[v] < delta]
    while deficient_x:
        x, y = deficient_x[0], deficient_y[0]
        edges.append((x, y))
        deg[x] += 1
        deg[y] += 1
        if deg[x] == delta:
            deficient_x.pop(0)
        if deg[y] == delta:
            deficient_y.pop(0)
    assert not deficient_y
    padded = Graph(total, tuple(edges))
    side_of = [SIDE_X] * total
    for v in all_y:
        side_of[v] = SIDE_Y
    matchings = peel_perfect_matchings(padded, Bipartition(tuple(side_of)), delta)
    color_of: dict[int, int] = {}
    for color, matching in enumerate(matchings, start=1):
        for eid in matching:
            if eid < g.edge_count:
                color_of[eid] = color
    assert len(color_of) == g.edge_count
    return EdgeColoring(color_of)


def matching_covering_max_degree(g: Graph, bip: Bipartition) -> Matching:
    """An inclusion-minimal matching covering every maximum-degree vertex.

    Color class 1 of the degree-many coloring covers all of them (such a
    vertex is incident with every color); members touching no maximum-degree
    vertex are then dropped.
    """
    delta = g.max_degree
    if delta == 0:
        return Matching(frozenset())
    coloring = konig_coloring(g, bip)
    class1 = [eid for eid, c in coloring.color_of.items() if c == 1]
    kept = [eid for eid in class1
            if g.degrees[g.edges[eid][0]] == delta
            or g.degrees[g.edges[eid][1]] == delta]
    return Matching(frozenset(kept))


def split_part_vertices(g: Graph, bip: Bipartition, side: str,
                        target: int) -> tuple[Graph, tuple[int, ...]]:
    """Replace each vertex of the chosen part by degree/target copies of
    degree `target`, distributing its incident edges to copies in consecutive
    edge-id blocks.  Edge ids are preserved.

    Returns the new graph and a back-map (new vertex id -> original id).
    """
    if side not in ("X", "Y"):
        raise GraphError(f"side must be 'X' or 'Y', got {side!r}")
    if target < 1:
        raise GraphError(f"target degree must be positive, got {target}")
    side_val = SIDE_X if side == "X" else SIDE_Y
    on_side = [bip.side_of[v] == side_val for v in range(g.vertex_count)]
    for v in range(g.vertex_count):
        if on_side[v] and g.degrees[v] % target != 0:
            raise GraphError(
                f"vertex {v} has degree {g.degrees[v]}, not divisible by {target}")
    base: list[int] = []
    back: list[int] = []
    next_id = 0
    for v in range(g.vertex_count):
        base.append(next_id)
        copies = g.degrees[v] // target if on_side[v] else 1
        back.extend([v] * copies)
        next_id += copies
    # copy index of each incident edge, chunked in ascending edge-id order
    chunk_of: dict[int, int] = {}
    for v in range(g.vertex_count):
        if on_side[v]:
            for pos, eid in enumerate(g.incidence[v]):
                chunk_of[eid] = pos // target

    def map_end(v: int, eid: int) -> int:
        if on_side[v]:
            return base[v] + chunk_of[eid]
        return base[v]

    new_edges = []
    for eid, (u, v) in enumerate(g.edges):
        if u == v:
            raise GraphError("cannot split a graph with loops")
        new_edges.append((map_end(u, eid), map_end(v, eid)))
    return Graph(next_id, tuple(new_edges)), tuple(back)


def parity_split(g: Graph) -> tuple[frozenset[int], frozenset[int]]:
    """Alternating red/blue split along each component's Eulerian circuit.

    Needs all degrees even and an even number of edges per component; then
    every vertex has exactly half of its degree on each side.
    """
    red: set[int] = set()
    blue: set[int] = set()
    for circuit in eulerian_circuit(g):
        if len(circuit) % 2 != 0:
            raise GraphError(
                f"component with odd edge count {len(circuit)} cannot be parity-split")
        for pos, eid in enumerate(circuit):
            (red if pos % 2 == 0 else blue).add(eid)
    return frozenset(red), frozenset(blue)
