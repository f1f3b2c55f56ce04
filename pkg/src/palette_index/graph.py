"""Graph container, structural queries, and generators.

Vertices are dense integers ``0..vertex_count-1``.  Edges are an ordered
tuple of endpoint pairs; the position of a pair in that tuple is the edge's
stable id for the lifetime of the value.  The container is a multigraph:
parallel edges are always representable, loops only when the graph was
built with ``loop_allowed=True``.
"""

from __future__ import annotations

import random
from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property

SIDE_X = 0
SIDE_Y = 1


class GraphError(ValueError):
    """Raised when an operation is handed a graph it cannot accept."""


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    loop_allowed: bool = False

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Edge ids incident with each vertex, ascending; a loop appears once."""
        inc: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for eid, (u, v) in enumerate(self.edges):
            inc[u].append(eid)
            if v != u:
                inc[v].append(eid)
        return tuple(tuple(ids) for ids in inc)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        degs = [0] * self.vertex_count
        for u, v in self.edges:
            degs[u] += 1
            degs[v] += 1  # a loop contributes 2 to its vertex
        return tuple(degs)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    def degree_set(self) -> tuple[int, ...]:
        """Sorted distinct vertex degrees (the degree set of the graph)."""
        return tuple(sorted(set(self.degrees)))

    def is_loop(self, eid: int) -> bool:
        u, v = self.edges[eid]
        return u == v

    def other_end(self, eid: int, v: int) -> int:
        a, b = self.edges[eid]
        return b if v == a else a

    def is_even(self) -> bool:
        return all(d % 2 == 0 for d in self.degrees)

    def has_isolated_vertices(self) -> bool:
        return any(d == 0 for d in self.degrees)

    def is_simple(self) -> bool:
        seen = set()
        for u, v in self.edges:
            if u == v:
                return False
            key = (u, v) if u < v else (v, u)
            if key in seen:
                return False
            seen.add(key)
        return True


@dataclass(frozen=True)
class Bipartition:
    """Side assignment of a bipartite graph; 0 means side X, 1 means side Y."""

    side_of: tuple[int, ...]

    def x_vertices(self) -> tuple[int, ...]:
        return tuple(v for v, s in enumerate(self.side_of) if s == SIDE_X)

    def y_vertices(self) -> tuple[int, ...]:
        return tuple(v for v, s in enumerate(self.side_of) if s == SIDE_Y)


@dataclass(frozen=True)
class BiregularProfile:
    """Degrees and part sizes of an (a,b)-biregular graph, normalized a <= b."""

    a: int
    b: int
    x_count: int
    y_count: int
    x_vertices: tuple[int, ...]  # the side whose vertices all have degree a
    y_vertices: tuple[int, ...]


@dataclass(frozen=True)
class Component:
    """A connected component with maps back to the host graph."""

    graph: Graph
    vertex_ids: tuple[int, ...]  # local vertex -> host vertex
    edge_ids: tuple[int, ...]  # local edge -> host edge


def build_graph(
    vertex_count: int,
    edges: list[tuple[int, int]] | tuple[tuple[int, int], ...],
    loop_allowed: bool = False,
) -> Graph:
    if vertex_count < 0:
        raise GraphError(f"negative vertex count {vertex_count}")
    for eid, (u, v) in enumerate(edges):
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise GraphError(f"edge {eid} endpoint out of range: ({u}, {v})")
        if u == v and not loop_allowed:
            raise GraphError(f"edge {eid} is a loop at {u} but loops are not allowed")
    return Graph(vertex_count, tuple((u, v) for u, v in edges), loop_allowed)


def bipartition(g: Graph) -> Bipartition | None:
    """Two-color the vertices by BFS, or return None if an odd cycle exists.

    The smallest vertex of every component goes to side X, so the result is
    deterministic.  Isolated vertices end up on side X.
    """
    side = [-1] * g.vertex_count
    for root in range(g.vertex_count):
        if side[root] != -1:
            continue
        side[root] = SIDE_X
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for eid in g.incidence[v]:
                w = g.other_end(eid, v)
                if w == v:
                    return None  # a loop is an odd cycle
                if side[w] == -1:
                    side[w] = 1 - side[v]
                    queue.append(w)
                elif side[w] == side[v]:
                    return None
    return Bipartition(tuple(side))


def biregular_profile(g: Graph) -> BiregularProfile | None:
    """Detect an (a,b)-biregular structure, choosing sides per component.

    Returns None unless g is bipartite and, component by component, one part
    is degree-homogeneous with degree a and the other with degree b (a <= b
    after normalization).  Graphs with isolated vertices never qualify.
    """
    bip = bipartition(g)
    if bip is None or g.vertex_count == 0:
        return None
    if g.has_isolated_vertices():
        return None
    pair: tuple[int, int] | None = None  # (a, b) with a <= b
    x_verts: list[int] = []
    y_verts: list[int] = []
    for comp in components(g):
        local_bip = Bipartition(tuple(bip.side_of[v] for v in comp.vertex_ids))
        degs = comp.graph.degrees
        side0 = {degs[v] for v in range(comp.graph.vertex_count)
                 if local_bip.side_of[v] == SIDE_X}
        side1 = {degs[v] for v in range(comp.graph.vertex_count)
                 if local_bip.side_of[v] == SIDE_Y}
        if len(side0) != 1 or (side1 and len(side1) != 1):
            return None
        d0 = side0.pop()
        d1 = side1.pop() if side1 else d0
        lo, hi = min(d0, d1), max(d0, d1)
        if pair is None:
            pair = (lo, hi)
        elif pair != (lo, hi):
            return None
        # orient so the low-degree part contributes to X
        if d0 <= d1:
            lo_side = SIDE_X
        else:
            lo_side = SIDE_Y
        for v in range(comp.graph.vertex_count):
            host = comp.vertex_ids[v]
            on_lo = (local_bip.side_of[v] == lo_side)
            if d0 == d1:
                on_lo = local_bip.side_of[v] == SIDE_X
            (x_verts if on_lo else y_verts).append(host)
    assert pair is not None
    a, b = pair
    if a < 1:
        return None
    x_verts.sort()
    y_verts.sort()
    return BiregularProfile(a, b, len(x_verts), len(y_verts),
                            tuple(x_verts), tuple(y_verts))


def gen_complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with u-vertices 0..a-1, v-vertices a..a+b-1, edges in (i,j) order."""
    if a < 1 or b < 1:
        raise GraphError(f"complete bipartite needs positive part sizes, got ({a}, {b})")
    edges = [(i, a + j) for i in range(a) for j in range(b)]
    return Graph(a + b, tuple(edges))


def gen_grid(m: int, n: int) -> Graph:
    """The m-by-n grid; vertex (i,j) (1-based) has id (i-1)*n + (j-1).

    Horizontal edges come first, row by row, then vertical edges.
    """
    if m < 2 or n < 2:
        raise GraphError(f"grid dimensions must be at least 2, got ({m}, {n})")
    edges: list[tuple[int, int]] = []
    for i in range(m):
        for j in range(n - 1):
            edges.append((i * n + j, i * n + j + 1))
    for i in range(m - 1):
        for j in range(n):
            edges.append((i * n + j, (i + 1) * n + j))
    return Graph(m * n, tuple(edges))


def grid_vertex(m: int, n: int, i: int, j: int) -> int:
    """Vertex id of grid position (i, j), 1-based."""
    if not (1 <= i <= m and 1 <= j <= n):
        raise GraphError(f"grid position ({i}, {j}) outside ({m}, {n})")
    return (i - 1) * n + (j - 1)


def gen_random_biregular(a: int, b: int, scale: int, seed: int) -> Graph:
    """A seeded simple (a,b)-biregular graph with scale*b + scale*a vertices.

    The degree-a side has scale*b vertices (ids 0..scale*b-1), the degree-b
    side scale*a vertices.  Half-edges are paired configuration-model style;
    multi-edges are then removed by degree-preserving swaps, restarting when
    a repair stalls.
    """
    if not (1 <= a <= b):
        raise GraphError(f"need 1 <= a <= b, got ({a}, {b})")
    if scale < 1:
        raise GraphError(f"scale must be positive, got {scale}")
    x_count, y_count = scale * b, scale * a
    rng = random.Random(seed)
    if b == x_count:
        # every degree-b vertex must be adjacent to the whole other side, so
        # the only simple realization is complete
        edges = sorted((x, x_count + y) for x in range(x_count) for y in range(y_count))
        return Graph(x_count + y_count, tuple(edges))
    x_stubs = [x for x in range(x_count) for _ in range(a)]
    budget = 10 * scale * b
    for _ in range(budget):
        y_stubs = [x_count + y for y in range(y_count) for _ in range(b)]
        rng.shuffle(y_stubs)
        pairs = list(zip(x_stubs, y_stubs))
        if _repair_multiedges(pairs, rng, attempts=50 * len(pairs)):
            return Graph(x_count + y_count, tuple(sorted(pairs)))
    raise GraphError(
        f"could not realize a simple ({a},{b})-biregular graph at scale {scale} "
        f"within {budget} restarts; parameters too tight")


def _repair_multiedges(pairs: list[tuple[int, int]],
                       rng: random.Random, attempts: int) -> bool:
    """Swap endpoints between random edge pairs until no duplicates remain."""
    counts = Counter(pairs)
    n_dup = sum(c - 1 for c in counts.values())
    for _ in range(attempts):
        if n_dup == 0:
            return True
        i = next(idx for idx, p in enumerate(pairs) if counts[p] > 1)
        j = rng.randrange(len(pairs))
        xi, yi = pairs[i]
        xj, yj = pairs[j]
        if i == j or xi == xj or yi == yj:
            continue
        new_i, new_j = (xi, yj), (xj, yi)
        if counts[new_i] or counts[new_j]:
            continue
        for old in (pairs[i], pairs[j]):
            if counts[old] > 1:
                n_dup -= 1
            counts[old] -= 1
        counts[new_i] += 1
        counts[new_j] += 1
        pairs[i], pairs[j] = new_i, new_j
    return n_dup == 0


def even_closure(g: Graph) -> tuple[Graph, dict[int, int]]:
    """Two disjoint copies of g plus one edge per odd-degree vertex between
    its two copies.  The result is even and bipartite.

    Returns the closure and an embedding mapping each copy-1 edge id back to
    its source edge id in g (the identity on 0..edge_count-1).
    """
    if bipartition(g) is None:
        raise GraphError("even closure requires a bipartite graph")
    n, m = g.vertex_count, g.edge_count
    edges = list(g.edges)
    edges.extend((u + n, v + n) for u, v in g.edges)
    for v in range(n):
        if g.degrees[v] % 2 == 1:
            edges.append((v, v + n))
    embedding = {eid: eid for eid in range(m)}
    return Graph(2 * n, tuple(edges)), embedding


def components(g: Graph) -> list[Component]:
    """Connected components with back-maps, ordered by smallest vertex id."""
    seen = [False] * g.vertex_count
    result: list[Component] = []
    for root in range(g.vertex_count):
        if seen[root]:
            continue
        seen[root] = True
        verts = [root]
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for eid in g.incidence[v]:
                w = g.other_end(eid, v)
                if not seen[w]:
                    seen[w] = True
                    verts.append(w)
                    queue.append(w)
        verts.sort()
        local = {host: i for i, host in enumerate(verts)}
        edge_ids = [eid for eid, (u, v) in enumerate(g.edges) if u in local]
        local_edges = tuple((local[g.edges[eid][0]], local[g.edges[eid][1]])
                            for eid in edge_ids)
        result.append(Component(
            Graph(len(verts), local_edges, g.loop_allowed),
            tuple(verts), tuple(edge_ids)))
    return result


def edge_subgraph(g: Graph, edge_ids) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph on the same vertex set keeping only the given edges.

    Edges keep their relative order; returns the kept ids (new id -> old id).
    """
    kept = tuple(sorted(edge_ids))
    edges = tuple(g.edges[eid] for eid in kept)
    return Graph(g.vertex_count, edges, g.loop_allowed), kept


def without_isolated(g: Graph) -> tuple[Graph, tuple[int, ...]]:
    """Drop degree-0 vertices, keeping edge ids intact (new vertex -> old)."""
    keep = [v for v in range(g.vertex_count) if g.degrees[v] > 0]
    local = {host: i for i, host in enumerate(keep)}
    edges = tuple((local[u], local[v]) for u, v in g.edges)
    return Graph(len(keep), edges, g.loop_allowed), tuple(keep)


def gen_random_even_bipartite(max_degree: int, seed: int) -> Graph:
    """A seeded bipartite graph whose degrees are even and at most max_degree,
    with the maximum degree attained.  Used for exercising the even-degree
    coloring bound on non-biregular inputs.
    """
    if max_degree < 2 or max_degree % 2 != 0:
        raise GraphError(f"max degree must be even and >= 2, got {max_degree}")
    rng = random.Random(seed)
    choices = list(range(2, max_degree + 1, 2))
    for _ in range(100):
        x_degs = [rng.choice(choices)
                  for _ in range(rng.randint(max(4, max_degree), max_degree + 5))]
        if max_degree not in x_degs:
            x_degs[0] = max_degree
        total = sum(x_degs)
        # enough Y-vertices that every degree fits on the other side
        y_count = max(-(-total // max_degree), max(x_degs))
        y_degs = _split_into_even_parts(total, y_count, max_degree)
        if y_degs is None or max(y_degs) > len(x_degs):
            continue
        g = _random_bipartite_with_degrees(x_degs, y_degs, rng)
        if g is not None:
            return g
    raise GraphError(f"failed to sample an even bipartite graph for seed {seed}")


def _split_into_even_parts(total: int, count: int, cap: int) -> list[int] | None:
    """Split an even total into `count` even parts, each in 2..cap."""
    if not (2 * count <= total <= cap * count):
        return None
    parts = [2] * count
    left = total - 2 * count
    for i in range(count):
        add = min(cap - parts[i], left)
        parts[i] += add
        left -= add
    return parts if left == 0 else None


def _random_bipartite_with_degrees(x_degs: list[int], y_degs: list[int],
                                   rng: random.Random) -> Graph | None:
    """Configuration pairing with repair for an arbitrary bipartite degree
    sequence; None when a simple realization was not found."""
    assert sum(x_degs) == sum(y_degs)
    nx = len(x_degs)
    x_stubs = [x for x, d in enumerate(x_degs) for _ in range(d)]
    for _ in range(40):
        y_stubs = [nx + y for y, d in enumerate(y_degs) for _ in range(d)]
        rng.shuffle(y_stubs)
        pairs = list(zip(x_stubs, y_stubs))
        if _repair_multiedges(pairs, rng, attempts=50 * len(pairs)):
            return Graph(nx + len(y_degs), tuple(sorted(pairs)))
    return None
