"""Desk-scale exact solvers: minimum distinct-palette count over all proper
edge colorings, exact chromatic index, and a constructive maxdeg+1 coloring.

The palette solver enumerates set partitions of the edge set into matchings
in restricted-growth (first-use) order, which quotients out color
permutations; palettes are compared as sets of block indices.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .coloring import EdgeColoring
from .decompose import konig_coloring
from .graph import Graph, GraphError, bipartition


class BudgetExhausted(RuntimeError):
    """A search hit its node or wall budget before finishing."""


@dataclass(frozen=True)
class SearchLimits:
    max_nodes: int | None = None
    max_seconds: float | None = None
    max_colors: int | None = None

    def __post_init__(self) -> None:
        for name in ("max_nodes", "max_seconds", "max_colors"):
            val = getattr(self, name)
            if val is not None and val <= 0:
                raise ValueError(f"{name} must be positive, got {val}")


@dataclass
class PaletteIndexResult:
    value: int
    witness: EdgeColoring
    proved: bool  # False when a budget or color cap stopped the search
    nodes: int


def _check_solver_input(g: Graph) -> None:
    if any(u == v for u, v in g.edges):
        raise GraphError("loops cannot be properly edge-colored")
    if g.has_isolated_vertices():
        raise GraphError("isolated vertices are not allowed here")


def palette_index_exact(g: Graph,
                        limits: SearchLimits | None = None) -> PaletteIndexResult:
    """Minimum number of distinct palettes over all proper edge colorings,
    with a witness coloring attaining it.

    Branch and bound over canonical matching partitions.  Pruning uses the
    running best, the palettes of already-saturated vertices, and the fact
    that palettes of different sizes are always distinct.  When a budget
    runs out the best coloring found so far is returned with proved=False.
    """
    limits = limits or SearchLimits()
    _check_solver_input(g)
    m = g.edge_count
    if m == 0:
        return PaletteIndexResult(0, EdgeColoring({}), True, 0)

    degs = g.degrees
    order = sorted(range(m), key=lambda e: (-(degs[g.edges[e][0]] + degs[g.edges[e][1]]), e))
    ends = [g.edges[e] for e in order]
    degree_sizes = sorted(set(degs))
    global_lb = len(degree_sizes)
    cap = limits.max_colors if limits.max_colors is not None else m
    capped = cap < m

    # greedy first-fit seed: independent upper bound and fallback witness
    seed_assign = _greedy_blocks(g, order, ends)
    best_value, best_assign = _partition_palettes(g, order, seed_assign), list(seed_assign)

    rem = list(degs)  # uncolored incident edges per vertex
    pal = [0] * g.vertex_count  # block-index bitmask per vertex
    blocks: list[int] = []  # vertex bitmask per block
    assign = [-1] * m
    frozen: dict[int, int] = {}  # palette mask -> saturated-vertex count
    size_seen = {d: 0 for d in degree_sizes}
    missing = len(degree_sizes)
    nodes = 0
    deadline = (time.monotonic() + limits.max_seconds
                if limits.max_seconds is not None else None)
    max_nodes = limits.max_nodes
    out_of_budget = False

    def freeze(v: int) -> int:
        nonlocal missing
        key = pal[v]
        frozen[key] = frozen.get(key, 0) + 1
        gained = 1 if frozen[key] == 1 else 0
        d = degs[v]
        size_seen[d] += 1
        if size_seen[d] == 1:
            missing -= 1
        return gained

    def unfreeze(v: int) -> None:
        nonlocal missing
        key = pal[v]
        frozen[key] -= 1
        if frozen[key] == 0:
            del frozen[key]
        d = degs[v]
        size_seen[d] -= 1
        if size_seen[d] == 0:
            missing += 1

    def search(idx: int, distinct: int) -> None:
        nonlocal nodes, best_value, best_assign, out_of_budget
        if best_value <= global_lb:
            return
        if idx == m:
            if distinct < best_value:
                best_value = distinct
                best_assign = assign.copy()
            return
        nodes += 1
        if max_nodes is not None and nodes > max_nodes:
            out_of_budget = True
            return
        if deadline is not None and nodes % 1024 == 0 and time.monotonic() > deadline:
            out_of_budget = True
            return
        u, v = ends[idx]
        ubit, vbit = 1 << u, 1 << v
        evbits = ubit | vbit
        n_blocks = len(blocks)
        limit = n_blocks + 1 if n_blocks < cap else n_blocks
        for b in range(limit):
            if b == n_blocks:
                blocks.append(0)
            elif blocks[b] & evbits:
                continue
            bbit = 1 << b
            old_block = blocks[b]
            blocks[b] = old_block | evbits
            pu, pv = pal[u], pal[v]
            pal[u] = pu | bbit
            pal[v] = pv | bbit
            rem[u] -= 1
            rem[v] -= 1
            new_distinct = distinct
            froze_u = rem[u] == 0
            froze_v = rem[v] == 0
            if froze_u:
                new_distinct += freeze(u)
            if froze_v:
                new_distinct += freeze(v)
            if new_distinct + missing < best_value:
                assign[idx] = b
                search(idx + 1, new_distinct)
                assign[idx] = -1
            if froze_v:
                unfreeze(v)
            if froze_u:
                unfreeze(u)
            rem[u] += 1
            rem[v] += 1
            pal[u], pal[v] = pu, pv
            if b == n_blocks:
                blocks.pop()
            else:
                blocks[b] = old_block
            if out_of_budget or best_value <= global_lb:
                return

    search(0, 0)
    witness = EdgeColoring({order[i]: best_assign[i] + 1 for i in range(m)})
    proved = not out_of_budget and not capped
    return PaletteIndexResult(best_value, witness, proved, nodes)


def _greedy_blocks(g: Graph, order: list[int], ends) -> list[int]:
    """First-fit block assignment in search order; always succeeds."""
    blocks: list[set[int]] = []
    assign = []
    for u, v in ends:
        for b, members in enumerate(blocks):
            if u not in members and v not in members:
                members.update((u, v))
                assign.append(b)
                break
        else:
            blocks.append({u, v})
            assign.append(len(blocks) - 1)
    return assign


def _partition_palettes(g: Graph, order: list[int], assign: list[int]) -> int:
    pal: dict[int, set[int]] = {}
    for pos, eid in enumerate(order):
        u, v = g.edges[eid]
        pal.setdefault(u, set()).add(assign[pos])
        pal.setdefault(v, set()).add(assign[pos])
    return len({frozenset(s) for s in pal.values()})


def palette_index_naive(g: Graph) -> int:
    """Reference enumeration of every matching partition, no pruning at all.

    Exponential; meant for cross-checking the branch-and-bound solver on
    graphs with very few edges.
    """
    _check_solver_input(g)
    m = g.edge_count
    if m == 0:
        return 0
    best = m + 1
    blocks: list[set[int]] = []
    assign = [0] * m

    def recurse(idx: int) -> None:
        nonlocal best
        if idx == m:
            pal: dict[int, frozenset[int]] = {}
            sets: dict[int, set[int]] = {}
            for eid in range(m):
                u, v = g.edges[eid]
                sets.setdefault(u, set()).add(assign[eid])
                sets.setdefault(v, set()).add(assign[eid])
            distinct = len({frozenset(s) for s in sets.values()})
            best = min(best, distinct)
            return
        u, v = g.edges[idx]
        for b in range(len(blocks) + 1):
            if b == len(blocks):
                blocks.append({u, v})
                assign[idx] = b
                recurse(idx + 1)
                blocks.pop()
            elif u not in blocks[b] and v not in blocks[b]:
                blocks[b].update((u, v))
                assign[idx] = b
                recurse(idx + 1)
                blocks[b].difference_update((u, v))

    recurse(0)
    return best


def chromatic_index_exact(g: Graph, limits: SearchLimits | None = None) -> int:
    """Exact minimum number of colors of a proper edge coloring.

    Bipartite graphs take the constructive shortcut; otherwise a
    symmetry-broken backtracking tries the maximum degree and, failing
    that, climbs until a coloring exists (at most maxdeg+1 for simple
    graphs, maxdeg+multiplicity in general).
    """
    limits = limits or SearchLimits()
    if any(u == v for u, v in g.edges):
        raise GraphError("loops cannot be properly edge-colored")
    if g.edge_count == 0:
        return 0
    delta = g.max_degree
    bip = bipartition(g)
    if bip is not None:
        coloring = konig_coloring(g, bip)
        assert coloring.colors_used() == delta
        return delta
    if _edge_colorable(g, delta, limits):
        return delta
    if g.is_simple():
        return delta + 1
    mu = _max_multiplicity(g)
    for k in range(delta + 1, delta + mu + 1):
        if _edge_colorable(g, k, limits):
            return k
    raise AssertionError("unreachable: multigraph needs at most maxdeg+multiplicity")


def _max_multiplicity(g: Graph) -> int:
    from collections import Counter
    counts = Counter(tuple(sorted(e)) for e in g.edges)
    return max(counts.values(), default=0)


def _edge_colorable(g: Graph, k: int, limits: SearchLimits) -> bool:
    """Backtracking test for a proper k-edge-coloring; the color of each edge
    may exceed the colors used so far by at most one (symmetry breaking)."""
    m = g.edge_count
    degs = g.degrees
    order = sorted(range(m), key=lambda e: (-(degs[g.edges[e][0]] + degs[g.edges[e][1]]), e))
    ends = [g.edges[e] for e in order]
    used = [0] * g.vertex_count
    nodes = 0
    max_nodes = limits.max_nodes
    deadline = (time.monotonic() + limits.max_seconds
                if limits.max_seconds is not None else None)

    def place(idx: int, high: int) -> bool:
        nonlocal nodes
        if idx == m:
            return True
        nodes += 1
        if max_nodes is not None and nodes > max_nodes:
            raise BudgetExhausted(f"edge coloring search exceeded {max_nodes} nodes")
        if deadline is not None and nodes % 1024 == 0 and time.monotonic() > deadline:
            raise BudgetExhausted("edge coloring search hit the wall budget")
        u, v = ends[idx]
        top = min(k, high + 1)
        for c in range(1, top + 1):
            bit = 1 << c
            if (used[u] | used[v]) & bit:
                continue
            used[u] |= bit
            used[v] |= bit
            if place(idx + 1, max(high, c)):
                return True
            used[u] &= ~bit
            used[v] &= ~bit
        return False

    return place(0, 0)


def vizing_coloring(g: Graph) -> EdgeColoring:
    """Proper coloring of a simple graph with at most maxdeg+1 colors by fan
    rotation and alternating-path recoloring; deterministic in edge order."""
    if not g.is_simple():
        raise GraphError("fan recoloring requires a simple graph")
    k = g.max_degree + 1
    color: dict[int, int] = {}
    at: list[dict[int, int]] = [dict() for _ in range(g.vertex_count)]

    def free(v: int) -> int:
        for c in range(1, k + 1):
            if c not in at[v]:
                return c
        raise AssertionError("no free color; degree bound violated")

    def set_color(eid: int, c: int) -> None:
        u, v = g.edges[eid]
        assert c not in at[u] and c not in at[v]
        color[eid] = c
        at[u][c] = eid
        at[v][c] = eid

    def unset_color(eid: int) -> int:
        c = color.pop(eid)
        u, v = g.edges[eid]
        del at[u][c]
        del at[v][c]
        return c

    def invert_path(start: int, d: int, c: int) -> None:
        path = []
        v, want = start, d
        while want in at[v]:
            eid = at[v][want]
            path.append(eid)
            v = g.other_end(eid, v)
            want = c if want == d else d
        olds = [unset_color(eid) for eid in path]
        for eid, old in zip(path, olds):
            set_color(eid, c if old == d else d)

    for e0 in range(g.edge_count):
        x, f = g.edges[e0]
        fan = [f]
        fan_edges = [e0]
        in_fan = {f}
        while True:
            beta = free(fan[-1])
            if beta not in at[x]:
                break
            nxt = at[x][beta]
            w = g.other_end(nxt, x)
            if w in in_fan:
                break
            fan.append(w)
            fan_edges.append(nxt)
            in_fan.add(w)
        c = free(x)
        d = free(fan[-1])
        if d in at[x]:
            invert_path(x, d, c)
        # rotate the longest prefix that is still a fan and ends where d is free
        j = None
        for idx in range(len(fan)):
            if idx > 0 and color[fan_edges[idx]] in at[fan[idx - 1]]:
                break
            if d not in at[fan[idx]]:
                j = idx
        assert j is not None, "fan recoloring failed to free a color"
        for i in range(j):
            moved = unset_color(fan_edges[i + 1])
            set_color(fan_edges[i], moved)
        set_color(fan_edges[j], d)

    return EdgeColoring(color)
