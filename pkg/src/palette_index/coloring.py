"""Edge colorings, properness checking, and palette extraction."""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph


class ColoringError(ValueError):
    """Raised for partial or improper colorings where a proper one is required."""


@dataclass
class EdgeColoring:
    """Assignment of a positive color to each edge id of a host graph.

    May be partial while a construction is still filling it in; every public
    operation that consumes a coloring requires it to be total.
    """

    color_of: dict[int, int] = field(default_factory=dict)

    def colors_used(self) -> int:
        return len(set(self.color_of.values()))

    def max_color(self) -> int:
        return max(self.color_of.values(), default=0)


@dataclass(frozen=True)
class Violation:
    vertex: int
    edge_a: int
    edge_b: int


@dataclass(frozen=True)
class PaletteSummary:
    """Per-vertex palettes of a proper coloring plus distinct-palette count."""

    palette_of: tuple[frozenset[int], ...]
    distinct: int
    multiplicity: dict[frozenset[int], int]


def verify_proper(g: Graph, c: EdgeColoring) -> list[Violation]:
    """All properness violations of a total coloring; empty means proper.

    A violation names a vertex and the two incident edges sharing a color.
    Loops can never be properly colored and are reported against themselves.
    """
    for eid in range(g.edge_count):
        if eid not in c.color_of:
            raise ColoringError(f"partial coloring: edge {eid} has no color")
        if c.color_of[eid] < 1:
            raise ColoringError(f"edge {eid} has non-positive color {c.color_of[eid]}")
    violations: list[Violation] = []
    for v in range(g.vertex_count):
        by_color: dict[int, list[int]] = {}
        for eid in g.incidence[v]:
            if g.is_loop(eid):
                violations.append(Violation(v, eid, eid))
                continue
            by_color.setdefault(c.color_of[eid], []).append(eid)
        for group in by_color.values():
            for i in range(len(group)):
                for j in range(i + 1, len(group)):
                    violations.append(Violation(v, group[i], group[j]))
    return violations


def palette_summary(g: Graph, c: EdgeColoring) -> PaletteSummary:
    """Palettes of a proper coloring; raises on an improper one."""
    bad = verify_proper(g, c)
    if bad:
        first = bad[0]
        raise ColoringError(
            f"improper coloring: vertex {first.vertex} sees color "
            f"{c.color_of[first.edge_a]} on edges {first.edge_a} and {first.edge_b}")
    palettes = tuple(frozenset(c.color_of[eid] for eid in g.incidence[v])
                     for v in range(g.vertex_count))
    multiplicity: dict[frozenset[int], int] = {}
    for p in palettes:
        multiplicity[p] = multiplicity.get(p, 0) + 1
    return PaletteSummary(palettes, len(multiplicity), multiplicity)


def distinct_palettes(g: Graph, c: EdgeColoring) -> int:
    return palette_summary(g, c).distinct
