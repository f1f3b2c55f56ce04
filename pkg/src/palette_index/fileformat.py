"""Plain-text graph and coloring formats.

GraphFile::

    # optional comments
    p <vertex_count> <edge_count>
    e <u> <v>          (1-indexed, one line per edge, in edge-id order)

ColoringFile::

    s <colors_used> <distinct_palettes>
    c <edge_index> <color>   (1-indexed edge ids, each exactly once)

Comment lines start with ``#``; key=value summary lines are tolerated when
parsing colorings so a stream carrying a trailing summary re-parses cleanly.
"""

from __future__ import annotations

from .coloring import EdgeColoring
from .graph import Graph, build_graph


class FormatError(ValueError):
    """Malformed text input; the message carries the offending line number."""


def serialize_graph(g: Graph) -> str:
    lines = [f"p {g.vertex_count} {g.edge_count}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if parts[0] != "p" or len(parts) != 3:
                raise FormatError(f"line {ln}: expected header 'p <vertices> <edges>'")
            try:
                header = (int(parts[1]), int(parts[2]))
            except ValueError:
                raise FormatError(f"line {ln}: non-integer header fields") from None
            if header[0] < 0 or header[1] < 0:
                raise FormatError(f"line {ln}: negative counts in header")
            continue
        if parts[0] != "e" or len(parts) != 3:
            raise FormatError(f"line {ln}: expected edge line 'e <u> <v>'")
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError:
            raise FormatError(f"line {ln}: non-integer endpoint") from None
        if not (1 <= u <= header[0] and 1 <= v <= header[0]):
            raise FormatError(f"line {ln}: endpoint out of range 1..{header[0]}")
        if u == v:
            raise FormatError(f"line {ln}: loop at vertex {u} is not allowed")
        edges.append((u - 1, v - 1))
    if header is None:
        raise FormatError("line 1: missing header")
    if len(edges) != header[1]:
        raise FormatError(
            f"line {len(text.splitlines())}: header promises {header[1]} edges, "
            f"found {len(edges)}")
    return build_graph(header[0], edges)


def serialize_coloring(c: EdgeColoring, distinct_palettes: int) -> str:
    lines = [f"s {c.colors_used()} {distinct_palettes}"]
    lines.extend(f"c {eid + 1} {c.color_of[eid]}" for eid in sorted(c.color_of))
    return "\n".join(lines) + "\n"


def parse_coloring(text: str) -> tuple[EdgeColoring, tuple[int, int]]:
    """Parse a coloring stream; returns the coloring and the (colors_used,
    distinct_palettes) header pair as written."""
    header: tuple[int, int] | None = None
    colors: dict[int, int] = {}
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" in line.split()[0]:
            continue  # trailing summary tokens, not part of the coloring
        parts = line.split()
        if header is None:
            if parts[0] != "s" or len(parts) != 3:
                raise FormatError(f"line {ln}: expected header 's <colors> <palettes>'")
            try:
                header = (int(parts[1]), int(parts[2]))
            except ValueError:
                raise FormatError(f"line {ln}: non-integer header fields") from None
            continue
        if parts[0] != "c" or len(parts) != 3:
            raise FormatError(f"line {ln}: expected coloring line 'c <edge> <color>'")
        try:
            eid, col = int(parts[1]), int(parts[2])
        except ValueError:
            raise FormatError(f"line {ln}: non-integer fields") from None
        if eid < 1:
            raise FormatError(f"line {ln}: edge index must be positive")
        if col < 1:
            raise FormatError(f"line {ln}: colors must be positive")
        if eid - 1 in colors:
            raise FormatError(f"line {ln}: edge {eid} colored twice")
        colors[eid - 1] = col
    if header is None:
        raise FormatError("line 1: missing header")
    return EdgeColoring(colors), header
