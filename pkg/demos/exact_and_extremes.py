"""
The exact solver and the extremes of the palette spectrum
=========================================================

The branch-and-bound solver enumerates matching partitions canonically and
proves exact palette counts at desk scale.  At the extremes: palette index
1 means regular class 1; palette index 2 has a clean structural certificate;
palette index |V| happens only for a short list of graph families.
"""

from palette_index import (build_graph, classify_full_palette,
                           decide_palette_two, gen_complete_bipartite,
                           palette_index_exact, palette_summary)


def show(name, g):
    result = palette_index_exact(g)
    print(f"  {name}: palette index {result.value} "
          f"({result.nodes} nodes explored)")
    return result


print("exact values on small graphs:")
k4 = build_graph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
show("K4 (regular, class 1)", k4)
c5 = build_graph(5, [(i, (i + 1) % 5) for i in range(5)])
show("C5 (regular, class 2)", c5)
show("K_{2,3}", gen_complete_bipartite(2, 3))
show("K_{3,5}", gen_complete_bipartite(3, 5))

print()
print("palette index 2 comes with a certificate: a regular class-1 graph")
print("on all vertices plus an edge-disjoint regular class-1 graph on some:")
chorded = build_graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (0, 3)])
ok, cert = decide_palette_two(chorded)
assert ok
print(f"  C6 plus a chord: spanning part {sorted(cert.h2_edges)}, "
      f"extra matching {sorted(cert.h1_edges)}")

print()
print("graphs that need one palette per vertex:")
for name, g in [
    ("K_{1,4}", gen_complete_bipartite(1, 4)),
    ("triangle", build_graph(3, [(0, 1), (1, 2), (0, 2)])),
    ("triangle with two pendants",
     build_graph(5, [(0, 1), (1, 2), (0, 2), (0, 3), (0, 4)])),
    ("C4 (not in the catalog)", build_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])),
]:
    full, tag = classify_full_palette(g)
    value = palette_index_exact(g).value
    marker = f"family '{tag}'" if full else "below the ceiling"
    assert full == (value == g.vertex_count)
    print(f"  {name}: palette index {value} of {g.vertex_count} vertices "
          f"-> {marker}")

print()
print("a witness for K_{2,3} (4 palettes is the minimum):")
g = gen_complete_bipartite(2, 3)
witness = palette_index_exact(g).witness
summary = palette_summary(g, witness)
for v in range(g.vertex_count):
    print(f"  vertex {v}: palette {sorted(summary.palette_of[v])}")
