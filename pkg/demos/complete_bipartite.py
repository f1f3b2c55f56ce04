"""
Complete bipartite graphs
=========================

K_{a,b} with a < b admits a proper b-coloring with exactly 1 + b/gcd(a,b)
distinct palettes: every small-side vertex sees all b colors, and the
big-side palettes are constant on blocks of gcd(a,b) consecutive vertices.
"""

import math

from palette_index import (color_complete_bipartite, gen_complete_bipartite,
                           palette_index_exact, palette_summary)

print("palettes of the block coloring of K_{a,b} (= 1 + b/gcd(a,b)):")
print("      " + "".join(f"b={b:<3}" for b in range(2, 9)))
for a in range(1, 8):
    cells = []
    for b in range(2, 9):
        if b <= a:
            cells.append("    ")
            continue
        result = color_complete_bipartite(a, b)
        assert result.palettes == 1 + b // math.gcd(a, b)
        cells.append(f"{result.palettes:<4}")
    print(f"a={a}   " + "".join(cells))

print()
print("the palettes of K_{2,4} under the block coloring:")
g = gen_complete_bipartite(2, 4)
summary = palette_summary(g, color_complete_bipartite(2, 4).coloring)
for palette, count in sorted(summary.multiplicity.items(),
                             key=lambda kv: (len(kv[0]), sorted(kv[0]))):
    print(f"  {sorted(palette)} at {count} vertices")

print()
print("when gcd(a,b) < a the bound can be off by a little: K_{2,3} still")
print("hits it exactly, but K_{3,5} needs 5 while the block bound is 6:")
for a, b in [(2, 3), (3, 5)]:
    exact = palette_index_exact(gen_complete_bipartite(a, b)).value
    bound = 1 + b // math.gcd(a, b)
    print(f"  K_{{{a},{b}}}: exact={exact}, block-coloring bound={bound}")
