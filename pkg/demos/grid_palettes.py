"""
Palette counts of grid graphs
=============================

The m-by-n grid needs exactly 1, 2, 3, or 5 distinct palettes depending on
its dimensions.  This script colors every grid up to 8x8 with the
closed-form pattern, prints the resulting table, and double-checks the
smallest cases against the exact solver.
"""

from palette_index import (color_grid, gen_grid, grid_palette_value,
                           palette_index_exact, palette_summary)

print("distinct palettes of the m x n grid (construction == exact value)")
print("     " + "".join(f"n={n:<3}" for n in range(2, 9)))
for m in range(2, 9):
    row = []
    for n in range(2, 9):
        result = color_grid(m, n)
        assert result.palettes == grid_palette_value(m, n)
        row.append(result.palettes)
    print(f"m={m}  " + "".join(f"{v:<4}" for v in row))

print()
print("exact solver confirmation on the small grids:")
for m, n in [(2, 2), (2, 3), (2, 4), (2, 5), (3, 3)]:
    exact = palette_index_exact(gen_grid(m, n))
    print(f"  G({m},{n}): exact={exact.value}, "
          f"construction={color_grid(m, n).palettes}")

print()
print("the 3x3 grid needs five palettes; here they are under the pattern:")
g = gen_grid(3, 3)
summary = palette_summary(g, color_grid(3, 3).coloring)
for palette, count in sorted(summary.multiplicity.items(),
                             key=lambda kv: sorted(kv[0])):
    print(f"  {sorted(palette)} at {count} vertices")
