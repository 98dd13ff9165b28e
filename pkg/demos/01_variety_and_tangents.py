"""Walk through the 27-point variety and its attribute families.

Build the model, look at the generators through a point, the ambient 3-flats
of the nine 3x3 grids, and the distinguished tangent construction.
"""

from segre_pg72 import build_model, format_point, segre_point

model = build_model()

print("The variety has", len(model.points), "points:")
print("  ", " ".join(format_point(p) for p in model.points))

# every multi-index entry equal to 2 expands by linearity
print("\nE_200 = E_000 + E_100:", format_point(segre_point((2, 0, 0))))
print("E_222 is the unit point:", format_point(segre_point((2, 2, 2))))

p = segre_point((0, 0, 0))
through = [line for line in model.generators.values() if p in line]
print(f"\nGenerators through {format_point(p)}:")
for line in through:
    print("  ", sorted(format_point(q) for q in line))

print("\nEach of the nine grids spans a 3-flat with 6 points off the grid:")
for key in sorted(model.sub_segres)[:3]:
    grid = model.sub_segres[key]
    flat = model.ambient_flats[key]
    external = sorted(set(flat.points()) - grid)
    print(f"  grid {key}: externals", [format_point(q) for q in external])

print("\nDistinguished tangents through the basis points:")
for i in range(8):
    line = model.tangents[1 << i]
    print(f"  L(e{i + 1}) =", sorted(format_point(q) for q in line))

print("\nThe tangent through the unit point:")
print("  L(u) =", sorted(format_point(q) for q in model.tangents[0xFF]))
