"""The invariant spread of 85 lines and the five point orbits.

The orbits of W partition the 255 points into 85 lines; under the full
stabilizer these fall into classes of 4, 18, 36 and 27 lines whose point
sets are exactly the five orbits.  The variety travels in a triplet sharing
the 27 tangents.
"""

from collections import Counter

from segre_pg72 import (
    classify_point,
    cube_orbit_labels,
    definitional_orbits,
    format_point,
    line_orbit_split,
    parity_class,
    point_orbits,
    segre_group,
    segre_triplet,
    spread_from_w,
    weight,
)

spread = spread_from_w()
print("Spread size:", len(spread.lines))
print("First lines:", [sorted(map(format_point, l)) for l in sorted(spread.lines, key=min)[:3]])

split = line_orbit_split(spread, segre_group())
print("\nLine-orbit sizes:", sorted(len(c) for c in split))

orbs = definitional_orbits()
print("\nPoint classes:", {k: len(v) for k, v in sorted(orbs.items())})
print("Sample classifications:")
for shorthand in ("1", "13", "18", "246", "18u"):
    from segre_pg72 import parse_point

    print(f"  {shorthand:>4} -> {classify_point(parse_point(shorthand))}")

partition = point_orbits(segre_group())
print("\nGroup-orbit sizes agree:", sorted(partition.sizes()))

labels = cube_orbit_labels()
census = Counter(labels.values())
print("\nCube-group refinement:", len(census), "classes")
for label, size in sorted(census.items()):
    print(f"  {label:>6}: {size}")

s, s1, s2 = segre_triplet()
print("\nTriplet copies have sizes", len(s), len(s1), len(s2))
print("Weight/parity profile of the first translate:")
profile = Counter((weight(p), parity_class(p)) for p in s1)
for key, count in sorted(profile.items()):
    print("  weight", key[0], key[1], "->", count)
