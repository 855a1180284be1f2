"""
Balls and disks
===============

A manifold with boundary splits into its interior and its boundary, and
nothing else, at every level of refinement.
"""

from canstrat import canonical_stratification, generate, strata_poset

for k in range(3):
    ball = generate("ball3", k)
    s = canonical_stratification(ball)
    sizes = {r.top_dim: r.size for r in s.strata}
    print(f"ball3({k}): {len(ball)} simplices, interior {sizes[3]}, boundary {sizes[2]}")

###############################################################################
# The boundary stratum is exactly the subdivided octahedron the ball is a
# cone over.

print("sphere2(2) has", len(generate("sphere2", 2)), "simplices")

###############################################################################
# The same holds for a disk: the rim is one stratum sitting below the face.

s = canonical_stratification(generate("disk2", 1))
print([(r.top_dim, r.size) for r in s.strata], sorted(strata_poset(s).relations))
