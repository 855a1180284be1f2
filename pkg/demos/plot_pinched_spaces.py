"""
Pinch points
============

Gluing two points of a surface together leaves every triangle and edge
looking like a surface, but the glued point has a link made of two
circles. Checking Euler characteristics alone cannot see this; counting
link components can.
"""

from canstrat import canonical_stratification, generate, hom_component_count
from canstrat.stratify import oracle_divergences

c = generate("pinched_sphere")
strict = canonical_stratification(c)
print("connectivity check on: ", [(r.top_dim, r.size) for r in strict.strata])

loose = canonical_stratification(c, strict=False)
print("connectivity check off:", [(r.top_dim, r.size) for r in loose.strata])

###############################################################################
# The brute-force replay recomputes the full link homology of every
# decision and reports the vertex the relaxed rule got wrong.

_, bad = oracle_divergences(c, strict=False)
for d in bad:
    print(d.kind, "at vertex", c.vertices(d.simplex))

###############################################################################
# On a pinched annulus the glued point bounds two arcs of the rim. Each
# arc reaches the point from both of its ends, which shows up as two
# classes of face relations between the point and the arc.

s = canonical_stratification(generate("pinched_annulus"))
point = next(r.id for r in s.strata if r.top_dim == 0)
for r in s.strata:
    if r.top_dim > 0:
        print(f"point -> stratum {r.id} (top_dim {r.top_dim}):",
              hom_component_count(s, point, r.id).count)
