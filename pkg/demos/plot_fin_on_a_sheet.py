"""
A fin on a sheet
================

Eight triangles form a sheet; a ninth triangle sticks out of it along
the edge 3 4. The canonical stratification separates the sheet, the fin,
the outer rim and the seam where the fin is attached.
"""

from canstrat import build_complex, canonical_stratification, strata_poset
from canstrat.generators import PAPER_416

c = build_complex(PAPER_416)
print("simplices per dimension:", c.sizes)

###############################################################################
# Strata come out in the order they were found: generic 2-strata first,
# then the 1-strata left over once those are peeled off.

s = canonical_stratification(c)
for r, members in zip(s.strata, s.member_sets()):
    shown = sorted(members, key=lambda t: (len(t), t))
    print(f"stratum {r.id}: top_dim={r.top_dim} size={r.size}")
    print("   ", " ".join("".join(map(str, t)) for t in shown))

###############################################################################
# The seam (3, 4, 8 and its edges) closes off both the sheet and the fin;
# the rim only bounds the sheet.

p = strata_poset(s)
for a, b in sorted(p.relations):
    print(f"{a} < {b}")

###############################################################################
# Vertex 8 only touches the fin, whose edges at 8 are free. It is left
# for the next level down and joins the seam with 3 and 4.

print("vertex 8 ->", s.stratum_of(c.find((8,))))
