"""
Link homology
=============

Membership in a stratum is decided by the homology of small links.
Here is the machinery on its own.
"""

from canstrat import fresh_view, generate, link_chain_complex, link_homology, smith_normal_form

###############################################################################
# Smith normal form over the integers: the torsion of a boundary map shows
# up as divisors greater than one.

print(smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]))

###############################################################################
# The link of the cone point of a 3-ball is the 2-sphere it is a cone
# over: one component, no loops, one void.

ball = generate("ball3", 0)
apex = ball.find((6,))
cc = link_chain_complex(fresh_view(ball), apex)
print("link sizes:", cc.sizes)
for i, h in link_homology(cc, range(3)).items():
    extra = f" + torsion {h.torsion}" if h.torsion else ""
    print(f"H_{i} = Z^{h.betti}{extra}")

###############################################################################
# Truncating the link saves work; homology is only reported in degrees the
# truncation still determines.

short = link_chain_complex(fresh_view(ball), apex, 2)
print("truncated sizes:", short.sizes, "H_0:", link_homology(short, [0])[0])
