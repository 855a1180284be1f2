"""
Scaling
=======

Each subdivision of the octahedron multiplies the simplex count by about
four; stratification time follows.
"""

from canstrat.bench import run_bench

report = run_bench("sphere2", range(1, 5), trials=3)
print(report.table())
