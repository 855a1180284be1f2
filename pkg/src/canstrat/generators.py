"""Deterministic test complexes.

All generators return lists of maximal simplices (vertex tuples); use
:func:`generate` to get a built :class:`SimplicialComplex` directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .complex import SimplicialComplex, build_complex

FAMILIES = (
    "sphere2",
    "ball3",
    "disk2",
    "simplex_boundary",
    "cone",
    "paper_416",
    "pinched_sphere",
    "pinched_annulus",
)

MAX_SPHERE_LEVEL = 8

PAPER_416 = [
    (0, 1, 3), (0, 2, 3), (1, 3, 5), (2, 3, 4), (2, 4, 6),
    (3, 4, 5), (4, 5, 7), (4, 6, 7), (3, 4, 8),
]

# Disk with two boundary points identified (vertex 0). Columns 1-2-3 / 4-5-6 /
# 7-8-9 run bottom to top; see docs/pinched_annulus.md for the picture.
PINCHED_ANNULUS = [
    (0, 1, 2), (0, 2, 3),
    (1, 4, 5), (1, 2, 5), (2, 5, 6), (2, 3, 6),
    (4, 7, 8), (4, 5, 8), (5, 8, 9), (5, 6, 9),
    (0, 7, 8), (0, 8, 9),
]


@dataclass(frozen=True)
class GenSpec:
    family: str
    level: int = 0


def octahedron() -> list[tuple[int, int, int]]:
    # 0/1 = +-x, 2/3 = +-y, 4/5 = +-z
    return sorted(tuple(sorted(t)) for t in product((0, 1), (2, 3), (4, 5)))


def subdivide(triangles: list[tuple[int, int, int]]) -> list[tuple[int, int, int]]:
    """One round of 1-to-4 edge-midpoint subdivision."""
    edges = sorted({e for t in triangles for e in combinations(t, 2)})
    nxt = max(v for t in triangles for v in t) + 1
    mid = {e: nxt + i for i, e in enumerate(edges)}
    out = []
    for a, b, c in triangles:
        ab, ac, bc = mid[a, b], mid[a, c], mid[b, c]
        out += [(a, ab, ac), (b, ab, bc), (c, ac, bc), (ab, ac, bc)]
    return sorted(tuple(sorted(t)) for t in out)


def sphere2(level: int) -> list[tuple[int, ...]]:
    if not 0 <= level <= MAX_SPHERE_LEVEL:
        raise ValueError(f"sphere2 level must be in 0..{MAX_SPHERE_LEVEL}")
    tris = octahedron()
    for _ in range(level):
        tris = subdivide(tris)
    return tris


def cone_over(simplices) -> list[tuple[int, ...]]:
    apex = max(v for s in simplices for v in s) + 1
    return [tuple(s) + (apex,) for s in simplices]


def ball3(level: int) -> list[tuple[int, ...]]:
    return cone_over(sphere2(level))


def disk2(level: int) -> list[tuple[int, ...]]:
    return sphere2(level)[1:]


def simplex_boundary(d: int) -> list[tuple[int, ...]]:
    """Boundary of the d-simplex, a (d-1)-sphere."""
    if d < 1:
        raise ValueError("simplex_boundary needs d >= 1")
    return list(combinations(range(d + 1), d))


def pinched_sphere() -> list[tuple[int, ...]]:
    """Subdivided octahedron with its two z-poles identified.

    The shared vertex has two disjoint 4-cycles as its link, while the rest
    of the sphere stays connected.
    """
    return sorted({tuple(sorted(4 if v == 5 else v for v in t)) for t in sphere2(1)})


def maximal_simplices(spec: GenSpec) -> list[tuple[int, ...]]:
    f, k = spec.family, spec.level
    if f == "sphere2":
        return sphere2(k)
    if f == "ball3":
        return ball3(k)
    if f == "disk2":
        return disk2(k)
    if f == "simplex_boundary":
        return simplex_boundary(k)
    if f == "cone":
        return cone_over(simplex_boundary(k))
    if f in ("paper_416", "pinched_sphere", "pinched_annulus"):
        if k != 0:
            raise ValueError(f"{f} has a single fixed level 0")
        if f == "paper_416":
            return list(PAPER_416)
        if f == "pinched_sphere":
            return pinched_sphere()
        return list(PINCHED_ANNULUS)
    raise ValueError(f"unknown family {f!r}; expected one of {', '.join(FAMILIES)}")


def generate(spec: GenSpec | str, level: int = 0) -> SimplicialComplex:
    if isinstance(spec, str):
        spec = GenSpec(spec, level)
    return build_complex(maximal_simplices(spec))
