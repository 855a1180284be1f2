"""Integral homology of small links via Smith normal form.

Everything here is exact: matrices hold Python ints, so intermediate entry
growth during elimination never overflows.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .complex import ComplexView, SimplexId, boundary_sign


class InsufficientDepth(ValueError):
    """A homology degree was requested beyond the truncated chain complex."""


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        entries = tuple(tuple(int(x) for x in r) for r in rows)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        if any(len(r) != cols for r in entries):
            raise ValueError("ragged matrix")
        return cls(len(entries), cols, entries)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        cols = list(zip(*other.entries)) if other.rows else [()] * other.cols
        return IntMatrix(self.rows, other.cols, tuple(
            tuple(sum(a * b for a, b in zip(r, c)) for c in cols) for r in self.entries
        ))

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.entries for x in r)


@dataclass(frozen=True)
class SNFResult:
    rank: int
    divisors: tuple[int, ...]


@dataclass(frozen=True)
class HomologyGroup:
    betti: int
    torsion: tuple[int, ...] = ()

    def is_zero(self) -> bool:
        return self.betti == 0 and not self.torsion


def _as_rows(m) -> list[list[int]]:
    if isinstance(m, IntMatrix):
        return m.tolist()
    return [[int(x) for x in r] for r in m]


def smith_normal_form(m: IntMatrix | Sequence[Sequence[int]]) -> SNFResult:
    """Rank and invariant factors ``d1 | d2 | ... | dr`` of an integer matrix.

    Pivot rule: the nonzero entry of least absolute value in the remaining
    block, scanned row-major; rows and columns are cleared by Euclidean
    steps until the pivot divides the whole remaining block.
    """
    a = _as_rows(m)
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    divisors: list[int] = []
    t = 0
    while t < nrows and t < ncols:
        best = None
        for i in range(t, nrows):
            row = a[i]
            for j in range(t, ncols):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        a[t], a[i] = a[i], a[t]
        if j != t:
            for row in a:
                row[t], row[j] = row[j], row[t]

        while True:
            p = a[t][t]
            # clear column t
            moved = False
            for i in range(t + 1, nrows):
                x = a[i][t]
                if x:
                    q = x // p
                    ri, rt = a[i], a[t]
                    for j in range(t, ncols):
                        ri[j] -= q * rt[j]
                    if ri[t]:
                        moved = True
            if moved:
                i = min((i for i in range(t + 1, nrows) if a[i][t]), key=lambda i: abs(a[i][t]))
                a[t], a[i] = a[i], a[t]
                continue
            # clear row t
            rt = a[t]
            for j in range(t + 1, ncols):
                x = rt[j]
                if x:
                    q = x // p
                    for i in range(t, nrows):
                        a[i][j] -= q * a[i][t]
                    if rt[j]:
                        moved = True
            if moved:
                j = min((j for j in range(t + 1, ncols) if rt[j]), key=lambda j: abs(rt[j]))
                for row in a:
                    row[t], row[j] = row[j], row[t]
                continue
            # pivot must divide the rest of the block
            bad = None
            for i in range(t + 1, nrows):
                if any(x % p for x in a[i][t + 1:]):
                    bad = i
                    break
            if bad is None:
                break
            ri, rt = a[bad], a[t]
            for j in range(t, ncols):
                rt[j] += ri[j]
        divisors.append(abs(a[t][t]))
        t += 1
    return SNFResult(len(divisors), tuple(divisors))


@dataclass
class LinkChainComplex:
    """Chain complex of the small link of ``sigma``.

    ``sizes[j]`` counts link simplices of relative dimension ``j + 1`` (that
    is, the chain group ``C_j``); ``boundaries[j - 1]`` is the matrix of
    ``C_j -> C_{j-1}``. ``complete`` says whether the link has nothing above
    the stored depth.
    """

    sigma: SimplexId
    members: list[list[int]]
    boundaries: list[IntMatrix]
    complete: bool
    sizes: list[int] = field(init=False)

    def __post_init__(self):
        self.sizes = [len(m) for m in self.members]

    @property
    def depth(self) -> int:
        return len(self.members)


def _coface_layers(v: ComplexView, sigma: SimplexId, depth: int | None) -> list[list[int]]:
    live = v.live_cofaces
    layers: list[list[int]] = []
    frontier = [sigma.index]
    d = sigma.dim
    while frontier and (depth is None or len(layers) < depth):
        nxt: set[int] = set()
        cof = live[d]
        for i in frontier:
            nxt.update(cof[i])
        if not nxt:
            break
        layer = sorted(nxt)
        layers.append(layer)
        frontier = layer
        d += 1
    return layers


def link_chain_complex(v: ComplexView, sigma: SimplexId, max_rel_dim: int | None = None) -> LinkChainComplex:
    """Chain complex on the live cofaces of ``sigma`` up to ``max_rel_dim``.

    ``max_rel_dim=None`` means full depth. Signs come from the global vertex
    order, i.e. from the boundary of each coface in the ambient complex.
    """
    if max_rel_dim is not None and max_rel_dim < 1:
        raise ValueError("max_rel_dim must be at least 1")
    layers = _coface_layers(v, sigma, None if max_rel_dim is None else max_rel_dim + 1)
    complete = True
    if max_rel_dim is not None and len(layers) > max_rel_dim:
        layers = layers[:max_rel_dim]
        complete = False

    faces = v.base.faces
    boundaries = []
    for j in range(1, len(layers)):
        d = sigma.dim + j + 1
        row_of = {s: r for r, s in enumerate(layers[j - 1])}
        cols = layers[j]
        entries = [[0] * len(cols) for _ in row_of]
        for c, s in enumerate(cols):
            for pos, f in enumerate(faces[d][s]):
                r = row_of.get(f)
                if r is not None:
                    entries[r][c] = boundary_sign(SimplexId(d, s), pos)
        boundaries.append(IntMatrix.from_rows(entries, cols=len(cols)))
    return LinkChainComplex(sigma, layers, boundaries, complete)


def link_homology(cc: LinkChainComplex, degrees: Iterable[int]) -> dict[int, HomologyGroup]:
    """Unreduced ``H_i`` of the link for each requested degree ``i``."""
    snf: dict[int, SNFResult] = {}

    def boundary_snf(j: int) -> SNFResult:
        # SNF of C_j -> C_{j-1}; zero outside the stored range
        if j <= 0 or j >= cc.depth:
            return SNFResult(0, ())
        if j not in snf:
            snf[j] = smith_normal_form(cc.boundaries[j - 1])
        return snf[j]

    out = {}
    for i in sorted(set(degrees)):
        if i < 0:
            raise InsufficientDepth(f"negative degree {i}")
        if i + 2 > cc.depth and not cc.complete:
            raise InsufficientDepth(
                f"H_{i} needs relative dimension {i + 2}, chain complex stops at {cc.depth}")
        if i >= cc.depth:
            out[i] = HomologyGroup(0)
            continue
        outgoing = boundary_snf(i)
        incoming = boundary_snf(i + 1)
        betti = cc.sizes[i] - outgoing.rank - incoming.rank
        out[i] = HomologyGroup(betti, tuple(x for x in incoming.divisors if x > 1))
    return out


def sphere_homology(m: int) -> dict[int, HomologyGroup]:
    """Unreduced integral homology of the m-sphere in degrees 0..m."""
    if m == 0:
        return {0: HomologyGroup(2)}
    out = {i: HomologyGroup(0) for i in range(m + 1)}
    out[0] = HomologyGroup(1)
    out[m] = HomologyGroup(1)
    return out


def is_sphere_link_oracle(v: ComplexView, sigma: SimplexId, m: int) -> bool:
    """Whether the full small link of ``sigma`` has the integral homology of S^m.

    Brute force: full-depth chain complex, every degree, no duality shortcuts.
    """
    if m < 0:
        raise ValueError("sphere dimension must be non-negative")
    cc = link_chain_complex(v, sigma)
    if cc.depth == 0:
        return False
    top = max(cc.depth, m + 1)
    got = link_homology(cc, range(top))
    want = sphere_homology(m)
    return all(got[i] == want.get(i, HomologyGroup(0)) for i in range(top))


def link_euler_characteristic(v: ComplexView, sigma: SimplexId) -> int:
    """Euler characteristic of the whole small link, counting only."""
    chi = 0
    for j, layer in enumerate(_coface_layers(v, sigma, None)):
        chi += -len(layer) if j % 2 else len(layer)
    return chi
