"""Canonical stratification of a simplicial complex.

The driver peels the complex one top dimension at a time. At each level the
simplices of top dimension seed the generic strata; lower simplices join the
stratum of their immediate cofaces when their small link has the integral
homology of a sphere of the right dimension. Codimensions 1, 2 and 3 use
combinatorial shortcuts; higher codimensions compute a few homology groups
and lean on Poincare duality of the link for the rest.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .complex import (
    ComplexView,
    SimplexId,
    SimplicialComplex,
    codim_simplices,
    fresh_view,
    remove_assigned,
)
from .homology import InsufficientDepth, link_chain_complex, link_euler_characteristic, link_homology


@dataclass
class StratumRecord:
    id: int
    top_dim: int
    member_count_per_dim: list[int]

    @property
    def size(self) -> int:
        return sum(self.member_count_per_dim)


class Assignment:
    """Simplex -> stratum map, plus the stratum allocator.

    ``map[d][i]`` is the stratum id of simplex ``(d, i)`` or ``None``.
    Assignments are final.
    """

    def __init__(self, c: SimplicialComplex):
        self.complex = c
        self.map: list[list[int | None]] = [[None] * len(t) for t in c.tables]
        self.strata: list[StratumRecord] = []

    def new_stratum(self, top_dim: int) -> int:
        sid = len(self.strata)
        self.strata.append(StratumRecord(sid, top_dim, [0] * (top_dim + 1)))
        return sid

    def assign(self, s: SimplexId, stratum: int) -> None:
        cur = self.map[s.dim][s.index]
        if cur is not None:
            raise RuntimeError(f"{s} already assigned to stratum {cur}")
        self.map[s.dim][s.index] = stratum
        self.strata[stratum].member_count_per_dim[s.dim] += 1

    def __getitem__(self, s: SimplexId) -> int | None:
        return self.map[s.dim][s.index]

    def is_total(self) -> bool:
        return all(x is not None for layer in self.map for x in layer)


@dataclass
class Stratification:
    complex: SimplicialComplex
    assignment: Assignment
    strata: list[StratumRecord]
    pi: list[list[int]]

    def stratum_of(self, s: SimplexId) -> int:
        return self.assignment.map[s.dim][s.index]

    def members(self, stratum: int) -> list[SimplexId]:
        top = self.strata[stratum].top_dim
        return [
            SimplexId(d, i)
            for d in range(top + 1)
            for i, x in enumerate(self.assignment.map[d])
            if x == stratum
        ]

    def member_sets(self) -> list[frozenset[tuple[int, ...]]]:
        """Strata as sets of vertex tuples, independent of ids."""
        groups: dict[int, set] = {r.id: set() for r in self.strata}
        for d, layer in enumerate(self.assignment.map):
            table = self.complex.tables[d]
            for i, x in enumerate(layer):
                groups[x].add(table[i])
        return [frozenset(groups[r.id]) for r in self.strata]


@dataclass
class SmallLink:
    """Live cofaces of ``sigma`` bucketed by relative dimension.

    ``buckets[j]`` holds table indices of cofaces of dimension
    ``sigma.dim + j + 1``.
    """

    sigma: SimplexId
    buckets: list[list[int]]
    component_count: int | None = None

    @property
    def sizes(self) -> list[int]:
        return [len(b) for b in self.buckets]


def unique_stratum_among_cofaces(v: ComplexView, a: Assignment, sigma: SimplexId) -> int | None:
    cofaces = v.live_cofaces[sigma.dim][sigma.index]
    if not cofaces:
        return None
    up = a.map[sigma.dim + 1]
    stratum = up[cofaces[0]]
    if stratum is None:
        return None
    for c in cofaces[1:]:
        if up[c] != stratum:
            return None
    return stratum


def get_small_link(v: ComplexView, sigma: SimplexId, depth: int) -> SmallLink:
    if depth < 1:
        raise ValueError("depth must be at least 1")
    live = v.live_cofaces
    buckets: list[list[int]] = []
    frontier = (sigma.index,)
    d = sigma.dim
    seen: set[int] = set()
    while len(buckets) < depth:
        seen = set()
        cof = live[d] if d < len(live) else ()
        for i in frontier:
            seen.update(cof[i])
        if not seen:
            break
        frontier = tuple(sorted(seen))
        buckets.append(list(frontier))
        d += 1
    return SmallLink(sigma, buckets)


def link_component_count(sl: SmallLink, v: ComplexView) -> int:
    """Connected components of the link, read off its first two buckets."""
    if not sl.buckets:
        sl.component_count = 0
        return 0
    nodes = sl.buckets[0]
    parent = {x: x for x in nodes}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    count = len(nodes)
    if len(sl.buckets) > 1:
        faces = v.base.faces[sl.sigma.dim + 2]
        for e in sl.buckets[1]:
            ends = [f for f in faces[e] if f in parent]
            r0 = find(ends[0])
            for f in ends[1:]:
                r = find(f)
                if r != r0:
                    parent[r] = r0
                    count -= 1
    elif any(v.live_cofaces[sl.sigma.dim + 1][x] for x in nodes):
        raise ValueError("small link too shallow to count components")
    sl.component_count = count
    return count


def codim_zero_one_pass(v: ComplexView, a: Assignment) -> int:
    """Top simplices and codimension-1 simplices, by connected-component search.

    A codimension-1 simplex is generic iff it has exactly two live cofaces;
    generic codimension-1 simplices glue their cofaces into one stratum, so
    strata never need merging later.
    """
    n = v.top_dim
    amap = a.map
    assigned = 0
    if n >= 1:
        live = v.live_cofaces[n - 1]
        faces = v.base.faces[n]
        low, top = amap[n - 1], amap[n]
        for s in codim_simplices(v, 1):
            if low[s.index] is not None or len(live[s.index]) != 2:
                continue
            stratum = a.new_stratum(n)
            stack = [s.index]
            while stack:
                e = stack.pop()
                cc = live[e]
                if low[e] is not None or len(cc) != 2:
                    continue
                a.assign(SimplexId(n - 1, e), stratum)
                assigned += 1
                for t in cc:
                    if top[t] is None:
                        a.assign(SimplexId(n, t), stratum)
                        assigned += 1
                        stack.extend(f for f in faces[t] if low[f] is None)
    for s in codim_simplices(v, 0):
        if amap[n][s.index] is None:
            a.assign(s, a.new_stratum(n))
            assigned += 1
    return assigned


def codim_two_pass(v: ComplexView, a: Assignment, strict: bool = True) -> int:
    assigned = 0
    for s in codim_simplices(v, 2):
        if a.map[s.dim][s.index] is not None:
            continue
        stratum = unique_stratum_among_cofaces(v, a, s)
        if stratum is None:
            continue
        if strict and link_component_count(get_small_link(v, s, 2), v) != 1:
            continue
        a.assign(s, stratum)
        assigned += 1
    return assigned


def codim_three_pass(v: ComplexView, a: Assignment, strict: bool = True) -> int:
    assigned = 0
    for s in codim_simplices(v, 3):
        if a.map[s.dim][s.index] is not None:
            continue
        stratum = unique_stratum_among_cofaces(v, a, s)
        if stratum is None:
            continue
        sl = get_small_link(v, s, 3)
        sizes = sl.sizes + [0] * (3 - len(sl.buckets))
        if sizes[0] - sizes[1] + sizes[2] != 2:
            continue
        if strict and link_component_count(sl, v) != 1:
            continue
        a.assign(s, stratum)
        assigned += 1
    return assigned


def homology_depth(k: int) -> int:
    """Relative dimensions of the link needed for the homology checks at codim k."""
    return (k + 1) // 2 + 1


def _sphere_link_by_duality(v: ComplexView, s: SimplexId, k: int) -> bool:
    m = k - 1
    sl = get_small_link(v, s, max(2, homology_depth(k)))
    if link_component_count(sl, v) != 1:
        return False
    if m == 1:
        return True
    if m == 2:
        return link_euler_characteristic(v, s) == 2
    cc = link_chain_complex(v, s, homology_depth(k))
    if m % 2:
        degrees = range(1, (m + 1) // 2)
        try:
            hs = link_homology(cc, degrees)
        except InsufficientDepth as exc:  # depth cap is computed, not data-driven
            raise RuntimeError(f"link depth miscomputed at codim {k}") from exc
        return all(hs[i].is_zero() for i in degrees)
    half = m // 2
    try:
        hs = link_homology(cc, range(1, half + 1))
    except InsufficientDepth as exc:
        raise RuntimeError(f"link depth miscomputed at codim {k}") from exc
    if not all(hs[i].is_zero() for i in range(1, half)):
        return False
    return hs[half].is_zero() or link_euler_characteristic(v, s) == 2


def codim_general_pass(v: ComplexView, a: Assignment, k: int) -> int:
    """Membership test at any codimension k >= 2.

    Connectivity of the link, then: nothing more for a circle link; Euler
    characteristic 2 for a 2-sphere link; otherwise H_1 = 0 and vanishing up
    to the middle degree, where an even middle degree may instead be settled
    by Euler characteristic 2.
    """
    if k < 2:
        raise ValueError("general pass handles codimension >= 2")
    assigned = 0
    for s in codim_simplices(v, k):
        if a.map[s.dim][s.index] is not None:
            continue
        stratum = unique_stratum_among_cofaces(v, a, s)
        if stratum is None:
            continue
        if _sphere_link_by_duality(v, s, k):
            a.assign(s, stratum)
            assigned += 1
    return assigned


LevelHook = Callable[[ComplexView, Assignment], None]


def canonical_stratification(
    c: SimplicialComplex,
    strict: bool = True,
    general: bool = False,
    on_level: LevelHook | None = None,
) -> Stratification:
    """Compute the canonical stratification of ``c``.

    ``strict=False`` drops the link-connectivity check from the codimension
    2 and 3 shortcuts. ``general=True`` routes every codimension >= 2 through
    the homology-based test. ``on_level`` is called with the view and the
    assignment once each level is saturated, before its strata are removed.
    """
    a = Assignment(c)
    v = fresh_view(c)
    for v in _levels(v, a, strict, general):
        if on_level is not None:
            on_level(v, a)

    pi = [
        [a.strata[x].top_dim for x in layer]
        for layer in a.map
    ]
    return Stratification(c, a, a.strata, pi)


def _levels(v: ComplexView, a: Assignment, strict: bool, general: bool) -> Iterator[ComplexView]:
    while v.top_dim >= 0:
        n = v.top_dim
        codim_zero_one_pass(v, a)
        while True:
            changed = 0
            for k in range(2, n + 1):
                if general or k > 3:
                    changed += codim_general_pass(v, a, k)
                elif k == 2:
                    changed += codim_two_pass(v, a, strict)
                else:
                    changed += codim_three_pass(v, a, strict)
            if not changed:
                break
        yield v
        v = remove_assigned(v, a)


@dataclass(frozen=True)
class Divergence:
    simplex: SimplexId
    level: int
    kind: str  # "unsound": assigned but link is not a sphere; "missed": the reverse


def oracle_divergences(c: SimplicialComplex, strict: bool = True, general: bool = False,
                       first_only: bool = False) -> tuple[Stratification, list[Divergence]]:
    """Run the driver and check every level against the brute-force sphere test.

    Each simplex assigned at level n must have a homology-sphere link of
    dimension ``n - dim - 1``; each unassigned live simplex whose cofaces sit
    in one stratum must not.
    """
    from .homology import is_sphere_link_oracle

    found: list[Divergence] = []

    def check(v: ComplexView, a: Assignment) -> None:
        if first_only and found:
            return
        n = v.top_dim
        for s in v.live_simplices():
            if s.dim == n:
                continue
            assigned = a.map[s.dim][s.index] is not None
            if not assigned and unique_stratum_among_cofaces(v, a, s) is None:
                continue
            ok = is_sphere_link_oracle(v, s, n - s.dim - 1)
            if ok != assigned:
                found.append(Divergence(s, n, "unsound" if assigned else "missed"))
                if first_only:
                    return

    strat = canonical_stratification(c, strict=strict, general=general, on_level=check)
    return strat, found
