"""Coarse poset of strata and hom-class counts between strata."""

from __future__ import annotations

from dataclasses import dataclass

from .complex import SimplexId
from .stratify import Stratification


@dataclass(frozen=True)
class StrataPoset:
    top_dims: dict[int, int]
    relations: frozenset[tuple[int, int]]
    direct: frozenset[tuple[int, int]]

    @property
    def elements(self) -> list[int]:
        return sorted(self.top_dims)

    def less(self, a: int, b: int) -> bool:
        return (a, b) in self.relations


@dataclass(frozen=True)
class HomCount:
    source: int
    target: int
    count: int


def transitive_closure(pairs, elements) -> set[tuple[int, int]]:
    succ: dict[int, set[int]] = {x: set() for x in elements}
    for a, b in pairs:
        succ[a].add(b)
    out = set()
    for a in elements:
        seen: set[int] = set()
        stack = list(succ[a])
        while stack:
            b = stack.pop()
            if b in seen:
                continue
            seen.add(b)
            stack.extend(succ[b])
        out.update((a, b) for b in seen)
    return out


def strata_poset(s: Stratification) -> StrataPoset:
    """Strata ordered by ``[a] < [b]`` whenever a face of a b-simplex lies in a."""
    amap = s.assignment.map
    faces = s.complex.faces
    top_dims = {r.id: r.top_dim for r in s.strata}
    # strata met anywhere below each simplex, so ``direct`` is witnessed by
    # arbitrary (not only immediate) face relations
    below: list[frozenset[int]] = [frozenset((x,)) for x in amap[0]]
    direct = set()
    for d in range(1, len(amap)):
        nxt = []
        for i, fs in enumerate(faces[d]):
            here = amap[d][i]
            acc = set()
            for f in fs:
                acc |= below[f]
            for x in acc:
                if x != here:
                    direct.add((x, here))
            acc.add(here)
            nxt.append(frozenset(acc))
        below = nxt
    if any(top_dims[x] >= top_dims[y] for x, y in direct):
        raise RuntimeError("stratification is not monotone")
    closed = transitive_closure(direct, top_dims)
    return StrataPoset(top_dims, frozenset(closed), frozenset(direct))


def _all_faces(s: Stratification, t: SimplexId) -> set[SimplexId]:
    faces = s.complex.faces
    out = {t}
    layer = {t.index}
    for d in range(t.dim, 0, -1):
        nxt = set()
        for i in layer:
            nxt.update(faces[d][i])
        out.update(SimplexId(d - 1, j) for j in nxt)
        layer = nxt
    return out


def hom_component_count(s: Stratification, a: int, b: int) -> HomCount:
    """Connected components of the poset of pairs ``x < y`` with x in a, y in b.

    Pairs are ordered componentwise; components are joined along single
    covering steps (enlarge y inside b, or shrink x inside a).
    """
    if s.strata[a].top_dim >= s.strata[b].top_dim:
        raise ValueError("source stratum must have lower top dimension than target")
    amap = s.assignment.map
    pairs: set[tuple[SimplexId, SimplexId]] = set()
    for y in s.members(b):
        for x in _all_faces(s, y):
            if amap[x.dim][x.index] == a:
                pairs.add((x, y))
    if not pairs:
        return HomCount(a, b, 0)

    parent = {p: p for p in pairs}

    def find(p):
        while parent[p] != p:
            parent[p] = parent[parent[p]]
            p = parent[p]
        return p

    c = s.complex
    for x, y in pairs:
        neighbours = [(x, z) for z in c.cofaces_of(y)]
        if x.dim > 0:
            neighbours += [(w, y) for w in c.faces_of(x)]
        for q in neighbours:
            if q in parent:
                rp, rq = find((x, y)), find(q)
                if rp != rq:
                    parent[rq] = rp
    roots = {find(p) for p in pairs}
    return HomCount(a, b, len(roots))
