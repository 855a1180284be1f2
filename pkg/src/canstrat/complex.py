"""Finite abstract simplicial complexes as a dimension-partitioned face/coface graph.

Simplices of each dimension live in their own lexicographically sorted table,
so a simplex is addressed by ``(dim, index)``. Every simplex knows its
immediate faces (ordered by the position of the omitted vertex) and its
immediate cofaces. Iterative strata removal works on :class:`ComplexView`
objects, which mask the base complex instead of mutating it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, NamedTuple, Sequence

Simplex = tuple[int, ...]


class EmptyComplex(ValueError):
    """Raised when a complex is built from no simplices at all."""


class DegenerateSimplex(ValueError):
    """Raised for a simplex that lists the same vertex twice."""

    def __init__(self, simplex, line: int | None = None):
        self.simplex = tuple(simplex)
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}repeated vertex in simplex {self.simplex}")


class SimplexId(NamedTuple):
    dim: int
    index: int


class SimplicialComplex:
    """Immutable simplicial complex with per-dimension simplex tables.

    ``tables[d][i]`` is the ascending vertex tuple of simplex ``(d, i)``;
    ``faces[d][i]`` holds table indices into dimension ``d - 1`` (the j-th
    entry omits the j-th smallest vertex) and ``cofaces[d][i]`` holds table
    indices into dimension ``d + 1``.
    """

    __slots__ = ("tables", "faces", "cofaces", "_index")

    def __init__(self, tables, faces, cofaces, index):
        self.tables: tuple[tuple[Simplex, ...], ...] = tables
        self.faces: tuple[tuple[tuple[int, ...], ...], ...] = faces
        self.cofaces: tuple[tuple[tuple[int, ...], ...], ...] = cofaces
        self._index: tuple[dict[Simplex, int], ...] = index

    @property
    def dimension(self) -> int:
        return len(self.tables) - 1

    @property
    def sizes(self) -> list[int]:
        return [len(t) for t in self.tables]

    def __len__(self) -> int:
        return sum(len(t) for t in self.tables)

    def __repr__(self) -> str:
        return f"SimplicialComplex(dimension={self.dimension}, sizes={self.sizes})"

    def vertices(self, sid: SimplexId) -> Simplex:
        return self.tables[sid.dim][sid.index]

    def find(self, simplex: Iterable[int]) -> SimplexId:
        """Look up a simplex by its vertices (any order)."""
        key = tuple(sorted(simplex))
        d = len(key) - 1
        if d < 0 or d > self.dimension or key not in self._index[d]:
            raise KeyError(key)
        return SimplexId(d, self._index[d][key])

    def __contains__(self, simplex) -> bool:
        try:
            self.find(simplex)
        except KeyError:
            return False
        return True

    def simplex_ids(self):
        for d, table in enumerate(self.tables):
            for i in range(len(table)):
                yield SimplexId(d, i)

    def faces_of(self, sid: SimplexId) -> list[SimplexId]:
        return [SimplexId(sid.dim - 1, j) for j in self.faces[sid.dim][sid.index]]

    def cofaces_of(self, sid: SimplexId) -> list[SimplexId]:
        return [SimplexId(sid.dim + 1, j) for j in self.cofaces[sid.dim][sid.index]]

    def maximal_simplices(self) -> list[Simplex]:
        out = []
        for d, table in enumerate(self.tables):
            cof = self.cofaces[d]
            out.extend(s for i, s in enumerate(table) if not cof[i])
        return out


def build_complex(maximal_simplices: Iterable[Sequence[int]]) -> SimplicialComplex:
    """Downward closure of ``maximal_simplices`` with face/coface adjacency.

    Duplicates and non-maximal entries are fine; the result does not depend on
    the order of the input.
    """
    tops: set[Simplex] = set()
    for s in maximal_simplices:
        t = tuple(sorted(int(v) for v in s))
        if not t:
            raise ValueError("empty simplex")
        if t[0] < 0:
            raise ValueError(f"negative vertex id in {t}")
        if len(set(t)) != len(t):
            raise DegenerateSimplex(s)
        tops.add(t)
    if not tops:
        raise EmptyComplex("complex has no simplices")

    n = max(len(t) for t in tops) - 1
    layers: list[set[Simplex]] = [set() for _ in range(n + 1)]
    for t in tops:
        layers[len(t) - 1].add(t)
    # Closing top-down one layer at a time touches each face once per coface.
    for d in range(n, 0, -1):
        below = layers[d - 1]
        for t in layers[d]:
            below.update(combinations(t, d))

    tables = tuple(tuple(sorted(layer)) for layer in layers)
    index = tuple({s: i for i, s in enumerate(table)} for table in tables)

    faces: list[tuple[tuple[int, ...], ...]] = [tuple(() for _ in tables[0])]
    for d in range(1, n + 1):
        lower = index[d - 1]
        faces.append(tuple(
            tuple(lower[s[:j] + s[j + 1:]] for j in range(d + 1))
            for s in tables[d]
        ))

    cof_lists: list[list[list[int]]] = [[[] for _ in table] for table in tables]
    for d in range(1, n + 1):
        below = cof_lists[d - 1]
        for i, fs in enumerate(faces[d]):
            for f in fs:
                below[f].append(i)
    cofaces = tuple(tuple(tuple(c) for c in layer) for layer in cof_lists)

    return SimplicialComplex(tables, tuple(faces), cofaces, index)


def boundary_sign(tau: SimplexId, i: int) -> int:
    """Coefficient of the i-th immediate face of ``tau`` in its boundary."""
    if not 0 <= i <= tau.dim:
        raise IndexError(f"face position {i} out of range for a {tau.dim}-simplex")
    return -1 if i % 2 else 1


@dataclass(frozen=True, eq=False)
class ComplexView:
    """The live subcomplex left after some strata have been removed.

    ``alive`` is always a sieve (closed under faces) and ``live_cofaces``
    lists only live immediate cofaces.
    """

    base: SimplicialComplex
    alive: tuple[tuple[bool, ...], ...]
    live_cofaces: tuple[tuple[tuple[int, ...], ...], ...]
    top_dim: int

    def is_alive(self, sid: SimplexId) -> bool:
        return self.alive[sid.dim][sid.index]

    def live_count(self) -> int:
        return sum(sum(layer) for layer in self.alive)

    def live_simplices(self):
        for d in range(self.top_dim + 1):
            for i, ok in enumerate(self.alive[d]):
                if ok:
                    yield SimplexId(d, i)


def fresh_view(c: SimplicialComplex) -> ComplexView:
    alive = tuple((True,) * len(t) for t in c.tables)
    return ComplexView(c, alive, c.cofaces, c.dimension)


def remove_assigned(v: ComplexView, a) -> ComplexView:
    """Drop every simplex of ``v`` that ``a`` has assigned.

    Only strata created at the current top dimension can be assigned among
    live simplices; anything else indicates a bookkeeping error.
    """
    amap = a.map
    expected = sum(sum(r.member_count_per_dim) for r in a.strata if r.top_dim == v.top_dim)
    removed = 0
    alive = []
    for d, layer in enumerate(v.alive):
        m = amap[d]
        new = tuple(ok and m[i] is None for i, ok in enumerate(layer))
        removed += sum(layer) - sum(new)
        alive.append(new)
    if removed != expected:
        raise RuntimeError(
            f"assignment out of sync with view: removed {removed}, expected {expected}")

    live_cofaces = []
    for d, layer in enumerate(v.live_cofaces):
        if d + 1 < len(alive):
            up = alive[d + 1]
            here = alive[d]
            live_cofaces.append(tuple(
                tuple(j for j in cs if up[j]) if here[i] else ()
                for i, cs in enumerate(layer)
            ))
        else:
            live_cofaces.append(tuple(() for _ in layer))

    top = -1
    for d in range(len(alive) - 1, -1, -1):
        if any(alive[d]):
            top = d
            break
    return ComplexView(v.base, tuple(alive), tuple(live_cofaces), top)


def codim_simplices(v: ComplexView, k: int) -> list[SimplexId]:
    """Live simplices of dimension ``top_dim - k`` in table order."""
    d = v.top_dim - k
    if d < 0 or d > v.top_dim:
        return []
    return [SimplexId(d, i) for i, ok in enumerate(v.alive[d]) if ok]
