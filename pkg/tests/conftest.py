import random
from collections import deque
from itertools import combinations

import pytest

from canstrat.generators import GenSpec, maximal_simplices

_RESULTS = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    cid, title = marker.args
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        _RESULTS[cid] = (title, rep.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(_RESULTS, key=lambda c: int(c.split("-")[1])):
        title, outcome = _RESULTS[cid]
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {cid}  {title}")


# --- shared complexes -------------------------------------------------------

NAMED = [
    ("paper_416", 0),
    ("pinched_sphere", 0),
    ("pinched_annulus", 0),
    ("sphere2", 0),
    ("sphere2", 2),
    ("disk2", 1),
    ("ball3", 0),
    ("ball3", 1),
    ("simplex_boundary", 2),
    ("simplex_boundary", 4),
    ("simplex_boundary", 5),
    ("cone", 3),
    ("cone", 5),
]


def cross_polytope_boundary(d):
    """Boundary of the d-dimensional cross-polytope: a (d-1)-sphere on 2d vertices."""
    return [tuple(2 * i + b for i, b in enumerate(bits)) for bits in _bits(d)]


def _bits(d):
    if d == 0:
        yield ()
        return
    for rest in _bits(d - 1):
        yield rest + (0,)
        yield rest + (1,)


def torus7():
    """Seven-vertex torus."""
    out = set()
    for i in range(7):
        out.add(tuple(sorted((i, (i + 1) % 7, (i + 3) % 7))))
        out.add(tuple(sorted((i, (i + 2) % 7, (i + 3) % 7))))
    return sorted(out)


def product_triangulation(a_simplices, b_simplices):
    """Staircase triangulation of a product of ordered complexes.

    Vertex (x, y) is encoded as x * 100 + y; vertex order is lexicographic.
    """
    out = set()
    for s in a_simplices:
        for t in b_simplices:
            p, q = len(s) - 1, len(t) - 1
            # lattice paths from (0, 0) to (p, q)
            for ups in combinations(range(p + q), p):
                i = j = 0
                path = [(s[0], t[0])]
                for step in range(p + q):
                    if step in ups:
                        i += 1
                    else:
                        j += 1
                    path.append((s[i], t[j]))
                out.add(tuple(sorted(x * 100 + y for x, y in path)))
    return sorted(out)


def s1_x_s2():
    circle = [(0, 1), (1, 2), (0, 2)]
    sphere = list(combinations(range(4), 3))
    return product_triangulation(circle, sphere)


def cone(simplices):
    apex = max(v for s in simplices for v in s) + 1
    return [tuple(s) + (apex,) for s in simplices]


def torus_sphere_pinch():
    """Suspended torus, thickened, with an interior point glued to a cone point.

    The glued vertex (1001) has a torus plus a 2-sphere as its link: Euler
    characteristic 2, two components, all cofaces in one generic stratum.
    """
    t = torus7()
    layers = product_triangulation(t, [(0, 1), (1, 2)])
    out = [s + (1000,) for s in t] + [tuple(x * 100 + 2 for x in s) + (1001,) for s in t]
    tet = next(s for s in layers if all(x % 100 < 2 for x in s))
    out += [s for s in layers if s != tet]
    out += [f + (1001,) for f in combinations(tet, 3)]
    return out


def _pieces():
    yield [tuple(s) for s in combinations(range(6), 5)]        # 4-sphere
    yield [tuple(s) for s in combinations(range(5), 4)]        # 3-sphere
    yield [s + (5,) for s in combinations(range(5), 4)]        # 4-ball
    yield cross_polytope_boundary(3)
    yield cross_polytope_boundary(4)
    yield cross_polytope_boundary(5)
    yield maximal_simplices(GenSpec("sphere2", 0))
    yield maximal_simplices(GenSpec("ball3", 0))
    yield maximal_simplices(GenSpec("pinched_annulus", 0))
    yield torus7()
    yield cone(torus7())
    yield cone(s1_x_s2())
    yield cone(torus7() + [tuple(v + 7 for v in s) for s in combinations(range(4), 3)])
    yield torus_sphere_pinch()


PIECES = list(_pieces())


def fuzz_maximal_simplices(rng: random.Random, max_simplices=50, max_dim=4):
    """Random complex of dimension <= max_dim: pieces of spheres and balls,
    relabelled, thinned, overlapped and sprinkled with random simplices."""
    out = []
    nverts = rng.randint(6, 14)
    for _ in range(rng.randint(1, 2)):
        piece = rng.choice(PIECES)
        verts = sorted({v for s in piece for v in s})
        perm = rng.sample(range(nverts + len(verts)), len(verts))
        relabel = dict(zip(verts, perm))
        keep = rng.choice([1.0, 1.0, 0.9, 0.7])
        out += [tuple(relabel[v] for v in s) for s in piece if rng.random() < keep]
    for _ in range(rng.randint(0, 6)):
        k = rng.randint(1, max_dim + 1)
        out.append(tuple(rng.sample(range(nverts), k)))
    rng.shuffle(out)
    out = out[:max_simplices] or [(0,)]
    if max(len(s) for s in out) > max_dim + 1:
        out = [s[: max_dim + 1] for s in out]
    return out


def fuzz_corpus(n=200, seed=20240917):
    rng = random.Random(seed)
    return [fuzz_maximal_simplices(rng) for _ in range(n)]


# --- structural invariants, checked without using package helpers ----------

def check_structure(strat):
    """Totality, monotonicity, cosieve fibres, connected strata, strata = fibre components."""
    c = strat.complex
    amap = strat.assignment.map
    tops = {r.id: r.top_dim for r in strat.strata}
    problems = []

    if any(x is None for layer in amap for x in layer):
        problems.append("not total")
        return problems
    if sum(r.size for r in strat.strata) != len(c):
        problems.append("stratum sizes do not sum to complex size")
    for r in strat.strata:
        counts = [0] * (r.top_dim + 1)
        for d, layer in enumerate(amap):
            for x in layer:
                if x == r.id:
                    if d > r.top_dim:
                        problems.append(f"stratum {r.id} has member above its top_dim")
                        break
                    counts[d] += 1
        if counts != r.member_count_per_dim:
            problems.append(f"stratum {r.id} counts mismatch")

    pi = lambda d, i: tops[amap[d][i]]
    adj = {}
    for d in range(1, len(amap)):
        for i, fs in enumerate(c.faces[d]):
            for f in fs:
                lo, hi = pi(d - 1, f), pi(d, i)
                if lo > hi:
                    problems.append(f"pi not monotone at {c.tables[d - 1][f]} < {c.tables[d][i]}")
                if hi <= lo and hi != lo:
                    problems.append("fibre not a cosieve")
                if lo == hi:
                    if amap[d - 1][f] != amap[d][i]:
                        problems.append("comparable simplices in one fibre split across strata")
                    a, b = (d - 1, f), (d, i)
                    adj.setdefault(a, []).append(b)
                    adj.setdefault(b, []).append(a)

    for r in strat.strata:
        members = [(d, i) for d, layer in enumerate(amap) for i, x in enumerate(layer) if x == r.id]
        if not members:
            problems.append(f"stratum {r.id} empty")
            continue
        seen = {members[0]}
        queue = deque([members[0]])
        while queue:
            u = queue.popleft()
            for w in adj.get(u, ()):
                if w not in seen and amap[w[0]][w[1]] == r.id:
                    seen.add(w)
                    queue.append(w)
        if len(seen) != len(members):
            problems.append(f"stratum {r.id} not connected")
    return problems


@pytest.fixture(scope="session")
def corpus():
    return fuzz_corpus()
