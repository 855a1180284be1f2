"""Text input format and run reports.

Input: one simplex per line as whitespace-separated non-negative vertex ids;
``#`` starts a comment, blank lines are skipped. Output schemas are
documented in docs/format.md.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

from .complex import DegenerateSimplex, SimplicialComplex
from .poset import hom_component_count, strata_poset
from .stratify import Stratification


class ParseError(ValueError):
    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


def parse_input(text: str) -> list[tuple[int, ...]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].split()
        if not body:
            continue
        try:
            verts = [int(tok) for tok in body]
        except ValueError:
            bad = next(t for t in body if not _is_int(t))
            raise ParseError(lineno, f"not an integer: {bad!r}") from None
        if any(x < 0 for x in verts):
            raise ParseError(lineno, "vertex ids must be non-negative")
        if len(set(verts)) != len(verts):
            raise DegenerateSimplex(verts, line=lineno)
        out.append(tuple(sorted(verts)))
    return out


def _is_int(tok: str) -> bool:
    try:
        int(tok)
    except ValueError:
        return False
    return True


def format_input(simplices) -> str:
    return "".join(" ".join(str(v) for v in s) + "\n" for s in simplices)


@dataclass
class RunReport:
    dimension: int
    table_sizes: list[int]
    strata: list[dict]
    assignment: list[dict]
    poset: list[list[int]] | None = None
    hom_counts: list[dict] | None = None
    timings: dict[str, float] = field(default_factory=dict)

    def to_json(self, timings: bool = True) -> str:
        data = asdict(self)
        if data["poset"] is None:
            del data["poset"]
        if data["hom_counts"] is None:
            del data["hom_counts"]
        if not timings:
            del data["timings"]
        return json.dumps(data, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "RunReport":
        return cls(**json.loads(text))


def make_report(s: Stratification, poset: bool = False, hom: bool = False,
                timings: dict[str, float] | None = None) -> RunReport:
    c: SimplicialComplex = s.complex
    strata = [
        {"id": r.id, "top_dim": r.top_dim, "counts": list(r.member_count_per_dim)}
        for r in s.strata
    ]
    assignment = [
        {"simplex": list(c.tables[d][i]), "stratum": x}
        for d, layer in enumerate(s.assignment.map)
        for i, x in enumerate(layer)
    ]
    report = RunReport(c.dimension, c.sizes, strata, assignment, timings=dict(timings or {}))
    if poset or hom:
        p = strata_poset(s)
        if poset:
            report.poset = [list(r) for r in sorted(p.relations)]
        if hom:
            report.hom_counts = [
                {"source": a, "target": b, "count": hom_component_count(s, a, b).count}
                for a, b in sorted(p.relations)
            ]
    return report


def format_tsv(s: Stratification) -> str:
    c = s.complex
    lines = []
    for d, layer in enumerate(s.assignment.map):
        for i, x in enumerate(layer):
            verts = ",".join(str(v) for v in c.tables[d][i])
            lines.append(f"{verts}\t{x}\t{s.strata[x].top_dim}\n")
    return "".join(lines)
