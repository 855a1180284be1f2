"""Wall-clock scaling benchmark over generator levels."""

from __future__ import annotations

import gc
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from .generators import GenSpec, generate
from .stratify import canonical_stratification


@dataclass
class LevelTiming:
    level: int
    s: int
    s0: int
    mean_ms: float
    stddev_ms: float
    trials: int

    @property
    def us_per_simplex(self) -> float:
        return 1000.0 * self.mean_ms / self.s


@dataclass
class BenchReport:
    family: str
    levels: list[LevelTiming]
    linear_fit: float

    def to_dict(self) -> dict:
        d = asdict(self)
        for row, lv in zip(d["levels"], self.levels):
            row["us_per_simplex"] = lv.us_per_simplex
        return d

    def table(self) -> str:
        head = f"{'level':>5} {'s':>9} {'s0':>8} {'mean_ms':>11} {'stddev_ms':>10} {'us/simplex':>11}"
        rows = [head]
        for lv in self.levels:
            rows.append(
                f"{lv.level:>5} {lv.s:>9} {lv.s0:>8} {lv.mean_ms:>11.3f} "
                f"{lv.stddev_ms:>10.3f} {lv.us_per_simplex:>11.3f}")
        rows.append(f"# {self.family}: linear_fit = {self.linear_fit:.3f}")
        return "\n".join(rows) + "\n"


def time_stratification(family: str, level: int, trials: int) -> list[float]:
    """Per-trial milliseconds for the stratification call alone."""
    c = generate(GenSpec(family, level))
    out = []
    was_enabled = gc.isenabled()
    gc.collect()
    gc.disable()
    try:
        for _ in range(trials):
            t0 = time.perf_counter()
            canonical_stratification(c)
            out.append(1000.0 * (time.perf_counter() - t0))
    finally:
        if was_enabled:
            gc.enable()
    return out


def linear_fit(sizes: list[int], times: list[float]) -> float:
    """Largest (time ratio / size ratio) between adjacent levels; 1.0 is linear."""
    ratios = [
        (t1 / t0) / (s1 / s0)
        for (s0, t0), (s1, t1) in zip(zip(sizes, times), zip(sizes[1:], times[1:]))
    ]
    return max(ratios) if ratios else 1.0


def run_bench(family: str, levels: range | list[int], trials: int = 10,
              parallel: bool = False) -> BenchReport:
    levels = sorted(levels)
    if trials < 1:
        raise ValueError("need at least one trial")
    if parallel:
        with ProcessPoolExecutor() as pool:
            futs = [pool.submit(time_stratification, family, k, 1)
                    for k in levels for _ in range(trials)]
            flat = [f.result()[0] for f in futs]
        per_level = [flat[i * trials:(i + 1) * trials] for i in range(len(levels))]
    else:
        per_level = [time_stratification(family, k, trials) for k in levels]

    rows = []
    for k, ts in zip(levels, per_level):
        c = generate(GenSpec(family, k))
        rows.append(LevelTiming(
            level=k, s=len(c), s0=c.sizes[0],
            mean_ms=statistics.fmean(ts),
            stddev_ms=statistics.stdev(ts) if len(ts) > 1 else 0.0,
            trials=len(ts),
        ))
    fit = linear_fit([r.s for r in rows], [r.mean_ms for r in rows])
    return BenchReport(family, rows, fit)
