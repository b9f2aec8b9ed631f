"""Throughput measurement harness.

Times batch evaluation against a deliberately sequential per-point baseline
over seeded uniform random points, reporting nanoseconds per evaluation and
their ratio per (function, dimension).  Values are checksummed so a report
can prove that timing instrumentation and repetition never change results;
the ratio itself is hardware-dependent and carries no assertion.
"""

from __future__ import annotations

import hashlib
import time
from dataclasses import dataclass

import numpy as np

from . import catalog
from .engine import Engine, EngineConfig, PointBatch, initialize

# Function ids shared with the CEC'14 single-objective suite; the classic
# protocol (50 concurrent evaluations, dims 10/32/64/96) runs on this set.
CEC14_OVERLAP_IDS = (
    3, 4, 5, 8, 9, 10, 11, 13, 14, 15, 16, 17, 19, 20, 21, 22,
    23, 24, 25, 26, 27, 28, 29, 30, 31, 32, 33, 34, 35, 36,
)

PROTOCOL_DIMS = (10, 32, 64, 96)
PROTOCOL_BATCH = 50

# Leading batches discarded from timing statistics (still evaluated and
# checksummed); shrinks automatically so a single run still yields a number.
WARMUP_BATCHES = 3

_POINTS_STREAM = 1001  # RNG purpose tag, distinct from instance-data streams


@dataclass(frozen=True)
class ReportRow:
    fn_id: int
    dim: int
    precision: str
    batch: int
    runs: int
    total_evals: int
    batch_ns_per_eval: float
    min_batch_ns: float
    baseline_ns_per_eval: float
    ratio: float
    checksum: str


@dataclass(frozen=True)
class EvalReport:
    rows: tuple[ReportRow, ...]

    _COLUMNS = ("fn", "dim", "precision", "batch", "runs", "total_evals",
                "batch_ns_per_eval", "min_batch_ns", "baseline_ns_per_eval",
                "ratio", "checksum")

    def to_tsv(self) -> str:
        lines = ["\t".join(self._COLUMNS)]
        for r in self.rows:
            lines.append("\t".join(str(v) for v in (
                r.fn_id, r.dim, r.precision, r.batch, r.runs, r.total_evals,
                f"{r.batch_ns_per_eval:.1f}", f"{r.min_batch_ns:.0f}",
                f"{r.baseline_ns_per_eval:.1f}", f"{r.ratio:.3f}", r.checksum,
            )))
        return "\n".join(lines) + "\n"

    def checksums(self) -> dict[tuple[int, int], str]:
        return {(r.fn_id, r.dim): r.checksum for r in self.rows}


def protocol_points(fn_id: int, dim: int, seed: int, runs: int, batch: int) -> np.ndarray:
    """Seeded uniform evaluation data over the search domain, shape
    (runs, batch, dim)."""
    ss = np.random.SeedSequence((int(seed), int(fn_id), int(dim), _POINTS_STREAM))
    rng = np.random.Generator(np.random.Philox(ss))
    lo, hi = catalog.SEARCH_DOMAIN
    return rng.uniform(lo, hi, (runs, batch, dim))


def _checksum(chunks) -> str:
    digest = hashlib.sha256()
    for arr in chunks:
        digest.update(np.ascontiguousarray(arr).tobytes())
    return digest.hexdigest()[:16]


def _time_batches(engine: Engine, fn_id: int, points: np.ndarray, precision: str):
    """Returns (per-batch wall times in ns, evaluated values per run)."""
    times = np.empty(points.shape[0])
    values = []
    for r in range(points.shape[0]):
        batch = PointBatch(points[r])
        start = time.perf_counter_ns()
        result = engine.evaluate(fn_id, batch, precision=precision)
        times[r] = time.perf_counter_ns() - start
        values.append(result.values)
    return times, values


def _time_sequential(engine: Engine, fn_id: int, points: np.ndarray, precision: str):
    """Baseline: the same points, one evaluate() call per point."""
    runs, batch, _ = points.shape
    times = np.empty(runs)
    values = []
    for r in range(runs):
        got = []
        start = time.perf_counter_ns()
        for i in range(batch):
            got.append(engine.evaluate(fn_id, points[r, i:i + 1], precision=precision))
        times[r] = time.perf_counter_ns() - start
        values.append(np.concatenate([g.values for g in got]))
    return times, values


def run_protocol(fns=CEC14_OVERLAP_IDS, dims=PROTOCOL_DIMS, batch=PROTOCOL_BATCH,
                 runs=10, seed=0, precision="double") -> EvalReport:
    """Time every (function, dimension) pair of the protocol.

    One engine is initialized per dimension; every function is evaluated on
    `runs` fresh seeded batches through the batch path and the sequential
    baseline.  The first few batches are warm-up and excluded from the
    timing averages.
    """
    rows = []
    for dim in dims:
        engine = initialize(EngineConfig(dim=dim, max_concurrency=batch, seed=seed,
                                         precision=precision))
        usable = [fn for fn in fns if fn not in engine.disabled_ids]
        for fn in usable:
            points = protocol_points(fn, dim, seed, runs, batch)
            batch_times, batch_values = _time_batches(engine, fn, points, precision)
            base_times, _ = _time_sequential(engine, fn, points, precision)
            skip = min(WARMUP_BATCHES, runs - 1)
            per_eval = float(np.mean(batch_times[skip:])) / batch
            base_per_eval = float(np.mean(base_times[skip:])) / batch
            rows.append(ReportRow(
                fn_id=fn, dim=dim, precision=precision, batch=batch, runs=runs,
                total_evals=runs * batch,
                batch_ns_per_eval=per_eval,
                min_batch_ns=float(np.min(batch_times[skip:])),
                baseline_ns_per_eval=base_per_eval,
                ratio=base_per_eval / per_eval,
                checksum=_checksum(batch_values),
            ))
        engine.dispose()
    return EvalReport(tuple(rows))
