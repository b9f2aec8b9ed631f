"""Lifecycle and batch evaluation front-end.

initialize() realizes all 37 function instances from one seed and caches
them; evaluate() scores a batch of points against one function id in double
or single precision; dispose() releases the cached data.

Evaluation is bit-deterministic: for a fixed (seed, dim, precision) the value
of a point never depends on the batch it arrived in, on the number of worker
threads, or on the process.  Per-point arithmetic is sequential with fixed
reduction trees; parallelism only ever spans whole points.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import catalog, composition, hybrid, kernels, transforms
from .catalog import Category, VALUE_BIAS
from .errors import (
    BatchTooLarge,
    DimensionMismatch,
    DimensionTooSmall,
    DisabledFunction,
    NonFiniteInput,
    UseAfterDispose,
)

_DTYPES = {"double": np.float64, "single": np.float32}


@dataclass(frozen=True)
class EngineConfig:
    dim: int
    max_concurrency: int = 50
    seed: int = 0
    precision: str = "double"
    threads: int = 1

    def __post_init__(self):
        if self.dim < catalog.MIN_DIMENSION:
            raise DimensionTooSmall(f"dim must be >= {catalog.MIN_DIMENSION}, got {self.dim}")
        if self.max_concurrency < 1:
            raise ValueError("max_concurrency must be >= 1")
        if self.seed < 0:
            raise ValueError("seed must be a non-negative integer")
        if self.precision not in _DTYPES:
            raise ValueError(f"precision must be one of {sorted(_DTYPES)}")
        if self.threads < 1:
            raise ValueError("threads must be >= 1")


@dataclass(frozen=True)
class PointBatch:
    """B x D candidate points; the array dtype is the batch's precision."""

    data: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.data)
        if arr.ndim != 2 or arr.shape[0] < 1:
            raise ValueError("batch data must be a non-empty 2-D array")
        object.__setattr__(self, "data", arr)

    @property
    def count(self) -> int:
        return self.data.shape[0]

    @property
    def dim(self) -> int:
        return self.data.shape[1]

    @property
    def precision(self) -> str:
        return "single" if self.data.dtype == np.float32 else "double"


@dataclass(frozen=True)
class EvalResult:
    """Per-point objective values, suite bias included."""

    values: np.ndarray


class _BasicEvaluator:
    def __init__(self, inst, spec, kernel, dtype):
        self.x_opt = inst.x_opt.astype(dtype)
        self.rotation = inst.rotation.astype(dtype) if spec.rotate else None
        self.scale = spec.scale
        self.pre = spec.pre_offset
        self.post = spec.post_offset
        self.kernel = kernel

    def __call__(self, x):
        v = self.scale * (x - self.x_opt)
        if self.pre:
            v = v + self.pre
        if self.rotation is not None:
            v = transforms.matvec(self.rotation, v)
        if self.post:
            v = v + self.post
        return self.kernel(v)


def _prepare(fn_id: int, dim: int, seed: int, dtype):
    """Single-point evaluator for one function id in one precision."""
    info = catalog.lookup(fn_id)
    if info.category in (Category.UNIMODAL, Category.BASIC_MULTIMODAL):
        inst = transforms.generate_instance(fn_id, dim, seed)
        kernel = kernels.KERNELS[catalog.BASIC_KERNELS[fn_id]]
        return _BasicEvaluator(inst, info.transform, kernel, dtype)
    if info.category is Category.HYBRID:
        spec = hybrid.build_hybrid(fn_id, dim, seed).astype(dtype)
        return lambda x: hybrid.eval_hybrid(spec, x)
    spec = composition.build_composition(fn_id, dim, seed).astype(dtype)
    return lambda x: composition.eval_composition(spec, x)


def scalar_evaluator(fn_id: int, dim: int, seed: int, precision: str = "double"):
    """Standalone single-point evaluator (bias included), without the engine.

    Used by the landscape grid export, which needs basic and composition
    functions at dimensions below the engine's hybrid/composition cutoff.
    """
    dtype = _DTYPES[precision]
    inner = _prepare(fn_id, dim, seed, dtype)

    def evaluate(x):
        x = np.ascontiguousarray(x, dtype=dtype)
        if x.shape != (dim,):
            raise DimensionMismatch(f"expected a vector of length {dim}, got {x.shape}")
        if not np.all(np.isfinite(x)):
            raise NonFiniteInput("point contains NaN or infinity")
        return inner(x) + VALUE_BIAS

    return evaluate


class Engine:
    """Caches all function instances for one (dim, seed) and evaluates batches."""

    def __init__(self, config: EngineConfig):
        self.config = config
        self._disposed = False
        dim, seed = config.dim, config.seed
        if dim >= catalog.MIN_CONSTRUCTED_DIMENSION:
            self._disabled = frozenset()
        else:
            self._disabled = frozenset(
                info.fn_id for info in catalog.FUNCTIONS
                if info.category in (Category.HYBRID, Category.COMPOSITION)
            )
        self._evaluators = {
            (fn, precision): _prepare(fn, dim, seed, dtype)
            for fn in range(catalog.FUNCTION_COUNT) if fn not in self._disabled
            for precision, dtype in _DTYPES.items()
        }

    @property
    def dim(self) -> int:
        return self.config.dim

    @property
    def disabled_ids(self) -> frozenset[int]:
        """Function ids unavailable at this engine's dimension."""
        return self._disabled

    @property
    def enabled_ids(self) -> tuple[int, ...]:
        return tuple(fn for fn in range(catalog.FUNCTION_COUNT) if fn not in self._disabled)

    def evaluate(self, fn_id: int, batch: PointBatch, precision: str | None = None) -> EvalResult:
        """Score every point of `batch` against function `fn_id`.

        Values include the suite bias.  `precision` overrides the engine's
        configured default.
        """
        if self._disposed:
            raise UseAfterDispose("engine was disposed")
        if isinstance(batch, np.ndarray):
            batch = PointBatch(batch)
        catalog.lookup(fn_id)
        fn_id = int(fn_id)
        if fn_id in self._disabled:
            raise DisabledFunction(
                f"function {fn_id} needs dimension >= {catalog.MIN_CONSTRUCTED_DIMENSION}"
            )
        if batch.count > self.config.max_concurrency:
            raise BatchTooLarge(
                f"batch of {batch.count} exceeds max_concurrency={self.config.max_concurrency}"
            )
        if batch.dim != self.config.dim:
            raise DimensionMismatch(f"batch dim {batch.dim} != engine dim {self.config.dim}")

        precision = precision or self.config.precision
        if precision not in _DTYPES:
            raise ValueError(f"precision must be one of {sorted(_DTYPES)}")
        dtype = _DTYPES[precision]
        points = np.ascontiguousarray(batch.data, dtype=dtype)
        if not np.all(np.isfinite(points)):
            raise NonFiniteInput("batch contains NaN or infinity")

        evaluator = self._evaluators[(fn_id, precision)]
        values = np.empty(batch.count, dtype=dtype)
        if self.config.threads == 1 or batch.count == 1:
            for i in range(batch.count):
                values[i] = evaluator(points[i]) + VALUE_BIAS
        else:
            with ThreadPoolExecutor(max_workers=self.config.threads) as pool:
                for i, v in enumerate(pool.map(evaluator, points)):
                    values[i] = v + VALUE_BIAS
        return EvalResult(values)

    def evaluate_single_precision(self, fn_id: int, batch: PointBatch) -> EvalResult:
        return self.evaluate(fn_id, batch, precision="single")

    def dispose(self) -> None:
        """Release all cached instance data; double dispose is a no-op."""
        self._evaluators = None
        self._disposed = True


def initialize(config: EngineConfig) -> Engine:
    """Generate and cache every instance for the configuration; returns the
    ready engine."""
    return Engine(config)
