"""Benchmark suite of 37 single-objective real-parameter test functions.

Unimodal, multi-modal, hybrid and composition functions over [-100, 100]^D
with deterministic seeded instances (shift vectors, block-orthogonal
rotations, permutations), a dual-precision batch evaluation engine, and a CLI
for instance generation, evaluation, landscape export and throughput
benchmarking.  Every function's global minimum value is 100.
"""

from .bench import CEC14_OVERLAP_IDS, EvalReport, ReportRow, run_protocol
from .catalog import (
    FUNCTION_COUNT,
    FUNCTIONS,
    SEARCH_DOMAIN,
    SHIFT_DOMAIN,
    VALUE_BIAS,
    Category,
    CompositionRecipe,
    FunctionInfo,
    HybridRecipe,
    TransformSpec,
    lookup,
)
from .composition import (
    CompositionSpec,
    build_composition,
    composition_weights,
    eval_composition,
)
from .engine import (
    Engine,
    EngineConfig,
    EvalResult,
    PointBatch,
    initialize,
    scalar_evaluator,
)
from .errors import (
    BatchTooLarge,
    BenchmarkError,
    CorruptInstance,
    DimensionMismatch,
    DimensionTooSmall,
    DisabledFunction,
    NonFiniteInput,
    ParseError,
    RankDeficiency,
    UnknownFunction,
    UnsupportedAtDim2,
    UseAfterDispose,
)
from .hybrid import HybridSpec, build_hybrid, eval_hybrid, subcomponent_sizes
from .transforms import Instance, apply_transform, generate_instance, gram_schmidt

__version__ = "0.1.0"
