"""Static registry of the 37 benchmark functions.

Maps every function id in 0..36 to its name, category, input transform
parameters and, for the constructed families, the build recipe (subcomponent
fractions and member kernels, or the blend's sigma/height/bias arrays).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import UnknownFunction

# Common suite constants.
SEARCH_DOMAIN = (-100.0, 100.0)
SHIFT_DOMAIN = (-70.0, 70.0)
VALUE_BIAS = 100.0

FUNCTION_COUNT = 37
MIN_DIMENSION = 2
MIN_CONSTRUCTED_DIMENSION = 10


class Category(Enum):
    UNIMODAL = "unimodal"
    BASIC_MULTIMODAL = "basic-multimodal"
    HYBRID = "hybrid"
    COMPOSITION = "composition"


@dataclass(frozen=True)
class TransformSpec:
    """Input pipeline parameters: z = R(scale*(x - x_opt) + pre) + post."""

    scale: float
    rotate: bool
    pre_offset: float = 0.0
    post_offset: float = 0.0


@dataclass(frozen=True)
class HybridRecipe:
    """Subcomponent fractions and member kernels of one hybrid function."""

    fractions: tuple[float, ...]
    kernels: tuple[str, ...]


@dataclass(frozen=True)
class CompositionRecipe:
    """Blend arrays and members of one composition function.

    Members are basic kernel names, or hybrid function ids for the two
    compositions built out of hybrids.
    """

    sigma: tuple[float, ...]
    heights: tuple[float, ...]
    biases: tuple[float, ...]
    kernels: tuple[str, ...] | None = None
    hybrid_ids: tuple[int, ...] | None = None

    @property
    def size(self) -> int:
        members = self.kernels if self.kernels is not None else self.hybrid_ids
        return len(members)


@dataclass(frozen=True)
class FunctionInfo:
    fn_id: int
    name: str
    category: Category
    note: str
    transform: TransformSpec | None = None
    hybrid: HybridRecipe | None = None
    composition: CompositionRecipe | None = None


# Per-kernel input pipeline constants.  These apply wherever the kernel is
# used: standalone, inside a hybrid subcomponent, or as a composition member
# (rotation on/off is decided by the context, not by this table).
KERNEL_TRANSFORMS: dict[str, TransformSpec] = {
    "sphere": TransformSpec(1.0, True),
    "ellipsoid": TransformSpec(1.0, True),
    "elliptic": TransformSpec(1.0, True),
    "discus": TransformSpec(1.0, True),
    "cigar": TransformSpec(1.0, True),
    "powers": TransformSpec(0.01, True),
    "sharp_valley": TransformSpec(1.0, True),
    "step": TransformSpec(1.0, True),
    "weierstrass": TransformSpec(0.005, True),
    "griewank": TransformSpec(6.0, True),
    "rastrigin": TransformSpec(0.0512, True),
    "schaffers_f7": TransformSpec(1.0, True),
    "grie_rosen": TransformSpec(0.05, True, post_offset=1.0),
    "rosenbrock": TransformSpec(0.02048, True, post_offset=1.0),
    "schwefel": TransformSpec(10.0, True),
    "katsuura": TransformSpec(0.05, True),
    "lunacek": TransformSpec(0.1, True, pre_offset=2.5),
    "ackley": TransformSpec(1.0, True),
    "happycat": TransformSpec(0.05, True, post_offset=-1.0),
    "hgbat": TransformSpec(0.05, True, post_offset=-1.0),
    "schaffers_f6": TransformSpec(1.0, True),
}


def _basic(fn_id, name, category, note, kernel, rotate=True):
    base = KERNEL_TRANSFORMS[kernel]
    spec = base if rotate else TransformSpec(
        base.scale, False, base.pre_offset, base.post_offset
    )
    return FunctionInfo(fn_id, name, category, note, transform=spec)


_EASY = "optimum easy to track"
_HARD = "optimum hard to track"
_GLOBAL = "adequate global structure"
_WEAK = "weak global structure"
_HYBRID_NOTE = "different properties for different variable subcomponents"
_COMPOSITION_NOTE = "properties of the nearest member dominate near its optimum"

FUNCTIONS: tuple[FunctionInfo, ...] = (
    _basic(0, "SPHERE", Category.UNIMODAL, _EASY, "sphere"),
    _basic(1, "ELLIPSOID", Category.UNIMODAL, _EASY, "ellipsoid"),
    _basic(2, "ELLIPTIC", Category.UNIMODAL, _HARD, "elliptic"),
    _basic(3, "DISCUS", Category.UNIMODAL, _HARD, "discus"),
    _basic(4, "CIGAR", Category.UNIMODAL, _HARD, "cigar"),
    _basic(5, "POWERS", Category.UNIMODAL, _HARD, "powers"),
    _basic(6, "SHARPV", Category.UNIMODAL, _HARD, "sharp_valley"),
    _basic(7, "STEP", Category.BASIC_MULTIMODAL, _GLOBAL, "step"),
    _basic(8, "WEIERSTRASS", Category.BASIC_MULTIMODAL, _GLOBAL, "weierstrass"),
    _basic(9, "GRIEWANK", Category.BASIC_MULTIMODAL, _GLOBAL, "griewank"),
    _basic(10, "RARSTRIGIN_U", Category.BASIC_MULTIMODAL, _GLOBAL, "rastrigin", rotate=False),
    _basic(11, "RARSTRIGIN", Category.BASIC_MULTIMODAL, _GLOBAL, "rastrigin"),
    _basic(12, "SCHAFFERSF7", Category.BASIC_MULTIMODAL, _GLOBAL, "schaffers_f7"),
    _basic(13, "GRIE_ROSEN", Category.BASIC_MULTIMODAL, _GLOBAL, "grie_rosen"),
    _basic(14, "ROSENBROCK", Category.BASIC_MULTIMODAL, _WEAK, "rosenbrock"),
    _basic(15, "SCHWEFEL_U", Category.BASIC_MULTIMODAL, _WEAK, "schwefel", rotate=False),
    _basic(16, "SCHWEFEL", Category.BASIC_MULTIMODAL, _WEAK, "schwefel"),
    _basic(17, "KATSUURA", Category.BASIC_MULTIMODAL, _WEAK, "katsuura"),
    _basic(18, "LUNACEK", Category.BASIC_MULTIMODAL, _WEAK, "lunacek"),
    _basic(19, "ACKLEY", Category.BASIC_MULTIMODAL, _WEAK, "ackley"),
    _basic(20, "HAPPYCAT", Category.BASIC_MULTIMODAL, _WEAK, "happycat"),
    _basic(21, "HGBAT", Category.BASIC_MULTIMODAL, _WEAK, "hgbat"),
    _basic(22, "SCHAFFERSF6", Category.BASIC_MULTIMODAL, _WEAK, "schaffers_f6"),
    FunctionInfo(23, "HYBRID1", Category.HYBRID, _HYBRID_NOTE, hybrid=HybridRecipe(
        (0.3, 0.3, 0.4), ("schwefel", "rastrigin", "elliptic"))),
    FunctionInfo(24, "HYBRID2", Category.HYBRID, _HYBRID_NOTE, hybrid=HybridRecipe(
        (0.3, 0.3, 0.4), ("cigar", "hgbat", "rastrigin"))),
    FunctionInfo(25, "HYBRID3", Category.HYBRID, _HYBRID_NOTE, hybrid=HybridRecipe(
        (0.2, 0.2, 0.3, 0.3), ("griewank", "weierstrass", "rosenbrock", "schaffers_f6"))),
    FunctionInfo(26, "HYBRID4", Category.HYBRID, _HYBRID_NOTE, hybrid=HybridRecipe(
        (0.2, 0.2, 0.3, 0.3), ("hgbat", "discus", "grie_rosen", "rastrigin"))),
    FunctionInfo(27, "HYBRID5", Category.HYBRID, _HYBRID_NOTE, hybrid=HybridRecipe(
        (0.1, 0.2, 0.2, 0.2, 0.3),
        ("schaffers_f6", "hgbat", "rosenbrock", "schwefel", "elliptic"))),
    FunctionInfo(28, "HYBRID6", Category.HYBRID, _HYBRID_NOTE, hybrid=HybridRecipe(
        (0.1, 0.2, 0.2, 0.2, 0.3),
        ("katsuura", "happycat", "grie_rosen", "schwefel", "ackley"))),
    FunctionInfo(29, "COMPOSITION1", Category.COMPOSITION, _COMPOSITION_NOTE,
                 composition=CompositionRecipe(
                     (10.0, 20.0, 30.0, 40.0, 50.0),
                     (1e-10, 1e-6, 1e-26, 1e-6, 1e-6),
                     (0.0, 100.0, 200.0, 300.0, 400.0),
                     kernels=("rosenbrock", "elliptic", "cigar", "discus", "elliptic"))),
    FunctionInfo(30, "COMPOSITION2", Category.COMPOSITION, _COMPOSITION_NOTE,
                 composition=CompositionRecipe(
                     (15.0, 15.0, 15.0),
                     (1.0, 1.0, 1.0),
                     (0.0, 100.0, 200.0),
                     kernels=("schwefel", "rastrigin", "hgbat"))),
    FunctionInfo(31, "COMPOSITION3", Category.COMPOSITION, _COMPOSITION_NOTE,
                 composition=CompositionRecipe(
                     (20.0, 50.0, 40.0),
                     (0.25, 1.0, 1e-7),
                     (0.0, 100.0, 200.0),
                     kernels=("schwefel", "rastrigin", "elliptic"))),
    FunctionInfo(32, "COMPOSITION4", Category.COMPOSITION, _COMPOSITION_NOTE,
                 composition=CompositionRecipe(
                     (20.0, 15.0, 10.0, 10.0, 40.0),
                     (2.5e-2, 0.1, 1e-8, 0.25, 1.0),
                     (0.0, 100.0, 200.0, 300.0, 400.0),
                     kernels=("schwefel", "happycat", "elliptic", "weierstrass", "griewank"))),
    # Members keyed by their index in the source listing, which enumerates
    # them out of order; position k here always pairs with sigma/height k.
    FunctionInfo(33, "COMPOSITION5", Category.COMPOSITION, _COMPOSITION_NOTE,
                 composition=CompositionRecipe(
                     (15.0, 15.0, 15.0, 15.0, 15.0),
                     (10.0, 10.0, 2.5, 2.5, 1e-6),
                     (0.0, 100.0, 200.0, 300.0, 400.0),
                     kernels=("hgbat", "rastrigin", "elliptic", "weierstrass", "schwefel"))),
    FunctionInfo(34, "COMPOSITION6", Category.COMPOSITION, _COMPOSITION_NOTE,
                 composition=CompositionRecipe(
                     (10.0, 20.0, 30.0, 40.0, 50.0),
                     (2.5, 10.0, 2.5, 5e-4, 1e-6),
                     (0.0, 100.0, 200.0, 300.0, 400.0),
                     kernels=("grie_rosen", "happycat", "schwefel", "schaffers_f6", "elliptic"))),
    FunctionInfo(35, "COMPOSITION7", Category.COMPOSITION, _COMPOSITION_NOTE,
                 composition=CompositionRecipe(
                     (10.0, 30.0, 50.0),
                     (1.0, 1.0, 1.0),
                     (0.0, 100.0, 200.0),
                     hybrid_ids=(23, 24, 25))),
    FunctionInfo(36, "COMPOSITION8", Category.COMPOSITION, _COMPOSITION_NOTE,
                 composition=CompositionRecipe(
                     (10.0, 30.0, 50.0),
                     (1.0, 1.0, 1.0),
                     (0.0, 100.0, 200.0),
                     hybrid_ids=(26, 27, 28))),
)

# Kernel behind each basic function id (ids 10/11 and 15/16 share kernels).
BASIC_KERNELS: dict[int, str] = {
    0: "sphere", 1: "ellipsoid", 2: "elliptic", 3: "discus", 4: "cigar",
    5: "powers", 6: "sharp_valley", 7: "step", 8: "weierstrass", 9: "griewank",
    10: "rastrigin", 11: "rastrigin", 12: "schaffers_f7", 13: "grie_rosen",
    14: "rosenbrock", 15: "schwefel", 16: "schwefel", 17: "katsuura",
    18: "lunacek", 19: "ackley", 20: "happycat", 21: "hgbat", 22: "schaffers_f6",
}


def lookup(fn_id: int) -> FunctionInfo:
    """Return the catalog row for `fn_id`; raises UnknownFunction outside 0..36."""
    fn_id = int(fn_id)
    if not 0 <= fn_id < FUNCTION_COUNT:
        raise UnknownFunction(f"function id {fn_id} is not in 0..{FUNCTION_COUNT - 1}")
    return FUNCTIONS[fn_id]


def min_dimension(fn_id: int) -> int:
    """Smallest dimension at which `fn_id` is defined."""
    info = lookup(fn_id)
    if info.category in (Category.HYBRID, Category.COMPOSITION):
        return MIN_CONSTRUCTED_DIMENSION
    return MIN_DIMENSION
