"""Deterministic per-instance random data and the input transform pipeline.

Every random datum (shift vector, rotation blocks, permutations, member
optima) is drawn from its own counter-based stream keyed on
(seed, function id, dimension, purpose), so regeneration is bit-identical on
any platform with the same numpy and each datum is independent of the others.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil

import numpy as np

from . import catalog
from .catalog import Category, TransformSpec
from .errors import DimensionMismatch, DimensionTooSmall, RankDeficiency

# Stream purpose tags (part of the RNG key, never reuse values).
_SHIFT = 1
_GROUPING = 2
_BLOCK = 3
_SPLIT = 4
_CHUNK = 5
_MEMBER = 6

# Residual below which an orthonormalization column counts as dependent.
_RANK_EPS = 1e-12

# Redraws allowed before giving up on a degenerate random matrix (standard
# normal square matrices are singular with probability zero; this bound only
# guards against a broken bit generator).
_MAX_REDRAWS = 100


def _rng(seed: int, fn_id: int, dim: int, *tags: int) -> np.random.Generator:
    entropy = (int(seed), int(fn_id), int(dim)) + tuple(int(t) for t in tags)
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(entropy)))


def matvec(matrix: np.ndarray, vector: np.ndarray) -> np.ndarray:
    """Matrix-vector product with a fixed, BLAS-free reduction order.

    Used on every evaluation path so results are bit-stable across batch
    compositions, thread counts and processes.
    """
    return (matrix * vector).sum(axis=1)


def gram_schmidt(raw: np.ndarray) -> np.ndarray:
    """Orthonormalize the columns of a square matrix.

    Modified Gram-Schmidt with one re-orthogonalization pass; plain MGS loses
    orthogonality noticeably by n ~ 100.  Raises RankDeficiency when a
    column's residual collapses, which callers treat as a resample signal.
    """
    raw = np.asarray(raw, dtype=np.float64)
    if raw.ndim != 2 or raw.shape[0] != raw.shape[1]:
        raise ValueError("expected a square matrix")
    n = raw.shape[0]
    q = raw.copy()
    for j in range(n):
        v = q[:, j]
        for _ in range(2):
            for i in range(j):
                v -= (q[:, i] @ v) * q[:, i]
        norm = np.linalg.norm(v)
        if norm < _RANK_EPS:
            raise RankDeficiency(f"column {j} is numerically dependent")
        q[:, j] = v / norm
    return q


def random_orthogonal(rng: np.random.Generator, n: int) -> np.ndarray:
    """Orthonormalized standard-normal matrix, redrawing on rank collapse."""
    for _ in range(_MAX_REDRAWS):
        try:
            return gram_schmidt(rng.standard_normal((n, n)))
        except RankDeficiency:
            continue
    raise RankDeficiency(f"no full-rank draw in {_MAX_REDRAWS} attempts")


def fisher_yates(rng: np.random.Generator, n: int) -> np.ndarray:
    """Uniform random permutation of 0..n-1."""
    idx = np.arange(n, dtype=np.int64)
    for i in range(n - 1, 0, -1):
        j = int(rng.integers(0, i + 1))
        idx[i], idx[j] = idx[j], idx[i]
    return idx


def rotation_block_sizes(dim: int) -> tuple[int, ...]:
    """Ceiling split of the coordinates into three almost equal groups.

    Empty groups (possible only at dim 2) are dropped.
    """
    first = ceil(dim / 3)
    second = ceil((dim - first) / 2)
    sizes = (first, second, dim - first - second)
    return tuple(s for s in sizes if s > 0)


def shift_vector(fn_id: int, dim: int, seed: int, ns: tuple[int, ...] = ()) -> np.ndarray:
    lo, hi = catalog.SHIFT_DOMAIN
    return _rng(seed, fn_id, dim, *ns, _SHIFT).uniform(lo, hi, dim)


def grouped_rotation(fn_id: int, dim: int, seed: int, ns: tuple[int, ...] = ()):
    """(grouping permutation, orthogonal blocks, dense D x D rotation).

    Coordinates are shuffled into the groups and each group is rotated by its
    block, i.e. the dense matrix is block-diagonal in the permuted basis.
    """
    perm = fisher_yates(_rng(seed, fn_id, dim, *ns, _GROUPING), dim)
    sizes = rotation_block_sizes(dim)
    blocks = tuple(
        random_orthogonal(_rng(seed, fn_id, dim, *ns, _BLOCK, k), size)
        for k, size in enumerate(sizes)
    )
    dense = np.zeros((dim, dim))
    offset = 0
    for block in blocks:
        idx = perm[offset:offset + block.shape[0]]
        dense[np.ix_(idx, idx)] = block
        offset += block.shape[0]
    return perm, blocks, dense


def split_permutation(fn_id: int, dim: int, seed: int, ns: tuple[int, ...] = ()) -> np.ndarray:
    """Variable split permutation for hybrid construction (independent of the
    rotation grouping permutation)."""
    return fisher_yates(_rng(seed, fn_id, dim, *ns, _SPLIT), dim)


def chunk_rotation(fn_id: int, dim: int, seed: int, index: int, size: int,
                   ns: tuple[int, ...] = ()) -> np.ndarray:
    """Full orthogonal rotation for one hybrid subcomponent."""
    return random_orthogonal(_rng(seed, fn_id, dim, *ns, _CHUNK, index), size)


def member_optimum(fn_id: int, dim: int, seed: int, index: int) -> np.ndarray:
    """Optimum position of one composition member.

    The third member's optimum is pinned to the origin to expose optimizers
    that drift toward the search center.
    """
    if index == 2:
        return np.zeros(dim)
    lo, hi = catalog.SHIFT_DOMAIN
    return _rng(seed, fn_id, dim, _MEMBER, index, _SHIFT).uniform(lo, hi, dim)


@dataclass(frozen=True, eq=False)
class Instance:
    """Realized random data of one concrete function.

    Which optional fields are populated depends on the category: basic
    functions carry the grouped rotation, hybrids carry the split permutation
    and per-chunk rotations, compositions carry the member optima.
    """

    fn_id: int
    dim: int
    seed: int
    x_opt: np.ndarray
    group_perm: np.ndarray | None = None
    blocks: tuple[np.ndarray, ...] | None = None
    rotation: np.ndarray | None = None
    split_perm: np.ndarray | None = None
    chunk_rotations: tuple[np.ndarray, ...] | None = None
    member_optima: tuple[np.ndarray, ...] | None = None

    def identical(self, other: "Instance") -> bool:
        """Bit-exact equality, used by round-trip and determinism checks."""
        if (self.fn_id, self.dim, self.seed) != (other.fn_id, other.dim, other.seed):
            return False

        def eq(a, b):
            if a is None or b is None:
                return a is None and b is None
            if isinstance(a, tuple):
                return (isinstance(b, tuple) and len(a) == len(b)
                        and all(np.array_equal(x, y) for x, y in zip(a, b)))
            return np.array_equal(a, b)

        return all(
            eq(getattr(self, f), getattr(other, f))
            for f in ("x_opt", "group_perm", "blocks", "rotation",
                      "split_perm", "chunk_rotations", "member_optima")
        )


def _check_dim(fn_id: int, dim: int) -> catalog.FunctionInfo:
    info = catalog.lookup(fn_id)
    least = catalog.min_dimension(fn_id)
    if dim < least:
        raise DimensionTooSmall(f"{info.name} needs dimension >= {least}, got {dim}")
    return info


def generate_instance(fn_id: int, dim: int, seed: int) -> Instance:
    """Build the full instance for (function, dimension, seed).

    Pure: the same arguments always produce bit-identical data.
    """
    info = _check_dim(fn_id, dim)
    x_opt = shift_vector(fn_id, dim, seed)

    if info.category in (Category.UNIMODAL, Category.BASIC_MULTIMODAL):
        perm, blocks, dense = grouped_rotation(fn_id, dim, seed)
        return Instance(fn_id, dim, seed, x_opt,
                        group_perm=perm, blocks=blocks, rotation=dense)

    if info.category is Category.HYBRID:
        from .hybrid import subcomponent_sizes  # local import, no cycle at module load

        sizes = subcomponent_sizes(info.hybrid.fractions, dim)
        split = split_permutation(fn_id, dim, seed)
        chunks = tuple(
            chunk_rotation(fn_id, dim, seed, k, size) for k, size in enumerate(sizes)
        )
        return Instance(fn_id, dim, seed, x_opt,
                        split_perm=split, chunk_rotations=chunks)

    optima = tuple(
        member_optimum(fn_id, dim, seed, k) for k in range(info.composition.size)
    )
    return Instance(fn_id, dim, seed, optima[0].copy(), member_optima=optima)


def apply_transform(x: np.ndarray, inst: Instance, spec: TransformSpec) -> np.ndarray:
    """z = R(scale*(x - x_opt) + pre) + post, with R dropped when spec.rotate
    is off."""
    x = np.asarray(x)
    if x.shape != (inst.dim,):
        raise DimensionMismatch(f"expected a vector of length {inst.dim}, got {x.shape}")
    v = spec.scale * (x - inst.x_opt)
    if spec.pre_offset:
        v = v + spec.pre_offset
    if spec.rotate:
        if inst.rotation is None:
            raise ValueError("instance carries no rotation matrix")
        v = matvec(np.asarray(inst.rotation, dtype=x.dtype), v)
    if spec.post_offset:
        v = v + spec.post_offset
    return v
