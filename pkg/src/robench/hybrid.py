"""Construction and evaluation of the six hybrid functions.

A hybrid shifts the input, shuffles the coordinates, splits them into
subcomponents by fixed percentages and feeds each subcomponent - scaled and
rotated on its own - to a different basic kernel; the subcomponent values are
summed.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from . import catalog, kernels, transforms
from .errors import DimensionMismatch, DimensionTooSmall


def subcomponent_sizes(fractions: tuple[float, ...], dim: int) -> tuple[int, ...]:
    """Subcomponent dimensions: n_i = ceil(p_i * dim), remainder to the last.

    The fractions are exact tenths, so the ceilings are computed in integer
    arithmetic (float rounding would misplace exact multiples, e.g. 0.1 * 30).
    When the remainder would leave the last subcomponent empty (dim 11 with
    five members), the largest earlier subcomponent gives up coordinates so
    every member keeps at least one.
    """
    tenths = [round(p * 10) for p in fractions]
    sizes = [-(-t * dim // 10) for t in tenths[:-1]]
    last = dim - sum(sizes)
    while last < 1:
        k = sizes.index(max(sizes))
        if sizes[k] <= 1:
            raise DimensionTooSmall(
                f"dimension {dim} cannot hold {len(fractions)} subcomponents"
            )
        sizes[k] -= 1
        last += 1
    return (*sizes, last)


@dataclass(frozen=True)
class HybridSpec:
    """Everything needed to evaluate one hybrid function."""

    fn_id: int
    dim: int
    seed: int
    fractions: tuple[float, ...]
    kernels: tuple[str, ...]
    sizes: tuple[int, ...]
    x_opt: np.ndarray
    split_perm: np.ndarray
    chunk_rotations: tuple[np.ndarray, ...]

    @property
    def size(self) -> int:
        return len(self.kernels)

    def astype(self, dtype) -> "HybridSpec":
        """Copy with all float data cast to `dtype` (for the single-precision
        evaluation path)."""
        if self.x_opt.dtype == dtype:
            return self
        return replace(
            self,
            x_opt=self.x_opt.astype(dtype),
            chunk_rotations=tuple(r.astype(dtype) for r in self.chunk_rotations),
        )


def build_hybrid(fn_id: int, dim: int, seed: int) -> HybridSpec:
    """Populate the spec for hybrid ids 23..28 from the fixed recipes."""
    info = catalog.lookup(fn_id)
    if info.hybrid is None:
        raise ValueError(f"function {fn_id} is not a hybrid")
    if dim < catalog.MIN_CONSTRUCTED_DIMENSION:
        raise DimensionTooSmall(
            f"hybrid functions need dimension >= {catalog.MIN_CONSTRUCTED_DIMENSION}, got {dim}"
        )
    return _build(fn_id, dim, seed, recipe=info.hybrid, stream_fn=fn_id, ns=(),
                  x_opt=transforms.shift_vector(fn_id, dim, seed))


def _build(fn_id, dim, seed, recipe, stream_fn, ns, x_opt) -> HybridSpec:
    """Shared builder; composition members reuse it with their own stream
    namespace and optimum."""
    sizes = subcomponent_sizes(recipe.fractions, dim)
    split = transforms.split_permutation(stream_fn, dim, seed, ns)
    chunks = tuple(
        transforms.chunk_rotation(stream_fn, dim, seed, k, size, ns)
        for k, size in enumerate(sizes)
    )
    return HybridSpec(fn_id, dim, seed, recipe.fractions, recipe.kernels,
                      sizes, x_opt, split, chunks)


def eval_hybrid(spec: HybridSpec, x: np.ndarray):
    """Hybrid value at `x`, excluding the suite bias."""
    x = np.asarray(x)
    if x.shape != (spec.dim,):
        raise DimensionMismatch(f"expected a vector of length {spec.dim}, got {x.shape}")
    shuffled = (x - spec.x_opt)[spec.split_perm]
    total = x.dtype.type(0)
    offset = 0
    for name, size, rot in zip(spec.kernels, spec.sizes, spec.chunk_rotations):
        t = catalog.KERNEL_TRANSFORMS[name]
        v = t.scale * shuffled[offset:offset + size]
        if t.pre_offset:
            v = v + t.pre_offset
        z = transforms.matvec(rot, v)
        if t.post_offset:
            z = z + t.post_offset
        total = total + kernels.KERNELS[name](z)
        offset += size
    return total
