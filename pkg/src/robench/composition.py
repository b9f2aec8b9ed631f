"""Construction and evaluation of the eight composition functions.

A composition blends several shifted, rotated member functions: each member
contributes height * value + bias, weighted by a normalized inverse-distance
Gaussian of the point's distance to that member's optimum.  The member with
the zero bias holds the global optimum; the third member's optimum sits at
the origin.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from . import catalog, hybrid, kernels, transforms
from .catalog import MIN_CONSTRUCTED_DIMENSION
from .errors import DimensionMismatch, DimensionTooSmall

# Distance below which a point counts as sitting on a member optimum, making
# the weights the indicator of that member (the limit of the weight formula).
_OPTIMUM_EPS = 1e-12


@dataclass(frozen=True)
class Member:
    """One blended sub-function: a rotated basic kernel or a hybrid."""

    kernel: str | None
    hybrid_spec: hybrid.HybridSpec | None
    x_opt: np.ndarray
    rotation: np.ndarray | None

    def astype(self, dtype) -> "Member":
        if self.x_opt.dtype == dtype:
            return self
        return Member(
            self.kernel,
            None if self.hybrid_spec is None else self.hybrid_spec.astype(dtype),
            self.x_opt.astype(dtype),
            None if self.rotation is None else self.rotation.astype(dtype),
        )


@dataclass(frozen=True)
class CompositionSpec:
    fn_id: int
    dim: int
    seed: int
    sigma: np.ndarray
    heights: np.ndarray
    biases: np.ndarray
    members: tuple[Member, ...]

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def optima(self) -> tuple[np.ndarray, ...]:
        return tuple(m.x_opt for m in self.members)

    def astype(self, dtype) -> "CompositionSpec":
        if self.sigma.dtype == dtype:
            return self
        return replace(
            self,
            sigma=self.sigma.astype(dtype),
            heights=self.heights.astype(dtype),
            biases=self.biases.astype(dtype),
            members=tuple(m.astype(dtype) for m in self.members),
        )


def build_composition(fn_id: int, dim: int, seed: int) -> CompositionSpec:
    """Populate the spec for composition ids 29..36.

    Compositions built from basic kernels work from dimension 2 up (the 2-D
    landscape export relies on that); the two built from hybrids inherit the
    hybrids' minimum dimension of 10.
    """
    info = catalog.lookup(fn_id)
    recipe = info.composition
    if recipe is None:
        raise ValueError(f"function {fn_id} is not a composition")
    if dim < catalog.MIN_DIMENSION:
        raise DimensionTooSmall(f"dimension must be >= {catalog.MIN_DIMENSION}, got {dim}")
    if recipe.hybrid_ids is not None and dim < MIN_CONSTRUCTED_DIMENSION:
        raise DimensionTooSmall(
            f"function {fn_id} embeds hybrids and needs dimension >= {MIN_CONSTRUCTED_DIMENSION}"
        )

    members = []
    for k in range(recipe.size):
        x_opt = transforms.member_optimum(fn_id, dim, seed, k)
        if recipe.kernels is not None:
            _, _, dense = transforms.grouped_rotation(fn_id, dim, seed, ns=(k,))
            members.append(Member(recipe.kernels[k], None, x_opt, dense))
        else:
            sub = catalog.lookup(recipe.hybrid_ids[k])
            spec = hybrid._build(recipe.hybrid_ids[k], dim, seed, recipe=sub.hybrid,
                                 stream_fn=fn_id, ns=(k,), x_opt=x_opt)
            members.append(Member(None, spec, x_opt, None))

    return CompositionSpec(
        fn_id, dim, seed,
        np.asarray(recipe.sigma, dtype=np.float64),
        np.asarray(recipe.heights, dtype=np.float64),
        np.asarray(recipe.biases, dtype=np.float64),
        tuple(members),
    )


def composition_weights(x: np.ndarray, spec: CompositionSpec) -> np.ndarray:
    """Normalized member weights at `x`.

    On a member optimum the formula's 1/distance singularity resolves to the
    indicator of the nearest such member.  If every Gaussian underflows to
    zero (possible far outside the search domain) the weights fall back to
    uniform.
    """
    x = np.asarray(x)
    if x.shape != (spec.dim,):
        raise DimensionMismatch(f"expected a vector of length {spec.dim}, got {x.shape}")
    n = spec.size
    d2 = np.empty(n, dtype=x.dtype)
    for k, member in enumerate(spec.members):
        delta = x - member.x_opt
        d2[k] = np.sum(delta * delta)

    omega = np.zeros(n, dtype=x.dtype)
    if np.min(d2) < _OPTIMUM_EPS**2:
        omega[int(np.argmin(d2))] = 1
        return omega

    w = d2**-0.5 * np.exp(-d2 / (2.0 * spec.dim * spec.sigma**2))
    total = np.sum(w)
    if total == 0:
        omega[:] = 1.0 / n
        return omega
    return w / total


def _member_value(member: Member, x: np.ndarray):
    if member.hybrid_spec is not None:
        return hybrid.eval_hybrid(member.hybrid_spec, x)
    t = catalog.KERNEL_TRANSFORMS[member.kernel]
    v = t.scale * (x - member.x_opt)
    if t.pre_offset:
        v = v + t.pre_offset
    z = transforms.matvec(member.rotation, v)
    if t.post_offset:
        z = z + t.post_offset
    return kernels.KERNELS[member.kernel](z)


def eval_composition(spec: CompositionSpec, x: np.ndarray):
    """Composition value at `x`, excluding the suite bias."""
    x = np.asarray(x)
    omega = composition_weights(x, spec)
    total = x.dtype.type(0)
    for k, member in enumerate(spec.members):
        if omega[k] == 0:
            continue  # exact zero weight contributes exactly nothing
        total = total + omega[k] * (spec.heights[k] * _member_value(member, x) + spec.biases[k])
    return total
