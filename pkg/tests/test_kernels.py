"""Kernel values: exact pinned cases, oracle comparisons, shared properties."""

import math

import numpy as np
import pytest

from robench import NonFiniteInput
from robench.kernels import (
    KERNELS,
    ackley,
    cigar,
    discus,
    ellipsoid,
    elliptic,
    grie_rosen,
    griewank,
    griewank_1d,
    happycat,
    hgbat,
    katsuura,
    lunacek,
    powers,
    rastrigin,
    rosenbrock,
    rosenbrock_pair,
    schaffer_f6_pair,
    schaffers_f6,
    schaffers_f7,
    schwefel,
    schwefel_g1,
    sharp_valley,
    sphere,
    step,
    weierstrass,
)
from reference import REF_KERNELS

RNG = np.random.default_rng(2024)


def test_pinned_values():
    assert sphere(np.array([3.0, 4.0])) == 25.0
    assert ellipsoid(np.array([1.0, 1.0])) == 3.0
    assert elliptic(np.array([1.0, 1.0])) == 1_000_001.0
    assert discus(np.array([1.0, 1.0])) == 1_000_001.0
    assert cigar(np.array([1.0, 1.0])) == 1_000_001.0
    assert powers(np.array([1.0, -1.0])) == pytest.approx(math.sqrt(2.0), rel=1e-15)
    assert sharp_valley(np.array([1.0, 2.0])) == 201.0
    assert step(np.array([0.4, -0.6])) == 1.0
    assert rastrigin(np.array([0.5])) == pytest.approx(20.25, rel=1e-15)
    assert rosenbrock(np.ones(5)) == 0.0
    assert rosenbrock(np.zeros(2)) == 1.0
    assert hgbat(np.array([1.0, 0.0])) == pytest.approx(1.25, rel=1e-15)
    assert happycat(np.array([0.0])) == pytest.approx(1.5, rel=1e-15)
    assert lunacek(np.array([-2.5, -2.5])) == pytest.approx(2.0, abs=1e-12)
    assert ackley(np.array([0.5])) == pytest.approx(
        -20.0 * math.exp(-0.1) - math.exp(-1.0) + 20.0 + math.e, rel=1e-15)
    assert griewank(np.array([100.0, 0.0])) == pytest.approx(
        2.5 - math.cos(100.0) + 1.0, rel=1e-15)


def test_pair_helpers():
    assert rosenbrock_pair(1.0, 1.0) == 0.0
    assert rosenbrock_pair(0.0, 0.0) == 1.0
    assert rosenbrock_pair(2.0, 1.0) == 901.0
    assert griewank_1d(0.0) == 0.0
    assert griewank_1d(math.pi) == pytest.approx(math.pi**2 / 4000.0 + 2.0, rel=1e-15)
    assert schaffer_f6_pair(0.0, 0.0) == 0.0
    x = math.pi / 2.0
    assert schaffer_f6_pair(x, 0.0) == pytest.approx(
        (math.sin(x) ** 2 - 0.5) / (1.0 + 0.001 * x * x) ** 2 + 0.5, rel=1e-15)


def test_expanded_chains():
    assert grie_rosen(np.ones(7)) == 0.0
    # both cyclic pair terms reduce to the unit griewank of 1
    assert grie_rosen(np.zeros(2)) == pytest.approx(2.0 * griewank_1d(1.0), rel=1e-15)
    assert schaffers_f6(np.zeros(6)) == 0.0
    assert schaffers_f6(np.array([1.0, 0.0])) == pytest.approx(
        2.0 * schaffer_f6_pair(1.0, 0.0), rel=1e-15)


def test_schwefel_g1():
    # the per-term value at the canonical minimizer matches the published
    # per-dimension constant to its printed precision
    assert schwefel_g1(420.9687462275036, 10) == pytest.approx(418.9829, abs=1e-4)
    assert schwefel_g1(0.0, 10) == 0.0
    # branch continuity at the +500 edge
    inside = schwefel_g1(500.0, 10)
    outside = schwefel_g1(500.0 + 1e-9, 10)
    assert inside == pytest.approx(outside, abs=1e-5)
    # second branch evaluated by hand: bmod(600, 500) = 100
    assert schwefel_g1(600.0, 10) == pytest.approx(
        400.0 * math.sin(math.sqrt(400.0)) - 100.0**2 / (10000.0 * 10), rel=1e-12)
    # negative branch mirrors through the floored modulo
    w = -730.0
    m = -w % 500.0
    assert schwefel_g1(w, 4) == pytest.approx(
        (m - 500.0) * math.sin(math.sqrt(500.0 - m)) - (w + 500.0) ** 2 / 40000.0,
        rel=1e-12)


def test_schwefel_residual_at_origin():
    for d in (2, 10, 96):
        assert abs(schwefel(np.zeros(d))) <= 3e-4 * d


ZERO_AT_ORIGIN = ["sphere", "ellipsoid", "elliptic", "discus", "cigar", "powers",
                  "sharp_valley", "step", "weierstrass", "griewank", "rastrigin",
                  "schaffers_f7", "katsuura", "ackley", "schaffers_f6"]


@pytest.mark.parametrize("name", ZERO_AT_ORIGIN)
def test_zero_at_canonical_origin(name):
    assert abs(KERNELS[name](np.zeros(10))) < 1e-12


def test_zero_at_shifted_optima():
    assert rosenbrock(np.ones(10)) == 0.0
    assert grie_rosen(np.ones(10)) == 0.0
    assert happycat(-np.ones(10)) == 0.0
    assert hgbat(-np.ones(10)) == 0.0
    assert lunacek(np.full(10, 2.5)) == 0.0
    assert weierstrass(np.zeros(10)) == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize("name", sorted(KERNELS))
def test_matches_scalar_reference(name):
    for d in (2, 3, 10, 33):
        z = RNG.uniform(-8.0, 8.0, d)
        got = float(KERNELS[name](z))
        want = REF_KERNELS[name](z.tolist())
        assert got == pytest.approx(want, rel=1e-11, abs=1e-11)


@pytest.mark.parametrize("name", sorted(KERNELS))
def test_rejects_non_finite(name):
    z = np.ones(10)
    z[3] = np.nan
    with pytest.raises(NonFiniteInput):
        KERNELS[name](z)
    z[3] = np.inf
    with pytest.raises(NonFiniteInput):
        KERNELS[name](z)


SYMMETRIC = ["sphere", "rastrigin", "ackley", "happycat", "hgbat"]


@pytest.mark.parametrize("name", SYMMETRIC)
def test_permutation_symmetry(name):
    fn = KERNELS[name]
    for trial in range(5):
        z = RNG.uniform(-5.0, 5.0, 12)
        p = RNG.permutation(12)
        assert float(fn(z)) == pytest.approx(float(fn(z[p])), rel=1e-12)


NON_NEGATIVE = ["sphere", "ellipsoid", "elliptic", "discus", "cigar", "powers",
                "sharp_valley", "step", "griewank", "rastrigin", "schaffers_f7",
                "grie_rosen", "rosenbrock", "katsuura", "ackley", "schaffers_f6",
                "weierstrass"]


@pytest.mark.parametrize("name", NON_NEGATIVE)
def test_non_negative(name):
    fn = KERNELS[name]
    for trial in range(20):
        z = RNG.uniform(-30.0, 30.0, 8)
        assert float(fn(z)) >= -1e-9


@pytest.mark.parametrize("name", sorted(KERNELS))
def test_single_precision_tracks_double(name):
    tol = 1e-2 if name in ("katsuura", "weierstrass") else 1e-3
    rng = np.random.default_rng(7)
    for trial in range(20):
        z64 = rng.uniform(-50.0, 50.0, 10)
        v64 = float(KERNELS[name](z64))
        v32 = float(KERNELS[name](z64.astype(np.float32)))
        assert abs(v32 - v64) <= tol * max(abs(v64), 1.0)


@pytest.mark.parametrize("name", sorted(KERNELS))
def test_dtype_preserved(name):
    z = np.linspace(-1.0, 1.0, 8, dtype=np.float32)
    assert KERNELS[name](z).dtype == np.float32
    assert KERNELS[name](z.astype(np.float64)).dtype == np.float64
