"""Engine lifecycle, batch semantics, determinism and precision paths."""

import gc
import weakref

import numpy as np
import pytest

from robench import (
    BatchTooLarge,
    DimensionMismatch,
    DimensionTooSmall,
    DisabledFunction,
    EngineConfig,
    NonFiniteInput,
    PointBatch,
    UnknownFunction,
    UseAfterDispose,
    generate_instance,
    initialize,
)
from reference import basic_value


@pytest.fixture(scope="module")
def engine10():
    return initialize(EngineConfig(dim=10, max_concurrency=50, seed=1))


def test_all_ids_enabled_at_dim_10(engine10):
    assert engine10.enabled_ids == tuple(range(37))
    assert engine10.disabled_ids == frozenset()


def test_constructed_ids_disabled_at_dim_2():
    engine = initialize(EngineConfig(dim=2, seed=1))
    assert engine.enabled_ids == tuple(range(23))
    assert engine.disabled_ids == frozenset(range(23, 37))
    with pytest.raises(DisabledFunction):
        engine.evaluate(23, PointBatch(np.zeros((1, 2))))
    engine.dispose()


def test_sphere_at_optimum_is_exactly_bias(engine10):
    inst = generate_instance(0, 10, 1)
    result = engine10.evaluate(0, PointBatch(inst.x_opt[None, :]))
    assert result.values[0] == 100.0


def test_engine_config_validation():
    with pytest.raises(DimensionTooSmall):
        EngineConfig(dim=1)
    with pytest.raises(ValueError):
        EngineConfig(dim=10, max_concurrency=0)
    with pytest.raises(ValueError):
        EngineConfig(dim=10, seed=-1)
    with pytest.raises(ValueError):
        EngineConfig(dim=10, precision="half")


def test_identical_configs_identical_results():
    a = initialize(EngineConfig(dim=10, seed=9))
    b = initialize(EngineConfig(dim=10, seed=9))
    x = np.random.default_rng(0).uniform(-100, 100, (8, 10))
    for fn in (0, 11, 23, 30):
        va = a.evaluate(fn, PointBatch(x)).values
        vb = b.evaluate(fn, PointBatch(x)).values
        assert np.array_equal(va, vb)
    a.dispose()
    b.dispose()


def test_batch_equals_single_point_calls():
    engine = initialize(EngineConfig(dim=32, max_concurrency=50, seed=2))
    x = np.random.default_rng(3).uniform(-100, 100, (50, 32))
    whole = engine.evaluate(14, PointBatch(x)).values
    for i in range(50):
        alone = engine.evaluate(14, PointBatch(x[i:i + 1])).values[0]
        assert alone == whole[i]  # bit identical, not approximately
    engine.dispose()


def test_threaded_evaluation_bit_identical():
    x = np.random.default_rng(4).uniform(-100, 100, (20, 10))
    seq = initialize(EngineConfig(dim=10, seed=5, threads=1))
    par = initialize(EngineConfig(dim=10, seed=5, threads=8))
    for fn in (0, 16, 25, 33):
        assert np.array_equal(seq.evaluate(fn, PointBatch(x)).values,
                              par.evaluate(fn, PointBatch(x)).values)
    seq.dispose()
    par.dispose()


def test_matches_scalar_reference(engine10):
    rng = np.random.default_rng(6)
    for fn in range(23):
        inst = generate_instance(fn, 10, 1)
        from robench.catalog import BASIC_KERNELS, lookup
        spec = lookup(fn).transform
        x = rng.uniform(-100, 100, (5, 10))
        got = engine10.evaluate(fn, PointBatch(x)).values
        for i in range(5):
            want = basic_value(BASIC_KERNELS[fn], x[i].tolist(), inst.x_opt.tolist(),
                               inst.rotation.tolist() if spec.rotate else None,
                               spec.rotate)
            assert got[i] == pytest.approx(want, rel=1e-9)


def test_batch_errors(engine10):
    with pytest.raises(BatchTooLarge):
        engine10.evaluate(0, PointBatch(np.zeros((51, 10))))
    with pytest.raises(DimensionMismatch):
        engine10.evaluate(0, PointBatch(np.zeros((2, 9))))
    with pytest.raises(UnknownFunction):
        engine10.evaluate(37, PointBatch(np.zeros((1, 10))))
    bad = np.zeros((2, 10))
    bad[1, 3] = np.inf
    with pytest.raises(NonFiniteInput):
        engine10.evaluate(0, PointBatch(bad))


def test_point_batch_validation():
    with pytest.raises(ValueError):
        PointBatch(np.zeros(10))  # not 2-D
    with pytest.raises(ValueError):
        PointBatch(np.zeros((0, 10)))
    batch = PointBatch(np.zeros((3, 10), dtype=np.float32))
    assert batch.count == 3 and batch.dim == 10 and batch.precision == "single"


def test_single_precision_path():
    engine = initialize(EngineConfig(dim=10, seed=7))
    x = np.random.default_rng(8).uniform(-100, 100, (10, 10))
    for fn in (0, 9, 24, 31):
        double = engine.evaluate(fn, PointBatch(x)).values
        single = engine.evaluate_single_precision(fn, PointBatch(x)).values
        assert single.dtype == np.float32
        assert double.dtype == np.float64
        assert np.allclose(single.astype(np.float64), double, rtol=1e-3)
    engine.dispose()


def test_precision_default_from_config():
    engine = initialize(EngineConfig(dim=10, seed=7, precision="single"))
    values = engine.evaluate(0, PointBatch(np.zeros((1, 10)))).values
    assert values.dtype == np.float32
    engine.dispose()


def test_dispose_semantics():
    engine = initialize(EngineConfig(dim=10, seed=1))
    engine.dispose()
    engine.dispose()  # double dispose is a no-op
    with pytest.raises(UseAfterDispose):
        engine.evaluate(0, PointBatch(np.zeros((1, 10))))


def test_dispose_releases_instance_data():
    refs = []
    for _ in range(20):
        engine = initialize(EngineConfig(dim=10, seed=1))
        refs.append(weakref.ref(engine._evaluators[(0, "double")]))
        engine.dispose()
    del engine
    gc.collect()
    assert all(r() is None for r in refs)
