"""Text persistence round trips and validation gates."""

import numpy as np
import pytest

from robench import CorruptInstance, ParseError, PointBatch, generate_instance
from robench.fileio import (
    load_instance,
    read_grid,
    read_points,
    read_values,
    store_instance,
    write_grid,
    write_points,
    write_values,
)


@pytest.mark.parametrize("fn_id", [0, 10, 16, 18, 23, 27, 29, 35])
def test_instance_round_trip(fn_id, tmp_path):
    inst = generate_instance(fn_id, 10, 42)
    path = tmp_path / "inst.txt"
    store_instance(inst, path)
    loaded = load_instance(path)
    assert loaded.identical(inst)


def test_instance_files_platform_stable(tmp_path):
    inst = generate_instance(0, 10, 42)
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    store_instance(inst, a)
    store_instance(generate_instance(0, 10, 42), b)
    assert a.read_bytes() == b.read_bytes()


def test_truncated_instance(tmp_path):
    inst = generate_instance(0, 10, 42)
    path = tmp_path / "inst.txt"
    store_instance(inst, path)
    text = path.read_text().splitlines()
    path.write_text("\n".join(text[:8]))
    with pytest.raises(ParseError):
        load_instance(path)


def test_bad_header(tmp_path):
    path = tmp_path / "inst.txt"
    path.write_text("something-else 1\nfn 0\n")
    with pytest.raises(ParseError):
        load_instance(path)
    path.write_text("robench-instance 999\nfn 0\n")
    with pytest.raises(ParseError):
        load_instance(path)


def test_perturbed_rotation_rejected(tmp_path):
    inst = generate_instance(0, 10, 42)
    path = tmp_path / "inst.txt"
    store_instance(inst, path)
    lines = path.read_text().splitlines()
    row_idx = lines.index("block 0") + 1
    row = lines[row_idx].split()
    row[0] = repr(float(row[0]) + 1e-3)
    lines[row_idx] = " ".join(row)
    path.write_text("\n".join(lines) + "\n")
    with pytest.raises(CorruptInstance):
        load_instance(path)


def test_broken_permutation_rejected(tmp_path):
    inst = generate_instance(0, 10, 42)
    path = tmp_path / "inst.txt"
    store_instance(inst, path)
    lines = path.read_text().splitlines()
    perm_idx = next(i for i, ln in enumerate(lines) if ln.startswith("perm"))
    parts = lines[perm_idx].split()
    parts[1] = parts[2]  # duplicate entry: no longer a bijection
    lines[perm_idx] = " ".join(parts)
    path.write_text("\n".join(lines) + "\n")
    with pytest.raises(CorruptInstance):
        load_instance(path)


def test_points_round_trip(tmp_path):
    rng = np.random.default_rng(0)
    batch = PointBatch(rng.uniform(-100, 100, (7, 5)))
    path = tmp_path / "points.txt"
    write_points(batch, path)
    back = read_points(path, 5)
    assert np.array_equal(back.data, batch.data)


def test_points_shape_checks(tmp_path):
    path = tmp_path / "points.txt"
    path.write_text("1 2 3\n4 5\n")
    with pytest.raises(ParseError):
        read_points(path, 3)
    path.write_text("1 2 x\n")
    with pytest.raises(ParseError):
        read_points(path, 3)
    path.write_text("\n")
    with pytest.raises(ParseError):
        read_points(path, 3)
    path.write_text("1 2 3\n4 5 6\n7 8 9\n")
    assert read_points(path, 3).count == 3


def test_values_round_trip_exact(tmp_path):
    rng = np.random.default_rng(1)
    # adversarial decimals plus random doubles over a wide exponent range
    values = np.concatenate([
        np.array([0.1, 1.0 / 3.0, 1e-300, 1e300, -0.0, 2.5]),
        rng.uniform(-1e6, 1e6, 50),
        rng.standard_normal(50) * 10.0 ** rng.integers(-10, 10, 50),
    ])
    path = tmp_path / "values.txt"
    write_values(values, path)
    assert np.array_equal(read_values(path), values)


def test_single_precision_values_round_trip(tmp_path):
    rng = np.random.default_rng(2)
    values = rng.uniform(-1e6, 1e6, 100).astype(np.float32)
    path = tmp_path / "values.txt"
    write_values(values, path)
    back = read_values(path, precision="single")
    assert back.dtype == np.float32
    assert np.array_equal(back, values)


def test_grid_round_trip(tmp_path):
    rng = np.random.default_rng(3)
    values = rng.uniform(0, 1e4, (11, 11))
    path = tmp_path / "grid.txt"
    write_grid(path, 7, 3, -100.0, 100.0, values)
    fn_id, seed, lo, hi, back = read_grid(path)
    assert (fn_id, seed, lo, hi) == (7, 3, -100.0, 100.0)
    assert np.array_equal(back, values)
