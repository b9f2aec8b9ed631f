"""Text persistence for instances, point batches, values and landscape grids.

All formats are line-oriented decimal text rendered at full round-trip
precision (17 significant digits for double, 9 for single), so every file is
diffable, platform-independent and loads back bit-exactly.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from . import catalog
from .engine import PointBatch
from .errors import CorruptInstance, ParseError
from .transforms import Instance

INSTANCE_MAGIC = "robench-instance"
INSTANCE_VERSION = 1
GRID_MAGIC = "robench-grid"

# Orthonormality gate applied when loading rotation data.
_ORTHO_TOL = 1e-10


def _fmt(value: float, sig: int = 17) -> str:
    return f"{float(value):.{sig}g}"


def _fmt_vector(vec, sig: int = 17) -> str:
    return " ".join(_fmt(v, sig) for v in vec)


def _parse_floats(tokens, where: str) -> list[float]:
    try:
        return [float(t) for t in tokens]
    except ValueError as exc:
        raise ParseError(f"non-numeric token in {where}: {exc}") from None


class _LineReader:
    def __init__(self, text: str, where: str):
        self.lines = text.splitlines()
        self.pos = 0
        self.where = where

    def next(self) -> str:
        if self.pos >= len(self.lines):
            raise ParseError(f"{self.where}: unexpected end of file")
        line = self.lines[self.pos]
        self.pos += 1
        return line

    def expect(self, keyword: str) -> list[str]:
        parts = self.next().split()
        if not parts or parts[0] != keyword:
            raise ParseError(f"{self.where}: expected '{keyword}' section")
        return parts[1:]

    def done(self) -> bool:
        return self.pos >= len(self.lines)


def store_instance(inst: Instance, path) -> None:
    """Write one instance as versioned text."""
    out = [f"{INSTANCE_MAGIC} {INSTANCE_VERSION}",
           f"fn {inst.fn_id}",
           f"dim {inst.dim}",
           f"seed {inst.seed}",
           "xopt",
           _fmt_vector(inst.x_opt)]
    if inst.blocks is not None:
        out.append("groups " + " ".join(str(b.shape[0]) for b in inst.blocks))
        out.append("perm " + " ".join(str(i) for i in inst.group_perm))
        for k, block in enumerate(inst.blocks):
            out.append(f"block {k}")
            out.extend(_fmt_vector(row) for row in block)
    if inst.split_perm is not None:
        out.append("split " + " ".join(str(i) for i in inst.split_perm))
        out.append("chunks " + " ".join(str(r.shape[0]) for r in inst.chunk_rotations))
        for k, rot in enumerate(inst.chunk_rotations):
            out.append(f"chunk {k}")
            out.extend(_fmt_vector(row) for row in rot)
    if inst.member_optima is not None:
        out.append(f"optima {len(inst.member_optima)}")
        for k, opt in enumerate(inst.member_optima):
            out.append(f"optimum {k}")
            out.append(_fmt_vector(opt))
    Path(path).write_text("\n".join(out) + "\n")


def _read_matrix(reader: _LineReader, size: int, where: str) -> np.ndarray:
    rows = []
    for _ in range(size):
        row = _parse_floats(reader.next().split(), where)
        if len(row) != size:
            raise ParseError(f"{where}: expected {size} columns")
        rows.append(row)
    return np.array(rows, dtype=np.float64)


def _read_vector(reader: _LineReader, dim: int, where: str) -> np.ndarray:
    vec = _parse_floats(reader.next().split(), where)
    if len(vec) != dim:
        raise ParseError(f"{where}: expected {dim} values, got {len(vec)}")
    return np.array(vec, dtype=np.float64)


def _check_permutation(perm: np.ndarray, dim: int, where: str) -> None:
    if sorted(perm.tolist()) != list(range(dim)):
        raise CorruptInstance(f"{where}: not a permutation of 0..{dim - 1}")


def _check_orthonormal(mat: np.ndarray, where: str) -> None:
    residual = np.max(np.abs(mat.T @ mat - np.eye(mat.shape[0])))
    if residual >= _ORTHO_TOL:
        raise CorruptInstance(f"{where}: orthonormality residual {residual:.3e}")


def load_instance(path) -> Instance:
    """Parse and validate an instance file; round trip of store_instance is
    bit-exact."""
    where = str(path)
    reader = _LineReader(Path(path).read_text(), where)

    header = reader.next().split()
    if len(header) != 2 or header[0] != INSTANCE_MAGIC:
        raise ParseError(f"{where}: bad header")
    if header[1] != str(INSTANCE_VERSION):
        raise ParseError(f"{where}: unsupported format version {header[1]}")
    try:
        fn_id = int(reader.expect("fn")[0])
        dim = int(reader.expect("dim")[0])
        seed = int(reader.expect("seed")[0])
    except (IndexError, ValueError):
        raise ParseError(f"{where}: malformed header fields") from None
    info = catalog.lookup(fn_id)

    reader.expect("xopt")
    x_opt = _read_vector(reader, dim, where)

    group_perm = blocks = rotation = None
    split_perm = chunk_rotations = member_optima = None

    if info.category in (catalog.Category.UNIMODAL, catalog.Category.BASIC_MULTIMODAL):
        sizes = [int(s) for s in reader.expect("groups")]
        if sum(sizes) != dim:
            raise ParseError(f"{where}: group sizes do not sum to dim")
        group_perm = np.array([int(i) for i in reader.expect("perm")], dtype=np.int64)
        if group_perm.shape != (dim,):
            raise ParseError(f"{where}: permutation length != dim")
        _check_permutation(group_perm, dim, where)
        loaded = []
        for k, size in enumerate(sizes):
            if reader.expect("block") != [str(k)]:
                raise ParseError(f"{where}: block {k} out of order")
            mat = _read_matrix(reader, size, where)
            _check_orthonormal(mat, f"{where} block {k}")
            loaded.append(mat)
        blocks = tuple(loaded)
        rotation = np.zeros((dim, dim))
        offset = 0
        for block in blocks:
            idx = group_perm[offset:offset + block.shape[0]]
            rotation[np.ix_(idx, idx)] = block
            offset += block.shape[0]
    elif info.category is catalog.Category.HYBRID:
        split_perm = np.array([int(i) for i in reader.expect("split")], dtype=np.int64)
        if split_perm.shape != (dim,):
            raise ParseError(f"{where}: split permutation length != dim")
        _check_permutation(split_perm, dim, where)
        sizes = [int(s) for s in reader.expect("chunks")]
        if sum(sizes) != dim:
            raise ParseError(f"{where}: chunk sizes do not sum to dim")
        loaded = []
        for k, size in enumerate(sizes):
            if reader.expect("chunk") != [str(k)]:
                raise ParseError(f"{where}: chunk {k} out of order")
            mat = _read_matrix(reader, size, where)
            _check_orthonormal(mat, f"{where} chunk {k}")
            loaded.append(mat)
        chunk_rotations = tuple(loaded)
    else:
        count = int(reader.expect("optima")[0])
        if count != info.composition.size:
            raise ParseError(f"{where}: expected {info.composition.size} member optima")
        loaded = []
        for k in range(count):
            if reader.expect("optimum") != [str(k)]:
                raise ParseError(f"{where}: optimum {k} out of order")
            loaded.append(_read_vector(reader, dim, where))
        member_optima = tuple(loaded)

    if not reader.done():
        raise ParseError(f"{where}: trailing content")
    return Instance(fn_id, dim, seed, x_opt,
                    group_perm=group_perm, blocks=blocks, rotation=rotation,
                    split_perm=split_perm, chunk_rotations=chunk_rotations,
                    member_optima=member_optima)


def _sig_digits(dtype) -> int:
    return 9 if np.dtype(dtype) == np.float32 else 17


def write_points(batch: PointBatch, path) -> None:
    sig = _sig_digits(batch.data.dtype)
    lines = [_fmt_vector(row, sig) for row in batch.data]
    Path(path).write_text("\n".join(lines) + "\n")


def read_points(path, dim: int, precision: str = "double") -> PointBatch:
    """Parse a points file: one point per row, `dim` columns."""
    dtype = np.float32 if precision == "single" else np.float64
    rows = []
    for lineno, line in enumerate(Path(path).read_text().splitlines(), start=1):
        if not line.strip():
            continue
        row = _parse_floats(line.split(), f"{path}:{lineno}")
        if len(row) != dim:
            raise ParseError(f"{path}:{lineno}: expected {dim} columns, got {len(row)}")
        rows.append(row)
    if not rows:
        raise ParseError(f"{path}: no points")
    return PointBatch(np.array(rows, dtype=dtype))


def write_values(values: np.ndarray, path) -> None:
    sig = _sig_digits(values.dtype)
    Path(path).write_text("\n".join(_fmt(v, sig) for v in values) + "\n")


def read_values(path, precision: str = "double") -> np.ndarray:
    dtype = np.float32 if precision == "single" else np.float64
    tokens = Path(path).read_text().split()
    return np.array(_parse_floats(tokens, str(path)), dtype=dtype)


def write_grid(path, fn_id: int, seed: int, lo: float, hi: float,
               values: np.ndarray) -> None:
    """Write a K x K landscape: row i fixes the first coordinate at node i,
    column j fixes the second coordinate at node j, nodes evenly spaced on
    [lo, hi]."""
    steps = values.shape[0]
    out = [f"# {GRID_MAGIC} 1",
           f"# fn {fn_id}",
           f"# seed {seed}",
           f"# axis {_fmt(lo)} {_fmt(hi)} {steps}",
           "# layout row-major: rows sweep coordinate 1, columns coordinate 2"]
    out.extend(_fmt_vector(row) for row in values)
    Path(path).write_text("\n".join(out) + "\n")


def read_grid(path):
    """Returns (fn_id, seed, lo, hi, values) from a grid file."""
    where = str(path)
    lines = Path(path).read_text().splitlines()
    if len(lines) < 5 or lines[0] != f"# {GRID_MAGIC} 1":
        raise ParseError(f"{where}: bad grid header")
    try:
        fn_id = int(lines[1].split()[2])
        seed = int(lines[2].split()[2])
        _, _, lo, hi, steps = lines[3].split()
        lo, hi, steps = float(lo), float(hi), int(steps)
    except (IndexError, ValueError):
        raise ParseError(f"{where}: malformed grid header") from None
    rows = [_parse_floats(line.split(), where) for line in lines[5:5 + steps]]
    values = np.array(rows, dtype=np.float64)
    if values.shape != (steps, steps):
        raise ParseError(f"{where}: expected a {steps}x{steps} grid")
    return fn_id, seed, lo, hi, values
