"""Security and performance metrics for plain and encrypted models.

Covers voxel-occupancy distributions over the vertex bounding box, per-axis
coordinate histograms, byte entropy of textures, wrong-key difference reports,
key-space size arithmetic, and encrypt/decrypt timing over synthetic models.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .cipher import Vertex, decrypt_model, encrypt_model
from .formats import KeyBundle, RgbImage, TexturedModel


@dataclass(eq=False)
class OccupancyLattice:
    """Voxelization of a vertex set over its own axis-aligned bounding box.

    per_column_z[i][j] counts the occupied cells of column (i, j) along z.
    """

    resolution: int
    occupied: np.ndarray
    per_column_z: np.ndarray


@dataclass(frozen=True)
class DiffReport:
    vertex_match_fraction: float
    faces_equal: bool
    texture_byte_match_fraction: float


def _cell_indices(coords: np.ndarray, resolution: int) -> np.ndarray:
    lo = coords.min(axis=0)
    extent = coords.max(axis=0) - lo
    idx = np.zeros(coords.shape, dtype=np.intp)
    for axis in range(coords.shape[1]):
        if extent[axis] > 0:
            scaled = np.floor((coords[:, axis] - lo[axis]) / extent[axis] * resolution)
            # vertices on the max boundary clamp into the last cell
            idx[:, axis] = np.clip(scaled, 0, resolution - 1).astype(np.intp)
    return idx


def occupancy(vertices: Sequence[Vertex], resolution: int = 64) -> OccupancyLattice:
    """Voxelize the vertex set and count occupied cells per z-column.

    A degenerate bounding-box axis (zero extent) collapses to a single cell.
    """
    if resolution < 1:
        raise ValueError("resolution must be >= 1")
    coords = np.asarray(vertices, dtype=np.float64)
    if coords.size == 0:
        raise ValueError("vertex list is empty")
    idx = _cell_indices(coords, resolution)
    occupied = np.zeros((resolution,) * 3, dtype=bool)
    occupied[idx[:, 0], idx[:, 1], idx[:, 2]] = True
    return OccupancyLattice(
        resolution=resolution,
        occupied=occupied,
        per_column_z=occupied.sum(axis=2),
    )


def coordinate_histogram(
    vertices: Sequence[Vertex], bins: int = 16
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Equal-width histogram of each coordinate axis over its own [min, max]."""
    if bins < 1:
        raise ValueError("bins must be >= 1")
    coords = np.asarray(vertices, dtype=np.float64)
    if coords.size == 0:
        raise ValueError("vertex list is empty")
    out = []
    for axis in range(3):
        vals = coords[:, axis]
        lo, hi = vals.min(), vals.max()
        if hi > lo:
            counts, _ = np.histogram(vals, bins=bins, range=(lo, hi))
        else:
            counts = np.zeros(bins, dtype=np.intp)
            counts[0] = len(vals)
        out.append(counts)
    return out[0], out[1], out[2]


def byte_entropy(image: RgbImage) -> float:
    """Shannon entropy in bits of the byte histogram over all channel bytes."""
    counts = np.bincount(image.pixels.reshape(-1), minlength=256)
    p = counts[counts > 0] / counts.sum()
    # +0.0 turns the -0.0 of a single-valued histogram into 0.0
    return float(-(p * np.log2(p)).sum()) + 0.0


def _vertex_matches(
    a: list[Vertex], b: list[Vertex], tol: float
) -> float:
    if not a and not b:
        return 1.0
    va = np.asarray(a, dtype=np.float64).reshape(-1, 3)
    vb = np.asarray(b, dtype=np.float64).reshape(-1, 3)
    n = min(len(va), len(vb))
    close = np.abs(va[:n] - vb[:n]) <= tol * np.maximum(
        np.abs(va[:n]), np.abs(vb[:n])
    )
    return close.all(axis=1).sum() / max(len(va), len(vb))


def _byte_matches(a: RgbImage, b: RgbImage) -> float:
    fa = a.pixels.reshape(-1)
    fb = b.pixels.reshape(-1)
    if len(fa) == 0 and len(fb) == 0:
        return 1.0
    n = min(len(fa), len(fb))
    return np.count_nonzero(fa[:n] == fb[:n]) / max(len(fa), len(fb))


def diff_models(
    a: tuple[TexturedModel, RgbImage],
    b: tuple[TexturedModel, RgbImage],
    tol: float = 1e-9,
) -> DiffReport:
    """Compare two (model, texture) pairs.

    Vertices match when every coordinate agrees within relative tolerance
    `tol` (symmetric in the two inputs); faces must be exactly equal; texture
    match is the fraction of equal bytes.
    """
    model_a, tex_a = a
    model_b, tex_b = b
    return DiffReport(
        vertex_match_fraction=float(_vertex_matches(model_a.vertices, model_b.vertices, tol)),
        faces_equal=model_a.faces == model_b.faces,
        texture_byte_match_fraction=float(_byte_matches(tex_a, tex_b)),
    )


def key_space_bits(key_values: int = 12, decimal_digits: int = 15) -> float:
    """Bit strength of `key_values` independent keys at 10^-digits precision."""
    return key_values * decimal_digits * math.log2(10.0)


def synthetic_model(
    n_vertices: int, rng: np.random.Generator, texture_size: int = 256
) -> tuple[TexturedModel, RgbImage]:
    """Random triangle soup sized for timing runs: 2N triangles, square texture."""
    if n_vertices < 1:
        raise ValueError("n_vertices must be >= 1")
    vertices = [tuple(row) for row in rng.uniform(-10.0, 10.0, (n_vertices, 3)).tolist()]
    tris = rng.integers(1, n_vertices + 1, (2 * n_vertices, 3))
    faces = [[(int(a), None, None), (int(b), None, None), (int(c), None, None)] for a, b, c in tris]
    pixels = rng.integers(0, 256, (texture_size, texture_size, 3), dtype=np.uint8)
    model = TexturedModel(vertices=vertices, faces=faces)
    return model, RgbImage(width=texture_size, height=texture_size, pixels=pixels)


def bench(
    vertex_counts: Sequence[int],
    keys: KeyBundle | None = None,
    texture_size: int = 256,
    rng_seed: int = 0,
    repeats: int = 1,
) -> list[tuple[int, float, float]]:
    """Time encrypt_model and decrypt_model on synthetic models of each size.

    With repeats > 1 the fastest of the repeated runs is reported, which
    filters out scheduler and collector noise.
    """
    if repeats < 1:
        raise ValueError("repeats must be >= 1")
    keys = keys if keys is not None else KeyBundle()
    rng = np.random.default_rng(rng_seed)
    results = []
    for n in vertex_counts:
        model, texture = synthetic_model(n, rng, texture_size=texture_size)
        enc_best = dec_best = math.inf
        for _ in range(repeats):
            t0 = time.perf_counter()
            ciphertext = encrypt_model(model, texture, keys)
            t1 = time.perf_counter()
            decrypt_model(ciphertext, keys)
            t2 = time.perf_counter()
            enc_best = min(enc_best, t1 - t0)
            dec_best = min(dec_best, t2 - t1)
        results.append((n, enc_best, dec_best))
    return results
