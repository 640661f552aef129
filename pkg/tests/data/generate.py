"""Regenerate the bundled test fixtures (model.obj, texture.ppm, keys.txt).

Deterministic: running this script always reproduces the same three files.
The model is a bumpy torus with mixed quad/triangle faces, texture
coordinates, normals, and a passthrough header; it is offset from the origin
so no vertex coordinate is exactly zero.  The texture is a smooth synthetic
128x128 image (low byte entropy, so encryption has something to flatten).
"""

from __future__ import annotations

import math
from pathlib import Path

import numpy as np

from meshcrypt import KeyBundle, RgbImage, TexturedModel, write_keyfile, write_obj, write_ppm

HERE = Path(__file__).parent

MAJOR_SEGMENTS = 28
MINOR_SEGMENTS = 14
MAJOR_RADIUS = 1.5
MINOR_RADIUS = 0.55
OFFSET = (0.137, 0.251, 0.173)


def torus_model() -> TexturedModel:
    model = TexturedModel(
        passthrough=[
            "# bundled test fixture: bumpy torus",
            "mtllib model.mtl",
            "o torus",
            "usemtl skin",
            "s off",
        ]
    )
    for i in range(MAJOR_SEGMENTS):
        u = 2.0 * math.pi * i / MAJOR_SEGMENTS
        for j in range(MINOR_SEGMENTS):
            v = 2.0 * math.pi * j / MINOR_SEGMENTS
            bump = 1.0 + 0.08 * math.sin(3.0 * u) * math.cos(2.0 * v)
            r = MAJOR_RADIUS + MINOR_RADIUS * bump * math.cos(v)
            model.vertices.append(
                (
                    r * math.cos(u) + OFFSET[0],
                    r * math.sin(u) + OFFSET[1],
                    MINOR_RADIUS * bump * math.sin(v) + OFFSET[2],
                )
            )
            model.normals.append(
                (math.cos(v) * math.cos(u), math.cos(v) * math.sin(u), math.sin(v))
            )
    for i in range(MAJOR_SEGMENTS + 1):
        for j in range(MINOR_SEGMENTS + 1):
            model.texcoords.append((i / MAJOR_SEGMENTS, j / MINOR_SEGMENTS))

    def vid(i: int, j: int) -> int:
        return (i % MAJOR_SEGMENTS) * MINOR_SEGMENTS + (j % MINOR_SEGMENTS) + 1

    def tid(i: int, j: int) -> int:
        return i * (MINOR_SEGMENTS + 1) + j + 1

    for i in range(MAJOR_SEGMENTS):
        for j in range(MINOR_SEGMENTS):
            quad = (
                (vid(i, j), tid(i, j), vid(i, j)),
                (vid(i + 1, j), tid(i + 1, j), vid(i + 1, j)),
                (vid(i + 1, j + 1), tid(i + 1, j + 1), vid(i + 1, j + 1)),
                (vid(i, j + 1), tid(i, j + 1), vid(i, j + 1)),
            )
            if (i + j) % 3 == 0:
                model.faces.append([quad[0], quad[1], quad[2]])
                model.faces.append([quad[0], quad[2], quad[3]])
            else:
                model.faces.append(list(quad))

    assert all(c != 0.0 for vert in model.vertices for c in vert)
    return model


def natural_texture(size: int = 128) -> RgbImage:
    yy, xx = np.mgrid[0:size, 0:size] / (size - 1)
    sky = 0.55 + 0.4 * yy
    sun = np.exp(-(((xx - 0.7) ** 2 + (yy - 0.25) ** 2) / 0.02))
    ripple = 0.06 * np.sin(14.0 * xx + 4.0 * np.sin(3.0 * yy))
    r = np.clip(0.9 * sun + 0.5 * sky + ripple, 0.0, 1.0)
    g = np.clip(0.8 * sun + 0.35 * sky + 0.5 * ripple, 0.0, 1.0)
    b = np.clip(0.6 * sun + 0.75 * sky - ripple, 0.0, 1.0)
    pixels = (np.stack([r, g, b], axis=-1) * 255.0).astype(np.uint8)
    return RgbImage(width=size, height=size, pixels=pixels)


def main() -> None:
    (HERE / "model.obj").write_text(write_obj(torus_model()), encoding="utf-8")
    (HERE / "texture.ppm").write_bytes(write_ppm(natural_texture()))
    (HERE / "keys.txt").write_text(write_keyfile(KeyBundle()), encoding="utf-8")
    print(f"fixtures written to {HERE}")


if __name__ == "__main__":
    main()
