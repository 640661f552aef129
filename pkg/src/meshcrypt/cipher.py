"""The three phase ciphers and the whole-model compositor.

A textured model is encrypted in three independent phases, each driven by its
own Lu keystream: vertex coordinates are multiplied elementwise by keystream
multipliers in [1, 2); face corners are reordered by the ascending argsort of
a keystream; texture bytes are DNA-encoded, added to a keystream-derived key
image, selectively complemented under a thresholded mask stream, and decoded.
Decryption regenerates the same streams from the keys and inverts each phase:
divide, apply the inverse permutation, complement-then-subtract.

Texture coordinates, normals, and passthrough lines are never touched; they
travel with their face corners under the permutation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .chaos import (
    LuKey,
    LuParams,
    bit_values,
    byte_values,
    generate_stream,
    multiplier_values,
)
from .dnacode import dna_add_bytes, dna_complement_bytes, dna_sub_bytes
from .formats import Corner, KeyBundle, RgbImage, TexturedModel

_PARAMS = LuParams()

Vertex = tuple[float, float, float]


@dataclass(eq=False)
class PermutationPlan:
    """Corner reordering derived from a keystream.

    forward[p] is the source index whose corner lands at position p; it is the
    stable ascending argsort of the driving stream, so equal stream values
    keep their original relative order and decryption is deterministic.
    """

    forward: np.ndarray
    length: int

    def __post_init__(self) -> None:
        self.forward = np.asarray(self.forward, dtype=np.intp)
        if self.length != len(self.forward):
            raise ValueError("length does not match forward index list")
        if self.length and not np.array_equal(
            np.bincount(self.forward, minlength=self.length), np.ones(self.length)
        ):
            raise ValueError("forward is not a permutation")

    @classmethod
    def from_stream(cls, values: np.ndarray) -> PermutationPlan:
        order = np.argsort(np.asarray(values, dtype=np.float64), kind="stable")
        return cls(forward=order, length=len(order))

    def apply(self, items: Sequence) -> list:
        return [items[i] for i in self.forward]

    def invert(self, items: Sequence) -> list:
        out: list = [None] * self.length
        for p, src in enumerate(self.forward):
            out[src] = items[p]
        return out


@dataclass(eq=False)
class CipherText:
    """Encrypted model plus encrypted texture; same shape as the plaintext."""

    model: TexturedModel
    texture: RgbImage


def scale_vertices(
    vertices: Sequence[Vertex], multipliers: np.ndarray
) -> list[Vertex]:
    """Multiply flattened coordinates elementwise by `multipliers`."""
    flat = np.asarray(vertices, dtype=np.float64).reshape(-1)
    if len(flat) != len(multipliers):
        raise ValueError("multiplier count does not match coordinate count")
    return [tuple(row) for row in (flat * multipliers).reshape(-1, 3).tolist()]


def unscale_vertices(
    vertices: Sequence[Vertex], multipliers: np.ndarray
) -> list[Vertex]:
    """Inverse of scale_vertices."""
    flat = np.asarray(vertices, dtype=np.float64).reshape(-1)
    if len(flat) != len(multipliers):
        raise ValueError("multiplier count does not match coordinate count")
    return [tuple(row) for row in (flat / multipliers).reshape(-1, 3).tolist()]


def _vertex_multipliers(key: LuKey, n: int) -> np.ndarray:
    return multiplier_values(generate_stream(key, _PARAMS, 3 * n).values)


def encrypt_vertices(vertices: Sequence[Vertex], key: LuKey) -> list[Vertex]:
    """Scale each coordinate by a key-derived multiplier in [1, 2)."""
    if not vertices:
        return []
    return scale_vertices(vertices, _vertex_multipliers(key, len(vertices)))


def decrypt_vertices(vertices: Sequence[Vertex], key: LuKey) -> list[Vertex]:
    """Invert encrypt_vertices; exact up to two float roundings per coordinate."""
    if not vertices:
        return []
    return unscale_vertices(vertices, _vertex_multipliers(key, len(vertices)))


def _arities(faces: Sequence[Sequence[Corner]]) -> list[int]:
    return [len(face) for face in faces]


def _regroup(corners: list[Corner], arities: list[int]) -> list[list[Corner]]:
    faces: list[list[Corner]] = []
    pos = 0
    for arity in arities:
        faces.append(corners[pos : pos + arity])
        pos += arity
    return faces


def encrypt_polygons(
    faces: Sequence[Sequence[Corner]], key: LuKey
) -> list[list[Corner]]:
    """Reorder all face corners by the ascending argsort of a keystream.

    Corners move as whole (vertex, texcoord, normal) index tuples; face count
    and per-face arity are preserved.
    """
    corners = [corner for face in faces for corner in face]
    if len(corners) <= 1:
        return [list(face) for face in faces]
    stream = generate_stream(key, _PARAMS, len(corners))
    plan = PermutationPlan.from_stream(stream.values)
    return _regroup(plan.apply(corners), _arities(faces))


def decrypt_polygons(
    faces: Sequence[Sequence[Corner]], key: LuKey
) -> list[list[Corner]]:
    """Regenerate the permutation from the key and apply its inverse."""
    corners = [corner for face in faces for corner in face]
    if len(corners) <= 1:
        return [list(face) for face in faces]
    stream = generate_stream(key, _PARAMS, len(corners))
    plan = PermutationPlan.from_stream(stream.values)
    return _regroup(plan.invert(corners), _arities(faces))


def _planes(image: RgbImage) -> np.ndarray:
    """Texture bytes in cipher order: R plane, then G, then B, each row-major."""
    return np.concatenate([image.pixels[:, :, ch].reshape(-1) for ch in range(3)])


def _unplanes(data: np.ndarray, width: int, height: int) -> RgbImage:
    pixels = np.empty((height, width, 3), dtype=np.uint8)
    n = width * height
    for ch in range(3):
        pixels[:, :, ch] = data[ch * n : (ch + 1) * n].reshape(height, width)
    return RgbImage(width=width, height=height, pixels=pixels)


def _texture_streams(
    image_bytes: int, key_stream_key: LuKey, mask_key: LuKey
) -> tuple[np.ndarray, np.ndarray]:
    key_bytes = byte_values(generate_stream(key_stream_key, _PARAMS, image_bytes).values)
    mask = bit_values(generate_stream(mask_key, _PARAMS, image_bytes).values)
    return key_bytes, mask


def dna_cipher_bytes(
    data: np.ndarray, key_bytes: np.ndarray, mask: np.ndarray
) -> np.ndarray:
    """Forward texture transform: DNA-add the key bytes, then complement the
    bytes whose mask bit is set."""
    out = dna_add_bytes(data, key_bytes)
    out[mask] = dna_complement_bytes(out[mask])
    return out


def dna_decipher_bytes(
    data: np.ndarray, key_bytes: np.ndarray, mask: np.ndarray
) -> np.ndarray:
    """Inverse texture transform: complement under the mask, then DNA-subtract."""
    out = np.array(data, dtype=np.uint8)
    out[mask] = dna_complement_bytes(out[mask])
    return dna_sub_bytes(out, key_bytes)


def encrypt_texture(
    image: RgbImage, key_stream_key: LuKey, mask_key: LuKey
) -> RgbImage:
    """DNA-cipher the texture bytes under two independent keystreams."""
    n = 3 * image.width * image.height
    key_bytes, mask = _texture_streams(n, key_stream_key, mask_key)
    return _unplanes(
        dna_cipher_bytes(_planes(image), key_bytes, mask), image.width, image.height
    )


def decrypt_texture(
    image: RgbImage, key_stream_key: LuKey, mask_key: LuKey
) -> RgbImage:
    """Invert encrypt_texture; byte-exact."""
    n = 3 * image.width * image.height
    key_bytes, mask = _texture_streams(n, key_stream_key, mask_key)
    return _unplanes(
        dna_decipher_bytes(_planes(image), key_bytes, mask), image.width, image.height
    )


def encrypt_model(
    model: TexturedModel, texture: RgbImage, keys: KeyBundle
) -> CipherText:
    """Run all three phase ciphers and compose the encrypted model."""
    encrypted = TexturedModel(
        vertices=encrypt_vertices(model.vertices, keys.vertices_key),
        texcoords=list(model.texcoords),
        normals=list(model.normals),
        faces=encrypt_polygons(model.faces, keys.polygons_key),
        passthrough=list(model.passthrough),
    )
    return CipherText(
        model=encrypted,
        texture=encrypt_texture(texture, keys.texture1_key, keys.texture2_key),
    )


def decrypt_model(
    ciphertext: CipherText, keys: KeyBundle
) -> tuple[TexturedModel, RgbImage]:
    """Invert encrypt_model phase by phase."""
    texture = decrypt_texture(
        ciphertext.texture, keys.texture1_key, keys.texture2_key
    )
    model = TexturedModel(
        vertices=decrypt_vertices(ciphertext.model.vertices, keys.vertices_key),
        texcoords=list(ciphertext.model.texcoords),
        normals=list(ciphertext.model.normals),
        faces=decrypt_polygons(ciphertext.model.faces, keys.polygons_key),
        passthrough=list(ciphertext.model.passthrough),
    )
    return model, texture
