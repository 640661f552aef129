"""On-disk formats: Wavefront OBJ models, binary PPM (P6) images, key files.

The OBJ subset covers `v`, `vt`, `vn` and `f` records; face corners may be
written as `i`, `i/j`, `i//k` or `i/j/k` with 1-based indices.  Anything else
(comments, `mtllib`, `usemtl`, `o`, `g`, `s`, ...) is carried through verbatim
as opaque passthrough lines.  Reals are serialized with 17 significant digits
so that write -> parse reproduces every coordinate bit-exactly; decryption
divides by keystream multipliers, and a lossy serialization would corrupt the
recovered plaintext.

PPM support is restricted to the binary P6 form with maxval 255, which round
trips byte-exactly.  A key file holds the four secret initial-condition
triples, one labeled line each.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .chaos import LuKey

Corner = tuple[int, int | None, int | None]

_KEYFILE_LABELS = ("vertices", "polygons", "texture1", "texture2")


class FormatError(ValueError):
    """Malformed input file (OBJ, PPM, or key file)."""


@dataclass
class TexturedModel:
    """A textured surface model: vertex coordinates, texture coordinates,
    normals, faces as ordered corner lists, and opaque passthrough lines."""

    vertices: list[tuple[float, float, float]] = field(default_factory=list)
    texcoords: list[tuple[float, float]] = field(default_factory=list)
    normals: list[tuple[float, float, float]] = field(default_factory=list)
    faces: list[list[Corner]] = field(default_factory=list)
    passthrough: list[str] = field(default_factory=list)


@dataclass(eq=False)
class RgbImage:
    """An RGB image; pixels is a (height, width, 3) uint8 array, row-major."""

    width: int
    height: int
    pixels: np.ndarray

    def __post_init__(self) -> None:
        if self.width < 1 or self.height < 1:
            raise ValueError("image dimensions must be positive")
        self.pixels = np.asarray(self.pixels, dtype=np.uint8)
        if self.pixels.shape != (self.height, self.width, 3):
            raise ValueError(
                f"pixel array shape {self.pixels.shape} does not match "
                f"{self.height}x{self.width}x3"
            )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RgbImage):
            return NotImplemented
        return (
            self.width == other.width
            and self.height == other.height
            and np.array_equal(self.pixels, other.pixels)
        )


@dataclass(frozen=True)
class KeyBundle:
    """The 12 secret reals: initial conditions of the four Lu trajectories."""

    vertices_key: LuKey = LuKey(-6.045, 2.668, 16.363)
    polygons_key: LuKey = LuKey(-5.045, 2.668, 16.363)
    texture1_key: LuKey = LuKey(-6.045, 2.668, 20.363)
    texture2_key: LuKey = LuKey(-5.045, 3.668, 16.363)


def _parse_floats(fields: list[str], lineno: int) -> list[float]:
    try:
        return [float(f) for f in fields]
    except ValueError:
        raise FormatError(f"line {lineno}: malformed numeric field") from None


def _parse_corner(token: str, lineno: int) -> Corner:
    parts = token.split("/")
    if len(parts) > 3 or not parts[0]:
        raise FormatError(f"line {lineno}: malformed face corner {token!r}")
    try:
        vi = int(parts[0])
        ti = int(parts[1]) if len(parts) > 1 and parts[1] else None
        ni = int(parts[2]) if len(parts) > 2 and parts[2] else None
    except ValueError:
        raise FormatError(f"line {lineno}: malformed face corner {token!r}") from None
    return (vi, ti, ni)


def parse_obj(text: str) -> TexturedModel:
    """Parse OBJ text into a TexturedModel.

    Raises FormatError for malformed numeric fields, faces with fewer than
    three corners, and (after the whole file is read) indices out of range.
    """
    model = TexturedModel()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        fields = line.split()
        kind = fields[0]
        if kind == "v":
            if len(fields) != 4:
                raise FormatError(f"line {lineno}: vertex needs 3 coordinates")
            x, y, z = _parse_floats(fields[1:], lineno)
            model.vertices.append((x, y, z))
        elif kind == "vt":
            if len(fields) not in (3, 4):
                raise FormatError(f"line {lineno}: texture coordinate needs 2 values")
            uv = _parse_floats(fields[1:3], lineno)
            model.texcoords.append((uv[0], uv[1]))
        elif kind == "vn":
            if len(fields) != 4:
                raise FormatError(f"line {lineno}: normal needs 3 components")
            x, y, z = _parse_floats(fields[1:], lineno)
            model.normals.append((x, y, z))
        elif kind == "f":
            corners = [_parse_corner(tok, lineno) for tok in fields[1:]]
            if len(corners) < 3:
                raise FormatError(f"line {lineno}: face needs at least 3 corners")
            model.faces.append(corners)
        else:
            model.passthrough.append(raw)
    _check_indices(model)
    return model


def _check_indices(model: TexturedModel) -> None:
    nv, nt, nn = len(model.vertices), len(model.texcoords), len(model.normals)
    for fi, face in enumerate(model.faces, start=1):
        for vi, ti, ni in face:
            if not 1 <= vi <= nv:
                raise FormatError(f"face {fi}: vertex index {vi} out of range 1..{nv}")
            if ti is not None and not 1 <= ti <= nt:
                raise FormatError(
                    f"face {fi}: texture coordinate index {ti} out of range 1..{nt}"
                )
            if ni is not None and not 1 <= ni <= nn:
                raise FormatError(f"face {fi}: normal index {ni} out of range 1..{nn}")


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _corner_token(corner: Corner) -> str:
    vi, ti, ni = corner
    if ti is None and ni is None:
        return str(vi)
    if ni is None:
        return f"{vi}/{ti}"
    if ti is None:
        return f"{vi}//{ni}"
    return f"{vi}/{ti}/{ni}"


def write_obj(model: TexturedModel) -> str:
    """Serialize a TexturedModel; parse_obj(write_obj(m)) == m for valid m."""
    lines: list[str] = []
    lines.extend(model.passthrough)
    for x, y, z in model.vertices:
        lines.append(f"v {_fmt(x)} {_fmt(y)} {_fmt(z)}")
    for u, v in model.texcoords:
        lines.append(f"vt {_fmt(u)} {_fmt(v)}")
    for x, y, z in model.normals:
        lines.append(f"vn {_fmt(x)} {_fmt(y)} {_fmt(z)}")
    for face in model.faces:
        lines.append("f " + " ".join(_corner_token(c) for c in face))
    if not lines:
        return ""
    return "\n".join(lines) + "\n"


def _next_ppm_token(data: bytes, pos: int) -> tuple[bytes, int]:
    n = len(data)
    while pos < n:
        ch = data[pos : pos + 1]
        if ch == b"#":
            while pos < n and data[pos : pos + 1] != b"\n":
                pos += 1
        elif ch.isspace():
            pos += 1
        else:
            break
    if pos >= n:
        raise FormatError("unexpected end of PPM header")
    start = pos
    while pos < n and not data[pos : pos + 1].isspace():
        pos += 1
    return data[start:pos], pos


def parse_ppm(data: bytes) -> RgbImage:
    """Parse a binary P6 PPM with maxval 255."""
    magic, pos = _next_ppm_token(data, 0)
    if magic != b"P6":
        raise FormatError(f"not a binary PPM (P6) file: magic {magic!r}")
    try:
        wtok, pos = _next_ppm_token(data, pos)
        htok, pos = _next_ppm_token(data, pos)
        mtok, pos = _next_ppm_token(data, pos)
        width, height, maxval = int(wtok), int(htok), int(mtok)
    except ValueError:
        raise FormatError("malformed PPM header field") from None
    if width < 1 or height < 1:
        raise FormatError(f"bad PPM dimensions {width}x{height}")
    if maxval != 255:
        raise FormatError(f"unsupported PPM maxval {maxval} (must be 255)")
    if pos >= len(data) or not data[pos : pos + 1].isspace():
        raise FormatError("missing whitespace before PPM pixel data")
    pos += 1
    payload = data[pos:]
    expected = width * height * 3
    if len(payload) < expected:
        raise FormatError(
            f"truncated PPM pixel data: expected {expected} bytes, got {len(payload)}"
        )
    if len(payload) > expected:
        raise FormatError(f"{len(payload) - expected} trailing bytes after pixel data")
    pixels = np.frombuffer(payload, dtype=np.uint8).reshape(height, width, 3)
    return RgbImage(width=width, height=height, pixels=pixels.copy())


def write_ppm(image: RgbImage) -> bytes:
    """Serialize to binary P6; parse_ppm(write_ppm(img)) == img, byte-exact."""
    header = f"P6\n{image.width} {image.height}\n255\n".encode("ascii")
    return header + image.pixels.tobytes()


def parse_keyfile(text: str) -> KeyBundle:
    """Parse a key file: one `<label> <x0> <y0> <z0>` line per trajectory.

    Labels are vertices, polygons, texture1, texture2; blank lines and lines
    starting with '#' are ignored.
    """
    seen: dict[str, LuKey] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        label = fields[0]
        if label not in _KEYFILE_LABELS:
            raise FormatError(f"line {lineno}: unknown key label {label!r}")
        if label in seen:
            raise FormatError(f"line {lineno}: duplicate key label {label!r}")
        if len(fields) != 4:
            raise FormatError(f"line {lineno}: key line needs 3 values")
        x0, y0, z0 = _parse_floats(fields[1:], lineno)
        seen[label] = LuKey(x0, y0, z0)
    missing = [label for label in _KEYFILE_LABELS if label not in seen]
    if missing:
        raise FormatError(f"missing key label(s): {', '.join(missing)}")
    return KeyBundle(
        vertices_key=seen["vertices"],
        polygons_key=seen["polygons"],
        texture1_key=seen["texture1"],
        texture2_key=seen["texture2"],
    )


def write_keyfile(keys: KeyBundle) -> str:
    """Serialize a KeyBundle; values round-trip exactly."""
    rows = (
        ("vertices", keys.vertices_key),
        ("polygons", keys.polygons_key),
        ("texture1", keys.texture1_key),
        ("texture2", keys.texture2_key),
    )
    return "".join(f"{label} {k.x0!r} {k.y0!r} {k.z0!r}\n" for label, k in rows)
