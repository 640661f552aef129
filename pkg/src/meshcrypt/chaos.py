"""Deterministic keystreams from the 3D Lu chaotic system.

The Lu system  x' = a(y-x),  y' = -xz + cy,  z' = xy - bz  is chaotic at the
fixed parameters a=36, b=3, c=20.  A keystream is produced by integrating the
system from a secret initial state with fixed-step classical RK4, discarding a
burn-in prefix, and interleaving the x, y, z samples of every subsequent step.
Quantizers map raw samples to unit-interval reals, multipliers in [1, 2),
bytes, and bits.  Everything here is a pure function of its inputs: the same
key always reproduces the same stream, bit for bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

STEP_SIZE = 0.001
BURN_IN = 10_000

_QUANT_SCALE = 1e4
# Largest double below 2.0; `1.0 + u` can round up to 2.0 for the single
# largest sub-unit double, and multipliers must stay strictly below 2.
_MULTIPLIER_CAP = math.nextafter(2.0, 1.0)


class DivergenceError(ArithmeticError):
    """The trajectory reached a non-finite state (bad key or step size)."""


@dataclass(frozen=True)
class LuParams:
    """System parameters; the chaotic regime used throughout is the default."""

    a: float = 36.0
    b: float = 3.0
    c: float = 20.0


@dataclass(frozen=True)
class LuState:
    x: float
    y: float
    z: float


@dataclass(frozen=True)
class LuKey:
    """Secret initial conditions of one Lu trajectory."""

    x0: float
    y0: float
    z0: float


@dataclass
class Keystream:
    """Raw trajectory samples for one key, with a sequential read cursor."""

    values: np.ndarray
    origin: LuKey
    cursor: int = 0

    def __len__(self) -> int:
        return len(self.values)

    def take(self, count: int) -> np.ndarray:
        """Return the next `count` raw values and advance the cursor."""
        if count < 0:
            raise ValueError("count must be non-negative")
        if self.cursor + count > len(self.values):
            raise ValueError(
                f"keystream exhausted: asked for {count}, "
                f"{len(self.values) - self.cursor} left"
            )
        out = self.values[self.cursor : self.cursor + count]
        self.cursor += count
        return out


def lu_derivative(s: LuState, p: LuParams) -> LuState:
    """Right-hand side of the Lu system at state `s`."""
    return LuState(
        x=p.a * (s.y - s.x),
        y=-s.x * s.z + p.c * s.y,
        z=s.x * s.y - p.b * s.z,
    )


def _rk4(x: float, y: float, z: float, a: float, b: float, c: float, h: float):
    """One classical RK4 step, kept flat for speed in the generation loop."""
    k1x = a * (y - x)
    k1y = -x * z + c * y
    k1z = x * y - b * z
    hh = 0.5 * h
    x2 = x + hh * k1x
    y2 = y + hh * k1y
    z2 = z + hh * k1z
    k2x = a * (y2 - x2)
    k2y = -x2 * z2 + c * y2
    k2z = x2 * y2 - b * z2
    x3 = x + hh * k2x
    y3 = y + hh * k2y
    z3 = z + hh * k2z
    k3x = a * (y3 - x3)
    k3y = -x3 * z3 + c * y3
    k3z = x3 * y3 - b * z3
    x4 = x + h * k3x
    y4 = y + h * k3y
    z4 = z + h * k3z
    k4x = a * (y4 - x4)
    k4y = -x4 * z4 + c * y4
    k4z = x4 * y4 - b * z4
    s = h / 6.0
    return (
        x + s * (k1x + 2.0 * k2x + 2.0 * k3x + k4x),
        y + s * (k1y + 2.0 * k2y + 2.0 * k3y + k4y),
        z + s * (k1z + 2.0 * k2z + 2.0 * k3z + k4z),
    )


def lu_step(s: LuState, p: LuParams, h: float) -> LuState:
    """Advance the state by one fixed RK4 step of size `h` (h >= 0)."""
    if h < 0:
        raise ValueError("step size must be non-negative")
    x, y, z = _rk4(s.x, s.y, s.z, p.a, p.b, p.c, h)
    if not (math.isfinite(x) and math.isfinite(y) and math.isfinite(z)):
        raise DivergenceError(f"non-finite state after step from {s}")
    return LuState(x, y, z)


def generate_stream(key: LuKey, params: LuParams, count: int) -> Keystream:
    """Emit `count` raw trajectory samples for `key`.

    The first BURN_IN steps are discarded so that nearby keys separate on the
    attractor before any value is emitted; afterwards each step contributes
    its x, y, z in that order.  Raises DivergenceError if the trajectory
    leaves the finite range.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    x, y, z = key.x0, key.y0, key.z0
    a, b, c = params.a, params.b, params.c
    h = STEP_SIZE
    isfinite = math.isfinite
    step = _rk4
    for _ in range(BURN_IN):
        x, y, z = step(x, y, z, a, b, c, h)
        if not (isfinite(x) and isfinite(y) and isfinite(z)):
            raise DivergenceError(f"trajectory diverged during burn-in for {key}")
    out: list[float] = []
    emit = out.extend
    while len(out) < count:
        x, y, z = step(x, y, z, a, b, c, h)
        if not (isfinite(x) and isfinite(y) and isfinite(z)):
            raise DivergenceError(f"trajectory diverged for {key}")
        emit((x, y, z))
    values = np.array(out[:count], dtype=np.float64)
    values.setflags(write=False)
    return Keystream(values=values, origin=key)


def to_unit(v: float) -> float:
    """Quantize a raw sample into [0, 1): the fractional part of |v| * 1e4."""
    u = abs(v) * _QUANT_SCALE
    if not math.isfinite(u):
        # the scaled value overflowed; every double that large is integral
        return 0.0
    return u - math.floor(u)


def to_multiplier(v: float) -> float:
    """Map a raw sample into [1, 2); never zero, so division is always safe."""
    return min(1.0 + to_unit(v), _MULTIPLIER_CAP)


def to_byte(v: float) -> int:
    """Map a raw sample to a byte 0..255."""
    return min(int(to_unit(v) * 256.0), 255)


def to_bit(v: float) -> int:
    """Threshold a raw sample at 0.5 (a unit value of exactly 0.5 gives 1)."""
    return 1 if to_unit(v) >= 0.5 else 0


def unit_values(values: np.ndarray) -> np.ndarray:
    """Vector form of to_unit; elementwise identical to the scalar."""
    with np.errstate(over="ignore", invalid="ignore"):
        u = np.abs(np.asarray(values, dtype=np.float64)) * _QUANT_SCALE
        frac = u - np.floor(u)
    return np.where(np.isfinite(u), frac, 0.0)


def multiplier_values(values: np.ndarray) -> np.ndarray:
    """Vector form of to_multiplier."""
    return np.minimum(1.0 + unit_values(values), _MULTIPLIER_CAP)


def byte_values(values: np.ndarray) -> np.ndarray:
    """Vector form of to_byte; returns uint8."""
    return np.minimum(np.floor(unit_values(values) * 256.0), 255.0).astype(np.uint8)


def bit_values(values: np.ndarray) -> np.ndarray:
    """Vector form of to_bit; returns a boolean mask."""
    return unit_values(values) >= 0.5
