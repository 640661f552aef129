"""DNA-coding algebra on 2-bit nucleotide symbols.

A byte is written as four nucleotides, most significant bit-pair first, with
A=00, G=01, C=10, T=11.  The addition table below forms a Klein four-group
with identity C and every element its own inverse, so subtraction coincides
with addition; the complement swaps the base pairs A<->T and C<->G.

The scalar operations are the reference semantics.  The *_bytes functions
apply the same algebra to all four bit-pair lanes of whole uint8 arrays at
once and are verified against the scalar tables exhaustively in the tests.
"""

from __future__ import annotations

from enum import IntEnum

import numpy as np


class Nucleotide(IntEnum):
    A = 0b00
    G = 0b01
    C = 0b10
    T = 0b11


DnaByte = tuple[Nucleotide, Nucleotide, Nucleotide, Nucleotide]

_A, _G, _C, _T = Nucleotide.A, Nucleotide.G, Nucleotide.C, Nucleotide.T

# Addition table indexed [a][b] by nucleotide code.
_ADD = (
    (_C, _T, _A, _G),  # A + (A, G, C, T)
    (_T, _C, _G, _A),  # G + .
    (_A, _G, _C, _T),  # C + .  (C is the identity)
    (_G, _A, _T, _C),  # T + .
)

# Subtraction is the group inverse of addition: the unique n with n + b = a.
_SUB = tuple(
    tuple(next(n for n in Nucleotide if _ADD[n][b] == a) for b in Nucleotide)
    for a in Nucleotide
)

_COMPLEMENT = (_T, _C, _G, _A)

# Byte-wise lane arithmetic: XOR applies the table to all four 2-bit lanes at
# once (addition is XOR by the pair value of C=0b10 in every lane, complement
# flips every bit).
_ADD_MASK = 0xAA
_COMPLEMENT_MASK = 0xFF


def encode_byte(value: int) -> DnaByte:
    """Split a byte into four nucleotides, most significant pair first."""
    if not 0 <= value <= 255:
        raise ValueError(f"byte value out of range: {value}")
    return (
        Nucleotide((value >> 6) & 0b11),
        Nucleotide((value >> 4) & 0b11),
        Nucleotide((value >> 2) & 0b11),
        Nucleotide(value & 0b11),
    )


def decode_byte(quads: DnaByte) -> int:
    """Inverse of encode_byte."""
    if len(quads) != 4:
        raise ValueError(f"expected 4 nucleotides, got {len(quads)}")
    return (quads[0] << 6) | (quads[1] << 4) | (quads[2] << 2) | quads[3]


def dna_add(a: Nucleotide, b: Nucleotide) -> Nucleotide:
    return _ADD[a][b]


def dna_sub(a: Nucleotide, b: Nucleotide) -> Nucleotide:
    return _SUB[a][b]


def dna_complement(n: Nucleotide) -> Nucleotide:
    return _COMPLEMENT[n]


def dna_add_bytes(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Nucleotide-wise addition of two uint8 arrays, all four lanes at once."""
    return np.bitwise_xor(np.bitwise_xor(x, y), np.uint8(_ADD_MASK))


def dna_sub_bytes(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Nucleotide-wise subtraction; identical to addition (self-inverse group)."""
    return dna_add_bytes(x, y)


def dna_complement_bytes(x: np.ndarray) -> np.ndarray:
    """Nucleotide-wise complement of a uint8 array."""
    return np.bitwise_xor(x, np.uint8(_COMPLEMENT_MASK))
