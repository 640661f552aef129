"""Chaotic-keystream encryption for 3D textured models.

Vertices, polygons and the texture image of an OBJ + PPM model are encrypted
in three independent phases, each driven by a keystream integrated from the
3D Lu chaotic system; the texture phase uses DNA-coding arithmetic.  The
analysis module reproduces the security evaluation (occupancy distributions,
histograms, entropy, key sensitivity, timing).
"""

from .analysis import (
    DiffReport,
    OccupancyLattice,
    bench,
    byte_entropy,
    coordinate_histogram,
    diff_models,
    key_space_bits,
    occupancy,
)
from .chaos import (
    BURN_IN,
    STEP_SIZE,
    DivergenceError,
    Keystream,
    LuKey,
    LuParams,
    LuState,
    generate_stream,
    lu_derivative,
    lu_step,
    to_bit,
    to_byte,
    to_multiplier,
    to_unit,
)
from .cipher import (
    CipherText,
    PermutationPlan,
    decrypt_model,
    decrypt_polygons,
    decrypt_texture,
    decrypt_vertices,
    encrypt_model,
    encrypt_polygons,
    encrypt_texture,
    encrypt_vertices,
)
from .dnacode import (
    DnaByte,
    Nucleotide,
    decode_byte,
    dna_add,
    dna_complement,
    dna_sub,
    encode_byte,
)
from .formats import (
    Corner,
    FormatError,
    KeyBundle,
    RgbImage,
    TexturedModel,
    parse_keyfile,
    parse_obj,
    parse_ppm,
    write_keyfile,
    write_obj,
    write_ppm,
)

__version__ = "0.1.0"

__all__ = [
    "BURN_IN",
    "STEP_SIZE",
    "CipherText",
    "Corner",
    "DiffReport",
    "DivergenceError",
    "DnaByte",
    "FormatError",
    "KeyBundle",
    "Keystream",
    "LuKey",
    "LuParams",
    "LuState",
    "Nucleotide",
    "OccupancyLattice",
    "PermutationPlan",
    "RgbImage",
    "TexturedModel",
    "bench",
    "byte_entropy",
    "coordinate_histogram",
    "decode_byte",
    "decrypt_model",
    "decrypt_polygons",
    "decrypt_texture",
    "decrypt_vertices",
    "diff_models",
    "dna_add",
    "dna_complement",
    "dna_sub",
    "encode_byte",
    "encrypt_model",
    "encrypt_polygons",
    "encrypt_texture",
    "encrypt_vertices",
    "generate_stream",
    "key_space_bits",
    "lu_derivative",
    "lu_step",
    "occupancy",
    "parse_keyfile",
    "parse_obj",
    "parse_ppm",
    "to_bit",
    "to_byte",
    "to_multiplier",
    "to_unit",
    "write_keyfile",
    "write_obj",
    "write_ppm",
]
