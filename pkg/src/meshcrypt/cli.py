"""Command-line interface.

Subcommands: encrypt, decrypt, analyze, bench, info.  Successful runs write
file artifacts and/or machine-parseable TSV on stdout; every failure exits
nonzero with a single-line diagnostic on stderr.  Keys are only ever read
from a key file, never from the command line.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from .analysis import (
    bench,
    byte_entropy,
    coordinate_histogram,
    diff_models,
    key_space_bits,
    occupancy,
)
from .chaos import DivergenceError, LuParams
from .cipher import CipherText, decrypt_model, encrypt_model
from .formats import (
    FormatError,
    KeyBundle,
    parse_keyfile,
    parse_obj,
    parse_ppm,
    write_obj,
    write_ppm,
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="meshcrypt",
        description="Encrypt, decrypt and analyze 3D textured models (OBJ + PPM).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, blurb in (
        ("encrypt", "Encrypt a model and its texture."),
        ("decrypt", "Decrypt a model and its texture."),
    ):
        p = sub.add_parser(name, help=blurb)
        p.add_argument("--model", required=True, help="input OBJ file")
        p.add_argument("--texture", required=True, help="input PPM (P6) texture")
        p.add_argument("--key", required=True, help="key file with the 4 secret triples")
        p.add_argument("--out", required=True, help="output directory")

    p = sub.add_parser("analyze", help="Security metrics as TSV on stdout.")
    p.add_argument(
        "--mode",
        required=True,
        choices=("occupancy", "histogram", "entropy", "diff"),
    )
    p.add_argument("--resolution", type=int, default=64, help="occupancy lattice size")
    p.add_argument("--bins", type=int, default=16, help="histogram bin count")
    p.add_argument("--tol", type=float, default=1e-9, help="relative vertex tolerance for diff")
    p.add_argument(
        "inputs",
        nargs="+",
        help="occupancy/histogram: MODEL.obj; entropy: TEXTURE.ppm; "
        "diff: MODEL_A TEXTURE_A MODEL_B TEXTURE_B",
    )

    p = sub.add_parser("bench", help="Time encrypt/decrypt over synthetic models.")
    p.add_argument("--sizes", required=True, help="comma-separated vertex counts")

    p = sub.add_parser("info", help="Report key values, key-space size, parameters.")
    p.add_argument("--key", help="key file (defaults to the built-in keys)")

    return parser


def _read_text(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _load_cipher_inputs(args) -> tuple:
    model = parse_obj(_read_text(args.model))
    texture = parse_ppm(Path(args.texture).read_bytes())
    keys = parse_keyfile(_read_text(args.key))
    return model, texture, keys


def _output_stem(path: str, strip: str) -> str:
    stem = Path(path).stem
    return stem[: -len(strip)] if stem.endswith(strip) else stem


def _run_encrypt(args) -> int:
    model, texture, keys = _load_cipher_inputs(args)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    t0 = time.perf_counter()
    ciphertext = encrypt_model(model, texture, keys)
    elapsed = time.perf_counter() - t0
    stem = _output_stem(args.model, ".dec")
    model_out = out_dir / f"{stem}.enc.obj"
    texture_out = out_dir / f"{stem}.enc.ppm"
    model_out.write_text(write_obj(ciphertext.model), encoding="utf-8")
    texture_out.write_bytes(write_ppm(ciphertext.texture))
    _report_cipher_run(model, texture, elapsed, model_out, texture_out)
    return 0


def _run_decrypt(args) -> int:
    model, texture, keys = _load_cipher_inputs(args)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    t0 = time.perf_counter()
    plain_model, plain_texture = decrypt_model(
        CipherText(model=model, texture=texture), keys
    )
    elapsed = time.perf_counter() - t0
    stem = _output_stem(args.model, ".enc")
    model_out = out_dir / f"{stem}.dec.obj"
    texture_out = out_dir / f"{stem}.dec.ppm"
    model_out.write_text(write_obj(plain_model), encoding="utf-8")
    texture_out.write_bytes(write_ppm(plain_texture))
    _report_cipher_run(model, texture, elapsed, model_out, texture_out)
    return 0


def _report_cipher_run(model, texture, elapsed, model_out, texture_out) -> None:
    print(f"vertices\t{len(model.vertices)}")
    print(f"faces\t{len(model.faces)}")
    print(f"texture\t{texture.width}x{texture.height}")
    print(f"seconds\t{elapsed:.3f}")
    print(f"model_out\t{model_out}")
    print(f"texture_out\t{texture_out}")


def _run_analyze(args) -> int:
    mode = args.mode
    if mode in ("occupancy", "histogram") and len(args.inputs) != 1:
        raise ValueError(f"analyze --mode {mode} takes exactly one model file")
    if mode == "entropy" and len(args.inputs) != 1:
        raise ValueError("analyze --mode entropy takes exactly one texture file")
    if mode == "diff" and len(args.inputs) != 4:
        raise ValueError(
            "analyze --mode diff takes MODEL_A TEXTURE_A MODEL_B TEXTURE_B"
        )

    if mode == "occupancy":
        model = parse_obj(_read_text(args.inputs[0]))
        lattice = occupancy(model.vertices, resolution=args.resolution)
        for i in range(lattice.resolution):
            for j in range(lattice.resolution):
                print(f"{i}\t{j}\t{lattice.per_column_z[i][j]}")
    elif mode == "histogram":
        model = parse_obj(_read_text(args.inputs[0]))
        for axis, counts in zip("xyz", coordinate_histogram(model.vertices, args.bins)):
            for b, count in enumerate(counts):
                print(f"{axis}\t{b}\t{count}")
    elif mode == "entropy":
        image = parse_ppm(Path(args.inputs[0]).read_bytes())
        print(f"{byte_entropy(image):.6f}")
    else:
        model_a = parse_obj(_read_text(args.inputs[0]))
        tex_a = parse_ppm(Path(args.inputs[1]).read_bytes())
        model_b = parse_obj(_read_text(args.inputs[2]))
        tex_b = parse_ppm(Path(args.inputs[3]).read_bytes())
        report = diff_models((model_a, tex_a), (model_b, tex_b), tol=args.tol)
        print(f"vertex_match_fraction\t{report.vertex_match_fraction:.6f}")
        print(f"faces_equal\t{'true' if report.faces_equal else 'false'}")
        print(f"texture_byte_match_fraction\t{report.texture_byte_match_fraction:.6f}")
    return 0


def _run_bench(args) -> int:
    try:
        sizes = [int(tok) for tok in args.sizes.split(",") if tok]
    except ValueError:
        raise ValueError(f"bad --sizes value {args.sizes!r}") from None
    if not sizes or any(n < 1 for n in sizes):
        raise ValueError("--sizes needs positive vertex counts")
    for n, enc_s, dec_s in bench(sizes):
        print(f"{n}\t{enc_s:.6f}\t{dec_s:.6f}")
    return 0


def _run_info(args) -> int:
    keys = parse_keyfile(_read_text(args.key)) if args.key else KeyBundle()
    rows = (
        ("vertices", keys.vertices_key),
        ("polygons", keys.polygons_key),
        ("texture1", keys.texture1_key),
        ("texture2", keys.texture2_key),
    )
    for label, k in rows:
        print(f"{label}\t{k.x0!r}\t{k.y0!r}\t{k.z0!r}")
    print("key_values\t12")
    print("precision_digits\t15")
    print(f"key_space_bits\t{round(key_space_bits())}")
    p = LuParams()
    print(f"parameters\ta={p.a:g}\tb={p.b:g}\tc={p.c:g}")
    return 0


_RUNNERS = {
    "encrypt": _run_encrypt,
    "decrypt": _run_decrypt,
    "analyze": _run_analyze,
    "bench": _run_bench,
    "info": _run_info,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _RUNNERS[args.command](args)
    except (FormatError, DivergenceError, OSError, ValueError) as exc:
        print(f"meshcrypt: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
