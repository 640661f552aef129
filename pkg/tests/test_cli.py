import numpy as np
import pytest

from meshcrypt.cli import main
from meshcrypt.formats import (
    RgbImage,
    TexturedModel,
    parse_obj,
    parse_ppm,
    write_obj,
    write_ppm,
)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def tsv(out: str) -> dict:
    rows = [line.split("\t") for line in out.strip().splitlines()]
    return {row[0]: row[1:] for row in rows}


@pytest.fixture
def paths(data_dir):
    return {
        "model": str(data_dir / "model.obj"),
        "texture": str(data_dir / "texture.ppm"),
        "key": str(data_dir / "keys.txt"),
    }


class TestEncryptDecrypt:
    def test_round_trip_via_cli(self, capsys, tmp_path, paths, bundled_model, bundled_texture):
        out_dir = tmp_path / "enc"
        code, out, err = run(
            capsys,
            "encrypt",
            "--model", paths["model"],
            "--texture", paths["texture"],
            "--key", paths["key"],
            "--out", str(out_dir),
        )
        assert code == 0, err
        report = tsv(out)
        assert report["vertices"] == [str(len(bundled_model.vertices))]
        assert report["faces"] == [str(len(bundled_model.faces))]
        assert report["texture"] == ["128x128"]
        assert float(report["seconds"][0]) > 0
        enc_obj = out_dir / "model.enc.obj"
        enc_ppm = out_dir / "model.enc.ppm"
        assert enc_obj.exists() and enc_ppm.exists()

        # the encrypted artifacts are themselves valid OBJ/PPM
        enc_model = parse_obj(enc_obj.read_text())
        assert len(enc_model.vertices) == len(bundled_model.vertices)
        parse_ppm(enc_ppm.read_bytes())

        dec_dir = tmp_path / "dec"
        code, out, err = run(
            capsys,
            "decrypt",
            "--model", str(enc_obj),
            "--texture", str(enc_ppm),
            "--key", paths["key"],
            "--out", str(dec_dir),
        )
        assert code == 0, err
        dec_model = parse_obj((dec_dir / "model.dec.obj").read_text())
        dec_texture = parse_ppm((dec_dir / "model.dec.ppm").read_bytes())
        assert dec_model.faces == bundled_model.faces
        assert dec_texture == bundled_texture

        code, out, err = run(
            capsys,
            "analyze", "--mode", "diff",
            paths["model"], paths["texture"],
            str(dec_dir / "model.dec.obj"), str(dec_dir / "model.dec.ppm"),
        )
        assert code == 0
        report = tsv(out)
        assert report["vertex_match_fraction"] == ["1.000000"]
        assert report["faces_equal"] == ["true"]
        assert report["texture_byte_match_fraction"] == ["1.000000"]

    def test_missing_key_file(self, capsys, tmp_path, paths):
        code, out, err = run(
            capsys,
            "encrypt",
            "--model", paths["model"],
            "--texture", paths["texture"],
            "--key", str(tmp_path / "nope.keys"),
            "--out", str(tmp_path),
        )
        assert code != 0
        assert "nope.keys" in err
        assert len(err.strip().splitlines()) == 1

    def test_bad_model_file(self, capsys, tmp_path, paths):
        bad = tmp_path / "bad.obj"
        bad.write_text("v 1 2\n")
        code, _, err = run(
            capsys,
            "encrypt",
            "--model", str(bad),
            "--texture", paths["texture"],
            "--key", paths["key"],
            "--out", str(tmp_path),
        )
        assert code != 0
        assert "meshcrypt: error:" in err


class TestAnalyze:
    def test_entropy_of_constant_image(self, capsys, tmp_path):
        ppm = tmp_path / "flat.ppm"
        img = RgbImage(4, 4, np.full((4, 4, 3), 9, dtype=np.uint8))
        ppm.write_bytes(write_ppm(img))
        code, out, _ = run(capsys, "analyze", "--mode", "entropy", str(ppm))
        assert code == 0
        assert out.strip() == "0.000000"

    def test_diff_identical_files(self, capsys, paths):
        code, out, _ = run(
            capsys,
            "analyze", "--mode", "diff",
            paths["model"], paths["texture"], paths["model"], paths["texture"],
        )
        assert code == 0
        report = tsv(out)
        assert report["vertex_match_fraction"] == ["1.000000"]
        assert report["faces_equal"] == ["true"]
        assert report["texture_byte_match_fraction"] == ["1.000000"]

    def test_occupancy_single_vertex(self, capsys, tmp_path):
        obj = tmp_path / "point.obj"
        obj.write_text(write_obj(TexturedModel(vertices=[(1.0, 2.0, 3.0)])))
        code, out, _ = run(capsys, "analyze", "--mode", "occupancy", "--resolution", "4", str(obj))
        assert code == 0
        rows = [line.split("\t") for line in out.strip().splitlines()]
        assert len(rows) == 16
        nonzero = [row for row in rows if row[2] != "0"]
        assert len(nonzero) == 1
        assert nonzero[0][2] == "1"

    def test_histogram_rows(self, capsys, paths):
        code, out, _ = run(capsys, "analyze", "--mode", "histogram", "--bins", "8", str(paths["model"]))
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 24
        assert {line.split("\t")[0] for line in lines} == {"x", "y", "z"}

    def test_diff_wrong_arity(self, capsys, paths):
        code, _, err = run(capsys, "analyze", "--mode", "diff", paths["model"])
        assert code != 0
        assert "diff" in err


class TestBench:
    def test_small_sizes(self, capsys):
        code, out, _ = run(capsys, "bench", "--sizes", "30,60")
        assert code == 0
        rows = [line.split("\t") for line in out.strip().splitlines()]
        assert [row[0] for row in rows] == ["30", "60"]
        for row in rows:
            assert float(row[1]) > 0
            assert float(row[2]) > 0

    def test_bad_sizes(self, capsys):
        code, _, err = run(capsys, "bench", "--sizes", "ten")
        assert code != 0
        assert "--sizes" in err


class TestInfo:
    def test_default_keys(self, capsys):
        code, out, _ = run(capsys, "info")
        assert code == 0
        report = tsv(out)
        assert report["key_values"] == ["12"]
        assert abs(int(report["key_space_bits"][0]) - 599) <= 1
        key_rows = [report[k] for k in ("vertices", "polygons", "texture1", "texture2")]
        assert sum(len(r) for r in key_rows) == 12
        assert report["vertices"] == ["-6.045", "2.668", "16.363"]
        assert report["parameters"] == ["a=36", "b=3", "c=20"]

    def test_key_file(self, capsys, tmp_path):
        keyfile = tmp_path / "k.txt"
        keyfile.write_text(
            "vertices 1 2 3\npolygons 4 5 6\ntexture1 7 8 9\ntexture2 10 11 12\n"
        )
        code, out, _ = run(capsys, "info", "--key", str(keyfile))
        assert code == 0
        assert tsv(out)["vertices"] == ["1.0", "2.0", "3.0"]

    def test_bit_strength_arithmetic(self, capsys):
        code, out, _ = run(capsys, "info")
        import math

        assert int(tsv(out)["key_space_bits"][0]) == round(12 * 15 * math.log2(10))
