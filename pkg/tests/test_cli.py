import csv
import io
import json

import numpy as np
import pytest
from scipy.io import wavfile

from saptak.cli import main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_tune_table_csv():
    code, out, _ = run("tune-table", "--base", "261.6256", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 21
    raudri = next(r for r in rows if r["name"] == "Raudri")
    assert raudri["just_hz"] == "294.3288"


def test_tune_table_text():
    code, out, _ = run("tune-table")
    assert code == 0
    assert "Kumudvati (ni)" in out and "490.5479" in out


@pytest.mark.parametrize(
    "argv",
    [
        ("tune-table", "--format", "json"),
        ("saptak", "--format", "json"),
        ("scale-change", "--from", "C2", "--steps", "5", "--format", "json"),
        ("murchhana", "--all", "--format", "json"),
        ("murchhana", "--shift", "3", "--format", "json"),
    ],
)
def test_json_is_strict(argv):
    code, out, _ = run(*argv)
    assert code == 0
    json.loads(out, parse_constant=lambda c: pytest.fail(f"non-standard constant {c}"))


def test_murchhana_rejected():
    code, out, err = run("murchhana", "--shift", "6")
    assert code == 1
    assert "pa" in err and "teevra ma" in err


def test_murchhana_rejected_quiet():
    code, out, err = run("murchhana", "--shift", "6", "--quiet")
    assert code == 0 and err == ""
    assert "rejected" in out


def test_murchhana_all():
    code, out, _ = run("murchhana", "--all", "--format", "json")
    data = json.loads(out)
    assert len(data) == 7
    assert sum(d["accepted"] for d in data) == 6


def test_murchhana_grid():
    code, out, _ = run("murchhana", "--all")
    assert out.splitlines()[1].split()[:3] == ["Kafi", "*", "sa"]


def test_murchhana_csv():
    code, out, _ = run("murchhana", "--all", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert rows[3]["degrees"] == "s r g M p d n"
    assert rows[6]["accepted"] == "false"


def test_scale_change():
    code, out, _ = run("scale-change", "--from", "C2", "--steps", "5", "--format", "json")
    data = json.loads(out)
    assert data["to_hz"] == pytest.approx(87.307, abs=1e-3)
    assert data["to_note"] == "F2"


def test_saptak_clamped():
    code, out, _ = run("saptak", "--low", "-9", "--high", "9", "--format", "json")
    data = json.loads(out)
    assert len(data) == 12 * 6
    assert data[0]["register"] == "ati-mandra" and data[-1]["register"] == "ati-ati-tar"


def test_saptak_off_lattice_has_blank_names():
    code, out, _ = run("saptak", "--base", "300", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert all(r["western"] == "" for r in rows)


def test_transpose_files(tmp_path):
    src = tmp_path / "in.sargam"
    dst = tmp_path / "out.sargam"
    src.write_text("# ascending\ns r g m p d n s'\n")
    code, _, _ = run("transpose", "--in", str(src), "--out", str(dst), "--mode", "murchhana", "--shift", "1")
    assert code == 0
    assert dst.read_text().splitlines()[-1] == "s r G m p d N s'"


def test_transpose_scale_change(tmp_path):
    src = tmp_path / "in.sargam"
    src.write_text("@tonic C3\ns r g\n")
    code, out, _ = run("transpose", "--in", str(src), "--mode", "scale-change", "--shift", "5")
    assert out == "@tonic F3\ns r g\n"


def test_transpose_errors(tmp_path):
    src = tmp_path / "in.sargam"
    src.write_text("s G\n")
    code, _, err = run("transpose", "--in", str(src), "--mode", "murchhana", "--shift", "1")
    assert code == 1 and "shuddha" in err
    src.write_text("s x\n")
    code, _, err = run("transpose", "--in", str(src), "--mode", "murchhana", "--shift", "1")
    assert code == 1 and "token 2" in err
    src.write_text("s''''\n")
    code, _, err = run("transpose", "--in", str(src), "--mode", "scale-change", "--shift", "1")
    assert code == 1 and "register" in err


def test_usage_errors(capsys):
    assert run()[0] == 2
    assert run("murchhana", "--shift", "7")[0] == 2
    assert run("murchhana")[0] == 2
    assert run("tune-table", "--base", "nonsense")[0] == 2
    assert run("transpose", "--mode", "murchhana", "--shift", "9")[0] == 2


def test_synth(tmp_path):
    path = tmp_path / "kafi.wav"
    code, out, _ = run("synth", "--shift", "1", "--out", str(path), "--rate", "8000", "--note-seconds", "0.25")
    assert code == 0
    summary = json.loads(out)
    rate, data = wavfile.read(path)
    assert rate == 8000 and data.size == summary["samples"] == 8 * 2000
    assert summary["melody"] == "s r G m p d N s'"


def test_synth_melody_file(tmp_path):
    src = tmp_path / "m.sargam"
    src.write_text("@tonic A3\ns - p:2\n")
    path = tmp_path / "m.wav"
    code, out, _ = run("synth", "--in", str(src), "--out", str(path))
    assert code == 0
    _, data = wavfile.read(path)
    assert data.size == 4 * 22050
    assert not np.any(data[22050:44100])


def test_deterministic_stdout():
    a = run("murchhana", "--all", "--format", "json")
    b = run("murchhana", "--all", "--format", "json")
    assert a == b
