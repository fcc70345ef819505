import json
import subprocess
import sys
from pathlib import Path

import pytest

from redcore.cli import JobSyntaxError, main, parse_job

JOBS = Path(__file__).resolve().parent.parent / "jobs"


def write(tmp_path, text, name="job.job"):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def run_json(capsys, *argv):
    code = main([*argv, "--format", "json"])
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_parse_job_forms():
    job = parse_job("ring: x, y\n  char 0\n  mod [y^2 - x^3]\nideal m: [x,\n  y]\nseed: 5\n")
    assert job.ring.names == ("x", "y") and len(job.ring.relations) == 1
    assert job.ring.complete_intersection
    assert job.sources["m"] == ["x", "y"] and job.options["seed"] == 5
    job = parse_job("ring: a b c\nchar: 7\nideal I: [a^2, (b + c)*a, c^3 - 1/2*b]")
    assert job.ring.characteristic == 7 and len(job.ideals["I"].generators) == 3


@pytest.mark.parametrize(
    "text, line",
    [
        ("ideal I: [x]", None),
        ("ring: x\nideal I: [x + ]", 2),
        ("ring: x\nideal I: [z]", 2),
        ("ring: x\nchar: zero\nideal I: [x]", 2),
        ("ring: x\nbogus: 1\nideal I: [x]", 2),
        ("ring: x\nideal I: [x", 2),
        ("ring: x, x\nideal I: [x]", 1),
        ("ring: x\nideal I: x", 2),
    ],
)
def test_parse_errors(text, line):
    with pytest.raises(JobSyntaxError) as exc:
        parse_job(text)
    assert exc.value.line == line


def test_parse_error_has_column():
    with pytest.raises(JobSyntaxError) as exc:
        parse_job("ring: x, y\nideal I: [x^2 + * y]")
    assert exc.value.line == 2 and exc.value.column is not None


def test_commands_on_square(capsys):
    job = str(JOBS / "square.job")
    code, out = run_json(capsys, "gb", "-i", job)
    assert code == 0 and sorted(out["gb"]) == ["x*y", "x^2", "y^2"]
    code, out = run_json(capsys, "colon", "-i", job, "--ideal", "J", "--ideal", "I")
    assert sorted(out["generators"]) == ["x", "y"]
    code, out = run_json(capsys, "power", "-i", job, "--n", "2")
    assert out["colength"] == 10
    code, out = run_json(capsys, "intersect", "-i", job)
    assert sorted(out["generators"]) == ["x^2", "y^2"]
    code, out = run_json(capsys, "hilbert", "-i", job, "--n", "3")
    assert out["hilbert"] == [3, 7, 11, 15]
    code, out = run_json(capsys, "core", "-i", job, "--seed", "1")
    assert sorted(out["core_generators"]) == ["x*y^2", "x^2*y", "x^3", "y^3"] and out["core_certified"]
    code, out = run_json(capsys, "balanced", "-i", job, "--n", "1", "--samples", "3")
    assert out["independent"] is True


def test_core_on_maximal_ideal(tmp_path, capsys):
    job = write(tmp_path, "ring: x, y\nideal m: [x, y]\n")
    code, out = run_json(capsys, "core", "-i", job)
    assert code == 0
    assert sorted(out["core_generators"]) == ["x", "y"] and out["core_n_used"] == 0 and out["core_certified"]


def test_rednum_cusp(capsys):
    code, out = run_json(capsys, "rednum", "-i", str(JOBS / "cusp.job"))
    assert code == 0 and out["r_hat"] == 1 and out["r_samples"] == [1] * 8


def test_report_cusp(capsys):
    code, out = run_json(capsys, "report", "-i", str(JOBS / "cusp.job"), "--seed", "3")
    assert code == 0
    assert out["ell"] == 1 and out["r_hat"] == 1 and out["min_balanced_index"] == 1
    assert out["verdict"] == "consistent" and out["oracle_equals_core"]
    for key in ("ell", "height", "r_hat", "r_samples", "core_generators", "core_n_used", "core_certified",
                "mc_oracle_generators", "balanced", "min_balanced_index", "expected_index", "gr_cm",
                "depth_positive", "verdict", "seed"):
        assert key in out


def test_text_and_json_agree(capsys):
    job = str(JOBS / "cusp.job")
    main(["rednum", "-i", job, "--seed", "4"])
    text = capsys.readouterr().out
    code, out = run_json(capsys, "rednum", "-i", job, "--seed", "4")
    assert f"r_hat: {out['r_hat']}" in text
    assert "r_samples: [" + ", ".join(map(str, out["r_samples"])) + "]" in text


def test_engine_error_exit_code(tmp_path, capsys):
    job = write(tmp_path, "ring: x, y\nideal I: [x]\n")
    code = main(["power", "-i", job, "--format", "json"])
    out = json.loads(capsys.readouterr().out)
    assert code == 1 and out["error"]["code"] == "NotMPrimaryLocally"


def test_parse_error_exit_code(tmp_path, capsys):
    job = write(tmp_path, "ring: x, y\nideal I: [x^2 + * y]\n")
    code = main(["gb", "-i", job])
    err = capsys.readouterr().err
    assert code == 2 and "ParseError" in err and "line 2" in err


def test_degree_cap_surfaces(tmp_path, capsys):
    job = write(tmp_path, "ring: x, y\nideal I: [x^5*y - y^4 + x, x*y^6 - x^3 + y]\n")
    code = main(["gb", "-i", job, "--degree-cap", "8", "--format", "json"])
    assert code == 1 and json.loads(capsys.readouterr().out)["error"]["code"] == "DegreeCapExceeded"
    code = main(["gb", "-i", job, "--format", "json"])
    assert code == 0 and json.loads(capsys.readouterr().out)["gb"]


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "redcore", "gb", "-i", str(JOBS / "square.job")],
                         capture_output=True, text=True, check=True)
    assert "gb:" in res.stdout


def test_report_determinism(capsys):
    job = str(JOBS / "square.job")
    main(["report", "-i", job, "--seed", "9", "--format", "json"])
    a = capsys.readouterr().out
    main(["report", "-i", job, "--seed", "9", "--format", "json"])
    b = capsys.readouterr().out
    assert a == b
