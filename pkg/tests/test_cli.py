import io
import json
import subprocess
from importlib import metadata

import pytest

from loewner_lab import __version__
from loewner_lab.cli import dispatch
from loewner_lab.cli.manifest import (
    build_description,
    digest,
    package_version,
)


def run(*argv):
    stdout, stderr = io.StringIO(), io.StringIO()
    code = dispatch(list(argv), stdout=stdout, stderr=stderr)
    return code, stdout.getvalue(), stderr.getvalue()


def manifest_of(stderr):
    return json.loads(stderr.strip().splitlines()[-1])


TRACE = ("sle", "trace", "--kappa", "6", "--t", "1", "--dt", "1e-3",
         "--seed", "1")


def test_sle_trace_writes_one_row_per_grid_time():
    code, out, _ = run(*TRACE)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "t,re,im"
    assert len(lines) == 1002


def test_same_seed_gives_identical_output():
    _, first, _ = run(*TRACE)
    _, second, _ = run(*TRACE)
    assert first == second
    _, other, _ = run(*TRACE[:-1], "2")
    assert other != first


def test_manifest_records_the_run():
    code, out, err = run(*TRACE)
    assert code == 0
    assert len(err.strip().splitlines()) == 1
    manifest = manifest_of(err)
    assert manifest["seed"] == 1
    assert manifest["command"] == list(TRACE)
    assert manifest["parameters"]["kappa"] == 6.0
    assert manifest["outputs"] == {"-": digest(out.encode("utf-8"))}


def test_output_file(tmp_path):
    target = tmp_path / "trace.csv"
    code, out, err = run(*TRACE, "--out", str(target))
    assert code == 0
    assert out == ""
    text = target.read_text(encoding="utf-8")
    assert len(text.splitlines()) == 1002
    assert manifest_of(err)["outputs"] == {
        str(target): digest(text.encode("utf-8"))
    }


def test_config_file_is_merged_under_explicit_flags(tmp_path):
    config = tmp_path / "run.conf"
    config.write_text(
        "# short run\nkappa = 2\nt = 0.01\ndt = 0.001\n", encoding="utf-8"
    )
    code, out, err = run(
        "sle", "trace", "--config", str(config), "--kappa", "6",
        "--seed", "3",
    )
    assert code == 0
    assert len(out.splitlines()) == 12
    parameters = manifest_of(err)["parameters"]
    assert parameters["kappa"] == 6.0
    assert parameters["t"] == 0.01


def test_bad_config_file_is_a_usage_error(tmp_path):
    config = tmp_path / "bad.conf"
    config.write_text("kappa 2\n", encoding="utf-8")
    code, _, err = run(
        "sle", "trace", "--config", str(config), "--kappa", "2"
    )
    assert code == 2
    assert "config" in err


def test_oracle():
    code, out, _ = run("oracle", "cardy-triangle", "--x", "0.3")
    assert code == 0
    result = json.loads(out)
    assert result["name"] == "cardy-triangle"
    assert result["value"] == 0.3


def test_oracle_outside_its_domain_is_a_usage_error():
    code, _, err = run("oracle", "dipolar-left", "--z=0.5+1j", "--kappa", "3")
    assert code == 2
    assert "invalid parameters" in err


def test_numerical_failure_exits_with_one():
    code, out, err = run("growth", "lg-zn", "--n", "3", "--t", "1")
    assert code == 1
    assert out == ""
    assert "cusp" in err.lower()


def test_deterministic_growth_command():
    code, out, _ = run("growth", "lg-zn", "--n", "3", "--t", "0.1")
    assert code == 0
    result = json.loads(out)
    assert 0 < result["R"] < 1
    assert result["beta"] == pytest.approx(result["R"], rel=1e-6)


def test_verify_suite():
    code, out, _ = run("verify", "--suite", "loop-erase", "--seed", "0")
    assert code == 0
    assert json.loads(out)["passed"] is True


@pytest.mark.parametrize("argv, expected", [
    (("--help",), 0),
    (("sle", "trace", "--help"), 0),
    (("sle", "trace", "--kappa", "2", "--bogus"), 2),
    (("sle", "trace"), 2),
    (("nothing",), 2),
])
def test_usage_exit_codes(argv, expected):
    code, _, _ = run(*argv)
    assert code == expected


def test_manifest_records_the_installed_version():
    _, _, err = run(*TRACE)
    assert manifest_of(err)["version"] == package_version()


def test_package_version_falls_back_to_the_source_tree(monkeypatch):
    def missing(name):
        raise metadata.PackageNotFoundError(name)

    monkeypatch.setattr(metadata, "version", missing)
    assert package_version() == __version__


def test_build_description_without_git(monkeypatch):
    def no_git(*args, **kwargs):
        raise FileNotFoundError("git")

    monkeypatch.setattr(subprocess, "run", no_git)
    assert build_description() is None
    _, _, err = run(*TRACE)
    assert "build" not in manifest_of(err)
