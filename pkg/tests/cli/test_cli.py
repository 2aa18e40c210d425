from pathlib import Path

import pytest
from typer.testing import CliRunner

from pyfixpoint.__about__ import __version__
from pyfixpoint.cli import app
from pyfixpoint.shared.consts import ExitCode

runner = CliRunner()


@pytest.mark.parametrize(
    "args,code",
    [
        pytest.param(["certify", "{file}"], ExitCode.OK, id="certify"),
        pytest.param(["solve", "{file}"], ExitCode.OK, id="solve"),
        pytest.param(["solve", "{file}", "--max-iter", "3"], ExitCode.NON_CONVERGENCE, id="iteration_cap"),
        pytest.param(["solve", "{file}", "--start", "10", "--start", "123.4"], ExitCode.OK, id="extra_starts"),
        pytest.param(["solve", "{file}", "--start", "ten"], ExitCode.USAGE, id="bad_start"),
        pytest.param(["certify", "{file}", "--samples", "0"], ExitCode.USAGE, id="zero_samples"),
        pytest.param(["certify", "{file}", "--tol", "0"], ExitCode.USAGE, id="zero_tol"),
        pytest.param(["certify", "missing.json"], ExitCode.USAGE, id="missing_file"),
        pytest.param(["gallery", "max-half"], ExitCode.OK, id="gallery_entry"),
        pytest.param(["gallery", "identity-quarter"], ExitCode.VIOLATION, id="gallery_negative"),
        pytest.param(["gallery", "nope"], ExitCode.USAGE, id="gallery_unknown"),
    ],
)
def test_exit_codes(args: list[str], code: ExitCode, max_half_file: Path):
    result = runner.invoke(app, [a.format(file=max_half_file) for a in args])
    assert result.exit_code == code, result.output


def test_gallery_list():
    result = runner.invoke(app, ["gallery", "list"])
    assert result.exit_code == ExitCode.OK
    assert "max-half" in result.output


def test_export_then_certify(tmp_path: Path):
    file = tmp_path / "abs_half.json"
    exported = runner.invoke(app, ["export", "abs-half", str(file)])
    assert exported.exit_code == ExitCode.OK, exported.output
    assert file.is_file()

    certified = runner.invoke(app, ["certify", str(file)])
    assert certified.exit_code == ExitCode.OK, certified.output


def test_report_bytes_repeat(tmp_path: Path, max_half_file: Path):
    first, second = tmp_path / "first.json", tmp_path / "second.json"
    for report in (first, second):
        result = runner.invoke(app, ["solve", str(max_half_file), "--report", str(report)])
        assert result.exit_code == ExitCode.OK, result.output
    assert first.read_bytes() == second.read_bytes()


def test_version():
    result = runner.invoke(app, ["version"])
    assert result.exit_code == 0
    assert result.output.strip() == __version__
