"""Shared pytest fixtures for ffcount tests."""

import json
from pathlib import Path
from typing import Any, Callable, Dict

import pytest
from click.testing import CliRunner

from ffcount.gf import FieldCtx, build_field

GOLDEN_DIR = Path(__file__).parent / "golden"


@pytest.fixture(autouse=True)
def temp_home(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Path:
    """Create a temporary home directory for config isolation."""
    home = tmp_path / "home"
    home.mkdir()
    monkeypatch.setenv("HOME", str(home))
    monkeypatch.delenv("FFCOUNT_BUDGET", raising=False)
    return home


@pytest.fixture
def temp_config_dir(temp_home: Path) -> Path:
    """Create a temporary .ffcount config directory."""
    config_dir = temp_home / ".ffcount"
    config_dir.mkdir(parents=True)
    return config_dir


@pytest.fixture
def run_log_file(temp_config_dir: Path) -> Path:
    """Create a sample run log."""
    log_path = temp_config_dir / "runs.jsonl"
    sample_runs = [
        {
            "timestamp": "2024-12-27T10:00:00.000000",
            "command": "count-star",
            "field": "3,4,2 0 0 1 1",
            "method": "CLOSED_FORM_B0",
            "count": 320,
            "elapsed_ms": 1.5,
            "level": "success",
            "message": "count-star finished",
        },
        {
            "timestamp": "2024-12-27T11:00:00.000000",
            "command": "count",
            "field": "2,4,1 1 0 0 1",
            "reason": "not_star_equivalent",
            "elapsed_ms": 3.25,
            "level": "error",
            "message": "Witness is not *-equivalent to f",
        },
    ]
    with open(log_path, "w") as f:
        for run in sample_runs:
            f.write(json.dumps(run) + "\n")
    return log_path


@pytest.fixture(scope="session")
def f5() -> FieldCtx:
    return build_field(5, 1)


@pytest.fixture(scope="session")
def f7() -> FieldCtx:
    return build_field(7, 1)


@pytest.fixture(scope="session")
def f16() -> FieldCtx:
    return build_field(2, 4)


@pytest.fixture(scope="session")
def f31() -> FieldCtx:
    return build_field(31, 1)


@pytest.fixture(scope="session")
def f64() -> FieldCtx:
    return build_field(2, 6)


@pytest.fixture(scope="session")
def f81() -> FieldCtx:
    return build_field(3, 4)


@pytest.fixture(scope="session")
def f256() -> FieldCtx:
    return build_field(2, 8)


@pytest.fixture(scope="session")
def f729() -> FieldCtx:
    return build_field(3, 6)


@pytest.fixture
def cli_runner() -> CliRunner:
    """Click CLI test runner."""
    return CliRunner()


@pytest.fixture
def golden() -> Callable[[str], Dict[str, Any]]:
    """Loader for expected results in tests/golden/."""

    def load(name: str) -> Dict[str, Any]:
        with open(GOLDEN_DIR / f"{name}.json") as f:
            return json.load(f)

    return load
