"""
Pytest configuration and shared fixtures for reprometer tests.
"""

import os
import subprocess
import sys
from collections.abc import Callable
from pathlib import Path

import pytest

# Add src to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

# =============================================================================
# Subprocess coverage
# =============================================================================
# CLI tests spawn `python -m reprometer.cli` out-of-process. Pointing
# COVERAGE_PROCESS_START at pyproject.toml (parallel=true) lets the spawned
# processes write .coverage.* files that pytest-cov combines at the end.
os.environ.setdefault(
    "COVERAGE_PROCESS_START",
    str(Path(__file__).parent.parent / "pyproject.toml"),
)


# =============================================================================
# Path Fixtures
# =============================================================================


@pytest.fixture(scope="session")
def project_root() -> Path:
    """Return the project root directory."""
    return Path(__file__).parent.parent


@pytest.fixture(scope="session")
def tests_dir() -> Path:
    """Return the tests directory."""
    return Path(__file__).parent


@pytest.fixture(scope="session")
def data_dir(project_root: Path) -> Path:
    """Return the bundled data directory of the package."""
    return project_root / "src" / "reprometer" / "data"


@pytest.fixture(scope="session")
def examples_dir(data_dir: Path) -> Path:
    """Return the bundled example datasets directory."""
    return data_dir / "examples"


@pytest.fixture(scope="session")
def schemas_dir(data_dir: Path) -> Path:
    """Return the bundled schemas directory."""
    return data_dir / "schemas"


@pytest.fixture(scope="session")
def golden_dir(tests_dir: Path) -> Path:
    """Return the golden snapshot directory."""
    return tests_dir / "integration" / "golden"


# =============================================================================
# CLI Runner Fixtures
# =============================================================================


@pytest.fixture
def reprometer_cli(project_root: Path) -> Callable[..., subprocess.CompletedProcess]:
    """Fixture to run reprometer CLI commands in a subprocess."""

    def _run_cli(
        *args: str, timeout: int = 60, cwd: Path | None = None
    ) -> subprocess.CompletedProcess:
        cmd = [sys.executable, "-m", "reprometer.cli", *args]
        return subprocess.run(
            cmd,
            capture_output=True,
            text=True,
            timeout=timeout,
            cwd=cwd or project_root,
            env={**os.environ, "PYTHONPATH": str(project_root / "src")},
        )

    return _run_cli


@pytest.fixture
def accept_golden(request: pytest.FixtureRequest) -> bool:
    """True when golden snapshots should be rewritten instead of compared."""
    return bool(request.config.getoption("--accept-golden"))


# =============================================================================
# Options
# =============================================================================


# NOTE: Custom markers are registered declaratively in pyproject.toml under
# [tool.pytest.ini_options].markers (the single source of truth, enforced via
# --strict-markers). Do not re-register them here.


def pytest_addoption(parser):
    """Add custom command line options."""
    parser.addoption(
        "--accept-golden",
        action="store_true",
        default=False,
        help="Rewrite golden snapshots from the current output",
    )
