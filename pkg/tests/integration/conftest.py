"""
Integration test fixtures and configuration.

These fixtures are specific to integration tests and build on top of
the base fixtures in tests/conftest.py.
"""

from collections.abc import Callable
from pathlib import Path

import pytest

# =============================================================================
# Golden Snapshots
# =============================================================================


@pytest.fixture
def assert_golden(golden_dir: Path, accept_golden: bool) -> Callable[[str, str], None]:
    """
    Compare output with a stored snapshot byte for byte.

    With --accept-golden the snapshot is rewritten instead.

    Usage:
        assert_golden("torc.txt", result.stdout)
    """

    def _assert(name: str, actual: str) -> None:
        path = golden_dir / name
        if accept_golden:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(actual, encoding="utf-8")
            return
        assert path.exists(), f"missing snapshot {path}; run with --accept-golden"
        expected = path.read_text(encoding="utf-8")
        assert actual == expected

    return _assert
