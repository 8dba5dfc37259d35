"""
Reprometer integration tests.

These tests drive the command-line interface end to end, in-process and as
a subprocess, and compare rendered reports against stored snapshots.

Run all integration tests:
    pytest tests/integration/ -v

Run only the snapshot tests:
    pytest tests/integration/ -m golden -v
"""
