"""Unit tests for svt.

Run them with

    python -m svt.test.util.runtests

Tests tagged "slow" are skipped unless SVT_SLOW_TESTS is set or -i slow is
passed.
"""
from .util.runtests import run

__all__ = ["run"]
