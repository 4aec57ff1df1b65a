"""
Pytest configuration and fixtures for spackd tests.
"""

from pathlib import Path

import pytest

from spackd.parser.sequence import parse_sequence


@pytest.fixture
def project_root() -> Path:
    """Return the project root directory."""
    return Path(__file__).parent.parent


@pytest.fixture
def ones():
    return parse_sequence("1^inf")


@pytest.fixture
def pairs():
    """(1, 1, 2^inf)"""
    return parse_sequence("1,1,2^inf")


@pytest.fixture
def packing():
    """(1, 2^inf)"""
    return parse_sequence("1,2^inf")


@pytest.fixture
def twos():
    return parse_sequence("2^inf")

