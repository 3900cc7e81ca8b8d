from __future__ import annotations

import pytest

from coxspecial.rootsystem import build, parse_type


@pytest.fixture
def rs():
    """Factory: rs("D5") -> cached root system."""
    return lambda name: build(parse_type(name))
