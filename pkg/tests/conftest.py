import pytest

from primdec.field import build_field

_CACHE = {}


def field(p):
    """Session-wide field cache; PrimeField is immutable so sharing is safe."""
    if p not in _CACHE:
        _CACHE[p] = build_field(p)
    return _CACHE[p]


@pytest.fixture
def f13():
    return field(13)


@pytest.fixture
def f19():
    return field(19)
