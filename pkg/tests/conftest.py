import pytest

from e2ab.ringspec import parse_ring_spec


@pytest.fixture(scope="session")
def ring():
    cache = {}

    def get(spec):
        if spec not in cache:
            cache[spec] = parse_ring_spec(spec)
        return cache[spec]

    return get
