import pytest

from quintloc import enumerate_all, tangent_weights


@pytest.fixture(scope="session")
def components():
    return enumerate_all()


@pytest.fixture(scope="session")
def models(components):
    """Tangent models keyed by component id, computed once per session."""
    return {c.id: tangent_weights(c) for c in components}
