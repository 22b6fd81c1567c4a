import hypothesis
import pytest

from hgprod import from_tokens

hypothesis.settings.register_profile(
    "suite", deadline=None, max_examples=50
)
hypothesis.settings.load_profile("suite")


@pytest.fixture
def single_edge_factors():
    """The running example: one 2-edge factor and one 3-edge factor."""
    g = from_tokens("a b", ["a b"])
    h = from_tokens("x y z", ["x y z"])
    return g, h


@pytest.fixture
def square():
    """K2, whose cartesian square is the 4-cycle."""
    return from_tokens("0 1", ["0 1"])
