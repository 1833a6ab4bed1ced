import numpy as np
import pytest
from hypothesis import settings

from trigeig import TrigSpec

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture
def rng():
    return np.random.default_rng(20121016)


def generic_spec(rng, n):
    return TrigSpec(rng.uniform(0, 2 * np.pi, n), rng.standard_normal(n), rng.standard_normal(n))


def descending(values):
    return np.sort(np.asarray(values))[::-1]
