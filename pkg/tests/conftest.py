import numpy as np
import pytest

from symphot.fock import PolarizationAmplitude


def random_params(n, rng):
    raw = rng.normal(size=(n, 4))
    return [
        PolarizationAmplitude.from_unnormalized(
            complex(r[0], r[1]), complex(r[2], r[3])
        )
        for r in raw
    ]


def random_coefficients(n, rng):
    c = rng.normal(size=n + 1) + 1j * rng.normal(size=n + 1)
    return c / np.linalg.norm(c)


@pytest.fixture
def rng():
    return np.random.default_rng(20260823)
