import numpy as np
import pytest

from histeq import GrayImage


def random_image(rng, width=None, height=None, levels=None):
    """Random image with at least one pixel; defaults to tiny oracle sizes."""
    if levels is None:
        levels = int(rng.choice([2, 4, 8, 16]))
    if width is None:
        width = int(rng.integers(1, 17))
    if height is None:
        height = int(rng.integers(1, 17))
    pixels = rng.integers(0, levels, size=(height, width), dtype=np.int64)
    return GrayImage(pixels, levels)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
