"""Seeded synthetic test images: gradients, bimodal scenes, noise textures.

Stands in for a real photo corpus in CI and benchmarks. The generator is
deterministic for a given seed, and the images are brightness-skewed on
purpose so that the brightness-preservation differences between methods
are visible.
"""

from __future__ import annotations

import numpy as np

from .image import GrayImage


def _clip_levels(arr: np.ndarray, levels: int) -> np.ndarray:
    return np.clip(np.rint(arr), 0, levels - 1).astype(np.int64)


def gradient_image(rng: np.random.Generator, size: int, levels: int) -> GrayImage:
    """Diagonal ramp over a random sub-range of the gray scale, plus noise."""
    lo = rng.integers(0, levels // 4)
    hi = rng.integers(levels // 3, levels - 1)
    yy, xx = np.mgrid[0:size, 0:size]
    ramp = (xx + yy) / (2 * (size - 1)) if size > 1 else np.zeros((1, 1))
    vals = lo + (hi - lo) * ramp + rng.normal(0, levels * 0.01, (size, size))
    return GrayImage(_clip_levels(vals, levels), levels)


def bimodal_image(rng: np.random.Generator, size: int, levels: int) -> GrayImage:
    """Dark background with a brighter blob, two-peaked histogram."""
    bg = rng.integers(levels // 16, levels // 4)
    fg = rng.integers(levels // 2, 3 * levels // 4)
    vals = rng.normal(bg, levels * 0.02, (size, size))
    cy, cx = rng.integers(0, size, 2)
    radius = max(1, size // 4)
    yy, xx = np.mgrid[0:size, 0:size]
    blob = (yy - cy) ** 2 + (xx - cx) ** 2 <= radius**2
    vals[blob] = rng.normal(fg, levels * 0.02, int(blob.sum()))
    return GrayImage(_clip_levels(vals, levels), levels)


def noise_image(rng: np.random.Generator, size: int, levels: int) -> GrayImage:
    """Gaussian texture around a random off-center mean."""
    side = rng.integers(0, 2)
    mean = rng.uniform(levels * 0.1, levels * 0.3)
    if side:
        mean = levels - 1 - mean
    std = rng.uniform(levels * 0.02, levels * 0.08)
    vals = rng.normal(mean, std, (size, size))
    return GrayImage(_clip_levels(vals, levels), levels)


_GENERATORS = (
    ("gradient", gradient_image),
    ("bimodal", bimodal_image),
    ("noise", noise_image),
)


def generate_corpus(count: int, size: int = 64, levels: int = 256, seed: int = 0) -> list:
    """Deterministic list of (name, GrayImage), cycling the three kinds."""
    rng = np.random.default_rng(seed)
    out = []
    for i in range(count):
        kind, fn = _GENERATORS[i % len(_GENERATORS)]
        out.append((f"{kind}_{i:03d}.pgm", fn(rng, size, levels)))
    return out
