"""Grayscale and RGB image containers.

Pixel data lives in 2-D numpy integer arrays (height x width); the number
of gray levels travels with the image so small-alphabet images (L = 4, 16)
are first-class.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True, eq=False)
class GrayImage:
    """A rectangular grid of integer intensities in [0, levels - 1]."""

    pixels: np.ndarray
    levels: int = 256

    def __post_init__(self):
        arr = np.asarray(self.pixels)
        if arr.ndim != 2 or arr.size == 0:
            raise ValueError("pixels must be a non-empty 2-D array")
        if not np.issubdtype(arr.dtype, np.integer):
            raise ValueError("pixels must have an integer dtype")
        if self.levels < 2:
            raise ValueError("levels must be at least 2")
        if arr.min() < 0 or arr.max() > self.levels - 1:
            raise ValueError("pixel values must lie in [0, levels - 1]")
        object.__setattr__(self, "pixels", arr)

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    @property
    def pixel_count(self) -> int:
        return self.pixels.size

    def mean(self) -> float:
        # Exact integer sum before the single division.
        return int(self.pixels.sum(dtype=np.int64)) / self.pixel_count

    def __eq__(self, other) -> bool:
        if not isinstance(other, GrayImage):
            return NotImplemented
        return self.levels == other.levels and np.array_equal(self.pixels, other.pixels)

    @classmethod
    def from_flat(cls, width: int, height: int, values, levels: int = 256) -> "GrayImage":
        arr = np.asarray(values, dtype=np.int64).reshape(height, width)
        return cls(arr, levels)


@dataclass(frozen=True, eq=False)
class ColorImage:
    """Three same-shaped gray planes sharing one level count."""

    red: GrayImage
    green: GrayImage
    blue: GrayImage

    def __post_init__(self):
        r, g, b = self.red, self.green, self.blue
        if not (r.pixels.shape == g.pixels.shape == b.pixels.shape):
            raise ValueError("color planes must share dimensions")
        if not (r.levels == g.levels == b.levels):
            raise ValueError("color planes must share levels")

    @property
    def width(self) -> int:
        return self.red.width

    @property
    def height(self) -> int:
        return self.red.height

    @property
    def levels(self) -> int:
        return self.red.levels

    @property
    def planes(self) -> tuple:
        return (self.red, self.green, self.blue)

    def luma(self) -> GrayImage:
        """Rounded (half-up) per-pixel average of the three channels."""
        s = (
            self.red.pixels.astype(np.int64)
            + self.green.pixels
            + self.blue.pixels
        )
        avg = (2 * s + 3) // 6
        return GrayImage(avg, self.levels)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ColorImage):
            return NotImplemented
        return (
            self.red == other.red
            and self.green == other.green
            and self.blue == other.blue
        )
