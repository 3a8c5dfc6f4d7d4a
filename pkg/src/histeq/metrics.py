"""Image quality measures: AMBE, MSE/PSNR, global SSIM and entropy."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .exceptions import DimensionMismatch
from .image import GrayImage


@dataclass(frozen=True)
class SsimConstants:
    c1: float
    c2: float

    def __post_init__(self):
        if self.c1 <= 0 or self.c2 <= 0:
            raise ValueError("SSIM constants must be positive")

    @classmethod
    def default(cls, levels: int) -> "SsimConstants":
        # Standard (0.01 L, 0.03 L) convention on the dynamic range L-1.
        return cls((0.01 * (levels - 1)) ** 2, (0.03 * (levels - 1)) ** 2)


@dataclass
class MetricReport:
    ambe: float
    psnr: float
    ssim: float
    entropy_in: float
    entropy_out: float


def _check_pair(x: GrayImage, y: GrayImage):
    if x.pixels.shape != y.pixels.shape or x.levels != y.levels:
        raise DimensionMismatch(
            f"images differ: {x.pixels.shape}/L={x.levels} vs {y.pixels.shape}/L={y.levels}"
        )


def ambe(x: GrayImage, y: GrayImage) -> float:
    """Absolute mean brightness error, exact integer sums before dividing."""
    _check_pair(x, y)
    sx = int(x.pixels.sum(dtype=np.int64))
    sy = int(y.pixels.sum(dtype=np.int64))
    return abs(sx - sy) / x.pixel_count


def mse(x: GrayImage, y: GrayImage) -> float:
    _check_pair(x, y)
    diff = x.pixels.astype(np.int64) - y.pixels.astype(np.int64)
    return int(np.sum(diff * diff)) / x.pixel_count


def psnr(x: GrayImage, y: GrayImage) -> float:
    """Peak signal-to-noise ratio in dB; +inf for identical images."""
    err = mse(x, y)
    if err == 0.0:
        return math.inf
    peak = x.levels - 1
    return 10.0 * math.log10(peak * peak / err)


def ssim_global(x: GrayImage, y: GrayImage, k: SsimConstants | None = None) -> float:
    """Single-window structural similarity with population statistics."""
    _check_pair(x, y)
    if k is None:
        k = SsimConstants.default(x.levels)
    a = x.pixels.astype(np.float64)
    b = y.pixels.astype(np.float64)
    mu_x = a.mean()
    mu_y = b.mean()
    var_x = ((a - mu_x) ** 2).mean()
    var_y = ((b - mu_y) ** 2).mean()
    cov = ((a - mu_x) * (b - mu_y)).mean()
    num = (2.0 * mu_x * mu_y + k.c1) * (2.0 * cov + k.c2)
    den = (mu_x * mu_x + mu_y * mu_y + k.c1) * (var_x + var_y + k.c2)
    return num / den


def entropy(p: np.ndarray) -> float:
    """Shannon entropy of a pdf in bits; empty bins contribute nothing."""
    p = np.asarray(p, dtype=np.float64)
    nz = p[p > 0]
    return float(-np.sum(nz * np.log2(nz)))


def report(x: GrayImage, y: GrayImage, k: SsimConstants | None = None) -> MetricReport:
    """All four measures of output ``y`` against reference ``x``."""
    from .histogram import compute_histogram, to_pdf

    return MetricReport(
        ambe=ambe(x, y),
        psnr=psnr(x, y),
        ssim=ssim_global(x, y, k),
        entropy_in=entropy(to_pdf(compute_histogram(x))),
        entropy_out=entropy(to_pdf(compute_histogram(y))),
    )
