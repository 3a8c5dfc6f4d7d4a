"""Histogram statistics, split points and the per-segment equalization map.

Every enhancement method in :mod:`histeq.equalizers` is a composition of
the operations here: build a histogram, pick split levels, and stretch each
segment's cumulative distribution onto an output range.

Bin-level arithmetic deliberately runs as sequential Python loops with one
final division per cumulative value. The evaluation order is part of the
contract: identical inputs give bit-identical lookup tables across runs and
across independent re-implementations that follow the same order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .exceptions import EmptyHistogram, LevelMismatch, ZeroMassSegment
from .image import GrayImage

MEAN_SPLIT = "mean"
EQUAL_AREA_SPLIT = "equal-area"


@dataclass(frozen=True)
class Segment:
    """Inclusive gray-level interval with its original-pdf mass."""

    lo: int
    hi: int
    mass: float

    def __post_init__(self):
        if not 0 <= self.lo <= self.hi:
            raise ValueError("segment bounds must satisfy 0 <= lo <= hi")


def compute_histogram(img: GrayImage) -> np.ndarray:
    """Per-level pixel counts, length ``img.levels``."""
    return np.bincount(img.pixels.ravel(), minlength=img.levels).astype(np.int64)


def to_pdf(counts: np.ndarray) -> np.ndarray:
    """Normalize counts to probabilities; raises EmptyHistogram on N = 0."""
    counts = np.asarray(counts)
    total = int(counts.sum())
    if total == 0:
        raise EmptyHistogram("histogram has no pixels")
    return counts / total


def to_cdf(p: np.ndarray) -> np.ndarray:
    c = np.empty(len(p), dtype=np.float64)
    run = 0.0
    for k in range(len(p)):
        run += p[k]
        c[k] = run
    return c


def segment_mass(p: np.ndarray, lo: int, hi: int) -> float:
    run = 0.0
    for k in range(lo, hi + 1):
        run += p[k]
    return run


def make_segment(p: np.ndarray, lo: int, hi: int) -> Segment:
    return Segment(lo, hi, segment_mass(p, lo, hi))


def mean_level(p: np.ndarray, seg: Segment) -> int:
    """Floor of the mass-weighted mean level of ``seg``.

    Clamped to [lo, hi - 1] when the segment spans more than one level so a
    split at the result always yields two nonempty child intervals.
    """
    s0 = 0.0
    s1 = 0.0
    for k in range(seg.lo, seg.hi + 1):
        s0 += p[k]
        s1 += k * p[k]
    if s0 == 0.0:
        raise ZeroMassSegment(f"segment [{seg.lo}, {seg.hi}] has zero mass")
    m = math.floor(s1 / s0)
    if seg.hi > seg.lo:
        m = min(max(m, seg.lo), seg.hi - 1)
    else:
        m = seg.lo
    return m


def equal_area_level(p: np.ndarray, seg: Segment) -> int:
    """Smallest level whose segment-cdf is nearest the segment's midpoint.

    The segment pdf is renormalized, so the cdf reaches exactly 1 at ``hi``
    and the midpoint target is (c(lo) + 1) / 2. Ties go to the smaller
    level; the result is clamped to [lo, hi - 1] for multi-level segments.
    """
    total = segment_mass(p, seg.lo, seg.hi)
    if total == 0.0:
        raise ZeroMassSegment(f"segment [{seg.lo}, {seg.hi}] has zero mass")
    c_lo = p[seg.lo] / total
    target = (c_lo + 1.0) / 2.0
    run = 0.0
    best_k = seg.lo
    best_d = math.inf
    for k in range(seg.lo, seg.hi + 1):
        run += p[k]
        d = abs(run / total - target)
        if d < best_d:
            best_d = d
            best_k = k
    if seg.hi > seg.lo:
        best_k = min(best_k, seg.hi - 1)
    return best_k


def segment_transform(p: np.ndarray, seg: Segment, out_lo: int, out_hi: int) -> np.ndarray:
    """Equalization map for one segment: levels [lo, hi] -> [out_lo, out_hi].

    map[k] = round-half-up(out_lo + (out_hi - out_lo) * c_seg(k)) where
    c_seg is the cumulative of the segment-renormalized pdf. A zero-mass
    segment maps to itself.
    """
    if out_lo > out_hi:
        raise ValueError("out_lo must not exceed out_hi")
    n = seg.hi - seg.lo + 1
    total = segment_mass(p, seg.lo, seg.hi)
    if total == 0.0:
        return np.arange(seg.lo, seg.hi + 1, dtype=np.int64)
    out = np.empty(n, dtype=np.int64)
    span = out_hi - out_lo
    run = 0.0
    for k in range(seg.lo, seg.hi + 1):
        run += p[k]
        v = math.floor(out_lo + span * (run / total) + 0.5)
        out[k - seg.lo] = min(max(v, out_lo), out_hi)
    return out


def apply_map(img: GrayImage, lut: np.ndarray) -> GrayImage:
    lut = np.asarray(lut)
    if len(lut) != img.levels:
        raise LevelMismatch(
            f"lookup table has {len(lut)} entries, image has {img.levels} levels"
        )
    return GrayImage(lut[img.pixels], img.levels)


def recursive_segment(p: np.ndarray, depth: int, split: str = MEAN_SPLIT) -> list:
    """Split [0, L-1] into at most 2**depth segments.

    Each round splits every multi-level, nonzero-mass segment at its mean
    or equal-area level; degenerate segments pass through untouched.
    """
    if depth < 0:
        raise ValueError("depth must be non-negative")
    if split not in (MEAN_SPLIT, EQUAL_AREA_SPLIT):
        raise ValueError(f"unknown split mode {split!r}")
    pick = mean_level if split == MEAN_SPLIT else equal_area_level
    segs = [make_segment(p, 0, len(p) - 1)]
    for _ in range(depth):
        nxt = []
        for seg in segs:
            if seg.hi > seg.lo and seg.mass > 0.0:
                cut = pick(p, seg)
                nxt.append(make_segment(p, seg.lo, cut))
                nxt.append(make_segment(p, cut + 1, seg.hi))
            else:
                nxt.append(seg)
        segs = nxt
    return segs
