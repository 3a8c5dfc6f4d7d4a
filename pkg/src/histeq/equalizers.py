"""The seven histogram-equalization enhancement methods.

Each method builds a full lookup table (length L) from the image histogram
and applies it in one vectorized pass. All return the output image together
with the table so callers can reuse the mapping (color channels, dumps).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import histogram as hg
from .image import ColorImage, GrayImage

METHOD_NAMES = (
    "he",
    "bbhe",
    "dsihe",
    "rmshe",
    "rsihe",
    "mmbebhe",
    "rswhe-m",
    "rswhe-d",
)

RSWHE_MEAN = "mean"
RSWHE_MEDIAN = "median"

P_MIN_OCCUPIED = "occupied"
P_MIN_ALL = "all"


@dataclass(frozen=True)
class MethodSpec:
    """Which method to run and its knobs.

    ``r`` only matters for the recursive methods; ``rswhe_mode`` and
    ``beta_override`` only for RSWHE.
    """

    kind: str
    r: int = 2
    rswhe_mode: str = RSWHE_MEAN
    beta_override: Optional[float] = None
    p_min_mode: str = P_MIN_OCCUPIED

    def __post_init__(self):
        if self.kind not in ("he", "bbhe", "dsihe", "rmshe", "rsihe", "mmbebhe", "rswhe"):
            raise ValueError(f"unknown method kind {self.kind!r}")
        if self.r < 0:
            raise ValueError("recursion depth must be non-negative")
        if self.rswhe_mode not in (RSWHE_MEAN, RSWHE_MEDIAN):
            raise ValueError(f"unknown rswhe mode {self.rswhe_mode!r}")
        if self.p_min_mode not in (P_MIN_OCCUPIED, P_MIN_ALL):
            raise ValueError(f"unknown p_min mode {self.p_min_mode!r}")

    @classmethod
    def from_name(cls, name: str, r: int = 2, beta: Optional[float] = None) -> "MethodSpec":
        """Build a spec from a CLI-style method name like ``rswhe-m``."""
        name = name.lower()
        if name == "rswhe-m":
            return cls("rswhe", r=r, rswhe_mode=RSWHE_MEAN, beta_override=beta)
        if name == "rswhe-d":
            return cls("rswhe", r=r, rswhe_mode=RSWHE_MEDIAN, beta_override=beta)
        if name in ("he", "bbhe", "dsihe", "rmshe", "rsihe", "mmbebhe"):
            return cls(name, r=r)
        raise ValueError(f"unknown method name {name!r}")

    @property
    def label(self) -> str:
        """Report column label, e.g. ``RMSHE (r=2)`` or ``RSWHE-M (r=2)``."""
        if self.kind == "rswhe":
            tag = "RSWHE-M" if self.rswhe_mode == RSWHE_MEAN else "RSWHE-D"
            return f"{tag} (r={self.r})"
        if self.kind in ("rmshe", "rsihe"):
            return f"{self.kind.upper()} (r={self.r})"
        return self.kind.upper()

    @property
    def slug(self) -> str:
        """Filesystem-safe method name."""
        if self.kind == "rswhe":
            return "rswhe-m" if self.rswhe_mode == RSWHE_MEAN else "rswhe-d"
        return self.kind


@dataclass
class RswheParams:
    """Intermediate quantities of the RSWHE weighting stage."""

    p_max: float
    p_min: float
    alphas: list
    beta: float
    mean_gray: float
    mid_gray: float
    level_max: int
    level_min: int
    degenerate_range: bool = False
    weighted_pdf: Optional[np.ndarray] = None
    weighted_normalized_pdf: Optional[np.ndarray] = None


def _equalize_segments(img: GrayImage, p: np.ndarray, segments) -> tuple:
    """Equalize each segment onto its own range; returns (output, lut)."""
    lut = np.empty(img.levels, dtype=np.int64)
    for seg in segments:
        lut[seg.lo : seg.hi + 1] = hg.segment_transform(p, seg, seg.lo, seg.hi)
    return hg.apply_map(img, lut), lut


def he(img: GrayImage) -> tuple:
    """Classic global histogram equalization over the full range."""
    p = hg.to_pdf(hg.compute_histogram(img))
    seg = hg.make_segment(p, 0, img.levels - 1)
    return _equalize_segments(img, p, [seg])


def bbhe(img: GrayImage) -> tuple:
    """Bi-histogram equalization split at the input mean level."""
    return rmshe(img, 1)


def dsihe(img: GrayImage) -> tuple:
    """Bi-histogram equalization split at the equal-area (median) level."""
    return rsihe(img, 1)


def rmshe(img: GrayImage, r: int = 2) -> tuple:
    """Recursive mean-separated equalization to depth ``r``."""
    p = hg.to_pdf(hg.compute_histogram(img))
    segs = hg.recursive_segment(p, r, hg.MEAN_SPLIT)
    return _equalize_segments(img, p, segs)


def rsihe(img: GrayImage, r: int = 2) -> tuple:
    """Recursive equal-area-separated equalization to depth ``r``."""
    p = hg.to_pdf(hg.compute_histogram(img))
    segs = hg.recursive_segment(p, r, hg.EQUAL_AREA_SPLIT)
    return _equalize_segments(img, p, segs)


def find_min_ambe_threshold(img: GrayImage) -> tuple:
    """Predicted brightness error for every bi-histogram threshold.

    For each threshold t the two segment maps are built from the histogram
    and the output mean evaluated analytically; the per-threshold error
    uses exact integer pixel sums so equal-valued thresholds tie exactly.
    Returns (smallest minimizing threshold, error curve over t = 0..L-2).
    """
    counts = hg.compute_histogram(img)
    p = hg.to_pdf(counts)
    levels = img.levels
    n_pixels = img.pixel_count
    in_sum = int(np.dot(counts, np.arange(levels, dtype=np.int64)))
    curve = np.empty(levels - 1, dtype=np.float64)
    best_t = 0
    best = np.inf
    for t in range(levels - 1):
        lower = hg.segment_transform(p, hg.make_segment(p, 0, t), 0, t)
        upper = hg.segment_transform(p, hg.make_segment(p, t + 1, levels - 1), t + 1, levels - 1)
        lut = np.concatenate([lower, upper])
        out_sum = int(np.dot(counts, lut))
        err = abs(out_sum - in_sum) / n_pixels
        curve[t] = err
        if err < best:
            best = err
            best_t = t
    return best_t, curve


def mmbebhe(img: GrayImage) -> tuple:
    """Bi-histogram equalization at the minimum-brightness-error threshold."""
    t, _ = find_min_ambe_threshold(img)
    p = hg.to_pdf(hg.compute_histogram(img))
    segs = [hg.make_segment(p, 0, t), hg.make_segment(p, t + 1, img.levels - 1)]
    return _equalize_segments(img, p, segs)


def rswhe(
    img: GrayImage,
    mode: str = RSWHE_MEAN,
    r: int = 2,
    beta_override: Optional[float] = None,
    p_min_mode: str = P_MIN_OCCUPIED,
) -> tuple:
    """Recursively separated and weighted equalization.

    Segments the original histogram (mean or equal-area splits), reshapes
    each sub-histogram with a power-law weight plus offset beta, normalizes
    the weighted pdf globally, then equalizes each segment onto its own
    range using the weighted pdf. Returns (output, lut, params).
    """
    counts = hg.compute_histogram(img)
    p = hg.to_pdf(counts)
    levels = img.levels
    split = hg.MEAN_SPLIT if mode == RSWHE_MEAN else hg.EQUAL_AREA_SPLIT
    segments = hg.recursive_segment(p, r, split)

    occupied = np.flatnonzero(counts)
    p_max = float(max(p[k] for k in occupied))
    if p_min_mode == P_MIN_OCCUPIED:
        p_min = float(min(p[k] for k in occupied))
    else:
        p_min = float(min(p[k] for k in range(levels)))
    level_min = int(occupied[0])
    level_max = int(occupied[-1])

    s0 = 0.0
    s1 = 0.0
    for k in range(levels):
        s0 += p[k]
        s1 += k * p[k]
    mean_gray = s1 / s0
    mid_gray = (levels - 1) / 2.0

    degenerate = False
    if beta_override is not None:
        beta = float(beta_override)
    elif level_max == level_min:
        # beta heuristic divides by the occupied dynamic range
        beta = 0.0
        degenerate = True
    else:
        beta = p_max * abs(mean_gray - mid_gray) / (level_max - level_min)

    denom = p_max - p_min
    weighted = np.zeros(levels, dtype=np.float64)
    alphas = []
    for seg in segments:
        alpha = seg.mass
        alphas.append(alpha)
        for k in range(seg.lo, seg.hi + 1):
            if p_min_mode == P_MIN_OCCUPIED and counts[k] == 0:
                weighted[k] = beta
            else:
                base = 1.0 if denom == 0.0 else (p[k] - p_min) / denom
                weighted[k] = p_max * base**alpha + beta

    total = 0.0
    for k in range(levels):
        total += weighted[k]
    p_wn = np.empty(levels, dtype=np.float64)
    for k in range(levels):
        p_wn[k] = weighted[k] / total

    lut = np.empty(levels, dtype=np.int64)
    for seg in segments:
        wseg = hg.Segment(seg.lo, seg.hi, hg.segment_mass(p_wn, seg.lo, seg.hi))
        lut[seg.lo : seg.hi + 1] = hg.segment_transform(p_wn, wseg, seg.lo, seg.hi)

    params = RswheParams(
        p_max=p_max,
        p_min=p_min,
        alphas=alphas,
        beta=beta,
        mean_gray=mean_gray,
        mid_gray=mid_gray,
        level_max=level_max,
        level_min=level_min,
        degenerate_range=degenerate,
        weighted_pdf=weighted,
        weighted_normalized_pdf=p_wn,
    )
    return hg.apply_map(img, lut), lut, params


def equalize(img: GrayImage, spec: MethodSpec) -> tuple:
    """Run the method described by ``spec``; returns (output, lut)."""
    if spec.kind == "he":
        return he(img)
    if spec.kind == "bbhe":
        return bbhe(img)
    if spec.kind == "dsihe":
        return dsihe(img)
    if spec.kind == "rmshe":
        return rmshe(img, spec.r)
    if spec.kind == "rsihe":
        return rsihe(img, spec.r)
    if spec.kind == "mmbebhe":
        return mmbebhe(img)
    out, lut, _ = rswhe(
        img,
        mode=spec.rswhe_mode,
        r=spec.r,
        beta_override=spec.beta_override,
        p_min_mode=spec.p_min_mode,
    )
    return out, lut


def enhance_color(img: ColorImage, spec: MethodSpec, mode: str = "per-channel") -> ColorImage:
    """Apply a method to an RGB image.

    ``per-channel`` equalizes each plane independently; ``luma`` derives
    one table from the rounded channel average and applies it to all three.
    """
    if mode == "per-channel":
        planes = [equalize(plane, spec)[0] for plane in img.planes]
        return ColorImage(*planes)
    if mode == "luma":
        _, lut = equalize(img.luma(), spec)
        return ColorImage(*[hg.apply_map(plane, lut) for plane in img.planes])
    raise ValueError(f"unknown color mode {mode!r}")
