"""Histogram-equalization contrast enhancement toolkit.

Seven enhancement methods (HE, BBHE, DSIHE, RMSHE, RSIHE, MMBEBHE,
RSWHE-M/D), four quality metrics (AMBE, PSNR, SSIM, entropy), a PNM codec
and a batch benchmarking CLI.
"""

from .equalizers import (
    MethodSpec,
    RswheParams,
    bbhe,
    dsihe,
    enhance_color,
    equalize,
    find_min_ambe_threshold,
    he,
    mmbebhe,
    rmshe,
    rsihe,
    rswhe,
)
from .estimator import HistogramEqualizer
from .histogram import (
    Segment,
    apply_map,
    compute_histogram,
    equal_area_level,
    mean_level,
    recursive_segment,
    segment_transform,
    to_cdf,
    to_pdf,
)
from .image import ColorImage, GrayImage
from .metrics import MetricReport, SsimConstants, ambe, entropy, mse, psnr, report, ssim_global
from .pnm import load_pnm, save_pnm
from .synth import generate_corpus

__version__ = "0.1.0"

__all__ = [
    "ColorImage",
    "GrayImage",
    "HistogramEqualizer",
    "MethodSpec",
    "MetricReport",
    "RswheParams",
    "Segment",
    "SsimConstants",
    "ambe",
    "apply_map",
    "bbhe",
    "compute_histogram",
    "dsihe",
    "enhance_color",
    "entropy",
    "equal_area_level",
    "equalize",
    "find_min_ambe_threshold",
    "generate_corpus",
    "he",
    "load_pnm",
    "mean_level",
    "mmbebhe",
    "mse",
    "psnr",
    "recursive_segment",
    "report",
    "rmshe",
    "rsihe",
    "rswhe",
    "save_pnm",
    "segment_transform",
    "ssim_global",
    "to_cdf",
    "to_pdf",
]
