"""scikit-learn style transformer wrapping the equalization methods.

``fit`` learns the intensity lookup table from an image; ``transform``
applies it, so the enhancement composes with sklearn pipelines and
``clone``/``get_params`` tooling.
"""

from __future__ import annotations

from typing import Optional

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.exceptions import NotFittedError

from .equalizers import METHOD_NAMES, MethodSpec, equalize
from .image import GrayImage


def _validate_image(X, levels: int) -> np.ndarray:
    arr = np.asarray(X)
    if arr.ndim != 2 or arr.size == 0:
        raise ValueError("expected a non-empty 2-D intensity array")
    if not np.issubdtype(arr.dtype, np.integer):
        if not np.all(np.equal(np.mod(arr, 1), 0)):
            raise ValueError("intensities must be integers")
        arr = arr.astype(np.int64)
    if arr.min() < 0 or arr.max() > levels - 1:
        raise ValueError(f"intensities must lie in [0, {levels - 1}]")
    return arr.astype(np.int64)


class HistogramEqualizer(TransformerMixin, BaseEstimator):
    """Learn a gray-level lookup table from an image and apply it.

    Parameters
    ----------
    method : one of he, bbhe, dsihe, rmshe, rsihe, mmbebhe, rswhe-m, rswhe-d
    r : recursion depth for the recursive methods (default 2)
    levels : number of gray levels (default 256)
    beta : optional weighting offset override for the rswhe methods
    """

    def __init__(self, method: str = "he", r: int = 2, levels: int = 256,
                 beta: Optional[float] = None):
        self.method = method
        self.r = r
        self.levels = levels
        self.beta = beta

    def fit(self, X, y=None):
        if self.method not in METHOD_NAMES:
            raise ValueError(f"method must be one of {METHOD_NAMES}")
        arr = _validate_image(X, self.levels)
        spec = MethodSpec.from_name(self.method, r=self.r, beta=self.beta)
        _, lut = equalize(GrayImage(arr, self.levels), spec)
        self.lut_ = np.asarray(lut)
        return self

    def transform(self, X) -> np.ndarray:
        if not hasattr(self, "lut_"):
            raise NotFittedError("fit must be called before transform")
        arr = _validate_image(X, self.levels)
        return self.lut_[arr]

    def fit_transform(self, X, y=None, **fit_params) -> np.ndarray:
        return self.fit(X, y).transform(X)
