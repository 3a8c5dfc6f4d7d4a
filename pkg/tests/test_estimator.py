import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from histeq import HistogramEqualizer, bbhe, rswhe
from tests.conftest import random_image


def test_fit_transform_matches_functional_api(rng):
    img = random_image(rng, 8, 8, 16)
    est = HistogramEqualizer(method="bbhe", levels=16)
    out = est.fit_transform(img.pixels)
    assert np.array_equal(out, bbhe(img)[0].pixels)


def test_rswhe_params_forwarded(rng):
    img = random_image(rng, 8, 8, 16)
    est = HistogramEqualizer(method="rswhe-d", r=3, levels=16, beta=0.1)
    out = est.fit_transform(img.pixels)
    want, _, _ = rswhe(img, "median", 3, beta_override=0.1)
    assert np.array_equal(out, want.pixels)


def test_lut_reusable_on_other_images(rng):
    a = random_image(rng, 8, 8, 16)
    b = random_image(rng, 4, 4, 16)
    est = HistogramEqualizer(method="he", levels=16).fit(a.pixels)
    out = est.transform(b.pixels)
    assert np.array_equal(out, est.lut_[b.pixels])


def test_transform_before_fit_raises(rng):
    with pytest.raises(NotFittedError):
        HistogramEqualizer().transform(random_image(rng).pixels)


def test_get_params_and_clone():
    est = HistogramEqualizer(method="rmshe", r=4, levels=16)
    params = est.get_params()
    assert params["method"] == "rmshe" and params["r"] == 4 and params["levels"] == 16
    twin = clone(est)
    assert twin.get_params() == params
    est.set_params(method="he")
    assert est.method == "he"


def test_rejects_bad_inputs(rng):
    est = HistogramEqualizer(levels=16)
    with pytest.raises(ValueError):
        est.fit(np.array([[0.5, 1.2]]))
    with pytest.raises(ValueError):
        est.fit(np.array([[0, 99]]))
    with pytest.raises(ValueError):
        est.fit(np.arange(4))
    with pytest.raises(ValueError):
        HistogramEqualizer(method="nope", levels=16).fit(random_image(rng, 4, 4, 16).pixels)


def test_accepts_integer_valued_floats(rng):
    img = random_image(rng, 4, 4, 16)
    est = HistogramEqualizer(method="he", levels=16)
    out_float = est.fit_transform(img.pixels.astype(np.float64))
    out_int = HistogramEqualizer(method="he", levels=16).fit_transform(img.pixels)
    assert np.array_equal(out_float, out_int)
