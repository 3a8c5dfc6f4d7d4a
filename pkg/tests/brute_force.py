"""Straight-line pure-Python reference implementations of the methods.

Deliberately independent of the histeq package: images are flat lists of
ints, every histogram is built by explicit loops, and each method is
transcribed on its own rather than sharing segment machinery. Numeric
conventions (split flooring/clamping, half-up LUT rounding, renormalized
segment cdfs evaluated as prefix-sum over total, sequential accumulation,
integer pixel sums for brightness errors) match the library's documented
contract so outputs must agree pixel-exactly.
"""

import math


def _pdf(pixels, levels):
    counts = [0] * levels
    for v in pixels:
        counts[v] += 1
    n = len(pixels)
    return [c / n for c in counts]


def _sub_map(p, lo, hi, out_lo, out_hi):
    """Equalize levels [lo, hi] onto [out_lo, out_hi]; identity if massless."""
    total = 0.0
    for k in range(lo, hi + 1):
        total += p[k]
    table = {}
    if total == 0.0:
        for k in range(lo, hi + 1):
            table[k] = k
        return table
    run = 0.0
    for k in range(lo, hi + 1):
        run += p[k]
        v = math.floor(out_lo + (out_hi - out_lo) * (run / total) + 0.5)
        table[k] = min(max(v, out_lo), out_hi)
    return table


def _mean_split(p, lo, hi):
    s0 = 0.0
    s1 = 0.0
    for k in range(lo, hi + 1):
        s0 += p[k]
        s1 += k * p[k]
    m = math.floor(s1 / s0)
    return min(max(m, lo), hi - 1)


def _equal_area_split(p, lo, hi):
    total = 0.0
    for k in range(lo, hi + 1):
        total += p[k]
    target = (p[lo] / total + 1.0) / 2.0
    run = 0.0
    best_k = lo
    best_d = math.inf
    for k in range(lo, hi + 1):
        run += p[k]
        d = abs(run / total - target)
        if d < best_d:
            best_d = d
            best_k = k
    return min(best_k, hi - 1)


def brute_he(pixels, levels):
    p = _pdf(pixels, levels)
    f = _sub_map(p, 0, levels - 1, 0, levels - 1)
    return [f[v] for v in pixels]


def brute_bbhe(pixels, levels):
    p = _pdf(pixels, levels)
    x_m = _mean_split(p, 0, levels - 1)
    f_lower = _sub_map(p, 0, x_m, 0, x_m)
    f_upper = _sub_map(p, x_m + 1, levels - 1, x_m + 1, levels - 1)
    out = []
    for v in pixels:
        out.append(f_lower[v] if v <= x_m else f_upper[v])
    return out


def brute_dsihe(pixels, levels):
    p = _pdf(pixels, levels)
    x_d = _equal_area_split(p, 0, levels - 1)
    f_lower = _sub_map(p, 0, x_d, 0, x_d)
    f_upper = _sub_map(p, x_d + 1, levels - 1, x_d + 1, levels - 1)
    out = []
    for v in pixels:
        out.append(f_lower[v] if v <= x_d else f_upper[v])
    return out


def _recurse_ranges(p, lo, hi, depth, splitter):
    mass = 0.0
    for k in range(lo, hi + 1):
        mass += p[k]
    if depth == 0 or lo == hi or mass == 0.0:
        return [(lo, hi)]
    cut = splitter(p, lo, hi)
    return _recurse_ranges(p, lo, cut, depth - 1, splitter) + _recurse_ranges(
        p, cut + 1, hi, depth - 1, splitter
    )


def _recursive_equalize(pixels, levels, depth, splitter):
    p = _pdf(pixels, levels)
    table = {}
    for lo, hi in _recurse_ranges(p, 0, levels - 1, depth, splitter):
        table.update(_sub_map(p, lo, hi, lo, hi))
    return [table[v] for v in pixels]


def brute_rmshe(pixels, levels, depth):
    return _recursive_equalize(pixels, levels, depth, _mean_split)


def brute_rsihe(pixels, levels, depth):
    return _recursive_equalize(pixels, levels, depth, _equal_area_split)


def brute_mmbebhe(pixels, levels):
    p = _pdf(pixels, levels)
    in_sum = sum(pixels)
    best_t = 0
    best_num = None
    for t in range(levels - 1):
        f_lower = _sub_map(p, 0, t, 0, t)
        f_upper = _sub_map(p, t + 1, levels - 1, t + 1, levels - 1)
        out_sum = 0
        for v in pixels:
            out_sum += f_lower[v] if v <= t else f_upper[v]
        num = abs(out_sum - in_sum)
        if best_num is None or num < best_num:
            best_num = num
            best_t = t
    f_lower = _sub_map(p, 0, best_t, 0, best_t)
    f_upper = _sub_map(p, best_t + 1, levels - 1, best_t + 1, levels - 1)
    return [f_lower[v] if v <= best_t else f_upper[v] for v in pixels]


def brute_mmbebhe_curve(pixels, levels):
    """Per-threshold brightness error computed by actually remapping pixels."""
    p = _pdf(pixels, levels)
    in_sum = sum(pixels)
    n = len(pixels)
    curve = []
    for t in range(levels - 1):
        f_lower = _sub_map(p, 0, t, 0, t)
        f_upper = _sub_map(p, t + 1, levels - 1, t + 1, levels - 1)
        out_sum = 0
        for v in pixels:
            out_sum += f_lower[v] if v <= t else f_upper[v]
        curve.append(abs(out_sum - in_sum) / n)
    return curve


def brute_rswhe(pixels, levels, mode, depth, beta_override=None):
    """mode: 'mean' or 'median' (equal-area splits)."""
    p = _pdf(pixels, levels)
    counts = [0] * levels
    for v in pixels:
        counts[v] += 1
    splitter = _mean_split if mode == "mean" else _equal_area_split
    ranges = _recurse_ranges(p, 0, levels - 1, depth, splitter)

    occupied = [k for k in range(levels) if counts[k] > 0]
    p_max = max(p[k] for k in occupied)
    p_min = min(p[k] for k in occupied)
    x_min = occupied[0]
    x_max = occupied[-1]

    s0 = 0.0
    s1 = 0.0
    for k in range(levels):
        s0 += p[k]
        s1 += k * p[k]
    x_mean = s1 / s0
    x_mid = (levels - 1) / 2.0

    if beta_override is not None:
        beta = float(beta_override)
    elif x_max == x_min:
        beta = 0.0
    else:
        beta = p_max * abs(x_mean - x_mid) / (x_max - x_min)

    denom = p_max - p_min
    weighted = [0.0] * levels
    for lo, hi in ranges:
        alpha = 0.0
        for k in range(lo, hi + 1):
            alpha += p[k]
        for k in range(lo, hi + 1):
            if counts[k] == 0:
                weighted[k] = beta
            else:
                base = 1.0 if denom == 0.0 else (p[k] - p_min) / denom
                weighted[k] = p_max * base**alpha + beta

    total = 0.0
    for k in range(levels):
        total += weighted[k]
    p_wn = [weighted[k] / total for k in range(levels)]

    table = {}
    for lo, hi in ranges:
        table.update(_sub_map(p_wn, lo, hi, lo, hi))
    return [table[v] for v in pixels]
