"""Small shared image kernels: Otsu thresholding and nearest-neighbor resize."""

from __future__ import annotations

import numpy as np

from .errors import InputError


def otsu_threshold(values: np.ndarray, bins: int = 256) -> float:
    """Otsu's threshold over a [0,1] value set.

    Returns the bin-edge threshold maximizing between-class variance;
    pixels strictly above the threshold are the upper class. On a
    constant input the threshold equals that constant (upper class empty).
    """
    values = np.asarray(values, dtype=np.float64).ravel()
    if values.size == 0:
        raise InputError("cannot threshold an empty value set")
    lo, hi = float(values.min()), float(values.max())
    if hi <= lo:
        return lo
    hist, edges = np.histogram(values, bins=bins, range=(lo, hi))
    hist = hist.astype(np.float64)
    centers = 0.5 * (edges[:-1] + edges[1:])
    w0 = np.cumsum(hist)
    w1 = w0[-1] - w0
    m0 = np.cumsum(hist * centers)
    m1 = m0[-1] - m0
    valid = (w0 > 0) & (w1 > 0)
    between = np.zeros_like(w0)
    between[valid] = w0[valid] * w1[valid] * (m0[valid] / w0[valid] - m1[valid] / w1[valid]) ** 2
    k = int(np.argmax(between))
    return float(edges[k + 1])


def resize_nearest(image: np.ndarray, out_h: int, out_w: int) -> np.ndarray:
    """Nearest-neighbor resize; index mapping floor(i * src / dst).

    Upscaling by an integer factor duplicates each pixel into a block.
    """
    if out_h < 1 or out_w < 1:
        raise InputError("output dimensions must be >= 1")
    image = np.asarray(image)
    src_h, src_w = image.shape
    rows = (np.arange(out_h) * src_h // out_h).astype(np.intp)
    cols = (np.arange(out_w) * src_w // out_w).astype(np.intp)
    return image[np.ix_(rows, cols)]


def normalize_minmax(image: np.ndarray) -> np.ndarray:
    """Stretch to [0,1]; an all-equal image maps to all zeros."""
    image = np.asarray(image, dtype=np.float64)
    lo, hi = float(image.min()), float(image.max())
    if hi > lo:
        return (image - lo) / (hi - lo)
    return np.zeros_like(image)
