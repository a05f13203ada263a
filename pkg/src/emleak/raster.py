"""Sync-structure recovery and rastering of captured sample streams.

A leaked video signal is periodic at the line rate and, more strictly, at
the frame rate. Both periods show up as peaks of the autocorrelation of
the amplitude envelope; locating them lets the 1-D stream be folded back
into a 2-D image.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.fft

from .errors import InputError, InsufficientDataError
from .imgops import normalize_minmax
from .signal import BasebandCapture


@dataclass(frozen=True)
class SyncEstimate:
    """Recovered line/frame periods plus a [0,1] peak-quality score."""

    line_period_s: float
    frame_period_s: float
    confidence: float

    def __post_init__(self):
        if not (0 < self.line_period_s < self.frame_period_s):
            raise InputError("need 0 < line period < frame period")
        if self.frame_period_s / self.line_period_s < 2:
            raise InputError("frame period must span at least 2 lines")
        if not (0.0 <= self.confidence <= 1.0):
            raise InputError("confidence must be in [0,1]")


def _autocorrelation(x: np.ndarray, max_lag: int) -> np.ndarray:
    """Unbiased autocorrelation of the mean-removed signal, lags 0..max_lag."""
    x = x - x.mean()
    n = x.size
    nfft = scipy.fft.next_fast_len(n + max_lag + 1)
    spec = scipy.fft.rfft(x, nfft)
    corr = scipy.fft.irfft(spec * np.conj(spec), nfft)[: max_lag + 1]
    counts = n - np.arange(max_lag + 1)
    return corr / counts


def _window_peak(corr: np.ndarray, lo: int, hi: int) -> tuple[int, float]:
    """Argmax lag in [lo, hi] and its prominence ratio (peak / window mean).

    Negative correlation values are clipped to zero before the ratio so a
    mean-free window cannot produce spurious prominence.
    """
    window = np.clip(corr[lo : hi + 1], 0.0, None)
    best = int(np.argmax(window))
    peak = float(window[best])
    mean = float(window.mean())
    ratio = peak / mean if mean > 0 else 0.0
    return lo + best, ratio


def estimate_sync(
    capture: BasebandCapture,
    line_period_bounds: tuple[float, float],
    frame_period_bounds: tuple[float, float],
) -> SyncEstimate:
    """Locate line and frame periods inside the given search windows.

    Each period is the dominant autocorrelation peak of the amplitude
    envelope within its window. Confidence maps the weaker of the two
    peak-prominence ratios through 1 - 1/max(ratio, 1); a flat (e.g. DC)
    capture therefore comes back with confidence ~0 rather than an error.
    """
    fs = capture.sample_rate_hz
    line_lo, line_hi = (float(b) for b in line_period_bounds)
    frame_lo, frame_hi = (float(b) for b in frame_period_bounds)
    if not (0 < line_lo < line_hi and 0 < frame_lo < frame_hi):
        raise InputError("period bounds must be positive and ordered")
    if line_hi >= frame_hi:
        raise InputError("frame-period window must sit above the line-period window")
    if capture.samples.size < 2 * frame_hi * fs:
        raise InsufficientDataError(
            f"capture holds {capture.samples.size} samples; "
            f"need >= {int(np.ceil(2 * frame_hi * fs))} (two frame periods at the upper bound)"
        )

    l_lo, l_hi = max(1, int(np.ceil(line_lo * fs))), int(np.floor(line_hi * fs))
    f_lo, f_hi = max(1, int(np.ceil(frame_lo * fs))), int(np.floor(frame_hi * fs))
    if l_lo > l_hi or f_lo > f_hi:
        raise InputError("period bounds narrower than one sample")

    variance = float(np.var(capture.samples))
    if variance < 1e-18:
        # Featureless capture: report window midpoints, flagged unusable.
        line_p = 0.5 * (line_lo + line_hi)
        frame_p = max(0.5 * (frame_lo + frame_hi), 2.0 * line_p)
        return SyncEstimate(line_p, frame_p, 0.0)

    corr = _autocorrelation(capture.samples, f_hi)
    line_lag, line_ratio = _window_peak(corr, l_lo, l_hi)
    frame_lag, frame_ratio = _window_peak(corr, f_lo, f_hi)
    ratio = min(line_ratio, frame_ratio)
    confidence = 1.0 - 1.0 / max(ratio, 1.0)
    if frame_lag < 2 * line_lag:
        # Degenerate peak pair; keep the frame peak and force a valid pairing.
        line_lag = max(1, frame_lag // 2)
        confidence = 0.0
    return SyncEstimate(line_lag / fs, frame_lag / fs, confidence)


def rasterize(
    capture: BasebandCapture,
    line_period_s: float,
    frame_period_s: float,
) -> np.ndarray:
    """Fold the first complete frame of a capture into a [0,1] image.

    Width is the number of samples per line, height the number of lines per
    frame; non-integer periods are handled by nearest-sample lookup. The
    result is min-max normalized (an all-equal frame maps to all zeros).
    """
    if not (0 < line_period_s < frame_period_s):
        raise InputError("need 0 < line period < frame period")
    if frame_period_s / line_period_s < 2:
        raise InputError("frame period must span at least 2 lines")
    fs = capture.sample_rate_hz
    width = int(round(line_period_s * fs))
    height = int(round(frame_period_s / line_period_s))
    if width < 1 or height < 2:
        raise InputError("periods describe a degenerate raster")

    line_samples = line_period_s * fs
    idx = np.rint(
        np.arange(height, dtype=np.float64)[:, None] * line_samples
        + np.arange(width, dtype=np.float64)[None, :]
    ).astype(np.int64)
    if idx[-1, -1] >= capture.samples.size:
        raise InsufficientDataError(
            f"capture holds {capture.samples.size} samples; "
            f"one {width}x{height} frame needs {int(idx[-1, -1]) + 1}"
        )
    return normalize_minmax(capture.samples[idx])
