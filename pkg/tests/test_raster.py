"""Sync recovery and rastering."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from emleak.errors import InputError, InsufficientDataError
from emleak.raster import estimate_sync, rasterize
from emleak.signal import (BasebandCapture, EmanationModel, VideoTiming,
                           apply_channel, synthesize_emanation)

INTENSITY = EmanationModel(mode="intensity")


def synth(timing, frames=3, seed=0):
    rng = np.random.default_rng(seed)
    frame = rng.uniform(0.1, 0.9, (timing.v_active, timing.h_active))
    return synthesize_emanation(frame, timing, INTENSITY,
                                timing.pixel_clock_hz, frames=frames)


def bounds_for(timing, frac=0.25):
    fs = timing.pixel_clock_hz
    line = timing.h_total / fs
    frame = timing.frame_samples / fs
    return (line * (1 - frac), line * (1 + frac)), \
           (frame * (1 - frac), frame * (1 + frac))


def test_fold_alternating_samples():
    cap = BasebandCapture(1.0, np.array([0, 1, 0, 1, 0, 1, 0, 1], dtype=float))
    img = rasterize(cap, 2.0, 8.0)
    assert img.shape == (4, 2)
    np.testing.assert_array_equal(img[:, 0], 0.0)
    np.testing.assert_array_equal(img[:, 1], 1.0)


def test_all_equal_capture_rasters_to_zeros():
    cap = BasebandCapture(1.0, np.full(100, 0.7))
    img = rasterize(cap, 10.0, 100.0)
    np.testing.assert_array_equal(img, 0.0)


def test_rasterize_needs_one_frame():
    cap = BasebandCapture(1.0, np.arange(7, dtype=float))
    with pytest.raises(InsufficientDataError):
        rasterize(cap, 2.0, 8.0)


def test_rasterize_rejects_degenerate_periods():
    cap = BasebandCapture(1.0, np.arange(100, dtype=float))
    with pytest.raises(InputError):
        rasterize(cap, 8.0, 2.0)
    with pytest.raises(InputError):
        rasterize(cap, 8.0, 15.0)  # fewer than 2 lines per frame


def test_rasterize_uses_first_frame_only(tiny_timing, rng):
    frame = rng.random((tiny_timing.v_active, tiny_timing.h_active))
    fs = tiny_timing.pixel_clock_hz
    line_p, frame_p = tiny_timing.h_total / fs, tiny_timing.frame_samples / fs
    one = synthesize_emanation(frame, tiny_timing, INTENSITY, fs, frames=1)
    three = synthesize_emanation(frame, tiny_timing, INTENSITY, fs, frames=3)
    np.testing.assert_array_equal(
        rasterize(one, line_p, frame_p), rasterize(three, line_p, frame_p))


@pytest.mark.parametrize("line_p,frame_p,fs", [
    (1.23, 40.0, 100.0),
    (0.008, 0.1, 12_500.0),
    (2.0, 17.0, 64.0),
])
def test_raster_dimensions_depend_only_on_periods(line_p, frame_p, fs):
    expected = (round(frame_p / line_p), round(line_p * fs))
    for seed in (1, 2):
        samples = np.random.default_rng(seed).random(int(frame_p * fs) + 200)
        img = rasterize(BasebandCapture(fs, samples), line_p, frame_p)
        assert img.shape == expected


def test_estimate_sync_exact_on_clean_capture(tiny_timing):
    cap = synth(tiny_timing)
    fs = tiny_timing.pixel_clock_hz
    lb, fb = bounds_for(tiny_timing)
    est = estimate_sync(cap, lb, fb)
    assert est.line_period_s * fs == tiny_timing.h_total
    assert est.frame_period_s * fs == tiny_timing.frame_samples
    assert est.confidence > 0.2


def test_estimate_sync_noisy_within_tenth_percent(tiny_timing):
    cap = synth(tiny_timing, frames=3, seed=5)
    cap = apply_channel(cap, 12.0, 0.02, seed=6)
    fs = tiny_timing.pixel_clock_hz
    lb, fb = bounds_for(tiny_timing)
    est = estimate_sync(cap, lb, fb)
    assert est.line_period_s * fs == pytest.approx(tiny_timing.h_total, rel=1e-3)
    assert est.frame_period_s * fs == pytest.approx(tiny_timing.frame_samples, rel=1e-3)


def test_estimate_sync_dc_capture_low_confidence(tiny_timing):
    fs = tiny_timing.pixel_clock_hz
    n = int(2.7 * tiny_timing.frame_samples)
    cap = BasebandCapture(fs, np.full(n, 0.5))
    lb, fb = bounds_for(tiny_timing)
    est = estimate_sync(cap, lb, fb)
    assert est.confidence < 0.2


def test_estimate_sync_too_short(tiny_timing):
    fs = tiny_timing.pixel_clock_hz
    cap = BasebandCapture(fs, np.random.default_rng(0).random(tiny_timing.frame_samples))
    lb, fb = bounds_for(tiny_timing)
    with pytest.raises(InsufficientDataError):
        estimate_sync(cap, lb, fb)


def test_estimate_sync_rejects_bad_bounds(tiny_timing):
    cap = synth(tiny_timing)
    with pytest.raises(InputError):
        estimate_sync(cap, (0.0, 0.0), (1.0, 2.0))
    with pytest.raises(InputError):
        estimate_sync(cap, (2.0, 1.0), (3.0, 4.0))


@settings(max_examples=8, deadline=None)
@given(
    h_active=st.integers(80, 1500), h_blank=st.integers(20, 400),
    v_active=st.integers(70, 800), v_blank=st.integers(20, 300),
    seed=st.integers(0, 2**31),
)
def test_sync_exact_over_random_timings(h_active, h_blank, v_active, v_blank, seed):
    # Totals span roughly [100, 2000] x [100, 1200]; sigma=0 recovery is exact.
    timing = VideoTiming(
        h_active=h_active, h_front_porch=max(1, h_blank // 3),
        h_sync=max(1, h_blank // 3), h_back_porch=max(1, h_blank // 3),
        v_active=v_active, v_front_porch=max(1, v_blank // 3),
        v_sync=max(1, v_blank // 3), v_back_porch=max(1, v_blank // 3),
        pixel_clock_hz=1e6,
    )
    cap = synth(timing, frames=3, seed=seed)
    lb, fb = bounds_for(timing)
    est = estimate_sync(cap, lb, fb)
    fs = timing.pixel_clock_hz
    assert round(est.line_period_s * fs) == timing.h_total
    assert round(est.frame_period_s * fs) == timing.frame_samples
    assert est.line_period_s * fs == timing.h_total
    assert est.frame_period_s * fs == timing.frame_samples
