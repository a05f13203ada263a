"""Emanation synthesis and channel model behavior."""

import numpy as np
import pytest

from emleak.errors import InputError
from emleak.raster import rasterize
from emleak.signal import (INTENSITY, TRANSITION, BasebandCapture,
                           EmanationModel, VideoTiming, apply_channel,
                           synthesize_emanation)

TRANSITION_MODEL = EmanationModel(mode=TRANSITION)
INTENSITY_MODEL = EmanationModel(mode=INTENSITY)


def test_timing_totals_and_rates(vesa_timing):
    assert vesa_timing.h_total == 800
    assert vesa_timing.v_total == 525
    assert vesa_timing.line_rate_hz == pytest.approx(25.175e6 / 800)
    assert vesa_timing.frame_rate_hz == pytest.approx(25.175e6 / 800 / 525)


@pytest.mark.parametrize("field", ["h_active", "v_sync", "pixel_clock_hz"])
def test_timing_rejects_nonpositive(field, vesa_timing):
    kwargs = {k: getattr(vesa_timing, k) for k in (
        "h_active", "h_front_porch", "h_sync", "h_back_porch",
        "v_active", "v_front_porch", "v_sync", "v_back_porch", "pixel_clock_hz")}
    kwargs[field] = 0
    with pytest.raises(InputError):
        VideoTiming(**kwargs)


def test_model_rejects_unknown_mode():
    with pytest.raises(InputError):
        EmanationModel(mode="fm")


def test_all_black_frame_transition_gives_zero_active(tiny_timing):
    frame = np.zeros((tiny_timing.v_active, tiny_timing.h_active))
    cap = synthesize_emanation(frame, tiny_timing, TRANSITION_MODEL,
                               tiny_timing.pixel_clock_hz)
    assert cap.samples.size == tiny_timing.frame_samples
    assert np.all(cap.samples == 0.0)


def test_single_white_pixel_two_transitions_per_line(tiny_timing):
    frame = np.zeros((tiny_timing.v_active, tiny_timing.h_active))
    frame[40, 100] = 1.0
    cap = synthesize_emanation(frame, tiny_timing, TRANSITION_MODEL,
                               tiny_timing.pixel_clock_hz)
    grid = cap.samples.reshape(tiny_timing.v_total, tiny_timing.h_total)
    line = grid[40]
    nz = np.nonzero(line)[0]
    assert list(nz) == [100, 101]      # rise then fall
    assert np.count_nonzero(grid) == 2


def test_vesa_capture_length_is_htotal_times_vtotal(vesa_timing, rng):
    # h_total * v_total = 800 * 525 at one sample per pixel
    frame = rng.random((vesa_timing.v_active, vesa_timing.h_active))
    cap = synthesize_emanation(frame, vesa_timing, TRANSITION_MODEL,
                               vesa_timing.pixel_clock_hz)
    assert cap.samples.size == 800 * 525


def test_intensity_mode_round_trip_reconstructs_frame(tiny_timing, rng):
    frame = rng.uniform(0.1, 1.0, (tiny_timing.v_active, tiny_timing.h_active))
    frame.flat[0] = 1.0  # pin the max so normalization is exact division
    cap = synthesize_emanation(frame, tiny_timing, INTENSITY_MODEL,
                               tiny_timing.pixel_clock_hz)
    line_p = tiny_timing.h_total / tiny_timing.pixel_clock_hz
    frame_p = tiny_timing.frame_samples / tiny_timing.pixel_clock_hz
    img = rasterize(cap, line_p, frame_p)
    active = img[: tiny_timing.v_active, : tiny_timing.h_active]
    np.testing.assert_array_equal(active, frame)
    assert np.all(img[tiny_timing.v_active:, :] == 0)


def test_transition_mode_round_trip_reconstructs_line_derivative(tiny_timing, rng):
    frame = rng.uniform(0.0, 1.0, (tiny_timing.v_active, tiny_timing.h_active))
    cap = synthesize_emanation(frame, tiny_timing, TRANSITION_MODEL,
                               tiny_timing.pixel_clock_hz)
    line_p = tiny_timing.h_total / tiny_timing.pixel_clock_hz
    frame_p = tiny_timing.frame_samples / tiny_timing.pixel_clock_hz
    img = rasterize(cap, line_p, frame_p)
    active = img[: tiny_timing.v_active, : tiny_timing.h_active]
    expected = np.abs(np.diff(frame, axis=1, prepend=0.0))
    expected = expected / expected.max()
    np.testing.assert_allclose(active, expected, atol=1e-12)


def test_higher_sample_rate_holds_nearest_pixel(tiny_timing):
    frame = np.zeros((tiny_timing.v_active, tiny_timing.h_active))
    frame[0, :4] = [0.2, 0.4, 0.6, 0.8]
    cap = synthesize_emanation(frame, tiny_timing, INTENSITY_MODEL,
                               2 * tiny_timing.pixel_clock_hz)
    assert cap.samples.size == 2 * tiny_timing.frame_samples
    # Sample i lands on pixel slot rint(i/2) (ties to even): 0,0,1,2,2,...
    np.testing.assert_array_equal(cap.samples[:5], [0.2, 0.2, 0.4, 0.6, 0.6])


def test_synthesize_rejects_bad_inputs(tiny_timing):
    good = np.zeros((tiny_timing.v_active, tiny_timing.h_active))
    with pytest.raises(InputError):
        synthesize_emanation(good[:-1], tiny_timing, TRANSITION_MODEL,
                             tiny_timing.pixel_clock_hz)
    with pytest.raises(InputError):
        synthesize_emanation(np.zeros((0, 0)), tiny_timing, TRANSITION_MODEL,
                             tiny_timing.pixel_clock_hz)
    with pytest.raises(InputError):
        synthesize_emanation(good, tiny_timing, TRANSITION_MODEL,
                             0.5 * tiny_timing.pixel_clock_hz)


def test_start_phase_rotates_stream(tiny_timing, rng):
    frame = rng.random((tiny_timing.v_active, tiny_timing.h_active))
    plain = synthesize_emanation(frame, tiny_timing, INTENSITY_MODEL,
                                 tiny_timing.pixel_clock_hz)
    shifted = synthesize_emanation(frame, tiny_timing, INTENSITY_MODEL,
                                   tiny_timing.pixel_clock_hz, start_phase=1000)
    np.testing.assert_array_equal(np.roll(shifted.samples, 1000), plain.samples)


def test_channel_identity_at_zero(tiny_timing, rng):
    cap = BasebandCapture(1e6, rng.random(5000))
    out = apply_channel(cap, 0.0, 0.0, seed=0)
    np.testing.assert_array_equal(out.samples, cap.samples)


def test_channel_20db_scales_to_tenth():
    cap = BasebandCapture(1e6, np.ones(100))
    out = apply_channel(cap, 20.0, 0.0, seed=0)
    np.testing.assert_allclose(out.samples, 0.1)


def test_channel_clamped_gaussian_mean():
    # Monte-Carlo oracle: mean of max(10^(-6/20) + N(0, 0.05), 0) over 1e5
    # samples; clamping is ~10 sigma away so the mean is the plain gain.
    cap = BasebandCapture(1e6, np.ones(100_000))
    out = apply_channel(cap, 6.0, 0.05, seed=99)
    assert out.samples.mean() == pytest.approx(0.501, abs=0.005)
    assert np.all(out.samples >= 0.0)


def test_channel_determinism(tiny_timing, rng):
    cap = BasebandCapture(1e6, rng.random(10_000))
    a = apply_channel(cap, 6.0, 0.1, seed=7)
    b = apply_channel(cap, 6.0, 0.1, seed=7)
    c = apply_channel(cap, 6.0, 0.1, seed=8)
    np.testing.assert_array_equal(a.samples, b.samples)
    assert not np.array_equal(a.samples, c.samples)


def test_channel_rejects_negative_attenuation():
    cap = BasebandCapture(1e6, np.ones(10))
    with pytest.raises(InputError):
        apply_channel(cap, -1.0, 0.0, seed=0)
    with pytest.raises(InputError):
        apply_channel(cap, 1.0, -0.5, seed=0)


def test_snr_non_increasing_in_attenuation(rng):
    signal = rng.uniform(0.5, 1.0, 20_000)
    cap = BasebandCapture(1e6, signal)
    sigma = 0.05
    snrs = []
    for att in (0.0, 4.0, 8.0, 12.0, 16.0, 24.0):
        out = apply_channel(cap, att, sigma, seed=3)
        gain = 10 ** (-att / 20)
        noise = out.samples - signal * gain
        snrs.append((signal * gain).var() / max(noise.var(), 1e-30))
    assert all(a >= b for a, b in zip(snrs, snrs[1:]))


def test_synthesis_deterministic(tiny_timing, rng):
    frame = rng.random((tiny_timing.v_active, tiny_timing.h_active))
    a = synthesize_emanation(frame, tiny_timing, TRANSITION_MODEL,
                             tiny_timing.pixel_clock_hz, seed=1)
    b = synthesize_emanation(frame, tiny_timing, TRANSITION_MODEL,
                             tiny_timing.pixel_clock_hz, seed=1)
    np.testing.assert_array_equal(a.samples, b.samples)
