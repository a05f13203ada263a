"""Simulated compromising-emanation capture chain.

Takes a reference frame plus video timing and produces the amplitude
envelope an interception receiver would hand to the host: one sample per
pixel slot in scan order, blanking intervals silent, active pixels carrying
either the pixel intensity (analog-style leakage) or the per-line intensity
transitions (digital-style leakage). A separate channel stage applies RF
attenuation and receiver noise.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InputError

TRANSITION = "transition"
INTENSITY = "intensity"


@dataclass(frozen=True)
class VideoTiming:
    """Horizontal/vertical scan structure and pixel clock of a video link."""

    h_active: int
    h_front_porch: int
    h_sync: int
    h_back_porch: int
    v_active: int
    v_front_porch: int
    v_sync: int
    v_back_porch: int
    pixel_clock_hz: float

    def __post_init__(self):
        for name in ("h_active", "h_front_porch", "h_sync", "h_back_porch",
                     "v_active", "v_front_porch", "v_sync", "v_back_porch"):
            if getattr(self, name) <= 0:
                raise InputError(f"VideoTiming.{name} must be > 0")
        if not (np.isfinite(self.pixel_clock_hz) and self.pixel_clock_hz > 0):
            raise InputError("pixel_clock_hz must be finite and > 0")

    @property
    def h_total(self) -> int:
        return self.h_active + self.h_front_porch + self.h_sync + self.h_back_porch

    @property
    def v_total(self) -> int:
        return self.v_active + self.v_front_porch + self.v_sync + self.v_back_porch

    @property
    def line_rate_hz(self) -> float:
        return self.pixel_clock_hz / self.h_total

    @property
    def frame_rate_hz(self) -> float:
        return self.line_rate_hz / self.v_total

    @property
    def frame_samples(self) -> int:
        """Pixel slots per frame (samples per frame at one sample/pixel)."""
        return self.h_total * self.v_total


#: Classic VESA 640x480@60 numbers; handy default for tests and configs.
VESA_640X480 = VideoTiming(
    h_active=640, h_front_porch=16, h_sync=96, h_back_porch=48,
    v_active=480, v_front_porch=10, v_sync=2, v_back_porch=33,
    pixel_clock_hz=25.175e6,
)


@dataclass(frozen=True)
class EmanationModel:
    """Leakage model: which pixel property radiates, and how strongly."""

    mode: str = TRANSITION
    harmonic_gain: float = 1.0

    def __post_init__(self):
        if self.mode not in (TRANSITION, INTENSITY):
            raise InputError(f"unknown emanation mode {self.mode!r}")
        if not (np.isfinite(self.harmonic_gain) and self.harmonic_gain >= 0):
            raise InputError("harmonic_gain must be finite and >= 0")


@dataclass
class BasebandCapture:
    """Real-valued amplitude-envelope sample stream from the receiver."""

    sample_rate_hz: float
    samples: np.ndarray
    origin_tag: str = ""

    def __post_init__(self):
        self.samples = np.asarray(self.samples, dtype=np.float64)
        if not (np.isfinite(self.sample_rate_hz) and self.sample_rate_hz > 0):
            raise InputError("sample_rate_hz must be finite and > 0")
        if self.samples.ndim != 1 or self.samples.size == 0:
            raise InputError("samples must be a non-empty 1-D array")
        if not np.all(np.isfinite(self.samples)):
            raise InputError("samples must be finite")

    @property
    def duration_s(self) -> float:
        return self.samples.size / self.sample_rate_hz


def _frame_amplitudes(frame: np.ndarray, timing: VideoTiming, model: EmanationModel) -> np.ndarray:
    """One frame of per-pixel-slot amplitudes in scan order (blanking = 0)."""
    grid = np.zeros((timing.v_total, timing.h_total), dtype=np.float64)
    active = frame * model.harmonic_gain
    if model.mode == TRANSITION:
        active = np.abs(np.diff(active, axis=1, prepend=0.0))
    grid[: timing.v_active, : timing.h_active] = active
    return grid.ravel()


def synthesize_emanation(
    frame: np.ndarray,
    timing: VideoTiming,
    model: EmanationModel,
    sample_rate_hz: float,
    seed: int = 0,
    *,
    frames: int = 1,
    start_phase: int = 0,
) -> BasebandCapture:
    """Render `frame` into a baseband amplitude capture.

    The frame repeats `frames` times; `start_phase` rotates the stream by
    that many samples so the capture begins mid-scan, as a real intercept
    would. At the canonical rate (one sample per pixel clock) the mapping
    is exact; higher rates use nearest-pixel sample-and-hold. The current
    model is noiseless, so `seed` does not affect the output; it is part of
    the signature so stochastic impairments can slot in without breaking
    callers.
    """
    frame = np.asarray(frame, dtype=np.float64)
    if frame.ndim != 2 or frame.size == 0:
        raise InputError("frame must be a non-empty 2-D array")
    if frame.shape != (timing.v_active, timing.h_active):
        raise InputError(
            f"frame shape {frame.shape} does not match active area "
            f"({timing.v_active}, {timing.h_active})"
        )
    if sample_rate_hz < timing.pixel_clock_hz:
        raise InputError("sample_rate_hz must be >= pixel_clock_hz")
    if frames < 1:
        raise InputError("frames must be >= 1")

    one_frame = _frame_amplitudes(frame, timing, model)
    if sample_rate_hz != timing.pixel_clock_hz:
        n_out = int(round(sample_rate_hz * timing.frame_samples / timing.pixel_clock_hz))
        slots = np.minimum(
            np.rint(np.arange(n_out) * timing.pixel_clock_hz / sample_rate_hz).astype(np.int64),
            timing.frame_samples - 1,
        )
        one_frame = one_frame[slots]
    stream = np.tile(one_frame, frames)
    if start_phase:
        stream = np.roll(stream, -int(start_phase) % stream.size)
    return BasebandCapture(
        sample_rate_hz=float(sample_rate_hz),
        samples=stream,
        origin_tag=f"synth:{model.mode}:{timing.h_total}x{timing.v_total}",
    )


def apply_channel(
    capture: BasebandCapture,
    attenuation_db: float,
    noise_sigma: float,
    seed: int = 0,
) -> BasebandCapture:
    """Attenuate the signal and add receiver-side Gaussian noise.

    Attenuation scales every sample by 10^(-dB/20). Noise is added after
    attenuation and is not attenuated itself (it models the receiver noise
    floor, which does not shrink with interception distance). The envelope
    is clamped at zero from below.
    """
    if not (np.isfinite(attenuation_db) and attenuation_db >= 0):
        raise InputError("attenuation_db must be finite and >= 0")
    if not (np.isfinite(noise_sigma) and noise_sigma >= 0):
        raise InputError("noise_sigma must be finite and >= 0")
    gain = 10.0 ** (-attenuation_db / 20.0)
    out = capture.samples * gain
    if noise_sigma > 0:
        rng = np.random.default_rng(seed)
        out = out + rng.normal(0.0, noise_sigma, size=out.shape)
    out = np.maximum(out, 0.0)
    return BasebandCapture(
        sample_rate_hz=capture.sample_rate_hz,
        samples=out,
        origin_tag=f"{capture.origin_tag}|ch:{attenuation_db:g}dB,s{noise_sigma:g}",
    )
