"""Shared fixtures: a small video timing and a cached template bank."""

import numpy as np
import pytest

from emleak.recognize import TemplateBank
from emleak.signal import VideoTiming

# Small scan structure: 256x256 active inside 320x288 totals, one
# sample per pixel at 60 Hz frames. Keeps synthesis/raster tests fast.
TINY = VideoTiming(
    h_active=256, h_front_porch=16, h_sync=24, h_back_porch=24,
    v_active=256, v_front_porch=8, v_sync=4, v_back_porch=20,
    pixel_clock_hz=320 * 288 * 60.0,
)

VESA = VideoTiming(
    h_active=640, h_front_porch=16, h_sync=96, h_back_porch=48,
    v_active=480, v_front_porch=10, v_sync=2, v_back_porch=33,
    pixel_clock_hz=25.175e6,
)


@pytest.fixture(scope="session")
def bank():
    return TemplateBank()


@pytest.fixture
def tiny_timing():
    return TINY


@pytest.fixture
def vesa_timing():
    return VESA


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
