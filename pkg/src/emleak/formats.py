"""Binary file formats: EMCB capture files and 8-bit binary PGM images.

Captures are stored in a little-endian "EMCB" container:

    offset  size  field
    0       4     magic b"EMCB"
    4       2     format version, uint16
    6       8     sample rate in Hz, float64
    14      8     sample count, uint64
    22      4*n   samples, float32

Grayscale images use binary PGM (P5, maxval 255). Pixel values in [0, 1]
map linearly to 0..255 and back; writing quantizes to 8 bits.
"""

from __future__ import annotations

import re
import struct
from pathlib import Path

import numpy as np

from .errors import InputError

CAPTURE_MAGIC = b"EMCB"
CAPTURE_VERSION = 1

_HEADER = struct.Struct("<4sHdQ")


def write_capture(path: str | Path, sample_rate_hz: float, samples: np.ndarray) -> None:
    """Write an EMCB capture file. Samples are stored as float32."""
    samples = np.asarray(samples, dtype=np.float32)
    if samples.ndim != 1 or samples.size == 0:
        raise InputError("capture samples must be a non-empty 1-D array")
    with open(path, "wb") as fh:
        fh.write(_HEADER.pack(CAPTURE_MAGIC, CAPTURE_VERSION, float(sample_rate_hz), samples.size))
        fh.write(samples.astype("<f4").tobytes())


def read_capture(path: str | Path) -> tuple[float, np.ndarray]:
    """Read an EMCB capture file, returning (sample_rate_hz, samples)."""
    with open(path, "rb") as fh:
        header = fh.read(_HEADER.size)
        if len(header) < _HEADER.size:
            raise InputError(f"truncated capture header in {path}")
        magic, version, rate, count = _HEADER.unpack(header)
        if magic != CAPTURE_MAGIC:
            raise InputError(f"bad capture magic {magic!r} in {path}")
        if version != CAPTURE_VERSION:
            raise InputError(f"unsupported capture version {version} in {path}")
        payload = fh.read(4 * count)
    if len(payload) != 4 * count:
        raise InputError(f"capture payload shorter than declared count in {path}")
    samples = np.frombuffer(payload, dtype="<f4").astype(np.float64)
    return rate, samples


def pgm_bytes(image: np.ndarray) -> bytes:
    """Encode a [0,1] grayscale image as binary PGM (P5, maxval 255)."""
    image = np.asarray(image, dtype=np.float64)
    if image.ndim != 2 or image.size == 0:
        raise InputError("image must be a non-empty 2-D array")
    data = np.rint(np.clip(image, 0.0, 1.0) * 255.0).astype(np.uint8)
    h, w = data.shape
    return f"P5\n{w} {h}\n255\n".encode("ascii") + data.tobytes()


def write_pgm(path: str | Path, image: np.ndarray) -> None:
    with open(path, "wb") as fh:
        fh.write(pgm_bytes(image))


def pgm_from_bytes(raw: bytes, path: str | Path = "<bytes>") -> np.ndarray:
    """Decode a binary PGM into a [0,1] float image."""
    # Header: magic, width, height, maxval, separated by whitespace/comments,
    # followed by exactly one whitespace byte before the raster.
    pos = 0
    fields = []
    while len(fields) < 4:
        m = re.compile(rb"(?:\s|#[^\n]*\n)*([^\s#]+)").match(raw, pos)
        if m is None:
            raise InputError(f"malformed PGM header in {path}")
        fields.append(m.group(1))
        pos = m.end()
    magic, w_s, h_s, maxval_s = fields
    if magic != b"P5":
        raise InputError(f"not a binary PGM (magic {magic!r}) in {path}")
    try:
        w, h, maxval = int(w_s), int(h_s), int(maxval_s)
    except ValueError as exc:
        raise InputError(f"malformed PGM header in {path}") from exc
    if maxval != 255:
        raise InputError(f"unsupported PGM maxval {maxval} in {path}")
    pos += 1  # single whitespace byte after maxval
    if len(raw) - pos < w * h:
        raise InputError(f"PGM raster shorter than {w}x{h} in {path}")
    pixels = np.frombuffer(raw, dtype=np.uint8, count=w * h, offset=pos)
    return pixels.reshape(h, w).astype(np.float64) / 255.0


def read_pgm(path: str | Path) -> np.ndarray:
    with open(path, "rb") as fh:
        return pgm_from_bytes(fh.read(), path)
