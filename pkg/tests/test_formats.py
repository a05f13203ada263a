"""Capture (EMCB) and PGM container round trips and malformed inputs."""

import struct

import numpy as np
import pytest

from emleak.errors import InputError
from emleak.formats import (CAPTURE_MAGIC, pgm_bytes, pgm_from_bytes,
                            read_capture, read_pgm, write_capture, write_pgm)


def test_capture_roundtrip(tmp_path):
    samples = np.linspace(0, 1, 1000) ** 2
    path = tmp_path / "c.emcb"
    write_capture(path, 25.175e6, samples)
    rate, back = read_capture(path)
    assert rate == 25.175e6
    assert back.size == 1000
    np.testing.assert_allclose(back, samples, atol=1e-7)  # float32 storage


def test_capture_layout_is_bit_exact(tmp_path):
    path = tmp_path / "c.emcb"
    write_capture(path, 2.0, np.array([1.0, 0.5]))
    raw = path.read_bytes()
    assert raw[:4] == CAPTURE_MAGIC
    version, = struct.unpack("<H", raw[4:6])
    rate, = struct.unpack("<d", raw[6:14])
    count, = struct.unpack("<Q", raw[14:22])
    assert (version, rate, count) == (1, 2.0, 2)
    assert struct.unpack("<2f", raw[22:]) == (1.0, 0.5)


def test_capture_bad_magic(tmp_path):
    path = tmp_path / "c.emcb"
    write_capture(path, 2.0, np.array([1.0]))
    raw = bytearray(path.read_bytes())
    raw[:4] = b"XXXX"
    path.write_bytes(bytes(raw))
    with pytest.raises(InputError):
        read_capture(path)


def test_capture_truncated_payload(tmp_path):
    path = tmp_path / "c.emcb"
    write_capture(path, 2.0, np.array([1.0, 2.0, 3.0]))
    raw = path.read_bytes()
    path.write_bytes(raw[:-4])
    with pytest.raises(InputError):
        read_capture(path)


def test_capture_rejects_empty():
    with pytest.raises(InputError):
        pgm_bytes(np.zeros((0, 4)))
    with pytest.raises(InputError):
        write_capture("/tmp/never-written.emcb", 1.0, np.array([]))


def test_pgm_roundtrip(tmp_path, rng):
    img = rng.random((17, 23))
    path = tmp_path / "i.pgm"
    write_pgm(path, img)
    back = read_pgm(path)
    assert back.shape == (17, 23)
    np.testing.assert_allclose(back, np.rint(img * 255) / 255, atol=1e-12)


def test_pgm_quantized_values_roundtrip_exactly(tmp_path):
    img = np.arange(256).reshape(16, 16) / 255.0
    path = tmp_path / "q.pgm"
    write_pgm(path, img)
    np.testing.assert_array_equal(read_pgm(path), img)


def test_pgm_header_with_comments():
    img = np.array([[0.0, 1.0]])
    raw = pgm_bytes(img)
    # Inject a comment line between fields; still a legal header.
    patched = raw.replace(b"P5\n", b"P5\n# comment line\n", 1)
    np.testing.assert_array_equal(pgm_from_bytes(patched), img)


@pytest.mark.parametrize("raw", [
    b"P6\n2 1\n255\n\x00\x00",          # wrong magic
    b"P5\n2 1\n65535\n\x00\x00",        # unsupported maxval
    b"P5\n2 1\n255\n\x00",              # truncated raster
    b"P5\n2\n255\n\x00\x00",            # missing height
])
def test_pgm_malformed(raw):
    with pytest.raises(InputError):
        pgm_from_bytes(raw)
