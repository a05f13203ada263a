"""Spatial alignment of rastered frames and temporal validation fiducials.

Blanking intervals show up as dark bands in a rastered capture. The
porch/active boundary is found by brute-force search for the largest
rising step in the column and row mean profiles; the crop then starts
there, wrapping cyclically because captures begin at arbitrary scan phase.
Aligned frames are cut into fixed-size square patches.

Temporal alignment between a reference frame and its intercept is checked
with a machine-readable fiducial block stamped into the upper-left patch:
an 8x8 grid of 16x16-pixel cells holding corner markers, two fixed sync
rows, a checkerboard band, a 16-bit payload and its CRC-16/CCITT-FALSE.
A capture is accepted only if the block decodes and the payload matches.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InputError
from .imgops import otsu_threshold, resize_nearest

FIDUCIAL_CELLS = 8
FIDUCIAL_CELL_PX = 16
FIDUCIAL_SIDE = FIDUCIAL_CELLS * FIDUCIAL_CELL_PX
MIN_FIDUCIAL_PATCH = 160

_SYNC_TOP = (1, 0, 0, 1, 0, 1)
_SYNC_BOTTOM = (0, 1, 1, 0, 1, 0)
_CHECKER_ROWS = (5, 6)


@dataclass(frozen=True)
class PorchOffsets:
    """Start of the active region and the step sizes found there."""

    col_boundary: int
    row_boundary: int
    col_gradient: float
    row_gradient: float


@dataclass
class Patch:
    """One square tile of an aligned frame plus its grid position."""

    image: np.ndarray
    grid_pos: tuple[int, int]

    @property
    def size(self) -> int:
        return self.image.shape[0]


def detect_porches(img: np.ndarray) -> PorchOffsets:
    """Locate the porch/active boundary via 1-D mean-profile gradients.

    The boundary is the largest cyclic rising step (blanking is darker than
    active content), searched independently over column and row means; ties
    break toward the smallest index. Always returns the argmax; judging
    whether the gradient is strong enough is the caller's business.
    """
    img = np.asarray(img, dtype=np.float64)
    if img.ndim != 2 or img.shape[0] < 8 or img.shape[1] < 8:
        raise InputError("image must be at least 8x8")
    col_means = img.mean(axis=0)
    row_means = img.mean(axis=1)
    col_steps = col_means - np.roll(col_means, 1)
    row_steps = row_means - np.roll(row_means, 1)
    c = int(np.argmax(col_steps))
    r = int(np.argmax(row_steps))
    return PorchOffsets(
        col_boundary=c,
        row_boundary=r,
        col_gradient=float(col_steps[c]),
        row_gradient=float(row_steps[r]),
    )


def align_and_crop(
    img: np.ndarray,
    offsets: PorchOffsets,
    active_w: int,
    active_h: int,
    src_active_w: int | None = None,
    src_active_h: int | None = None,
) -> np.ndarray:
    """Cut the active region out of a rastered frame.

    Reads src_active_h x src_active_w pixels starting at the porch
    boundary, wrapping around the frame edges (capture phase is
    arbitrary), then rescales by nearest neighbor to (active_h, active_w).
    The source size defaults to the requested size, i.e. a plain
    wrapped crop.
    """
    img = np.asarray(img, dtype=np.float64)
    if active_w < 1 or active_h < 1:
        raise InputError("requested active area must be at least 1x1")
    src_w = active_w if src_active_w is None else src_active_w
    src_h = active_h if src_active_h is None else src_active_h
    if src_w < 1 or src_h < 1:
        raise InputError("source active area must be at least 1x1")
    h, w = img.shape
    if not (0 <= offsets.row_boundary < h and 0 <= offsets.col_boundary < w):
        raise InputError("porch offsets outside the image")
    rows = (offsets.row_boundary + np.arange(src_h)) % h
    cols = (offsets.col_boundary + np.arange(src_w)) % w
    region = img[np.ix_(rows, cols)]
    if (src_h, src_w) != (active_h, active_w):
        region = resize_nearest(region, active_h, active_w)
    return region


def split_patches(img: np.ndarray, patch_size: int) -> list[Patch]:
    """Cut a row-major non-overlapping grid of square patches.

    Right and bottom remainders smaller than one patch are discarded.
    """
    img = np.asarray(img, dtype=np.float64)
    if patch_size < 1:
        raise InputError("patch_size must be >= 1")
    h, w = img.shape
    if h < patch_size or w < patch_size:
        raise InputError(f"image {h}x{w} smaller than one {patch_size}px patch")
    patches = []
    for r in range(h // patch_size):
        for c in range(w // patch_size):
            tile = img[
                r * patch_size : (r + 1) * patch_size,
                c * patch_size : (c + 1) * patch_size,
            ].copy()
            patches.append(Patch(image=tile, grid_pos=(r, c)))
    return patches


def crc16_ccitt_false(data: bytes) -> int:
    """CRC-16/CCITT-FALSE: poly 0x1021, init 0xFFFF, no reflection."""
    crc = 0xFFFF
    for byte in data:
        crc ^= byte << 8
        for _ in range(8):
            crc = ((crc << 1) ^ 0x1021) if crc & 0x8000 else (crc << 1)
            crc &= 0xFFFF
    return crc


def _fiducial_cells(payload: int) -> np.ndarray:
    """The 8x8 binary cell grid encoding `payload`."""
    if not 0 <= payload <= 0xFFFF:
        raise InputError("fiducial payload must fit in 16 bits")
    cells = np.zeros((FIDUCIAL_CELLS, FIDUCIAL_CELLS), dtype=np.uint8)
    cells[0, 0] = cells[0, 7] = cells[7, 0] = 1
    cells[7, 7] = 0
    cells[0, 1:7] = _SYNC_TOP
    cells[7, 1:7] = _SYNC_BOTTOM
    bits = [(payload >> (15 - i)) & 1 for i in range(16)]
    cells[1, :] = bits[:8]
    cells[2, :] = bits[8:]
    crc = crc16_ccitt_false(bytes([(payload >> 8) & 0xFF, payload & 0xFF]))
    crc_bits = [(crc >> (15 - i)) & 1 for i in range(16)]
    cells[3, :] = crc_bits[:8]
    cells[4, :] = crc_bits[8:]
    for r in _CHECKER_ROWS:
        cells[r, :] = [(r + c + 1) % 2 for c in range(FIDUCIAL_CELLS)]
    return cells


def embed_fiducial(patch: Patch, payload: int) -> Patch:
    """Stamp the fiducial block into the patch's top-left corner.

    Cells render at full contrast (ink 1.0 on 0.0) so the block survives
    attenuation and renormalization.
    """
    if patch.size < MIN_FIDUCIAL_PATCH:
        raise InputError(f"patch side must be >= {MIN_FIDUCIAL_PATCH}px for a fiducial")
    cells = _fiducial_cells(payload)
    block = np.kron(cells, np.ones((FIDUCIAL_CELL_PX, FIDUCIAL_CELL_PX))).astype(np.float64)
    out = patch.image.copy()
    out[:FIDUCIAL_SIDE, :FIDUCIAL_SIDE] = block
    return Patch(image=out, grid_pos=patch.grid_pos)


def read_fiducial_cells(patch: Patch) -> np.ndarray:
    """Re-threshold the fiducial block and majority-vote each cell."""
    block = patch.image[:FIDUCIAL_SIDE, :FIDUCIAL_SIDE]
    thresh = otsu_threshold(block)
    ink = block > thresh
    votes = np.zeros((FIDUCIAL_CELLS, FIDUCIAL_CELLS), dtype=np.uint8)
    for r in range(FIDUCIAL_CELLS):
        for c in range(FIDUCIAL_CELLS):
            cell = ink[
                r * FIDUCIAL_CELL_PX : (r + 1) * FIDUCIAL_CELL_PX,
                c * FIDUCIAL_CELL_PX : (c + 1) * FIDUCIAL_CELL_PX,
            ]
            votes[r, c] = 1 if cell.mean() > 0.5 else 0
    return votes


def validate_fiducial(patch: Patch, expected_payload: int) -> bool:
    """Decode the block and compare with the expected payload.

    Returns False (never raises) when markers, sync rows, checkerboard,
    CRC or payload disagree; a shifted or noise-swamped block fails here.
    """
    if patch.size < MIN_FIDUCIAL_PATCH:
        return False
    if not 0 <= expected_payload <= 0xFFFF:
        raise InputError("fiducial payload must fit in 16 bits")
    votes = read_fiducial_cells(patch)
    if not (votes[0, 0] == 1 and votes[0, 7] == 1 and votes[7, 0] == 1 and votes[7, 7] == 0):
        return False
    if tuple(votes[0, 1:7]) != _SYNC_TOP or tuple(votes[7, 1:7]) != _SYNC_BOTTOM:
        return False
    for r in _CHECKER_ROWS:
        if any(votes[r, c] != (r + c + 1) % 2 for c in range(FIDUCIAL_CELLS)):
            return False
    payload = 0
    for i, bit in enumerate(list(votes[1, :]) + list(votes[2, :])):
        payload |= int(bit) << (15 - i)
    crc_read = 0
    for i, bit in enumerate(list(votes[3, :]) + list(votes[4, :])):
        crc_read |= int(bit) << (15 - i)
    crc_want = crc16_ccitt_false(bytes([(payload >> 8) & 0xFF, payload & 0xFF]))
    return crc_read == crc_want and payload == expected_payload
