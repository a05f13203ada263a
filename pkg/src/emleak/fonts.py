"""Embedded bitmap font bank shared by the sample generator and recognizer.

Two faces (a bold monospace and a bold serif) cover A-Z, a-z, 0-9. Glyphs
are stored at a canonical EM height and scaled to a requested pixel size
by nearest neighbor, so rendering is fully deterministic and needs no font
machinery at runtime. Point sizes map to pixels at the fixed 96 dpi
convention: px = round(pt * 96 / 72).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import fontdata
from .errors import InputError
from .imgops import resize_nearest

ALPHABET = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789"
FACE_NAMES = tuple(fontdata.FACES.keys())
CANONICAL_EM = fontdata.CANONICAL_EM
TEMPLATE_HEIGHT = 32


@dataclass(frozen=True)
class Glyph:
    """Tight ink bitmap plus its vertical offset below the ascender line."""

    bitmap: np.ndarray
    y_offset: int


def pt_to_px(size_pt: float) -> int:
    """Point size -> pixel height at the 96 dpi convention."""
    px = round(size_pt * 96.0 / 72.0)
    if px < 1:
        raise InputError(f"size {size_pt}pt maps to a zero-pixel glyph")
    return px


def _unpack(width: int, rows: tuple[int, ...]) -> np.ndarray:
    out = np.zeros((len(rows), width), dtype=np.uint8)
    for r, bits in enumerate(rows):
        for c in range(width):
            if bits >> (width - 1 - c) & 1:
                out[r, c] = 1
    return out


@lru_cache(maxsize=None)
def _face_glyphs(face: str) -> dict[str, Glyph]:
    if face not in fontdata.FACES:
        raise InputError(f"unknown font face {face!r}; have {FACE_NAMES}")
    _, _, glyphs = fontdata.FACES[face]
    return {
        ch: Glyph(bitmap=_unpack(width, rows), y_offset=y0)
        for ch, (width, y0, rows) in glyphs.items()
    }


def glyph(face: str, char: str) -> Glyph:
    glyphs = _face_glyphs(face)
    if char not in glyphs:
        raise InputError(f"character {char!r} not in the embedded alphabet")
    return glyphs[char]


def _tight_crop(bitmap: np.ndarray) -> np.ndarray:
    ys, xs = np.nonzero(bitmap)
    return bitmap[ys.min() : ys.max() + 1, xs.min() : xs.max() + 1]


@lru_cache(maxsize=4096)
def scaled_bitmap(face: str, char: str, px: int) -> np.ndarray:
    """Glyph ink bitmap scaled so the face's EM square is `px` tall.

    The result is tight-cropped; scaling never disconnects a glyph (this
    is enforced when the font data is generated). Returned arrays are
    cached and read-only.
    """
    if px < 1:
        raise InputError("pixel size must be >= 1")
    g = glyph(face, char)
    f = px / CANONICAL_EM
    h, w = g.bitmap.shape
    scaled = resize_nearest(g.bitmap, max(1, round(h * f)), max(1, round(w * f)))
    scaled = np.ascontiguousarray(_tight_crop(scaled))
    scaled.setflags(write=False)
    return scaled


@lru_cache(maxsize=8)
def template_bank(height: int = TEMPLATE_HEIGHT) -> tuple[tuple[str, str, np.ndarray], ...]:
    """(label, face, bitmap) templates, each scaled to `height` px of ink.

    Ordered by label then face so score ties resolve to the
    lexicographically smallest label.
    """
    bank = []
    for ch in ALPHABET:
        for face in FACE_NAMES:
            g = glyph(face, ch).bitmap
            f = height / g.shape[0]
            t = resize_nearest(g, height, max(1, round(g.shape[1] * f)))
            t = np.ascontiguousarray(_tight_crop(t)).astype(np.float64)
            t.setflags(write=False)
            bank.append((ch, face, t))
    bank.sort(key=lambda item: (item[0], item[1]))
    return tuple(bank)
