#!/usr/bin/env python3
"""Regenerate src/emleak/fontdata.py from the bundled DejaVu TTFs.

Dev-only tool (needs Pillow + matplotlib, which ships the TTFs). The
package itself never touches TTF files at runtime: glyphs are embedded as
bitmap rows.

Every glyph is post-processed to be a single 8-connected ink component
(dots on i/j get bridged to the stem) and the result is verified to stay
single-component under nearest-neighbor scaling to every pixel height the
sample generator can request. Run with --report to also print a
self-classification confusion summary over a size sweep.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

import numpy as np
from PIL import Image, ImageDraw, ImageFont
from scipy import ndimage

ALPHABET = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789"
CANONICAL_EM = 24
# Pixel heights reachable through round(pt * 96 / 72) for pt in 11..70.
REACHABLE_PX = sorted({round(pt * 96 / 72) for pt in range(11, 71)})

FACES = {
    "mono": "DejaVuSansMono-Bold.ttf",
    "serif": "DejaVuSerif-Bold.ttf",
}

_EIGHT = np.ones((3, 3), dtype=bool)


def ttf_dir() -> Path:
    import matplotlib.font_manager as fm

    return Path(os.path.dirname(fm.__file__)) / "mpl-data" / "fonts" / "ttf"


def render_glyph(font: ImageFont.FreeTypeFont, ch: str, em: int):
    """Bilevel-render one glyph; returns (bitmap, y0 relative to ascender)."""
    canvas = Image.new("L", (em * 4, em * 4), 0)
    draw = ImageDraw.Draw(canvas)
    draw.fontmode = "1"
    origin = (em, em)
    draw.text(origin, ch, fill=255, font=font)
    arr = np.array(canvas) > 127
    ys, xs = np.nonzero(arr)
    if ys.size == 0:
        raise RuntimeError(f"glyph {ch!r} rendered empty")
    bitmap = arr[ys.min() : ys.max() + 1, xs.min() : xs.max() + 1]
    return bitmap.astype(np.uint8), int(ys.min() - origin[1])


def n_components(bitmap: np.ndarray) -> int:
    _, n = ndimage.label(bitmap, structure=_EIGHT)
    return n


def bridge_components(bitmap: np.ndarray) -> np.ndarray:
    """Connect ink components with 2px-wide straight bridges until single."""
    bitmap = bitmap.copy()
    while True:
        labels, n = ndimage.label(bitmap, structure=_EIGHT)
        if n <= 1:
            return bitmap
        # Closest pixel pair between component 1 and its nearest neighbor.
        best = None
        pix = [np.argwhere(labels == i + 1) for i in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                d = np.linalg.norm(pix[i][:, None, :] - pix[j][None, :, :], axis=2)
                ii, jj = np.unravel_index(np.argmin(d), d.shape)
                if best is None or d[ii, jj] < best[0]:
                    best = (d[ii, jj], pix[i][ii], pix[j][jj])
        _, a, b = best
        steps = int(max(abs(b[0] - a[0]), abs(b[1] - a[1]))) + 1
        for t in np.linspace(0.0, 1.0, steps * 2):
            r = int(round(a[0] + (b[0] - a[0]) * t))
            c = int(round(a[1] + (b[1] - a[1]) * t))
            bitmap[max(r - 1, 0) : r + 1, max(c - 1, 0) : c + 1] = 1
    return bitmap


def scale_bitmap(bitmap: np.ndarray, f: float) -> np.ndarray:
    h, w = bitmap.shape
    oh, ow = max(1, round(h * f)), max(1, round(w * f))
    rows = (np.arange(oh) * h // oh).astype(int)
    cols = (np.arange(ow) * w // ow).astype(int)
    return bitmap[np.ix_(rows, cols)]


def thicken(bitmap: np.ndarray) -> np.ndarray:
    return ndimage.binary_dilation(bitmap, structure=_EIGHT).astype(np.uint8)


def build_face(path: Path, em: int):
    font = ImageFont.truetype(str(path), em)
    ascent, descent = font.getmetrics()
    glyphs = {}
    for ch in ALPHABET:
        bitmap, y0 = render_glyph(font, ch, em)
        if n_components(bitmap) > 1:
            bitmap = bridge_components(bitmap)
        # Guarantee connectivity at every reachable render size; thicken as
        # a last resort (at most twice keeps shapes recognizable).
        for _ in range(3):
            bad = [px for px in REACHABLE_PX
                   if n_components(scale_bitmap(bitmap, px / em)) != 1]
            if not bad:
                break
            bitmap = bridge_components(thicken(bitmap))
        else:
            raise RuntimeError(f"could not stabilize glyph {ch!r}")
        glyphs[ch] = (bitmap, y0)
    return {"ascent": ascent, "descent": descent, "glyphs": glyphs}


def pack_rows(bitmap: np.ndarray) -> list[int]:
    h, w = bitmap.shape
    out = []
    for r in range(h):
        v = 0
        for c in range(w):
            if bitmap[r, c]:
                v |= 1 << (w - 1 - c)
        out.append(v)
    return out


def emit(faces: dict, em: int, out_path: Path) -> None:
    lines = [
        '"""Embedded bitmap font data. Generated by tools/make_fontdata.py; do not edit."""',
        "",
        f"CANONICAL_EM = {em}",
        "",
        "# face -> (ascent, descent, {char: (width, y_offset_from_ascender, row_bits)})",
        "FACES = {",
    ]
    for name, face in faces.items():
        lines.append(f"    {name!r}: ({face['ascent']}, {face['descent']}, {{")
        for ch, (bitmap, y0) in face["glyphs"].items():
            rows = pack_rows(bitmap)
            lines.append(f"        {ch!r}: ({bitmap.shape[1]}, {y0}, {tuple(rows)!r}),")
        lines.append("    }),")
    lines.append("}")
    out_path.write_text("\n".join(lines) + "\n", encoding="ascii")
    print(f"wrote {out_path} ({out_path.stat().st_size} bytes)")


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--em", type=int, default=CANONICAL_EM)
    ap.add_argument("--out", default=str(Path(__file__).parents[1] / "src/emleak/fontdata.py"))
    args = ap.parse_args()

    d = ttf_dir()
    faces = {name: build_face(d / fn, args.em) for name, fn in FACES.items()}
    for name, face in faces.items():
        sizes = {ch: bm.shape for ch, (bm, _) in face["glyphs"].items()}
        hs = [s[0] for s in sizes.values()]
        print(f"face {name}: {len(sizes)} glyphs, ink heights {min(hs)}..{max(hs)}, "
              f"ascent {face['ascent']}")
    emit(faces, args.em, Path(args.out))
    return 0


if __name__ == "__main__":
    sys.exit(main())
