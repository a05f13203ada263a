"""Labeled sample generation, augmentation and dataset construction.

Reference samples are uniform backgrounds with embedded-font glyphs at
random sizes, faces and positions, laid out on a patch grid so every
character sits wholly inside one patch. The dataset builder pushes each
reference frame through the interception chain (synthesize, channel,
raster, align, split), gates frames on the fiducial check, and persists
patches plus JSON-lines label files under a JSON manifest.
"""

from __future__ import annotations

import json
import logging
import shutil
from dataclasses import dataclass, field, asdict
from pathlib import Path

import numpy as np
from scipy import ndimage

from . import fonts
from .align import (FIDUCIAL_SIDE, Patch, align_and_crop, detect_porches,
                    embed_fiducial, split_patches, validate_fiducial)
from .errors import GenerationError, InputError, PersistedStateError
from .formats import read_pgm, write_pgm
from .imgops import normalize_minmax
from .raster import estimate_sync, rasterize
from .signal import (EmanationModel, VideoTiming, apply_channel,
                     synthesize_emanation)

log = logging.getLogger(__name__)

_PLACE_ATTEMPTS = 100
_GLYPH_PAD = 2  # keeps neighboring glyphs from touching into one component


@dataclass(frozen=True)
class CharBox:
    """One labeled character box (top-left origin, pixel units)."""

    label: str
    x: int
    y: int
    w: int
    h: int

    def __post_init__(self):
        if len(self.label) != 1 or self.label not in fonts.ALPHABET:
            raise InputError(f"label {self.label!r} not in the 62-symbol alphabet")
        if self.w <= 0 or self.h <= 0:
            raise InputError("box must have positive size")


@dataclass
class LabeledSample:
    """A reference image plus exact character boxes and generation metadata."""

    image: np.ndarray
    chars: list[CharBox]
    meta: dict


@dataclass(frozen=True)
class SampleSpec:
    """Knobs for the reference-sample generator."""

    n_chars: int = 20
    size_pt_range: tuple[int, int] = (11, 70)
    faces: tuple[str, ...] = fonts.FACE_NAMES
    fg_range: tuple[float, float] = (0.6, 0.95)
    bg_range: tuple[float, float] = (0.05, 0.4)
    min_contrast: float = 0.25
    alphabet: str = fonts.ALPHABET
    plant_text: str = ""
    plant_size_pt: int = 24
    plant_face: str = ""

    def __post_init__(self):
        lo, hi = self.size_pt_range
        if not (11 <= lo <= hi <= 70):
            raise InputError("size_pt_range must lie within [11, 70]")
        if self.n_chars < 0:
            raise InputError("n_chars must be >= 0")
        for v in (*self.fg_range, *self.bg_range):
            if not 0.0 <= v <= 1.0:
                raise InputError("fg/bg ranges must lie within [0, 1]")
        if self.plant_text and not (11 <= self.plant_size_pt <= 70):
            raise InputError("plant_size_pt must lie within [11, 70]")
        for ch in self.plant_text:
            if ch not in fonts.ALPHABET:
                raise InputError(f"plant character {ch!r} not renderable")


def _boxes_overlap(a: tuple[int, int, int, int], b: tuple[int, int, int, int],
                   pad: int = 0) -> bool:
    ax, ay, aw, ah = a
    bx, by, bw, bh = b
    return not (ax + aw + pad <= bx or bx + bw + pad <= ax
                or ay + ah + pad <= by or by + bh + pad <= ay)


def _draw_levels(rng: np.random.Generator, spec: SampleSpec) -> tuple[float, float]:
    bg = float(rng.uniform(*spec.bg_range))
    for _ in range(200):
        fg = float(rng.uniform(*spec.fg_range))
        if abs(fg - bg) >= spec.min_contrast and fg != bg:
            return fg, bg
    fg = min(1.0, bg + spec.min_contrast)
    if fg == bg:
        fg = max(0.0, bg - spec.min_contrast)
    return fg, bg


def generate_sample(
    spec: SampleSpec,
    patch_grid: tuple[int, int],
    seed: int,
    patch_size: int = 256,
    reserved: tuple[tuple[int, int, int, int], ...] = (),
) -> LabeledSample:
    """Render a patch-grid reference sample with exact character boxes.

    Characters never straddle patch boundaries or the `reserved`
    rectangles; positions that would overlap an already placed glyph are
    rejected and redrawn up to 100 times, after which the character is
    dropped (the actual count is what `chars` reports). Deterministic per
    seed.
    """
    rows, cols = patch_grid
    if rows < 1 or cols < 1:
        raise InputError("patch grid must be at least 1x1")
    rng = np.random.default_rng(seed)
    fg, bg = _draw_levels(rng, spec)
    canvas = np.full((rows * patch_size, cols * patch_size), bg, dtype=np.float64)

    placed: list[tuple[int, int, int, int]] = list(reserved)
    chars: list[CharBox] = []
    font_ids: list[str] = []
    size_pts: list[int] = []

    def try_place(bitmap: np.ndarray, r: int, c: int, x: int, y: int) -> bool:
        h, w = bitmap.shape
        box = (x, y, w, h)
        if any(_boxes_overlap(box, other, pad=_GLYPH_PAD) for other in placed):
            return False
        canvas[y : y + h, x : x + w][bitmap > 0] = fg
        placed.append(box)
        return True

    def random_spot(rng, w: int, h: int, r: int, c: int) -> tuple[int, int] | None:
        x0, y0 = c * patch_size, r * patch_size
        max_x = patch_size - w - _GLYPH_PAD
        max_y = patch_size - h - _GLYPH_PAD
        if max_x < _GLYPH_PAD or max_y < _GLYPH_PAD:
            return None
        return (x0 + int(rng.integers(_GLYPH_PAD, max_x + 1)),
                y0 + int(rng.integers(_GLYPH_PAD, max_y + 1)))

    if spec.plant_text:
        face = spec.plant_face or spec.faces[0]
        px = fonts.pt_to_px(spec.plant_size_pt)
        bitmaps = [fonts.scaled_bitmap(face, ch, px) for ch in spec.plant_text]
        gap = 3
        run_w = sum(bm.shape[1] for bm in bitmaps) + gap * (len(bitmaps) - 1)
        run_h = max(bm.shape[0] for bm in bitmaps)
        done = False
        for _ in range(_PLACE_ATTEMPTS):
            r = int(rng.integers(rows))
            c = int(rng.integers(cols))
            spot = random_spot(rng, run_w, run_h, r, c)
            if spot is None:
                continue
            x, y = spot
            boxes = []
            cx = x
            for bm in bitmaps:
                boxes.append((cx, y, bm.shape[1], bm.shape[0]))
                cx += bm.shape[1] + gap
            if any(_boxes_overlap(b, other, pad=_GLYPH_PAD)
                   for b in boxes for other in placed):
                continue
            for ch, bm, b in zip(spec.plant_text, bitmaps, boxes):
                canvas[b[1] : b[1] + b[3], b[0] : b[0] + b[2]][bm > 0] = fg
                placed.append(b)
                chars.append(CharBox(ch, b[0], b[1], b[2], b[3]))
                font_ids.append(face)
                size_pts.append(spec.plant_size_pt)
            done = True
            break
        if not done:
            raise GenerationError(
                f"could not place planted text {spec.plant_text!r} "
                f"({run_w}x{run_h}px) on a {rows}x{cols} grid"
            )

    dropped = 0
    for _ in range(spec.n_chars):
        label = spec.alphabet[int(rng.integers(len(spec.alphabet)))]
        face = spec.faces[int(rng.integers(len(spec.faces)))]
        size_pt = int(rng.integers(spec.size_pt_range[0], spec.size_pt_range[1] + 1))
        bitmap = fonts.scaled_bitmap(face, label, fonts.pt_to_px(size_pt))
        h, w = bitmap.shape
        for _ in range(_PLACE_ATTEMPTS):
            r = int(rng.integers(rows))
            c = int(rng.integers(cols))
            spot = random_spot(rng, w, h, r, c)
            if spot is None:
                continue
            x, y = spot
            if try_place(bitmap, r, c, x, y):
                chars.append(CharBox(label, x, y, w, h))
                font_ids.append(face)
                size_pts.append(size_pt)
                break
        else:
            dropped += 1

    if spec.n_chars > 0 and not chars:
        raise GenerationError("placement budget exhausted before any character fit")
    if dropped:
        log.info("dropped %d of %d characters (placement budget)", dropped, spec.n_chars)

    meta = {
        "fg_level": fg,
        "bg_level": bg,
        "seed": seed,
        "font_ids": font_ids,
        "size_pts": size_pts,
        "requested_chars": spec.n_chars,
        "dropped": dropped,
    }
    return LabeledSample(image=canvas, chars=chars, meta=meta)


# --------------------------------------------------------------------------
# Augmentation

GAUSSIAN = "gaussian"
MEDIAN = "median"
SALT_PEPPER = "salt_pepper"
INVERT = "invert"
CONTRAST = "contrast_normalize"


@dataclass(frozen=True)
class AugmentOp:
    kind: str
    param: float = 0.0

    def __str__(self) -> str:
        if self.kind in (INVERT, CONTRAST):
            return self.kind
        return f"{self.kind}:{self.param:g}"

    @classmethod
    def parse(cls, text: str) -> "AugmentOp":
        kind, _, param = text.partition(":")
        if kind in (INVERT, CONTRAST):
            return cls(kind)
        if kind in (GAUSSIAN, MEDIAN, SALT_PEPPER):
            if not param:
                raise InputError(f"augmentation {kind!r} needs a parameter")
            return cls(kind, float(param))
        raise InputError(f"unknown augmentation {text!r}")


def augment(img: np.ndarray, op: AugmentOp, seed: int = 0) -> np.ndarray:
    """Apply one augmentation; output stays in [0,1] with the same shape."""
    img = np.asarray(img, dtype=np.float64)
    if op.kind == GAUSSIAN:
        if op.param <= 0:
            raise InputError("gaussian blur needs sigma > 0")
        out = ndimage.gaussian_filter(img, sigma=op.param, mode="nearest", truncate=3.0)
        return np.clip(out, 0.0, 1.0)
    if op.kind == MEDIAN:
        k = int(op.param)
        if k < 1 or k % 2 == 0 or k != op.param:
            raise InputError("median blur needs an odd integer window")
        return ndimage.median_filter(img, size=k, mode="nearest")
    if op.kind == SALT_PEPPER:
        p = op.param
        if not 0.0 <= p <= 1.0:
            raise InputError("salt/pepper probability must lie in [0, 1]")
        rng = np.random.default_rng(seed)
        u = rng.random(img.shape)
        out = img.copy()
        out[u < p / 2] = 0.0
        out[(u >= p / 2) & (u < p)] = 1.0
        return out
    if op.kind == INVERT:
        return 1.0 - img
    if op.kind == CONTRAST:
        return normalize_minmax(img)
    raise InputError(f"unknown augmentation kind {op.kind!r}")


# --------------------------------------------------------------------------
# Dataset construction

@dataclass
class CorpusConfig:
    """Everything build_corpus needs; validated up front."""

    timing: VideoTiming
    model: EmanationModel = field(default_factory=EmanationModel)
    sample_spec: SampleSpec = field(default_factory=SampleSpec)
    patch_grid: tuple[int, int] = (1, 2)
    patch_size: int = 256
    n_frames: int = 4
    attenuation_levels: tuple[float, ...] = (0.0,)
    noise_sigma: float = 0.0
    augmentations: tuple[AugmentOp, ...] = ()
    fiducial: bool = True
    fiducial_payload: int = 0xBEEF
    use_ground_truth_sync: bool = True
    sync_bounds_frac: float = 0.2
    seed: int = 0
    split_fractions: tuple[float, float] = (0.8, 0.1)  # train, val; rest = test

    def __post_init__(self):
        rows, cols = self.patch_grid
        if rows * self.patch_size > self.timing.v_active or \
           cols * self.patch_size > self.timing.h_active:
            raise InputError("patch grid does not fit the active area")
        if self.n_frames < 1:
            raise InputError("n_frames must be >= 1")
        if not self.attenuation_levels:
            raise InputError("need at least one attenuation level")
        if any(a < 0 for a in self.attenuation_levels):
            raise InputError("attenuation must be >= 0 dB")
        if self.noise_sigma < 0:
            raise InputError("noise_sigma must be >= 0")
        if self.fiducial and self.patch_size < 160:
            raise InputError("fiducial needs patch_size >= 160")


@dataclass
class ManifestEntry:
    sample_path: str
    label_path: str
    attenuation_db: float
    augmentations: tuple[str, ...]
    seed: int
    split: str
    n_chars: int


@dataclass
class CorpusManifest:
    alphabet: str
    patch_size: int
    patch_grid: tuple[int, int]
    generated: int
    skipped: int
    fiducial: bool
    entries: list[ManifestEntry]

    def to_json(self) -> str:
        doc = {
            "alphabet": self.alphabet,
            "patch_size": self.patch_size,
            "patch_grid": list(self.patch_grid),
            "generated": self.generated,
            "skipped": self.skipped,
            "fiducial": self.fiducial,
            "entries": [asdict(e) for e in self.entries],
        }
        return json.dumps(doc, indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "CorpusManifest":
        doc = json.loads(text)
        entries = [ManifestEntry(
            sample_path=e["sample_path"],
            label_path=e["label_path"],
            attenuation_db=e["attenuation_db"],
            augmentations=tuple(e["augmentations"]),
            seed=e["seed"],
            split=e["split"],
            n_chars=e["n_chars"],
        ) for e in doc["entries"]]
        return cls(
            alphabet=doc["alphabet"],
            patch_size=doc["patch_size"],
            patch_grid=tuple(doc["patch_grid"]),
            generated=doc["generated"],
            skipped=doc["skipped"],
            fiducial=doc["fiducial"],
            entries=entries,
        )


def _derived_seed(*parts: int) -> int:
    return int(np.random.SeedSequence(tuple(int(p) for p in parts)).generate_state(1)[0])


def ground_truth_periods(timing: VideoTiming) -> tuple[float, float]:
    line_p = timing.h_total / timing.pixel_clock_hz
    frame_p = timing.frame_samples / timing.pixel_clock_hz
    return line_p, frame_p


def fiducial_reserved_rect(margin: int = 8) -> tuple[int, int, int, int]:
    return (0, 0, FIDUCIAL_SIDE + margin, FIDUCIAL_SIDE + margin)


def mask_fiducial_region(patch_image: np.ndarray) -> np.ndarray:
    """Blank the fiducial block with the median of the rest of the patch.

    Recognition and scoring run on content, not on the alignment marker;
    the marker's location is fixed, so this is a deterministic crop-out.
    """
    out = np.asarray(patch_image, dtype=np.float64).copy()
    rest = np.concatenate([
        out[FIDUCIAL_SIDE:, :].ravel(),
        out[:FIDUCIAL_SIDE, FIDUCIAL_SIDE:].ravel(),
    ])
    out[:FIDUCIAL_SIDE, :FIDUCIAL_SIDE] = float(np.median(rest))
    return out


def load_eval_patch(
    corpus_dir: str | Path,
    manifest: CorpusManifest,
    entry: ManifestEntry,
    grid_pos: tuple[int, int],
) -> tuple[np.ndarray, list[CharBox]]:
    """Load one persisted patch plus labels, masking the fiducial block."""
    r, c = grid_pos
    frame_dir = Path(corpus_dir) / entry.sample_path
    img_path = frame_dir / f"patch_{r}_{c}.pgm"
    lbl_path = frame_dir / f"patch_{r}_{c}.jsonl"
    if not img_path.is_file() or not lbl_path.is_file():
        raise PersistedStateError("corpus file missing", str(img_path))
    img = read_pgm(img_path)
    if manifest.fiducial and grid_pos == (0, 0):
        img = mask_fiducial_region(img)
    return img, read_labels(lbl_path)


def intercept_frame(
    sample: LabeledSample,
    config: CorpusConfig,
    attenuation_db: float,
    frame_index: int,
) -> np.ndarray | None:
    """Run one reference sample through the interception chain.

    Returns the aligned sample-layout image, or None when the fiducial
    gate rejects the frame.
    """
    timing = config.timing
    fs = timing.pixel_clock_hz
    rows, cols = config.patch_grid
    sample_h, sample_w = sample.image.shape

    frame = np.full((timing.v_active, timing.h_active), sample.meta["bg_level"])
    frame[:sample_h, :sample_w] = sample.image
    if config.fiducial:
        ps = config.patch_size
        top_left = Patch(frame[:ps, :ps].copy(), (0, 0))
        frame[:ps, :ps] = embed_fiducial(top_left, config.fiducial_payload).image

    n_frames = 1 if config.use_ground_truth_sync else 3
    capture = synthesize_emanation(
        frame, timing, config.model, fs,
        seed=_derived_seed(config.seed, frame_index, 1), frames=n_frames,
    )
    capture = apply_channel(
        capture, attenuation_db, config.noise_sigma,
        seed=_derived_seed(config.seed, frame_index, 2),
    )

    line_p, frame_p = ground_truth_periods(timing)
    if not config.use_ground_truth_sync:
        frac = config.sync_bounds_frac
        sync = estimate_sync(
            capture,
            (line_p * (1 - frac), line_p * (1 + frac)),
            (frame_p * (1 - frac), frame_p * (1 + frac)),
        )
        line_p, frame_p = sync.line_period_s, sync.frame_period_s
    img = rasterize(capture, line_p, frame_p)
    offsets = detect_porches(img)
    aligned = align_and_crop(img, offsets, sample_w, sample_h)

    if config.fiducial:
        patch0 = split_patches(aligned, config.patch_size)[0]
        if not validate_fiducial(patch0, config.fiducial_payload):
            return None
    return aligned


def chars_in_patch(chars: list[CharBox], grid_pos: tuple[int, int],
                   patch_size: int) -> list[CharBox]:
    """Characters whose box lies in the given patch, in patch coordinates."""
    r, c = grid_pos
    x0, y0 = c * patch_size, r * patch_size
    out = []
    for ch in chars:
        if x0 <= ch.x < x0 + patch_size and y0 <= ch.y < y0 + patch_size:
            out.append(CharBox(ch.label, ch.x - x0, ch.y - y0, ch.w, ch.h))
    return out


def _write_labels(path: Path, chars: list[CharBox]) -> None:
    lines = [json.dumps({"label": c.label, "x": c.x, "y": c.y, "w": c.w, "h": c.h},
                        sort_keys=True) for c in chars]
    path.write_text("\n".join(lines) + ("\n" if lines else ""), encoding="ascii")


def read_labels(path: str | Path) -> list[CharBox]:
    chars = []
    text = Path(path).read_text(encoding="ascii")
    for line in text.splitlines():
        if not line.strip():
            continue
        rec = json.loads(line)
        chars.append(CharBox(rec["label"], rec["x"], rec["y"], rec["w"], rec["h"]))
    return chars


def _split_for(config: CorpusConfig, frame_index: int) -> str:
    u = np.random.default_rng(_derived_seed(config.seed, frame_index, 4)).random()
    train, val = config.split_fractions
    if u < train:
        return "train"
    if u < train + val:
        return "val"
    return "test"


def build_corpus(config: CorpusConfig, out_dir: str | Path) -> CorpusManifest:
    """Generate, intercept and persist a labeled patch corpus.

    Attenuation levels are assigned round-robin over frames so every
    interception condition is equally represented. Frames failing the
    fiducial gate are skipped and counted. Rerunning with the same config
    writes byte-identical files; the manifest lands atomically at
    `manifest.json` after all frames are on disk.
    """
    out = Path(out_dir)
    try:
        out.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise PersistedStateError("cannot create corpus directory", str(out)) from exc

    ps = config.patch_size
    entries: list[ManifestEntry] = []
    skipped = 0
    created: list[Path] = []
    reserved = (fiducial_reserved_rect(),) if config.fiducial else ()

    try:
        for i in range(config.n_frames):
            att = float(config.attenuation_levels[i % len(config.attenuation_levels)])
            gen_seed = _derived_seed(config.seed, i, 0)
            sample = generate_sample(config.sample_spec, config.patch_grid,
                                     gen_seed, ps, reserved)
            aligned = intercept_frame(sample, config, att, i)
            if aligned is None:
                skipped += 1
                log.warning("frame %d: fiducial validation failed, skipping", i)
                continue

            variants: list[tuple[str, tuple[str, ...], np.ndarray]] = [
                (f"frame_{i:04d}", (), aligned)
            ]
            for j, op in enumerate(config.augmentations):
                aug = augment(aligned, op, seed=_derived_seed(config.seed, i, 10 + j))
                variants.append((f"frame_{i:04d}_aug{j}", (str(op),), aug))

            split = _split_for(config, i)
            for name, ops, image in variants:
                frame_dir = out / name
                frame_dir.mkdir(exist_ok=True)
                created.append(frame_dir)
                n_chars = 0
                for patch in split_patches(image, ps):
                    r, c = patch.grid_pos
                    write_pgm(frame_dir / f"patch_{r}_{c}.pgm", patch.image)
                    local = chars_in_patch(sample.chars, patch.grid_pos, ps)
                    _write_labels(frame_dir / f"patch_{r}_{c}.jsonl", local)
                    n_chars += len(local)
                entries.append(ManifestEntry(
                    sample_path=name, label_path=name, attenuation_db=att,
                    augmentations=ops, seed=gen_seed, split=split, n_chars=n_chars,
                ))
    except OSError as exc:
        # Partial output is useless without a manifest; sweep away what we made.
        for frame_dir in created:
            shutil.rmtree(frame_dir, ignore_errors=True)
        raise PersistedStateError("corpus write failed", str(out)) from exc

    manifest = CorpusManifest(
        alphabet=config.sample_spec.alphabet,
        patch_size=ps,
        patch_grid=config.patch_grid,
        generated=config.n_frames,
        skipped=skipped,
        fiducial=config.fiducial,
        entries=entries,
    )
    tmp = out / "manifest.json.tmp"
    tmp.write_text(manifest.to_json(), encoding="ascii")
    tmp.replace(out / "manifest.json")
    return manifest


def load_manifest(corpus_dir: str | Path) -> CorpusManifest:
    path = Path(corpus_dir) / "manifest.json"
    if not path.is_file():
        raise PersistedStateError("manifest not found", str(path))
    return CorpusManifest.from_json(path.read_text(encoding="ascii"))
