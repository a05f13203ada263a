"""Character retrieval from rastered patches.

Stages: Otsu segmentation into ink components, normalized-cross-correlation
classification against the embedded font bank, Hough grouping of detections
into text lines, and bit-parallel approximate keyword matching over the
line strings to decide whether watched content is leaking.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy import ndimage

from . import fonts
from .errors import InputError
from .imgops import otsu_threshold, resize_nearest

#: Design sizes (EM px) the template bank is rendered at. Matching a crop
#: against templates near its own render size sidesteps nearest-neighbor
#: aliasing, which a single canonical size suffers from badly below ~20 px.
DEFAULT_DESIGN_PX = (15, 17, 19, 21, 24, 28, 33, 40, 48, 58, 70, 84, 93)

DEFAULT_REJECT_THRESHOLD = 0.6

_EIGHT = np.ones((3, 3), dtype=bool)


@dataclass(frozen=True)
class Region:
    """Tight bounding box and ink mask of one segmented component."""

    x: int
    y: int
    w: int
    h: int
    area: int
    mask: np.ndarray = field(repr=False, compare=False)


@dataclass(frozen=True)
class Detection:
    """A classified region: label, box, [0,1] confidence, rejected flag."""

    label: str
    x: int
    y: int
    w: int
    h: int
    confidence: float
    rejected: bool = False

    @property
    def centroid(self) -> tuple[float, float]:
        return (self.x + self.w / 2.0, self.y + self.h / 2.0)


@dataclass(frozen=True)
class TextLine:
    """A Hough-detected text line: (rho, theta) and member detection indices."""

    rho: float
    theta: float
    members: tuple[int, ...]


@dataclass(frozen=True)
class AlarmPolicy:
    """Watched keywords and the tolerated edit-error budget per keyword."""

    watchlist: tuple[str, ...]
    max_errors: int = 0

    def __post_init__(self):
        object.__setattr__(self, "watchlist", tuple(self.watchlist))
        if not self.watchlist:
            raise InputError("watchlist must not be empty")
        for kw in self.watchlist:
            if not kw:
                raise InputError("keywords must be non-empty")
            if len(kw) > 63:
                raise InputError(f"keyword {kw!r} longer than 63 characters")
        if self.max_errors < 0:
            raise InputError("max_errors must be >= 0")
        if self.max_errors >= min(len(kw) for kw in self.watchlist):
            raise InputError("max_errors must be smaller than the shortest keyword")


@dataclass(frozen=True)
class AlarmMatch:
    keyword: str
    line_index: int
    position: int
    errors: int


@dataclass(frozen=True)
class AlarmResult:
    triggered: bool
    matches: tuple[AlarmMatch, ...]


def segment_glyphs(img: np.ndarray, min_area: int, max_area: int) -> list[Region]:
    """Split an image into candidate glyph regions.

    Otsu-thresholds the image with polarity chosen so ink is the minority
    class (ties pick darker ink), labels 8-connected components, and keeps
    those whose pixel count lies in [min_area, max_area]. Regions come back
    row-major by bounding-box corner.
    """
    if min_area >= max_area:
        raise InputError("min_area must be < max_area")
    img = np.asarray(img, dtype=np.float64)
    lo, hi = float(img.min()), float(img.max())
    if hi <= lo:
        return []
    thresh = otsu_threshold(img)
    above = img > thresh
    n_above = int(above.sum())
    if n_above < img.size - n_above:
        ink = above
    elif n_above > img.size - n_above:
        ink = ~above
    else:
        ink = ~above  # tie: darker side is the ink
    labels, n = ndimage.label(ink, structure=_EIGHT)
    if n == 0:
        return []
    regions = []
    # find_objects slices can overlap neighboring components; mask by label id.
    for lab, sl in enumerate(ndimage.find_objects(labels), start=1):
        if sl is None:
            continue
        mask = labels[sl] == lab
        area = int(mask.sum())
        if not (min_area <= area <= max_area):
            continue
        y, x = sl[0].start, sl[1].start
        h, w = mask.shape
        regions.append(Region(x=x, y=y, w=w, h=h, area=area, mask=mask))
    regions.sort(key=lambda r: (r.y, r.x))
    return regions


class TemplateBank:
    """Glyph templates embedded in a fixed comparison frame for batched NCC.

    One template per (label, face, design size). Crop and templates are
    each rescaled (nearest-neighbor, aspect preserved, centered on a zero
    background) into the same square frame, where normalized cross-
    correlation ranks all templates in one matrix product. Multiple design
    sizes make the bank carry the same scaling aliasing the generator
    produces; the shared frame keeps small templates from acting as
    cheap-correlation attractors.
    """

    frame_px = 32

    def __init__(self, design_px: tuple[int, ...] = DEFAULT_DESIGN_PX,
                 faces: tuple[str, ...] = fonts.FACE_NAMES,
                 alphabet: str = fonts.ALPHABET):
        if not design_px:
            raise InputError("template bank needs at least one design size")
        entries = []
        for ch in sorted(set(alphabet)):
            for face in faces:
                for px in design_px:
                    bm = fonts.scaled_bitmap(face, ch, px).astype(np.float64)
                    entries.append((ch, face, px, bm))
        entries.sort(key=lambda e: (e[0], e[1], e[2]))
        self.entries = entries
        self.design_px = tuple(design_px)
        stack = np.stack([self._to_frame(bm).ravel() for _, _, _, bm in entries])
        self._centered = stack - stack.mean(axis=1, keepdims=True)
        norms = np.sqrt((self._centered * self._centered).sum(axis=1))
        self._norms = np.maximum(norms, 1e-12)

    def __len__(self) -> int:
        return len(self.entries)

    def _to_frame(self, bitmap: np.ndarray) -> np.ndarray:
        box = self.frame_px
        h, w = bitmap.shape
        sf = min(box / h, box / w)
        sh, sw = min(box, max(1, round(h * sf))), min(box, max(1, round(w * sf)))
        frame = np.zeros((box, box))
        r0, c0 = (box - sh) // 2, (box - sw) // 2
        frame[r0 : r0 + sh, c0 : c0 + sw] = resize_nearest(bitmap, sh, sw)
        return frame

    def best_match(self, crop: np.ndarray) -> tuple[str, float]:
        """(label, score) of the best-correlating template; score ties take
        the lexicographically smallest label (entries are label-sorted)."""
        v = self._to_frame(np.asarray(crop, dtype=np.float64)).ravel()
        v = v - v.mean()
        vn = np.sqrt((v * v).sum())
        if vn == 0.0:
            return "", -1.0
        scores = self._centered @ v / (self._norms * vn)
        j = int(np.argmax(scores))
        return self.entries[j][0], float(scores[j])


def classify_region(
    img: np.ndarray,
    region: Region,
    bank: TemplateBank,
    reject_threshold: float = DEFAULT_REJECT_THRESHOLD,
) -> Detection:
    """Classify one segmented region against the template bank.

    The region's polarity-normalized ink mask (ink=1) is what gets
    correlated, so the label is invariant to affine intensity maps and to
    light-on-dark vs dark-on-light rendering. Confidence is (score+1)/2 of
    the best normalized cross-correlation; low-confidence detections are
    marked rejected rather than dropped.
    """
    h, w = np.asarray(img).shape
    if not (0 <= region.x and 0 <= region.y
            and region.x + region.w <= w and region.y + region.h <= h):
        raise InputError("region lies outside the image")
    crop = region.mask.astype(np.float64)
    if region.area == 0 or crop.size == 0:
        return Detection("", region.x, region.y, region.w, region.h, 0.0, rejected=True)
    label, score = bank.best_match(crop)
    confidence = (score + 1.0) / 2.0
    return Detection(
        label=label,
        x=region.x, y=region.y, w=region.w, h=region.h,
        confidence=confidence,
        rejected=confidence < reject_threshold,
    )


def recognize_patch(
    img: np.ndarray,
    bank: TemplateBank,
    min_area: int = 8,
    max_area: int | None = None,
    reject_threshold: float = DEFAULT_REJECT_THRESHOLD,
) -> list[Detection]:
    """Segment a patch and classify every region, dropping rejected ones."""
    if max_area is None:
        max_area = (max(img.shape) // 2) ** 2
    detections = []
    for region in segment_glyphs(img, min_area, max_area):
        det = classify_region(img, region, bank, reject_threshold)
        if not det.rejected:
            detections.append(det)
    return detections


def detect_lines(
    detections: list[Detection],
    bin_rho: float = 8.0,
    bin_theta: float = 5.0,
    theta_window: tuple[float, float] = (0.0, 180.0),
    min_votes: int = 3,
) -> list[TextLine]:
    """Group detections into text lines with a Hough accumulator.

    Detection centroids vote for (rho, theta) cells; theta runs over
    multiples of bin_theta inside theta_window, rho is quantized to
    bin_rho. Peaks with at least min_votes are taken greedily (most votes
    first, then smallest theta/rho for determinism), each detection joining
    at most one line. Lines are ordered by rho; whatever stays unassigned
    trails as single-member pseudo-lines in reading order, so downstream
    text matching still sees every detection.
    """
    if bin_rho <= 0 or bin_theta <= 0:
        raise InputError("bins must be positive")
    t_lo, t_hi = theta_window
    if not (0.0 <= t_lo < t_hi <= 180.0):
        raise InputError("theta_window must lie inside [0, 180]")
    if min_votes < 1:
        raise InputError("min_votes must be >= 1")

    thetas = []
    i = int(np.ceil(t_lo / bin_theta - 1e-9))
    while i * bin_theta <= t_hi + 1e-9:
        t = i * bin_theta
        if t < 180.0:
            thetas.append(t)
        i += 1
    if not thetas:
        raise InputError("theta_window narrower than one theta bin")

    votes: dict[tuple[float, int], set[int]] = {}
    for di, det in enumerate(detections):
        cx, cy = det.centroid
        for t in thetas:
            rad = np.deg2rad(t)
            rho = cx * np.cos(rad) + cy * np.sin(rad)
            cell = (t, int(np.rint(rho / bin_rho)))
            votes.setdefault(cell, set()).add(di)

    unassigned = set(range(len(detections)))
    lines: list[TextLine] = []
    while True:
        best_cell, best_members = None, None
        for cell in sorted(votes):
            members = votes[cell] & unassigned
            if len(members) < min_votes:
                continue
            if best_members is None or len(members) > len(best_members):
                best_cell, best_members = cell, members
        if best_cell is None:
            break
        ordered = tuple(sorted(best_members, key=lambda di: detections[di].centroid[0]))
        lines.append(TextLine(rho=best_cell[1] * bin_rho, theta=best_cell[0], members=ordered))
        unassigned -= best_members

    lines.sort(key=lambda ln: (ln.rho, ln.theta))
    leftovers = sorted(unassigned, key=lambda di: (detections[di].centroid[1], detections[di].centroid[0]))
    for di in leftovers:
        cx, cy = detections[di].centroid
        lines.append(TextLine(rho=float(cy), theta=90.0, members=(di,)))
    return lines


def line_text(line: TextLine, detections: list[Detection]) -> str:
    return "".join(detections[di].label for di in line.members)


def bitap_match(text: str, pattern: str, k: int) -> list[tuple[int, int]]:
    """Approximate occurrences of `pattern` in `text` with <= k edits.

    Bit-parallel Wu-Manber formulation under Levenshtein distance
    (substitutions, insertions, deletions). Returns (end_position,
    errors) pairs, one per text position where the pattern ends with the
    minimal error count at that position.
    """
    m = len(pattern)
    if m == 0:
        raise InputError("pattern must be non-empty")
    if m > 63:
        raise InputError("pattern longer than 63 characters")
    if not 0 <= k < m:
        raise InputError("need 0 <= k < len(pattern)")

    masks: dict[str, int] = {}
    for j, ch in enumerate(pattern):
        masks[ch] = masks.get(ch, 0) | (1 << j)
    match_bit = 1 << (m - 1)
    all_bits = (1 << m) - 1

    r = [(1 << d) - 1 for d in range(k + 1)]
    out = []
    for i, ch in enumerate(text):
        b = masks.get(ch, 0)
        olds = r.copy()
        r[0] = ((olds[0] << 1) | 1) & b
        for d in range(1, k + 1):
            r[d] = ((((olds[d] << 1) | 1) & b)
                    | olds[d - 1]
                    | (olds[d - 1] << 1)
                    | (r[d - 1] << 1)
                    | 1) & all_bits
        for d in range(k + 1):
            if r[d] & match_bit:
                out.append((i, d))
                break
    return out


def evaluate_alarm(
    lines: list[TextLine],
    detections: list[Detection],
    policy: AlarmPolicy,
) -> AlarmResult:
    """Scan every recognized text line for the watched keywords.

    Triggered iff any keyword occurs in any line with at most the policy's
    error budget; every qualifying occurrence is reported.
    """
    matches = []
    for li, line in enumerate(lines):
        text = line_text(line, detections)
        for kw in policy.watchlist:
            if policy.max_errors >= len(kw):
                continue
            for pos, errs in bitap_match(text, kw, policy.max_errors):
                matches.append(AlarmMatch(keyword=kw, line_index=li, position=pos, errors=errs))
    return AlarmResult(triggered=bool(matches), matches=tuple(matches))
