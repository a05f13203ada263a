"""Character-retrieval scoring and the denoiser benchmark harness.

Matching is position-free: a detected character counts as a true positive
when the reference sample still has an unconsumed instance of that
character, i.e. per-symbol counts capped at min(reference, detected).
Precision, recall, F-score and the retrieval ratio derive from those
counts; the benchmark runs each (denoiser, recognizer) combination over a
persisted corpus and reports one row per method.
"""

from __future__ import annotations

import csv
import io
import time
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from .corpus import CorpusManifest, load_eval_patch, load_manifest
from .denoise import DenoiseMethod, denoise
from .errors import InputError
from .recognize import TemplateBank, recognize_patch

CSV_HEADER = ("denoiser", "ocr", "f_score", "precision", "recall",
              "retrieval_ratio", "n_patches", "wall_time_s")


@dataclass(frozen=True)
class MatchCounts:
    tp: int
    fp: int
    fn: int

    def __post_init__(self):
        if min(self.tp, self.fp, self.fn) < 0:
            raise InputError("counts must be non-negative")

    def __add__(self, other: "MatchCounts") -> "MatchCounts":
        return MatchCounts(self.tp + other.tp, self.fp + other.fp, self.fn + other.fn)


def match_characters(reference_labels: Iterable[str],
                     detected_labels: Iterable[str]) -> MatchCounts:
    """Position-free multiset matching of detected against reference labels."""
    ref = Counter(reference_labels)
    det = Counter(detected_labels)
    tp = sum(min(ref[c], det[c]) for c in ref.keys() & det.keys())
    return MatchCounts(tp=tp, fp=det.total() - tp, fn=ref.total() - tp)


def compute_metrics(counts: MatchCounts) -> dict[str, float]:
    """Precision, recall, F-score and retrieval ratio from match counts.

    Degenerate conventions: an empty reference read as empty is a perfect
    retrieval (all ones); an empty detection set against a non-empty
    reference scores zero precision by convention rather than NaN. The
    retrieval ratio (correctly retrieved / truly present) equals recall
    under position-free matching and is reported alongside it.
    """
    if counts.tp + counts.fp == 0:
        precision = 1.0 if counts.fn == 0 else 0.0
    else:
        precision = counts.tp / (counts.tp + counts.fp)
    if counts.tp + counts.fn == 0:
        recall = 1.0 if counts.fp == 0 else 0.0
    else:
        recall = counts.tp / (counts.tp + counts.fn)
    f_score = 0.0 if precision + recall == 0 else \
        2.0 * precision * recall / (precision + recall)
    return {
        "precision": precision,
        "recall": recall,
        "f_score": f_score,
        "retrieval_ratio": recall,
    }


@dataclass
class MethodRow:
    denoiser_name: str
    ocr_name: str
    f_score: float
    precision: float
    recall: float
    retrieval_ratio: float
    n_patches: int
    wall_time_s: float


@dataclass
class EvalReport:
    rows: list[MethodRow]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for r in self.rows:
            writer.writerow([
                r.denoiser_name, r.ocr_name,
                f"{r.f_score:.4f}", f"{r.precision:.4f}", f"{r.recall:.4f}",
                f"{r.retrieval_ratio:.4f}", r.n_patches, f"{r.wall_time_s:.4f}",
            ])
        return buf.getvalue()

    def format_table(self) -> str:
        header = f"{'denoiser':<16} {'ocr':<10} {'f':>6} {'prec':>6} " \
                 f"{'rec':>6} {'ratio':>6} {'patches':>8} {'s/patch':>8}"
        lines = [header, "-" * len(header)]
        for r in self.rows:
            lines.append(
                f"{r.denoiser_name:<16} {r.ocr_name:<10} {r.f_score:>6.3f} "
                f"{r.precision:>6.3f} {r.recall:>6.3f} {r.retrieval_ratio:>6.3f} "
                f"{r.n_patches:>8d} {r.wall_time_s:>8.4f}"
            )
        return "\n".join(lines)


@dataclass(frozen=True)
class RecognizerConfig:
    """Segmentation/classification knobs used by the benchmark."""

    min_area: int = 8
    max_area: int = 16384
    reject_threshold: float = 0.6
    name: str = "template"


def iter_patches(manifest: CorpusManifest, corpus_dir: Path,
                 entries: list | None = None):
    """Yield (entry, grid_pos, image, labels) over the persisted corpus."""
    entries = manifest.entries if entries is None else entries
    rows, cols = manifest.patch_grid
    for entry in entries:
        for r in range(rows):
            for c in range(cols):
                img, labels = load_eval_patch(corpus_dir, manifest, entry, (r, c))
                yield entry, (r, c), img, labels


def score_method(
    manifest: CorpusManifest,
    corpus_dir: str | Path,
    method: DenoiseMethod,
    recognizer: RecognizerConfig,
    bank: TemplateBank,
    entries: list | None = None,
) -> MethodRow:
    """Run denoise + recognize over every patch and aggregate corpus-wide."""
    corpus_dir = Path(corpus_dir)
    counts = MatchCounts(0, 0, 0)
    n_patches = 0
    started = time.perf_counter()
    for entry, _, img, boxes in iter_patches(manifest, corpus_dir, entries):
        labels = [c.label for c in boxes]
        img = denoise(img, method)
        detections = recognize_patch(
            img, bank,
            min_area=recognizer.min_area,
            max_area=recognizer.max_area,
            reject_threshold=recognizer.reject_threshold,
        )
        counts = counts + match_characters(labels, [d.label for d in detections])
        n_patches += 1
    elapsed = time.perf_counter() - started
    if n_patches == 0:
        raise InputError("corpus has no patches to evaluate")
    scores = compute_metrics(counts)
    return MethodRow(
        denoiser_name=method.name,
        ocr_name=recognizer.name,
        f_score=scores["f_score"],
        precision=scores["precision"],
        recall=scores["recall"],
        retrieval_ratio=scores["retrieval_ratio"],
        n_patches=n_patches,
        wall_time_s=elapsed / n_patches,
    )


def run_benchmark(
    corpus_dir: str | Path,
    methods: list[tuple[DenoiseMethod, RecognizerConfig]],
    bank: TemplateBank | None = None,
) -> EvalReport:
    """Score every method over the corpus; rows sorted by F-score descending.

    Scores are deterministic for a given corpus; only the timing column
    varies between runs.
    """
    if not methods:
        raise InputError("need at least one method to benchmark")
    manifest = load_manifest(corpus_dir)
    if not manifest.entries:
        raise InputError("corpus is empty")
    if bank is None:
        bank = TemplateBank()
    rows = [score_method(manifest, corpus_dir, m, rc, bank) for m, rc in methods]
    rows.sort(key=lambda r: -r.f_score)
    return EvalReport(rows=rows)
