"""End-to-end orchestration: generate, intercept, recover, score, alarm.

A single JSON-friendly config drives every stage. Artifacts land under an
output directory: the persisted corpus, per-frame detections, the score
report (CSV with timings, JSON without) and the alarm verdict. Any stage
failure leaves a FAILED marker naming the stage next to whatever partial
output exists.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field, asdict
from pathlib import Path
from typing import Any

from . import fonts
from .corpus import (AugmentOp, CorpusConfig, CorpusManifest, SampleSpec,
                     build_corpus, load_eval_patch)
from .denoise import DenoiseMethod, denoise
from .errors import EmleakError, InputError
from .metrics import (EvalReport, MethodRow, RecognizerConfig, score_method)
from .recognize import (AlarmPolicy, AlarmResult, TemplateBank, detect_lines,
                        evaluate_alarm, line_text, recognize_patch)
from .signal import EmanationModel, VideoTiming

log = logging.getLogger(__name__)

FAILED_MARKER = "FAILED"


@dataclass(frozen=True)
class LineConfig:
    bin_rho: float = 8.0
    bin_theta: float = 5.0
    theta_window: tuple[float, float] = (0.0, 180.0)
    min_votes: int = 3


@dataclass
class PipelineConfig:
    """Validated bundle of per-stage settings."""

    timing: VideoTiming
    model: EmanationModel = field(default_factory=lambda: EmanationModel(mode="intensity"))
    sample: SampleSpec = field(default_factory=SampleSpec)
    n_frames: int = 4
    patch_grid: tuple[int, int] = (1, 2)
    patch_size: int = 256
    attenuation_levels: tuple[float, ...] = (0.0,)
    noise_sigma: float = 0.0
    augmentations: tuple[AugmentOp, ...] = ()
    fiducial: bool = True
    fiducial_payload: int = 0xBEEF
    use_ground_truth_sync: bool = True
    sync_bounds_frac: float = 0.2
    denoise_methods: tuple[DenoiseMethod, ...] = (DenoiseMethod(),)
    recognizer: RecognizerConfig = field(default_factory=RecognizerConfig)
    lines: LineConfig = field(default_factory=LineConfig)
    alarm: AlarmPolicy | None = None
    seed: int = 0

    def corpus_config(self) -> CorpusConfig:
        return CorpusConfig(
            timing=self.timing,
            model=self.model,
            sample_spec=self.sample,
            patch_grid=self.patch_grid,
            patch_size=self.patch_size,
            n_frames=self.n_frames,
            attenuation_levels=self.attenuation_levels,
            noise_sigma=self.noise_sigma,
            augmentations=self.augmentations,
            fiducial=self.fiducial,
            fiducial_payload=self.fiducial_payload,
            use_ground_truth_sync=self.use_ground_truth_sync,
            sync_bounds_frac=self.sync_bounds_frac,
            seed=self.seed,
        )


def _take(doc: dict, key: str, default: Any) -> Any:
    return doc[key] if key in doc else default


def config_from_dict(doc: dict) -> PipelineConfig:
    """Build and validate a PipelineConfig from a parsed JSON document."""
    try:
        timing = VideoTiming(**doc["timing"])
    except KeyError as exc:
        raise InputError(f"config missing timing field: {exc}") from exc
    except TypeError as exc:
        raise InputError(f"bad timing config: {exc}") from exc

    model_doc = _take(doc, "model", {})
    model = EmanationModel(
        mode=_take(model_doc, "mode", "intensity"),
        harmonic_gain=_take(model_doc, "harmonic_gain", 1.0),
    )

    s = _take(doc, "sample", {})
    sample = SampleSpec(
        n_chars=_take(s, "n_chars", 20),
        size_pt_range=tuple(_take(s, "size_pt_range", (11, 70))),
        faces=tuple(_take(s, "faces", fonts.FACE_NAMES)),
        fg_range=tuple(_take(s, "fg_range", (0.6, 0.95))),
        bg_range=tuple(_take(s, "bg_range", (0.05, 0.4))),
        min_contrast=_take(s, "min_contrast", 0.25),
        alphabet=_take(s, "alphabet", fonts.ALPHABET),
        plant_text=_take(s, "plant_text", ""),
        plant_size_pt=_take(s, "plant_size_pt", 24),
        plant_face=_take(s, "plant_face", ""),
    )

    c = _take(doc, "corpus", {})
    r = _take(doc, "recognizer", {})
    recognizer = RecognizerConfig(
        min_area=_take(r, "min_area", 8),
        max_area=_take(r, "max_area", 16384),
        reject_threshold=_take(r, "reject_threshold", 0.6),
    )
    ln = _take(doc, "lines", {})
    lines = LineConfig(
        bin_rho=_take(ln, "bin_rho", 8.0),
        bin_theta=_take(ln, "bin_theta", 5.0),
        theta_window=tuple(_take(ln, "theta_window", (0.0, 180.0))),
        min_votes=_take(ln, "min_votes", 3),
    )
    alarm_doc = _take(doc, "alarm", None)
    alarm = None
    if alarm_doc:
        alarm = AlarmPolicy(
            watchlist=tuple(alarm_doc["watchlist"]),
            max_errors=_take(alarm_doc, "max_errors", 0),
        )

    methods = tuple(DenoiseMethod.parse(m) for m in _take(doc, "denoise", ["raw"]))
    if not methods:
        raise InputError("need at least one denoise method")

    config = PipelineConfig(
        timing=timing,
        model=model,
        sample=sample,
        n_frames=_take(c, "n_frames", 4),
        patch_grid=tuple(_take(c, "patch_grid", (1, 2))),
        patch_size=_take(c, "patch_size", 256),
        attenuation_levels=tuple(float(a) for a in _take(c, "attenuation_levels", (0.0,))),
        noise_sigma=float(_take(c, "noise_sigma", 0.0)),
        augmentations=tuple(AugmentOp.parse(a) for a in _take(c, "augmentations", ())),
        fiducial=_take(c, "fiducial", True),
        fiducial_payload=_take(c, "fiducial_payload", 0xBEEF),
        use_ground_truth_sync=_take(c, "use_ground_truth_sync", True),
        sync_bounds_frac=_take(c, "sync_bounds_frac", 0.2),
        denoise_methods=methods,
        recognizer=recognizer,
        lines=lines,
        alarm=alarm,
        seed=_take(doc, "seed", 0),
    )
    config.corpus_config()  # validate cross-field constraints before any work
    return config


def load_config(path: str | Path, overrides: list[str] | None = None) -> PipelineConfig:
    """Load a JSON config file, applying dotted-path overrides first.

    Overrides look like "corpus.noise_sigma=0.02"; values parse as JSON
    with a fallback to plain strings.
    """
    try:
        doc = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot load config {path}: {exc}") from exc
    for item in overrides or []:
        key, sep, value = item.partition("=")
        if not sep:
            raise InputError(f"override {item!r} is not of the form path=value")
        try:
            parsed = json.loads(value)
        except json.JSONDecodeError:
            parsed = value
        node = doc
        parts = key.split(".")
        for part in parts[:-1]:
            node = node.setdefault(part, {})
            if not isinstance(node, dict):
                raise InputError(f"override path {key!r} crosses a non-object")
        node[parts[-1]] = parsed
    return config_from_dict(doc)


@dataclass
class FrameAlarm:
    frame: str
    triggered: bool
    matches: list[dict]
    line_texts: list[str]


@dataclass
class PipelineReport:
    out_dir: str
    generated: int
    skipped: int
    rows: list[MethodRow]
    per_level: list[dict]
    alarm_triggered: bool
    frame_alarms: list[FrameAlarm]

    def summary_json(self) -> str:
        doc = {
            "generated": self.generated,
            "skipped": self.skipped,
            "rows": [
                {k: v for k, v in asdict(r).items() if k != "wall_time_s"}
                for r in self.rows
            ],
            "per_level": self.per_level,
            "alarm_triggered": self.alarm_triggered,
        }
        return json.dumps(doc, indent=2, sort_keys=True)


def _alarm_stage(
    config: PipelineConfig,
    manifest: CorpusManifest,
    corpus_dir: Path,
    bank: TemplateBank,
    detections_dir: Path,
) -> tuple[bool, list[FrameAlarm]]:
    method = config.denoise_methods[0]
    rows, cols = manifest.patch_grid
    frame_alarms: list[FrameAlarm] = []
    detections_dir.mkdir(exist_ok=True)
    for entry in manifest.entries:
        if entry.augmentations:
            continue  # alarm watches the raw interception stream
        all_lines, all_dets = [], []
        det_records = []
        for r in range(rows):
            for c in range(cols):
                img, _ = load_eval_patch(corpus_dir, manifest, entry, (r, c))
                img = denoise(img, method)
                dets = recognize_patch(
                    img, bank,
                    min_area=config.recognizer.min_area,
                    max_area=config.recognizer.max_area,
                    reject_threshold=config.recognizer.reject_threshold,
                )
                lines = detect_lines(
                    dets,
                    bin_rho=config.lines.bin_rho,
                    bin_theta=config.lines.bin_theta,
                    theta_window=config.lines.theta_window,
                    min_votes=config.lines.min_votes,
                )
                base = len(all_dets)
                all_dets.extend(dets)
                for line in lines:
                    all_lines.append(type(line)(
                        rho=line.rho, theta=line.theta,
                        members=tuple(base + m for m in line.members),
                    ))
                det_records.extend(
                    {"patch": [r, c], "label": d.label, "x": d.x, "y": d.y,
                     "w": d.w, "h": d.h, "confidence": round(d.confidence, 4)}
                    for d in dets
                )
        (detections_dir / f"{entry.sample_path}.jsonl").write_text(
            "\n".join(json.dumps(rec, sort_keys=True) for rec in det_records)
            + ("\n" if det_records else ""),
            encoding="ascii",
        )
        if config.alarm is None:
            continue
        result: AlarmResult = evaluate_alarm(all_lines, all_dets, config.alarm)
        frame_alarms.append(FrameAlarm(
            frame=entry.sample_path,
            triggered=result.triggered,
            matches=[asdict(m) for m in result.matches],
            line_texts=[line_text(ln, all_dets) for ln in all_lines],
        ))
    triggered = any(fa.triggered for fa in frame_alarms)
    return triggered, frame_alarms


def run_pipeline(config: PipelineConfig, out_dir: str | Path) -> PipelineReport:
    """Execute every stage and persist artifacts under `out_dir`.

    Stage order: corpus construction (generate, synthesize, channel,
    raster, sync, align, fiducial gate, split), then scoring per denoise
    method (whole corpus and per attenuation level), then the alarm scan.
    Raises with a FAILED marker naming the stage if anything goes wrong;
    partial outputs stay on disk for inspection.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    marker = out / FAILED_MARKER
    if marker.exists():
        marker.unlink()

    stage = "corpus"
    try:
        corpus_dir = out / "corpus"
        manifest = build_corpus(config.corpus_config(), corpus_dir)

        stage = "evaluate"
        bank = TemplateBank(alphabet=config.sample.alphabet, faces=config.sample.faces)
        rows: list[MethodRow] = []
        per_level: list[dict] = []
        if manifest.entries:
            for method in config.denoise_methods:
                rows.append(score_method(manifest, corpus_dir, method,
                                         config.recognizer, bank))
                for level in config.attenuation_levels:
                    subset = [e for e in manifest.entries
                              if e.attenuation_db == level and not e.augmentations]
                    if not subset:
                        continue
                    row = score_method(manifest, corpus_dir, method,
                                       config.recognizer, bank, entries=subset)
                    per_level.append({
                        "denoiser": method.name,
                        "attenuation_db": level,
                        "f_score": row.f_score,
                        "precision": row.precision,
                        "recall": row.recall,
                        "retrieval_ratio": row.retrieval_ratio,
                        "n_patches": row.n_patches,
                    })
            rows.sort(key=lambda r: -r.f_score)
            report = EvalReport(rows=rows)
            (out / "report.csv").write_text(report.to_csv(), encoding="ascii")

        stage = "alarm"
        triggered, frame_alarms = _alarm_stage(
            config, manifest, corpus_dir, bank, out / "detections")
        alarm_doc = {
            "triggered": triggered,
            "frames": [asdict(fa) for fa in frame_alarms],
        }
        (out / "alarm.json").write_text(
            json.dumps(alarm_doc, indent=2, sort_keys=True), encoding="ascii")

        pipe_report = PipelineReport(
            out_dir=str(out),
            generated=manifest.generated,
            skipped=manifest.skipped,
            rows=rows,
            per_level=per_level,
            alarm_triggered=triggered,
            frame_alarms=frame_alarms,
        )
        (out / "report.json").write_text(pipe_report.summary_json(), encoding="ascii")
        return pipe_report
    except EmleakError as exc:
        marker.write_text(f"stage {stage} failed: {exc}\n", encoding="utf-8")
        log.error("pipeline stage %s failed: %s", stage, exc)
        raise
