"""Command-line front end: one subcommand per pipeline stage.

Exit codes: 0 success (no alarm), 2 alarm triggered (alarm/pipeline
subcommands), 1 any error. Logs go to stderr; data goes to files or
stdout only, so the tool can sit in a shell pipeline or a monitoring
cron job.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import asdict
from pathlib import Path

from .corpus import (AugmentOp, augment, build_corpus, load_eval_patch,
                     load_manifest)
from .denoise import DenoiseMethod, denoise
from .errors import EmleakError, InputError
from .formats import read_capture, read_pgm, write_capture, write_pgm
from .metrics import RecognizerConfig, run_benchmark
from .pipeline import load_config, run_pipeline
from .raster import estimate_sync, rasterize
from .recognize import (AlarmPolicy, TemplateBank, detect_lines,
                        evaluate_alarm, line_text, recognize_patch)
from .align import align_and_crop, detect_porches
from .signal import apply_channel, BasebandCapture, synthesize_emanation

log = logging.getLogger("emleak")

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_ALARM = 2


def _cmd_synth(args) -> int:
    config = load_config(args.config, args.set or [])
    frame = read_pgm(args.frame)
    capture = synthesize_emanation(
        frame, config.timing, config.model,
        args.sample_rate or config.timing.pixel_clock_hz,
        seed=config.seed, frames=args.frames,
    )
    write_capture(args.out, capture.sample_rate_hz, capture.samples)
    log.info("wrote %d samples to %s", capture.samples.size, args.out)
    return EXIT_OK


def _cmd_channel(args) -> int:
    rate, samples = read_capture(getattr(args, "in"))
    capture = BasebandCapture(rate, samples)
    out = apply_channel(capture, args.attenuation_db, args.noise_sigma, args.seed)
    write_capture(args.out, out.sample_rate_hz, out.samples)
    return EXIT_OK


def _cmd_raster(args) -> int:
    rate, samples = read_capture(getattr(args, "in"))
    capture = BasebandCapture(rate, samples)
    if args.estimate:
        if not (args.line_bounds and args.frame_bounds):
            raise InputError("--estimate needs --line-bounds and --frame-bounds")
        sync = estimate_sync(capture, tuple(args.line_bounds), tuple(args.frame_bounds))
        line_p, frame_p = sync.line_period_s, sync.frame_period_s
        print(json.dumps({
            "line_period_s": line_p,
            "frame_period_s": frame_p,
            "confidence": sync.confidence,
        }))
    else:
        if args.line_period is None or args.frame_period is None:
            raise InputError("give --line-period and --frame-period, or --estimate")
        line_p, frame_p = args.line_period, args.frame_period
    img = rasterize(capture, line_p, frame_p)
    write_pgm(args.out, img)
    return EXIT_OK


def _cmd_align(args) -> int:
    img = read_pgm(getattr(args, "in"))
    offsets = detect_porches(img)
    print(json.dumps(asdict(offsets)))
    aligned = align_and_crop(
        img, offsets, args.active_w, args.active_h,
        src_active_w=args.src_active_w, src_active_h=args.src_active_h,
    )
    write_pgm(args.out, aligned)
    return EXIT_OK


def _cmd_dataset(args) -> int:
    config = load_config(args.config, args.set or [])
    manifest = build_corpus(config.corpus_config(), args.out)
    print(json.dumps({
        "entries": len(manifest.entries),
        "generated": manifest.generated,
        "skipped": manifest.skipped,
    }))
    return EXIT_OK


def _cmd_denoise(args) -> int:
    img = read_pgm(getattr(args, "in"))
    method = DenoiseMethod.parse(args.method)
    write_pgm(args.out, denoise(img, method))
    return EXIT_OK


def _cmd_augment(args) -> int:
    img = read_pgm(getattr(args, "in"))
    op = AugmentOp.parse(args.op)
    write_pgm(args.out, augment(img, op, args.seed))
    return EXIT_OK


def _cmd_recognize(args) -> int:
    img = read_pgm(getattr(args, "in"))
    if args.method != "raw":
        img = denoise(img, DenoiseMethod.parse(args.method))
    bank = TemplateBank()
    dets = recognize_patch(img, bank, min_area=args.min_area)
    out_lines = [
        json.dumps({"label": d.label, "x": d.x, "y": d.y, "w": d.w, "h": d.h,
                    "confidence": round(d.confidence, 4)}, sort_keys=True)
        for d in dets
    ]
    text = "\n".join(out_lines) + ("\n" if out_lines else "")
    if args.out:
        Path(args.out).write_text(text, encoding="ascii")
    else:
        sys.stdout.write(text)
    if args.lines:
        lines = detect_lines(dets)
        for ln in lines:
            print(json.dumps({"rho": ln.rho, "theta": ln.theta,
                              "text": line_text(ln, dets)}, sort_keys=True))
    return EXIT_OK


def _cmd_eval(args) -> int:
    methods = [(DenoiseMethod.parse(m), RecognizerConfig()) for m in args.methods]
    report = run_benchmark(args.corpus, methods)
    if args.csv:
        Path(args.csv).write_text(report.to_csv(), encoding="ascii")
    print(report.format_table())
    return EXIT_OK


def _cmd_alarm(args) -> int:
    policy = AlarmPolicy(watchlist=tuple(args.watchlist), max_errors=args.max_errors)
    manifest = load_manifest(args.corpus)
    bank = TemplateBank()
    method = DenoiseMethod.parse(args.method)
    rows, cols = manifest.patch_grid
    corpus_dir = Path(args.corpus)
    any_triggered = False
    frames = []
    for entry in manifest.entries:
        if entry.augmentations:
            continue
        all_dets, all_lines = [], []
        for r in range(rows):
            for c in range(cols):
                img, _ = load_eval_patch(corpus_dir, manifest, entry, (r, c))
                img = denoise(img, method)
                dets = recognize_patch(img, bank)
                base = len(all_dets)
                all_dets.extend(dets)
                for ln in detect_lines(dets):
                    all_lines.append(type(ln)(rho=ln.rho, theta=ln.theta,
                                              members=tuple(base + m for m in ln.members)))
        result = evaluate_alarm(all_lines, all_dets, policy)
        any_triggered = any_triggered or result.triggered
        frames.append({
            "frame": entry.sample_path,
            "triggered": result.triggered,
            "matches": [asdict(m) for m in result.matches],
        })
    doc = {"triggered": any_triggered, "frames": frames}
    text = json.dumps(doc, indent=2, sort_keys=True)
    if args.out:
        Path(args.out).write_text(text + "\n", encoding="ascii")
    print(text)
    return EXIT_ALARM if any_triggered else EXIT_OK


def _cmd_pipeline(args) -> int:
    config = load_config(args.config, args.set or [])
    report = run_pipeline(config, args.out)
    print(report.summary_json())
    return EXIT_ALARM if report.alarm_triggered else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="emleak",
        description="EM video-leak interception pipeline",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_config(p):
        p.add_argument("--config", required=True, help="pipeline JSON config")
        p.add_argument("--set", action="append", metavar="PATH=VALUE",
                       help="override a config leaf (dotted path, JSON value)")

    p = sub.add_parser("synth", help="synthesize an emanation capture from a frame")
    add_config(p)
    p.add_argument("--frame", required=True, help="reference frame PGM")
    p.add_argument("--out", required=True, help="output EMCB capture")
    p.add_argument("--frames", type=int, default=1)
    p.add_argument("--sample-rate", type=float, default=None)
    p.set_defaults(func=_cmd_synth)

    p = sub.add_parser("channel", help="apply attenuation + receiver noise")
    p.add_argument("in", help="input EMCB capture")
    p.add_argument("--out", required=True)
    p.add_argument("--attenuation-db", type=float, required=True)
    p.add_argument("--noise-sigma", type=float, default=0.0)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_channel)

    p = sub.add_parser("raster", help="fold a capture into an image")
    p.add_argument("in", help="input EMCB capture")
    p.add_argument("--out", required=True)
    p.add_argument("--line-period", type=float)
    p.add_argument("--frame-period", type=float)
    p.add_argument("--estimate", action="store_true",
                   help="recover periods from the capture")
    p.add_argument("--line-bounds", type=float, nargs=2, metavar=("LO", "HI"))
    p.add_argument("--frame-bounds", type=float, nargs=2, metavar=("LO", "HI"))
    p.set_defaults(func=_cmd_raster)

    p = sub.add_parser("align", help="detect porches and crop the active region")
    p.add_argument("in", help="rastered PGM")
    p.add_argument("--out", required=True)
    p.add_argument("--active-w", type=int, required=True)
    p.add_argument("--active-h", type=int, required=True)
    p.add_argument("--src-active-w", type=int, default=None)
    p.add_argument("--src-active-h", type=int, default=None)
    p.set_defaults(func=_cmd_align)

    p = sub.add_parser("dataset", help="build a labeled patch corpus")
    add_config(p)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_dataset)

    p = sub.add_parser("denoise", help="run one denoiser over a patch")
    p.add_argument("in", help="input PGM")
    p.add_argument("--out", required=True)
    p.add_argument("--method", default="raw",
                   help="raw | median:K | gaussian:SIGMA | external:CMD")
    p.set_defaults(func=_cmd_denoise)

    p = sub.add_parser("augment", help="apply one augmentation to a patch")
    p.add_argument("in", help="input PGM")
    p.add_argument("--out", required=True)
    p.add_argument("--op", required=True,
                   help="gaussian:S | median:K | salt_pepper:P | invert | contrast_normalize")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_augment)

    p = sub.add_parser("recognize", help="retrieve characters from a patch")
    p.add_argument("in", help="input PGM")
    p.add_argument("--out", help="detections JSONL (default stdout)")
    p.add_argument("--method", default="raw", help="denoiser to apply first")
    p.add_argument("--min-area", type=int, default=8)
    p.add_argument("--lines", action="store_true", help="also print text lines")
    p.set_defaults(func=_cmd_recognize)

    p = sub.add_parser("eval", help="benchmark denoisers over a corpus")
    p.add_argument("--corpus", required=True)
    p.add_argument("--methods", nargs="+", required=True)
    p.add_argument("--csv", help="also write the report CSV here")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("alarm", help="scan a corpus for watched keywords")
    p.add_argument("--corpus", required=True)
    p.add_argument("--watchlist", nargs="+", required=True)
    p.add_argument("--max-errors", type=int, default=0)
    p.add_argument("--method", default="raw")
    p.add_argument("--out", help="write the verdict JSON here too")
    p.set_defaults(func=_cmd_alarm)

    p = sub.add_parser("pipeline", help="run every stage end to end")
    add_config(p)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_pipeline)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except EmleakError as exc:
        log.error("%s", exc)
        return EXIT_ERROR
    except OSError as exc:
        log.error("%s", exc)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
