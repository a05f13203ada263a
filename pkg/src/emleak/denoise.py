"""Pluggable denoiser stage.

Built-ins are the identity pass-through plus the median/Gaussian filters
shared with augmentation. Anything heavier (learned models, external
toolchains) attaches through a crash-isolated adapter process speaking
binary PGM on stdin/stdout, one image per invocation.
"""

from __future__ import annotations

import os
import shlex
import shutil
import subprocess
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from scipy import ndimage

from .errors import AdapterError, InputError
from .formats import pgm_bytes, pgm_from_bytes

RAW = "raw"
MEDIAN = "median"
GAUSSIAN = "gaussian"
EXTERNAL = "external"

ADAPTER_PATH_ENV = "EMLEAK_ADAPTER_PATH"
DEFAULT_TIMEOUT_S = 30.0


@dataclass(frozen=True)
class DenoiseMethod:
    """Denoiser selector: raw, median k, gaussian sigma, or external command."""

    kind: str = RAW
    param: float = 0.0
    command: tuple[str, ...] = ()
    timeout_s: float = DEFAULT_TIMEOUT_S

    def __post_init__(self):
        if self.kind == MEDIAN:
            k = int(self.param)
            if k < 1 or k % 2 == 0 or k != self.param:
                raise InputError("median denoiser needs an odd integer window")
        elif self.kind == GAUSSIAN:
            if self.param <= 0:
                raise InputError("gaussian denoiser needs sigma > 0")
        elif self.kind == EXTERNAL:
            if not self.command:
                raise InputError("external denoiser needs a command")
            if self.timeout_s <= 0:
                raise InputError("adapter timeout must be > 0")
        elif self.kind != RAW:
            raise InputError(f"unknown denoiser kind {self.kind!r}")

    @property
    def name(self) -> str:
        if self.kind == MEDIAN:
            return f"median{int(self.param)}"
        if self.kind == GAUSSIAN:
            return f"gaussian{self.param:g}"
        if self.kind == EXTERNAL:
            return f"external:{Path(self.command[0]).name}"
        return RAW

    @classmethod
    def parse(cls, text: str) -> "DenoiseMethod":
        """Parse "raw", "median:3", "gaussian:1.5" or "external:<command>"."""
        kind, _, rest = text.partition(":")
        if kind == RAW:
            return cls(RAW)
        if kind in (MEDIAN, GAUSSIAN):
            if not rest:
                raise InputError(f"denoiser {kind!r} needs a parameter")
            return cls(kind, float(rest))
        if kind == EXTERNAL:
            if not rest:
                raise InputError("external denoiser needs a command")
            return cls(EXTERNAL, command=tuple(shlex.split(rest)))
        raise InputError(f"unknown denoiser {text!r}")


def _resolve_adapter(command: tuple[str, ...]) -> tuple[str, ...]:
    """Resolve the adapter executable, honoring EMLEAK_ADAPTER_PATH."""
    exe = command[0]
    if os.path.sep in exe or (os.path.altsep and os.path.altsep in exe):
        return command
    search = os.environ.get(ADAPTER_PATH_ENV)
    if search:
        found = shutil.which(exe, path=search)
        if found:
            return (found, *command[1:])
    return command


def external_denoise(
    img: np.ndarray,
    command: tuple[str, ...] | list[str],
    timeout_s: float = DEFAULT_TIMEOUT_S,
) -> np.ndarray:
    """Run one image through an adapter process.

    The image goes to the child's stdin as binary PGM; the child must
    write a PGM of identical dimensions to stdout and exit 0. Timeouts,
    nonzero exits and malformed or mismatched output raise AdapterError.
    """
    if timeout_s <= 0:
        raise InputError("adapter timeout must be > 0")
    command = _resolve_adapter(tuple(command))
    payload = pgm_bytes(img)

    try:
        proc = subprocess.run(
            command, input=payload, capture_output=True, timeout=timeout_s,
        )
    except subprocess.TimeoutExpired as exc:
        raise AdapterError(f"adapter {command[0]!r} timed out after {timeout_s}s") from exc
    except OSError as exc:
        raise AdapterError(f"adapter {command[0]!r} failed to start: {exc}") from exc
    if proc.returncode != 0:
        raise AdapterError(
            f"adapter {command[0]!r} exited {proc.returncode}: "
            f"{proc.stderr.decode(errors='replace')[:200]}"
        )

    try:
        out = pgm_from_bytes(proc.stdout, f"<adapter {command[0]}>")
    except InputError as exc:
        raise AdapterError(f"adapter {command[0]!r} wrote malformed output: {exc}") from exc
    if out.shape != np.asarray(img).shape:
        raise AdapterError(
            f"adapter {command[0]!r} returned {out.shape}, expected {np.asarray(img).shape}"
        )
    return out


def denoise(img: np.ndarray, method: DenoiseMethod) -> np.ndarray:
    """Apply the selected denoiser; dimensions and [0,1] range preserved."""
    img = np.asarray(img, dtype=np.float64)
    if method.kind == RAW:
        return img
    if method.kind == MEDIAN:
        return ndimage.median_filter(img, size=int(method.param), mode="nearest")
    if method.kind == GAUSSIAN:
        out = ndimage.gaussian_filter(img, sigma=method.param, mode="nearest", truncate=3.0)
        return np.clip(out, 0.0, 1.0)
    if method.kind == EXTERNAL:
        return external_denoise(img, method.command, method.timeout_s)
    raise InputError(f"unknown denoiser kind {method.kind!r}")
