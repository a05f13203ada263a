"""Exception hierarchy shared by all pipeline stages."""


class EmleakError(Exception):
    """Base class for all errors raised by this package."""


class InputError(EmleakError, ValueError):
    """An argument violates an operation's contract."""


class InsufficientDataError(EmleakError):
    """A capture is too short for the requested analysis."""


class GenerationError(EmleakError):
    """Sample generation could not satisfy its constraints."""


class AdapterError(EmleakError):
    """An external denoiser process misbehaved (bad output, crash, timeout)."""


class PersistedStateError(EmleakError):
    """On-disk corpus or report state is missing or could not be written."""

    def __init__(self, message: str, path: str | None = None):
        super().__init__(message if path is None else f"{message}: {path}")
        self.path = path
