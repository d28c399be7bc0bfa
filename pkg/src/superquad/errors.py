"""Exception types shared across the engine."""


class EngineError(Exception):
    """Base class for every error raised deliberately by this package."""


class InputError(EngineError):
    """Malformed or mathematically inadmissible input data."""


class ResourceLimitError(EngineError):
    """A requested computation exceeds the configured size limits."""
