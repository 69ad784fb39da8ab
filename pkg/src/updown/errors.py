"""Shared exception base so callers (and the CLI) can catch domain errors."""


class UpDownError(Exception):
    """Base class for every error raised by this package."""
