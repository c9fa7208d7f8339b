"""Exception types shared across the toolkit."""

from __future__ import annotations


class CoocnetError(Exception):
    """Base class for all toolkit errors."""


class ConfigError(CoocnetError, ValueError):
    """Invalid configuration, parameter, or missing prerequisite."""


class RecordError(CoocnetError, ValueError):
    """A malformed or inconsistent input record.

    Carries the 1-based line number and the offending text when known.
    """

    def __init__(self, message: str, line: int | None = None, text: str | None = None):
        self.line = line
        self.text = text
        parts = []
        if line is not None:
            parts.append(f"line {line}")
        parts.append(message)
        if text is not None:
            parts.append(f"in: {text!r}")
        super().__init__(": ".join(parts))


class SaturatedEventError(CoocnetError, ValueError):
    """An event occurs in every scenario, so its adjusted residual is undefined."""


class IntegrityError(CoocnetError, ValueError):
    """A graph or matrix violates a structural invariant."""
