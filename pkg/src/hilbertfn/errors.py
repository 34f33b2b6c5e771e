"""Shared exception types."""


class ResourceCapError(RuntimeError):
    """A computation was refused because it would exceed a configured cap."""
