"""Resource caps for the diagram engine, overridable via environment."""

from __future__ import annotations

import os


class ResourceCapError(RuntimeError):
    """A computation exceeded a configured resource cap."""

    def __init__(self, message: str, reached: int):
        super().__init__(message)
        self.reached = reached


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None


def max_tree_leaves() -> int:
    return _env_int("WYSIWYG_MAX_LEAVES", 64)


def max_terms() -> int:
    return _env_int("WYSIWYG_MAX_TERMS", 5_000_000)
