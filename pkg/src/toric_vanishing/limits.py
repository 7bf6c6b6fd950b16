"""Resource caps shared by the Groebner engine and the point enumerators."""

from __future__ import annotations

import contextlib
import contextvars

DEFAULT_MAX_REDUCTIONS = 10**6
DEFAULT_MAX_ENUM = 10**7

_max_reductions = contextvars.ContextVar("max_reductions", default=DEFAULT_MAX_REDUCTIONS)
_max_enum = contextvars.ContextVar("max_enum", default=DEFAULT_MAX_ENUM)


class BudgetExceeded(RuntimeError):
    """A computation hit its configured resource cap."""


def max_reductions() -> int:
    return _max_reductions.get()


def max_enum() -> int:
    return _max_enum.get()


@contextlib.contextmanager
def budget(max_reductions: int | None = None, max_enum: int | None = None):
    """Temporarily override the caps for the current context."""
    for v in (max_reductions, max_enum):
        if v is not None and v <= 0:
            raise ValueError("budgets must be positive")
    tokens = []
    if max_reductions is not None:
        tokens.append((_max_reductions, _max_reductions.set(max_reductions)))
    if max_enum is not None:
        tokens.append((_max_enum, _max_enum.set(max_enum)))
    try:
        yield
    finally:
        for var, tok in reversed(tokens):
            var.reset(tok)


def check_enum(count: int, what: str) -> None:
    cap = max_enum()
    if count > cap:
        raise BudgetExceeded(f"{what}: {count} items exceeds enumeration budget {cap}")
