"""Small shared formatting helpers for reports and tables."""

from __future__ import annotations

from typing import Iterable


def brace_set(items: Iterable[str]) -> str:
    """Render an attribute set in brace-list style: ``{#job, manager}``."""
    return "{" + ", ".join(sorted(items)) + "}"


def format_pct(value: float) -> str:
    """Percentage with two decimals; an exact 1.0 renders as ``100.0%``."""
    if value == 1.0:
        return "100.0%"
    return f"{value:.2%}"
