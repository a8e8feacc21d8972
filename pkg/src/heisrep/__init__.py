"""Heisenberg-group representations of surface braid groups and mapping class groups."""

from __future__ import annotations

from .heisenberg import (
    FULL,
    HeisenbergElement,
    QuotientSpec,
    finite,
    mod_sigma,
    parse_element,
)
from .words import SurfaceBraidWord, eval_heisenberg

__all__ = [
    "FULL",
    "HeisenbergElement",
    "QuotientSpec",
    "SurfaceBraidWord",
    "eval_heisenberg",
    "finite",
    "mod_sigma",
    "parse_element",
]
