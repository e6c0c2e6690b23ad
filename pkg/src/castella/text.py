"""Text grammar for elements.

    element := "1" | term (sep term)*
    term    := "p" digits ("^" digits)?
    sep     := whitespace | "*"
"""
from __future__ import annotations

import re
from typing import Any

from .errors import ParseError
from .words import Element, normalize, render, render_word

__all__ = ["parse_element", "render", "render_word", "scan_terms"]

_SEP = re.compile(r"[\s*]*")
_TERM = re.compile(r"p(\d+)(?:\^(\d+))?")


def _offset(text: str, pos: int) -> int:
    return len(text[:pos].encode("utf-8"))


def scan_terms(text: str, term: re.Pattern = _TERM) -> list[tuple[Any, int]]:
    """Split ``text`` into (label, exponent) terms; labels that are digits become ints."""
    out = []
    pos = _SEP.match(text, 0).end()
    if pos == len(text):
        raise ParseError("empty expression", _offset(text, pos))
    while pos < len(text):
        m = term.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected {text[pos]!r}", _offset(text, pos))
        exp = int(m.group(2)) if m.group(2) is not None else 1
        if exp == 0:
            raise ParseError("exponent must be at least 1", _offset(text, m.start(2)))
        label = m.group(1)
        out.append((int(label) if label.isdigit() else label, exp))
        pos = _SEP.match(text, m.end()).end()
    return out


def parse_element(text: str) -> Element:
    if text.strip() == "1":
        return Element.identity()
    word: list[int] = []
    for j, k in scan_terms(text):
        word.extend([j] * k)
    return normalize(word)
