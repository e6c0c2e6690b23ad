"""Non-commutative arithmetic in Thompson's monoid and a few sibling monoids."""
from .errors import (
    CastellaError,
    DomainError,
    NotCoDivisorError,
    NotDivisibleError,
    NotPositiveError,
    NotSameElementError,
    NonInvertibleError,
    ParseError,
    ResourceLimitError,
)
from .words import Element, normalize, render, render_word
from .text import parse_element

__all__ = [
    "CastellaError",
    "DomainError",
    "Element",
    "NonInvertibleError",
    "NotCoDivisorError",
    "NotDivisibleError",
    "NotPositiveError",
    "NotSameElementError",
    "ParseError",
    "ResourceLimitError",
    "normalize",
    "parse_element",
    "render",
    "render_word",
]
