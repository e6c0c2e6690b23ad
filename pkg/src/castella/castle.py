"""Castlings of letters, words and elements.

A castling rewrites an ordered pair (u, v) as (v~, u~) with the same
product, ind(u~) = ind(u) and ind(v~) = ind(v).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .words import Element, Word, _bump, min_word, normalize


@dataclass(frozen=True)
class CastlePair:
    left: Element
    right: Element

    def __iter__(self):
        return iter((self.left, self.right))


def castle_letters(i: int, j: int) -> Optional[tuple[int, int]]:
    """Rewrite p_i p_j as p_j~ p_i~, or return None when i - j == -1."""
    d = i - j
    if d == -1:
        return None
    if d == 0:
        return (j, i)
    if d >= 1:
        return (j, _bump(i))
    return (j - 1, i)


def castle_words(U: Sequence[int], V: Sequence[int],
                 trace: Optional[list[tuple[int, int]]] = None) -> Optional[tuple[Word, Word]]:
    """Push every letter of U, right to left, through V.

    Returns (V~, U~) or None if some letter pair is blocked. When ``trace``
    is a list, each letter pair that was castled is appended to it.
    """
    v = list(V)
    emitted = [0] * len(U)
    for r in range(len(U) - 1, -1, -1):
        c = U[r]
        for k, letter in enumerate(v):
            res = castle_letters(c, letter)
            if res is None:
                return None
            if trace is not None:
                trace.append((c, letter))
            v[k], c = res
        emitted[r] = c
    return tuple(v), tuple(emitted)


def _element_castle(U: Word, V: Word, trace) -> Optional[CastlePair]:
    res = castle_words(U, V, trace)
    if res is None:
        return None
    return CastlePair(normalize(res[0]), normalize(res[1]))


def weak_castle(u: Element, v: Element, trace: Optional[list] = None) -> Optional[CastlePair]:
    return _element_castle(u.word, v.word, trace)


def is_weakly_castlable(u: Element, v: Element) -> bool:
    return castle_words(u.word, v.word) is not None


def strong_castle(u: Element, v: Element, trace: Optional[list] = None) -> Optional[CastlePair]:
    # castlability does not depend on the word of u, and the min word of v is the hardest case
    return _element_castle(u.word, min_word(v), trace)


def is_strongly_castlable(u: Element, v: Element) -> bool:
    return castle_words(u.word, min_word(v)) is not None


def two_sided_strong_castle(u: Element, v: Element) -> Optional[CastlePair]:
    """A castling that is strong in both directions, or None.

    Castled invariance of arithmetic functions is stated for this relation;
    a one-sided strong castling can change the divisor count, e.g.
    (p1 p2, p1^2) -> (p1^2, p1 p4).
    """
    pair = strong_castle(u, v)
    if pair is None or not is_strongly_castlable(pair.left, pair.right):
        return None
    return pair


def free_castle(u: Element, v: Element, trace: Optional[list] = None) -> Optional[CastlePair]:
    from .arith import prime_divisors

    pair = weak_castle(u, v, trace)
    if pair is None or prime_divisors(u) & prime_divisors(pair.left):
        return None
    return pair


def is_castled_free(u: Element, v: Element) -> bool:
    return free_castle(u, v) is not None
