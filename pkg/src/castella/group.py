"""Thompson's group F as reduced right fractions x * y^-1 over the monoid."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple, Sequence

from .errors import NotPositiveError
from .words import Element, _bump


class SignedLetter(NamedTuple):
    index: int
    sign: int = 1

    def inverse(self) -> SignedLetter:
        return SignedLetter(self.index, -self.sign)


@dataclass(frozen=True)
class GroupElement:
    numerator: Element
    denominator: Element

    @classmethod
    def identity(cls) -> GroupElement:
        return cls(Element.identity(), Element.identity())

    @classmethod
    def of(cls, u: Element) -> GroupElement:
        return cls(u, Element.identity())

    def signed_word(self) -> list[SignedLetter]:
        return positive_letters(self.numerator) + negative_letters(self.denominator)

    def __mul__(self, other: GroupElement) -> GroupElement:
        return multiply_group(self, other)

    def __invert__(self) -> GroupElement:
        return invert(self)

    def __str__(self) -> str:
        return f"({self.numerator}) * ({self.denominator})^-1"


def positive_letters(u: Element) -> list[SignedLetter]:
    return [SignedLetter(j, 1) for j in u.word]


def negative_letters(u: Element) -> list[SignedLetter]:
    """Signed word of u^-1."""
    return [SignedLetter(j, -1) for j in reversed(u.word)]


def _redexes(w: list[SignedLetter]) -> list[int]:
    out = []
    for r in range(len(w) - 1):
        x, y = w[r], w[r + 1]
        if x.sign < 0 < y.sign or (x.sign > 0 > y.sign and x.index == y.index):
            out.append(r)
    return out


def _apply(w: list[SignedLetter], r: int) -> None:
    x, y = w[r], w[r + 1]
    if x.index == y.index:
        del w[r:r + 2]
    elif x.index < y.index:
        # p_i^-1 p_j = p_{j+1} p_i^-1
        w[r:r + 2] = [SignedLetter(_bump(y.index), 1), SignedLetter(x.index, -1)]
    else:
        # p_i^-1 p_j = p_j p_{i+1}^-1
        w[r:r + 2] = [SignedLetter(y.index, 1), SignedLetter(_bump(x.index), -1)]


def _separate(word: Sequence[SignedLetter], pick: Callable[[list[int]], int] | None) -> list[SignedLetter]:
    w = [SignedLetter(*s) for s in word]
    if pick is not None:
        while True:
            red = _redexes(w)
            if not red:
                return w
            _apply(w, pick(red))
    # leftmost scan, stepping back after each rewrite
    r = 0
    while r < len(w) - 1:
        x, y = w[r], w[r + 1]
        if x.sign < 0 < y.sign or (x.sign > 0 > y.sign and x.index == y.index):
            _apply(w, r)
            r = max(r - 1, 0)
        else:
            r += 1
    return w


def _lowest_terms(a: dict[int, int], b: dict[int, int]) -> tuple[dict[int, int], dict[int, int]]:
    while True:
        top = max(list(a) + list(b), default=-1)
        for j0 in range(top, -1, -1):
            if a.get(j0, 0) > 0 and b.get(j0, 0) > 0 and not a.get(j0 + 1) and not b.get(j0 + 1):
                break
        else:
            return a, b
        a, b = _cancel_at(a, j0), _cancel_at(b, j0)


def _cancel_at(vec: dict[int, int], j0: int) -> dict[int, int]:
    # move one p_{j0} past the tail (indices shift down) and drop it
    out = {}
    for j, k in vec.items():
        if j >= j0 + 2:
            out[j - 1] = k
        elif j == j0:
            if k > 1:
                out[j] = k - 1
        else:
            out[j] = k
    return out


def _vec(u: Element) -> dict[int, int]:
    return dict(u.runs)


def _elem(vec: dict[int, int]) -> Element:
    return Element(tuple(sorted((j, k) for j, k in vec.items() if k)))


def reduce(word: Sequence[SignedLetter | tuple[int, int]],
           pick: Callable[[list[int]], int] | None = None) -> GroupElement:
    """Reduce a signed word to its unique lowest-terms fraction.

    ``pick`` chooses which redex to rewrite next; the default is a
    leftmost scan. The result does not depend on the choice.
    """
    w = _separate(word, pick)
    pos = [s.index for s in w if s.sign > 0]
    neg = [s.index for s in w if s.sign < 0]
    x = Element.from_word(pos)
    y = Element.from_word(reversed(neg))
    a, b = _lowest_terms(_vec(x), _vec(y))
    return GroupElement(_elem(a), _elem(b))


def multiply_group(a: GroupElement, b: GroupElement) -> GroupElement:
    return reduce(a.signed_word() + b.signed_word())


def invert(a: GroupElement) -> GroupElement:
    return GroupElement(a.denominator, a.numerator)


def is_positive(a: GroupElement) -> bool:
    return a.denominator.is_identity


def to_element(a: GroupElement) -> Element:
    if not is_positive(a):
        raise NotPositiveError(f"{a} is not in the positive monoid")
    return a.numerator


def left_fraction(d: Element, u: Element) -> GroupElement:
    """Lowest-terms fraction of d^-1 u."""
    return reduce(negative_letters(d) + positive_letters(u))


def right_fraction(w: Element, v: Element) -> GroupElement:
    """Lowest-terms fraction of w v^-1."""
    return reduce(positive_letters(w) + negative_letters(v))
