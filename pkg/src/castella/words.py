"""Letters, words and the normal form of Thompson's monoid.

A letter p_j is stored as the bare integer j and a word as a tuple of
letter indices read left to right. An :class:`Element` keeps only its
normal form, the unique word with non-decreasing indices, as runs of
(index, exponent) pairs.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import groupby
from typing import Iterable, Iterator, Sequence

from .errors import DomainError, NotSameElementError
from .limits import check_size

Word = tuple[int, ...]

MAX_INDEX = 2**63 - 1


def _bump(index: int) -> int:
    if index >= MAX_INDEX:
        raise OverflowError(f"letter index {index} + 1 leaves the supported range")
    return index + 1


def _check_letters(word: Iterable[int]) -> Word:
    out = tuple(word)
    for j in out:
        if not isinstance(j, int) or isinstance(j, bool) or j < 0:
            raise DomainError(f"letter index must be a non-negative integer, got {j!r}")
    return out


@dataclass(frozen=True)
class Element:
    """Element of Thompson's monoid in normal form p_0^{a_0} p_1^{a_1} ..."""

    runs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        prev = -1
        for index, exp in self.runs:
            if index <= prev:
                raise DomainError("run indices must be strictly increasing")
            if index < 0 or exp < 1:
                raise DomainError("run indices must be >= 0 and exponents >= 1")
            prev = index

    @classmethod
    def identity(cls) -> Element:
        return cls(())

    @classmethod
    def prime(cls, index: int, exponent: int = 1) -> Element:
        if exponent == 0:
            return cls(())
        return cls(((index, exponent),))

    @classmethod
    def from_word(cls, word: Iterable[int]) -> Element:
        return normalize(word)

    @classmethod
    def from_sorted_word(cls, word: Sequence[int]) -> Element:
        return cls(tuple((j, len(list(g))) for j, g in groupby(word)))

    @cached_property
    def word(self) -> Word:
        """The normal-form word, which is also the maximum word."""
        return tuple(j for j, k in self.runs for _ in range(k))

    @property
    def ind(self) -> int:
        return sum(k for _, k in self.runs)

    @property
    def is_identity(self) -> bool:
        return not self.runs

    def exponent(self, index: int) -> int:
        for j, k in self.runs:
            if j == index:
                return k
        return 0

    def sort_key(self) -> tuple[int, Word]:
        return (self.ind, self.word)

    def __lt__(self, other: Element) -> bool:
        return self.sort_key() < other.sort_key()

    def __mul__(self, other: Element) -> Element:
        return multiply(self, other)

    def __pow__(self, n: int) -> Element:
        return power(self, n)

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"Element({render(self)!r})"


def render(u: Element) -> str:
    if not u.runs:
        return "1"
    return " ".join(f"p{j}" if k == 1 else f"p{j}^{k}" for j, k in u.runs)


def render_word(word: Sequence[int]) -> str:
    return "[" + ",".join(str(j) for j in word) + "]"


def _insert(sorted_word: list[int], letter: int) -> None:
    # Append then bubble left: p_a p_b -> p_b p_{a+1} whenever a > b.
    sorted_word.append(letter)
    i = len(sorted_word) - 1
    while i > 0 and sorted_word[i - 1] > sorted_word[i]:
        a = sorted_word[i - 1]
        sorted_word[i - 1] = sorted_word[i]
        sorted_word[i] = _bump(a)
        i -= 1


def normalize(word: Iterable[int]) -> Element:
    """Bring a word to normal form using only p_a p_b = p_b p_{a+1} (a > b)."""
    out: list[int] = []
    for letter in _check_letters(word):
        _insert(out, letter)
    return Element.from_sorted_word(out)


def ind(x: Element | Sequence[int]) -> int:
    if isinstance(x, Element):
        return x.ind
    return len(x)


def multiply(a: Element, b: Element) -> Element:
    if not b.runs:
        return a
    out = list(a.word)
    for letter in b.word:
        _insert(out, letter)
    return Element.from_sorted_word(out)


def power(u: Element, n: int) -> Element:
    if n < 0:
        raise DomainError("power exponent must be non-negative")
    out: list[int] = []
    for _ in range(n):
        for letter in u.word:
            _insert(out, letter)
    return Element.from_sorted_word(out)


def _neighbours(word: Word, up: bool = True, down: bool = True) -> Iterator[Word]:
    for r in range(len(word) - 1):
        a, b = word[r], word[r + 1]
        if up and a > b:
            yield word[:r] + (b, _bump(a)) + word[r + 2:]
        elif down and b - a >= 2:
            yield word[:r] + (b - 1, a) + word[r + 2:]


def enumerate_words(u: Element) -> frozenset[Word]:
    """All words of ``u``, reached from the normal form by single castles."""
    start = u.word
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for nxt in _neighbours(w):
            if nxt not in seen:
                seen.add(nxt)
                check_size(len(seen), "word enumeration")
                queue.append(nxt)
    return frozenset(seen)


def max_word(u: Element) -> Word:
    return u.word


def min_word(u: Element) -> Word:
    """Greedily lower P_a P_b (b - a >= 2) to P_{b-1} P_a until stuck."""
    w = list(u.word)
    r = 0
    while r < len(w) - 1:
        if w[r + 1] - w[r] >= 2:
            w[r], w[r + 1] = w[r + 1] - 1, w[r]
            r = max(r - 1, 0)
        else:
            r += 1
    return tuple(w)


def is_min_word(word: Sequence[int]) -> bool:
    return all(word[r] - word[r + 1] >= -1 for r in range(len(word) - 1))


def word_precedes(a: Sequence[int], b: Sequence[int]) -> bool:
    """Whether ``b`` is reachable from ``a`` by increasing castles."""
    a, b = _check_letters(a), _check_letters(b)
    if normalize(a) != normalize(b):
        raise NotSameElementError(f"{render_word(a)} and {render_word(b)} are words of different elements")
    target = sum(b)
    seen = {a}
    queue = deque([a])
    while queue:
        w = queue.popleft()
        if w == b:
            return True
        for nxt in _neighbours(w, down=False):
            # every increasing castle raises the index sum by one
            if nxt not in seen and sum(nxt) <= target:
                seen.add(nxt)
                check_size(len(seen), "word order search")
                queue.append(nxt)
    return False


def iota(u: Element) -> Element:
    """Conjugation by p_0: fixes p_0 and sends p_r to p_{r+1} for r >= 1."""
    return Element(tuple((j if j == 0 else _bump(j), k) for j, k in u.runs))


def iota_inverse(u: Element) -> Element:
    if u.exponent(1):
        raise DomainError("iota_inverse needs the p_1 exponent to be zero")
    return Element(tuple((j if j == 0 else j - 1, k) for j, k in u.runs))
