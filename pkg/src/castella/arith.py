"""Divisibility, divisor sets, lcm/gcd and prime multiplicities."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cache, lru_cache, reduce as fold
from typing import Iterable, Iterator, Mapping, Sequence

from .castle import castle_words
from .errors import DomainError, InvariantViolation, NotCoDivisorError, NotDivisibleError
from .group import is_positive, left_fraction, right_fraction
from .limits import check_size
from .words import Element, Word, _insert, min_word, multiply, normalize

ONE = Element.identity()


@dataclass(frozen=True)
class PrimeMultiset:
    """Prime indices with multiplicities, sorted by index."""

    counts: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_mapping(cls, m: Mapping[int, int]) -> PrimeMultiset:
        return cls(tuple(sorted((j, k) for j, k in m.items() if k > 0)))

    def as_dict(self) -> dict[int, int]:
        return dict(self.counts)

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(self.counts)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(j for j, _ in self.counts)

    @property
    def total(self) -> int:
        return sum(k for _, k in self.counts)

    def __len__(self) -> int:
        return len(self.counts)

    def __contains__(self, index: int) -> bool:
        return any(j == index for j, _ in self.counts)

    def __str__(self) -> str:
        return " ".join(f"p{j}:{k}" for j, k in self.counts) or "{}"


@lru_cache(maxsize=1 << 18)
def divides(d: Element, u: Element) -> bool:
    return is_positive(left_fraction(d, u))


@lru_cache(maxsize=1 << 18)
def co_divides(v: Element, w: Element) -> bool:
    return is_positive(right_fraction(w, v))


@lru_cache(maxsize=1 << 18)
def quotient_left(u: Element, d: Element) -> Element:
    """The e with d * e == u."""
    f = left_fraction(d, u)
    if not is_positive(f):
        raise NotDivisibleError(f"{d} does not divide {u}")
    return f.numerator


@lru_cache(maxsize=1 << 18)
def quotient_right(w: Element, v: Element) -> Element:
    """The e with e * v == w."""
    f = right_fraction(w, v)
    if not is_positive(f):
        raise NotCoDivisorError(f"{v} is not a co-divisor of {w}")
    return f.numerator


def _word_of(u: Element, word: Sequence[int] | None) -> Word:
    if word is None:
        return u.word
    word = tuple(word)
    if normalize(word) != u:
        raise DomainError(f"{list(word)} is not a word of {u}")
    return word


def pdm(u: Element, word: Sequence[int] | None = None) -> PrimeMultiset:
    """Prime divisors with multiplicity, read off strong castlings of prefixes."""
    q = _word_of(u, word)
    counts: Counter[int] = Counter()
    prefix: list[int] = []  # normal form of q[:j]
    for letter in q:
        res = castle_words(prefix, (letter,))
        if res is not None:
            counts[res[0][0]] += 1
        _insert(prefix, letter)
    return PrimeMultiset.from_mapping(counts)


def pdm_co(u: Element, word: Sequence[int] | None = None) -> PrimeMultiset:
    """Prime co-divisors with multiplicity, read off strong castlings of suffixes."""
    q = _word_of(u, word)
    counts: Counter[int] = Counter()
    for r, letter in enumerate(q):
        res = castle_words((letter,), min_word(normalize(q[r + 1:])))
        if res is not None:
            counts[res[1][0]] += 1
    return PrimeMultiset.from_mapping(counts)


@cache
def _pdm_cached(u: Element) -> PrimeMultiset:
    return pdm(u)


@cache
def _pdm_co_cached(u: Element) -> PrimeMultiset:
    return pdm_co(u)


def prime_divisors(u: Element) -> frozenset[int]:
    return _pdm_cached(u).support


def prime_co_divisors(u: Element) -> frozenset[int]:
    return _pdm_co_cached(u).support


def omega(u: Element) -> int:
    return len(_pdm_cached(u))


def big_omega(u: Element) -> int:
    return _pdm_cached(u).total


def omega_co(u: Element) -> int:
    return len(_pdm_co_cached(u))


def big_omega_co(u: Element) -> int:
    return _pdm_co_cached(u).total


@cache
def divisors(u: Element) -> frozenset[Element]:
    """Div(u) = {1} together with p * Div(p^-1 u) for every prime p dividing u."""
    out = {ONE}
    for j in sorted(prime_divisors(u)):
        p = Element.prime(j)
        for d in divisors(quotient_left(u, p)):
            out.add(multiply(p, d))
        check_size(len(out), "divisor enumeration")
    return frozenset(out)


@cache
def divisor_pairs(u: Element) -> tuple[tuple[Element, Element], ...]:
    """All factorizations (d, e) with d * e == u, sorted by d."""
    return tuple((d, quotient_left(u, d)) for d in sorted(divisors(u)))


def co_divisors(u: Element) -> frozenset[Element]:
    return frozenset(e for _, e in divisor_pairs(u))


def tau(u: Element) -> int:
    return len(divisors(u))


@lru_cache(maxsize=1 << 18)
def _lcm2(u: Element, v: Element) -> Element:
    # v^-1 u = x y^-1 in lowest terms, and then u y = v x is the lcm
    return multiply(u, left_fraction(v, u).denominator)


def lcm(elements: Iterable[Element]) -> Element:
    elements = list(elements)
    if not elements:
        raise DomainError("lcm of an empty list")
    return fold(_lcm2, elements)


def _gcd2(u: Element, v: Element) -> Element:
    common = divisors(u) & divisors(v)
    g = max(common, key=Element.sort_key)
    if not common <= divisors(g):
        raise InvariantViolation(f"largest common divisor of {u} and {v} does not absorb the others")
    return g


def gcd(elements: Iterable[Element]) -> Element:
    elements = list(elements)
    if not elements:
        raise DomainError("gcd of an empty list")
    return fold(_gcd2, elements)


def _co_quotients(w: Element, us: Sequence[Element]) -> list[Element]:
    if not us:
        raise DomainError("need at least one co-divisor")
    return [quotient_right(w, u) for u in us]


def lcm_co(w: Element, us: Sequence[Element]) -> Element:
    """Least common co-multiple of the u_i below w: gcd(w u_i^-1)^-1 w."""
    return quotient_left(w, gcd(_co_quotients(w, us)))


def gcd_co(w: Element, us: Sequence[Element]) -> Element:
    """Greatest common co-divisor of the u_i below w: lcm[w u_i^-1]^-1 w."""
    return quotient_left(w, lcm(_co_quotients(w, us)))


def beta(p: int, r: int) -> int:
    """The prime q with p_p * p_q == lcm[p_p, p_r], or p itself when r == p."""
    if p == r:
        return p
    pe = Element.prime(p)
    q = quotient_left(lcm([pe, Element.prime(r)]), pe)
    if q.ind != 1:
        raise InvariantViolation(f"lcm[p{p}, p{r}] has unexpected shape")
    return q.runs[0][0]


def prime_power_lcm(u: Element) -> Element:
    powers = [Element.prime(j, k) for j, k in _pdm_cached(u).items()]
    return lcm(powers) if powers else ONE


def is_fully_castlable(u: Element) -> bool:
    return prime_power_lcm(u) == u


def gfc_decompose(u: Element) -> list[Element]:
    """Peel off greatest fully castlable divisors until nothing is left."""
    factors = []
    while not u.is_identity:
        head = prime_power_lcm(u)
        factors.append(head)
        u = quotient_left(u, head)
    return factors
