"""A thin integral-monoid interface and three concrete instances.

Only the Thompson instance carries castlings; the others expose identity,
multiplication, factorizations and text conversion, which is all the
convolution machinery needs.
"""
from __future__ import annotations

import re
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Any, Mapping

from . import arith
from .errors import DomainError, ParseError
from .limits import check_size
from .text import parse_element, scan_terms
from .words import Element, render


class MonoidInstance(ABC):
    name: str = "monoid"

    @abstractmethod
    def identity(self) -> Any: ...

    @abstractmethod
    def multiply(self, a, b) -> Any: ...

    @abstractmethod
    def divisor_pairs(self, u) -> tuple[tuple[Any, Any], ...]:
        """Every ordered factorization (a, b) with a * b == u."""

    @abstractmethod
    def render(self, u) -> str: ...

    @abstractmethod
    def parse(self, text: str) -> Any: ...

    def is_identity(self, u) -> bool:
        return u == self.identity()

    def divisors(self, u) -> list:
        return sorted({a for a, _ in self.divisor_pairs(u)}, key=self.sort_key)

    def tau(self, u) -> int:
        return len(self.divisor_pairs(u))

    def sort_key(self, u):
        return u.sort_key()


class ThompsonMonoid(MonoidInstance):
    name = "thompson"

    def identity(self) -> Element:
        return Element.identity()

    def multiply(self, a: Element, b: Element) -> Element:
        return a * b

    def divisor_pairs(self, u: Element):
        return arith.divisor_pairs(u)

    def render(self, u: Element) -> str:
        return render(u)

    def parse(self, text: str) -> Element:
        return parse_element(text)


THOMPSON = ThompsonMonoid()


# -- free abelian monoids -------------------------------------------------

@dataclass(frozen=True)
class AbelianElement:
    """Finitely supported exponent vector, keyed by generator label."""

    exponents: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_mapping(cls, m: Mapping[int, int]) -> AbelianElement:
        if any(e < 0 for e in m.values()):
            raise DomainError("exponents must be non-negative")
        return cls(tuple(sorted((g, e) for g, e in m.items() if e)))

    def as_dict(self) -> dict[int, int]:
        return dict(self.exponents)

    @property
    def is_identity(self) -> bool:
        return not self.exponents

    @property
    def ind(self) -> int:
        return sum(e for _, e in self.exponents)

    def sort_key(self):
        return (self.ind, self.exponents)

    def __mul__(self, other: AbelianElement) -> AbelianElement:
        m = self.as_dict()
        for g, e in other.exponents:
            m[g] = m.get(g, 0) + e
        return AbelianElement.from_mapping(m)

    def divides(self, other: AbelianElement) -> bool:
        o = other.as_dict()
        return all(o.get(g, 0) >= e for g, e in self.exponents)

    def quotient(self, d: AbelianElement) -> AbelianElement:
        if not d.divides(self):
            raise DomainError("not divisible")
        m = self.as_dict()
        for g, e in d.exponents:
            m[g] -= e
        return AbelianElement.from_mapping(m)

    def divisors(self) -> list[AbelianElement]:
        gens = [g for g, _ in self.exponents]
        ranges = [range(e + 1) for _, e in self.exponents]
        return [AbelianElement.from_mapping(dict(zip(gens, c))) for c in product(*ranges)]

    def tau(self) -> int:
        out = 1
        for _, e in self.exponents:
            out *= e + 1
        return out

    def mu(self) -> int:
        if any(e > 1 for _, e in self.exponents):
            return 0
        return (-1) ** len(self.exponents)

    def liouville(self) -> int:
        return (-1) ** self.ind

    def lcm(self, other: AbelianElement) -> AbelianElement:
        m = self.as_dict()
        for g, e in other.exponents:
            m[g] = max(m.get(g, 0), e)
        return AbelianElement.from_mapping(m)

    def gcd(self, other: AbelianElement) -> AbelianElement:
        o = other.as_dict()
        return AbelianElement.from_mapping({g: min(e, o.get(g, 0)) for g, e in self.exponents})

    def natural_value(self) -> int:
        """Integer value when the labels are primes (the natural-number model)."""
        out = 1
        for g, e in self.exponents:
            out *= g**e
        return out


def parse_natural(n: int) -> AbelianElement:
    """Factor n by trial division; generators are labelled by the primes."""
    if n < 1:
        raise DomainError("natural numbers start at 1")
    m: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            m[d] = m.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        m[n] = m.get(n, 0) + 1
    return AbelianElement.from_mapping(m)


_ABELIAN_TERM = re.compile(r"a(\d+)(?:\^(\d+))?")


class AbelianMonoid(MonoidInstance):
    """Free abelian monoid on k generators, or on all primes when k is None."""

    def __init__(self, k: int | None = None):
        if k is not None and k < 1:
            raise DomainError("need at least one generator")
        self.k = k
        self.name = "natural" if k is None else f"abelian:{k}"

    def identity(self) -> AbelianElement:
        return AbelianElement()

    def multiply(self, a: AbelianElement, b: AbelianElement) -> AbelianElement:
        return a * b

    def divisor_pairs(self, u: AbelianElement):
        return tuple((d, u.quotient(d)) for d in sorted(u.divisors(), key=AbelianElement.sort_key))

    def tau(self, u: AbelianElement) -> int:
        return u.tau()

    def render(self, u: AbelianElement) -> str:
        if self.k is None:
            return str(u.natural_value())
        if u.is_identity:
            return "1"
        return " ".join(f"a{g}" if e == 1 else f"a{g}^{e}" for g, e in u.exponents)

    def parse(self, text: str) -> AbelianElement:
        s = text.strip()
        if self.k is None:
            if not s.isdigit():
                raise ParseError("expected a positive integer", 0)
            return parse_natural(int(s))
        if s == "1":
            return AbelianElement()
        m: dict[int, int] = {}
        for g, e in scan_terms(text, _ABELIAN_TERM):
            if g >= self.k:
                raise DomainError(f"generator a{g} outside a{0}..a{self.k - 1}")
            m[g] = m.get(g, 0) + e
        return AbelianElement.from_mapping(m)


def folner_ratio(k: int, i: int, n: int) -> Fraction:
    """|p_i F_n symmetric-difference F_n| / |F_n| for the exponent grid F_n = [0, n)^k."""
    if k < 1 or not 0 <= i < k or n < 1:
        raise DomainError("need k >= 1, 0 <= i < k and n >= 1")
    check_size(n**k, "Folner grid")
    grid = set(product(range(n), repeat=k))
    shifted = {t[:i] + (t[i] + 1,) + t[i + 1:] for t in grid}
    return Fraction(len(grid ^ shifted), len(grid))


# -- the monoid generated by U, V with V U = U V^2 ----------------------------

@dataclass(frozen=True)
class UVElement:
    """U^m V^n."""

    m: int = 0
    n: int = 0

    def __post_init__(self) -> None:
        if self.m < 0 or self.n < 0:
            raise DomainError("exponents must be non-negative")

    @property
    def is_identity(self) -> bool:
        return self.m == 0 and self.n == 0

    def sort_key(self):
        return (self.m + self.n, self.m, self.n)

    def __mul__(self, other: UVElement) -> UVElement:
        return uv_multiply(self, other)


def uv_multiply(a: UVElement, b: UVElement) -> UVElement:
    # U^m1 V^n1 U^m2 V^n2 = U^(m1+m2) V^(2^m2 n1 + n2)
    return UVElement(a.m + b.m, (a.n << b.m) + b.n)


def uv_divisor_pairs(c: UVElement) -> tuple[tuple[UVElement, UVElement], ...]:
    out = []
    for m2 in range(c.m + 1):
        for n1 in range((c.n >> m2) + 1):
            out.append((UVElement(c.m - m2, n1), UVElement(m2, c.n - (n1 << m2))))
    return tuple(sorted(out, key=lambda p: (p[0].sort_key(), p[1].sort_key())))


_UV_TERM = re.compile(r"([UV])(?:\^(\d+))?")


class UVMonoid(MonoidInstance):
    name = "uv2"

    def identity(self) -> UVElement:
        return UVElement()

    def multiply(self, a: UVElement, b: UVElement) -> UVElement:
        return uv_multiply(a, b)

    def divisor_pairs(self, u: UVElement):
        return uv_divisor_pairs(u)

    def render(self, u: UVElement) -> str:
        parts = [s if e == 1 else f"{s}^{e}" for s, e in (("U", u.m), ("V", u.n)) if e]
        return " ".join(parts) or "1"

    def parse(self, text: str) -> UVElement:
        if text.strip() == "1":
            return UVElement()
        out = UVElement()
        for letter, e in scan_terms(text, _UV_TERM):
            step = UVElement(e, 0) if letter == "U" else UVElement(0, e)
            out = uv_multiply(out, step)
        return out


UV2 = UVMonoid()


def get_instance(selector: str) -> MonoidInstance:
    if selector == "thompson":
        return THOMPSON
    if selector == "uv2":
        return UV2
    if selector == "natural":
        return AbelianMonoid(None)
    if selector.startswith("abelian:"):
        try:
            k = int(selector.split(":", 1)[1])
        except ValueError:
            raise DomainError(f"bad generator count in {selector!r}") from None
        return AbelianMonoid(k)
    raise DomainError(f"unknown monoid {selector!r}")
