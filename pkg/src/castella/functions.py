"""Arithmetic functions with exact rational values and Dirichlet-style convolution.

Convolution needs only the finite list of factorizations of an element, so
every routine accepts a ``monoid`` exposing ``identity()`` and
``divisor_pairs(u)``. Thompson's monoid is the default.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Hashable, Iterable

from . import arith
from .castle import free_castle, two_sided_strong_castle
from .errors import NonInvertibleError
from .instances import THOMPSON, MonoidInstance
from .words import Element


class ArithFn:
    """Memoizing map from monoid elements to exact rationals."""

    def __init__(self, evaluator: Callable[[Any], Any], name: str = "f"):
        self._evaluator = evaluator
        self._memo: dict[Hashable, Fraction] = {}
        self.name = name

    def __call__(self, u) -> Fraction:
        try:
            return self._memo[u]
        except KeyError:
            pass
        # setdefault keeps the cache insert-only if two callers race
        return self._memo.setdefault(u, Fraction(self._evaluator(u)))

    def __repr__(self) -> str:
        return f"ArithFn({self.name})"


def convolve(f: ArithFn, g: ArithFn, monoid: MonoidInstance = THOMPSON) -> ArithFn:
    def h(z):
        return sum((f(d) * g(e) for d, e in monoid.divisor_pairs(z)), Fraction(0))

    return ArithFn(h, f"({f.name}*{g.name})")


def inverse(f: ArithFn, monoid: MonoidInstance = THOMPSON) -> ArithFn:
    """Convolution inverse by recursion on proper left divisors."""
    c = _unit_value(f, monoid)

    def g(z):
        if monoid.is_identity(z):
            return 1 / c
        total = sum((g_fn(v) * f(w) for v, w in monoid.divisor_pairs(z) if v != z), Fraction(0))
        return -total / c

    g_fn = ArithFn(g, f"{f.name}^-1")
    return g_fn


def inverse_right(f: ArithFn, monoid: MonoidInstance = THOMPSON) -> ArithFn:
    """Convolution inverse by recursion on proper co-divisors."""
    c = _unit_value(f, monoid)

    def g(z):
        if monoid.is_identity(z):
            return 1 / c
        total = sum((f(d) * g_fn(v) for d, v in monoid.divisor_pairs(z) if v != z), Fraction(0))
        return -total / c

    g_fn = ArithFn(g, f"{f.name}^-1")
    return g_fn


def _unit_value(f: ArithFn, monoid: MonoidInstance) -> Fraction:
    c = f(monoid.identity())
    if c == 0:
        raise NonInvertibleError(f"{f.name}(1) = 0, so {f.name} has no convolution inverse")
    return c


def mu(u: Element) -> int:
    """Moebius value: (-1)^k when omega(u) = k and tau(u) = 2^k, else 0."""
    k = arith.omega(u)
    return (-1) ** k if arith.tau(u) == 2**k else 0


def liouville(u: Element) -> int:
    return (-1) ** arith.big_omega(u)


def liouville_co(u: Element) -> int:
    return (-1) ** arith.big_omega_co(u)


one = ArithFn(lambda u: 1, "one")
delta1 = ArithFn(lambda u: 1 if u.is_identity else 0, "delta1")
tau_fn = ArithFn(arith.tau, "tau")
mu_fn = ArithFn(mu, "mu")
liouville_fn = ArithFn(liouville, "lambda")
liouville_co_fn = ArithFn(liouville_co, "lambda_co")


@dataclass
class CheckReport:
    name: str
    checked: int = 0
    skipped: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _invariance(f: ArithFn, pairs: Iterable[tuple[Element, Element]], report: CheckReport) -> list:
    strong = []
    for u, v in pairs:
        res = two_sided_strong_castle(u, v)
        if res is None:
            continue
        strong.append((u, v))
        report.checked += 1
        if f(u) != f(res.right) or f(v) != f(res.left):
            report.violations.append(f"{f.name} not invariant under ({u}, {v}) -> ({res.left}, {res.right})")
    return strong


def check_castled_invariant(f: ArithFn, samples: Iterable[tuple[Element, Element]]) -> CheckReport:
    samples = list(samples)
    report = CheckReport(f"{f.name} castled-invariant")
    strong = _invariance(f, samples, report)
    report.skipped = len(samples) - len(strong)
    return report


def _product_law(f: ArithFn, pairs, report: CheckReport) -> None:
    for u, v in pairs:
        report.checked += 1
        if f(u * v) != f(u) * f(v):
            report.violations.append(f"{f.name}({u} * {v}) != {f.name}({u}) {f.name}({v})")


def check_multiplicative(f: ArithFn, samples: Iterable[tuple[Element, Element]]) -> CheckReport:
    samples = list(samples)
    report = CheckReport(f"{f.name} multiplicative")
    _invariance(f, samples, report)
    free = [(u, v) for u, v in samples if free_castle(u, v) is not None]
    _product_law(f, free, report)
    report.skipped = len(samples) - len(free)
    return report


def check_completely_multiplicative(f: ArithFn, samples: Iterable[tuple[Element, Element]]) -> CheckReport:
    samples = list(samples)
    report = CheckReport(f"{f.name} completely multiplicative")
    strong = _invariance(f, samples, report)
    _product_law(f, strong, report)
    report.skipped = len(samples) - len(strong)
    return report
