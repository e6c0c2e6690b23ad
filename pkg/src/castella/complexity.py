"""Divisor counts of powers and the growth rate tau(u^n)^(1/n).

Only finite-n values and analytic brackets are reported; no limit is
extrapolated.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from decimal import Context, Decimal
from typing import Optional

from .arith import tau
from .errors import DomainError
from .words import Element, power

DECIMAL_CONTEXT = Context(prec=12)


@dataclass(frozen=True)
class Tau0Sample:
    n: int
    tau: int
    root: Decimal


@dataclass
class Tau0Estimate:
    samples: list[Tau0Sample]
    final_estimate: Decimal
    brackets: dict[int, tuple[int, int]] = field(default_factory=dict)


@dataclass
class SubadditivityReport:
    checked: int = 0
    violations: list[tuple[int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def nth_root(x: int, n: int) -> Decimal:
    ctx = DECIMAL_CONTEXT
    return ctx.power(Decimal(x), ctx.divide(Decimal(1), Decimal(n)))


def tau_powers(u: Element, N: int) -> list[tuple[int, int]]:
    if N < 1:
        raise DomainError("N must be at least 1")
    return [(n, tau(power(u, n))) for n in range(1, N + 1)]


def _staircase_length(u: Element) -> Optional[int]:
    """l when u = p_0 p_1 ... p_{l-1}, else None."""
    if u.runs and all(j == r and k == 1 for r, (j, k) in enumerate(u.runs)):
        return len(u.runs)
    return None


def power_bracket(u: Element, n: int) -> Optional[tuple[int, int]]:
    """Known lower and upper bounds for tau(u^n)."""
    if u.is_identity:
        return (1, 1)
    if len(u.runs) == 1:
        m = u.runs[0][1] * n + 1
        return (m, m)
    l = _staircase_length(u)
    if l is not None:
        return (l**n, (n + 1) * l**n)
    # u^0, ..., u^n are distinct divisors; the upper bound is submultiplicativity
    return (n + 1, tau(u) ** n)


def tau0_estimate(u: Element, N: int) -> Tau0Estimate:
    table = tau_powers(u, N)
    samples = [Tau0Sample(n, t, nth_root(t, n)) for n, t in table]
    brackets = {n: power_bracket(u, n) for n, _ in table}
    return Tau0Estimate(samples, samples[-1].root, brackets)


def complexity_C(u: Element, N: int) -> Decimal:
    """tau(u^N)^(1/N) / tau(u)."""
    est = tau0_estimate(u, N)
    return DECIMAL_CONTEXT.divide(est.final_estimate, Decimal(tau(u)))


def subadditivity_check(u: Element, N: int) -> SubadditivityReport:
    """Check tau(u^(m+n)) <= tau(u^m) tau(u^n) for all m + n <= N."""
    if N < 2:
        raise DomainError("N must be at least 2")
    t = dict(tau_powers(u, N))
    report = SubadditivityReport()
    for m in range(1, N):
        for n in range(1, N - m + 1):
            report.checked += 1
            if t[m + n] > t[m] * t[n]:
                report.violations.append((m, n))
    return report
