import random
from fractions import Fraction

import pytest
from hypothesis import given

from castella.castle import is_castled_free, is_strongly_castlable
from castella.errors import NonInvertibleError
from castella.functions import (
    ArithFn,
    check_castled_invariant,
    check_completely_multiplicative,
    check_multiplicative,
    convolve,
    delta1,
    inverse,
    inverse_right,
    liouville,
    liouville_co,
    liouville_co_fn,
    liouville_fn,
    mu,
    mu_fn,
    one,
    tau_fn,
)
from castella.words import Element, normalize
from conftest import E, elements_st
from oracles import elements_up_to, mu_by_co_inclusion_exclusion, mu_by_inclusion_exclusion

ONE = Element.identity()
SMALL = elements_up_to(4, 5)


def sample_pairs(n=400, seed=1, max_ind=3, max_index=5):
    rng = random.Random(seed)
    rand = lambda: normalize([rng.randint(0, max_index) for _ in range(rng.randint(0, max_ind))])
    return [(rand(), rand()) for _ in range(n)]


def test_convolution_examples():
    tau_conv = convolve(one, one)
    assert tau_conv(E("p0^2 p1 p4")) == 8
    f = ArithFn(lambda u: u.ind ** 2 + 1, "f")
    for u in SMALL[:40]:
        assert convolve(delta1, f)(u) == f(u) == convolve(f, delta1)(u)
    assert convolve(mu_fn, one)(E("p0 p2")) == 0


def test_values_are_exact_rationals():
    g = inverse(ArithFn(lambda u: 3, "three"))
    assert g(ONE) == Fraction(1, 3)
    assert isinstance(g(E("p0")), Fraction)


def test_convolution_is_associative_on_samples():
    f = ArithFn(lambda u: u.ind + 1, "f")
    g = ArithFn(lambda u: sum(u.word) - 2, "g")
    h = ArithFn(lambda u: len(u.runs), "h")
    left, right = convolve(convolve(f, g), h), convolve(f, convolve(g, h))
    for u in elements_up_to(3, 4):
        assert left(u) == right(u)


def test_convolution_is_not_commutative_in_general():
    f = ArithFn(lambda u: u.exponent(0), "f")
    g = ArithFn(lambda u: u.exponent(2), "g")
    assert any(convolve(f, g)(u) != convolve(g, f)(u) for u in elements_up_to(3, 3))


def test_inverse_examples():
    m = inverse(one)
    assert m(ONE) == 1
    assert m(E("p4")) == -1
    assert m(E("p0^2")) == 0
    with pytest.raises(NonInvertibleError):
        inverse(ArithFn(lambda u: 0 if u.is_identity else 1, "z"))


def test_moebius_closed_form_against_inversion():
    left, right = inverse(one), inverse_right(one)
    conv_l, conv_r = convolve(mu_fn, one), convolve(one, mu_fn)
    for u in elements_up_to(4, 6):
        assert mu(u) == left(u) == right(u)
        assert conv_l(u) == delta1(u) == conv_r(u)


@given(elements_st(4, 5))
def test_moebius_inclusion_exclusion(u):
    assert mu(u) == mu_by_inclusion_exclusion(u) == mu_by_co_inclusion_exclusion(u)


def test_left_and_right_inverses_agree():
    f = ArithFn(lambda u: 2 + u.ind - len(u.runs), "f")
    g1, g2 = inverse(f), inverse_right(f)
    for u in elements_up_to(3, 5):
        assert g1(u) == g2(u)
        assert convolve(f, g1)(u) == delta1(u) == convolve(g1, f)(u)


def test_mu_and_liouville_examples():
    assert mu(E("p0 p2")) == 1
    assert mu(ONE) == 1
    assert mu(E("p3")) == -1
    assert mu(E("p3^2")) == 0
    assert liouville(E("p0 p1^2")) == -1
    assert liouville_co(E("p0 p1^2")) == 1


def test_multiplicative_harnesses():
    pairs = sample_pairs()
    assert any(is_castled_free(u, v) for u, v in pairs)
    assert any(is_strongly_castlable(u, v) for u, v in pairs)
    for f in (tau_fn, mu_fn):
        report = check_multiplicative(f, pairs)
        assert report.ok, report.violations[:3]
        assert report.checked > 0
    for f in (liouville_fn, liouville_co_fn):
        report = check_completely_multiplicative(f, pairs)
        assert report.ok, report.violations[:3]
    report = check_castled_invariant(mu_fn, pairs)
    assert report.ok and report.checked + report.skipped == len(pairs)


def test_harness_detects_a_non_invariant_function():
    f = ArithFn(lambda u: sum(u.word), "index_sum")
    report = check_castled_invariant(f, [(E("p2"), E("p0"))])
    assert not report.ok


def test_convolution_of_multiplicative_functions_is_multiplicative():
    pairs = sample_pairs(250, seed=2)
    for f in (convolve(tau_fn, mu_fn), convolve(tau_fn, tau_fn), convolve(mu_fn, liouville_fn)):
        assert check_multiplicative(f, pairs).ok
