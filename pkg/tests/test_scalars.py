"""Exact scalar arithmetic.

Claims checked here:
  * Laurent polynomials form a commutative ring and evaluate correctly;
  * rational functions reduce to lowest terms with a positive leading
    denominator coefficient, and field axioms hold on random samples;
  * str() of a rational function is the documented stable format;
  * exact evaluation at a rational delta matches float evaluation;
  * the admissible delta list is 2cos(pi/n) ascending toward 2.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

import pytest

from wysiwyg.scalars import (
    Laurent, RationalFunction, admissible_deltas, is_admissible_delta,
    poly_gcd,
)


def _random_rational(rng) -> RationalFunction:
    num = [rng.randint(-4, 4) for _ in range(rng.randint(1, 4))]
    den = []
    while not any(den):
        den = [rng.randint(-4, 4) for _ in range(rng.randint(1, 4))]
    if not any(num):
        num = [1]
    return RationalFunction(tuple(num), tuple(den))


def test_laurent_ring_axioms():
    rng = random.Random(3)
    for _ in range(30):
        a = Laurent(rng.randint(-3, 3), [rng.randint(-5, 5) for _ in range(3)])
        b = Laurent(rng.randint(-3, 3), [rng.randint(-5, 5) for _ in range(3)])
        c = Laurent(rng.randint(-3, 3), [rng.randint(-5, 5) for _ in range(3)])
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        x = 1.37
        assert (a * b).evaluate(x) == pytest.approx(
            a.evaluate(x) * b.evaluate(x))


def test_laurent_delta_powers():
    one = Laurent.from_int(1)
    assert one.times_delta_power(3).evaluate(2.0) == 8.0
    assert one.times_delta_power(-2).evaluate(2.0) == 0.25


def test_rational_reduction():
    # (delta^2 - 1)/(delta - 1) = delta + 1 after reduction.
    r = RationalFunction((-1, 0, 1), (-1, 1))
    assert r == RationalFunction((1, 1))
    assert str(r) == "δ+1"


def test_rational_field_axioms():
    rng = random.Random(5)
    for _ in range(30):
        a, b, c = (_random_rational(rng) for _ in range(3))
        assert a + b == b + a
        assert a * (b + c) == a * b + a * c
        if not b.is_zero():
            assert (a / b) * b == a
        assert a - a == RationalFunction.from_int(0)


def test_named_constants():
    d = RationalFunction.d()
    delta = RationalFunction.delta()
    assert d == delta * delta - 1
    lam = RationalFunction.vertex_norm()
    assert lam * delta == d - 1


def test_str_format_is_stable():
    c = (RationalFunction.d() - 2) / (RationalFunction.d() - 1)
    assert str(c) == "(δ^2-3)/(δ^2-2)"
    assert str(RationalFunction.from_int(1)) == "1"
    assert str(RationalFunction.from_int(-3)) == "-3"


def test_exact_and_float_evaluation_agree():
    rng = random.Random(9)
    for _ in range(20):
        r = _random_rational(rng)
        q = Fraction(7, 3)
        if abs(r.evaluate(float(q))) > 1e6:
            continue  # near a pole; float comparison meaningless
        assert r.evaluate(float(q)) == pytest.approx(
            float(r.evaluate_exact(q)), rel=1e-9)


def test_poly_gcd_of_known_factors():
    # gcd(x^2-1, x^2-2x+1) = x-1 up to sign/scale.
    g = poly_gcd((-1, 0, 1), (1, -2, 1))
    assert [abs(c) for c in g] == [1, 1]


def test_admissible_deltas():
    ds = admissible_deltas(10)
    assert ds == sorted(ds)
    assert ds[0] == pytest.approx(2 * math.cos(math.pi / 4))
    assert is_admissible_delta(2 * math.cos(math.pi / 7))
    assert is_admissible_delta(2.5)
    assert not is_admissible_delta(1.9)
