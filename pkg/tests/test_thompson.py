"""Thompson's group F as reduced tree pairs.

Claims checked here:
  * reduction yields the unique reduced representative regardless of
    padding;
  * the two multiplication algorithms agree with each other and with the
    PL-homeomorphism oracle on random words;
  * the defining relation x0^-1 x1 x0 = x2 holds (x1 = sigma(x0),
    x2 = sigma^2(x0));
  * sigma is an injective endomorphism;
  * A^n has n+2 leaves per tree and matches iterated multiplication;
  * D = A * B^-1 and its tree pair is the balanced-over-right shape;
  * parse_element round-trips both syntaxes and rejects malformed input.
"""

from __future__ import annotations

import random

import pytest

from wysiwyg.forests import LEAF, Tree, graft, random_forest
from wysiwyg.plmaps import compose_pl
from wysiwyg.thompson import (
    ElementParseError, FElement, element_D, generator_A, generator_B,
    identity, inverse, multiply, multiply_rewrite, parse_element, power_A,
    sigma, to_pl_map,
)


def _random_word(rng, length: int) -> FElement:
    gens = [generator_A(), generator_B(), element_D()]
    out = identity()
    for _ in range(length):
        g = rng.choice(gens)
        if rng.random() < 0.5:
            g = inverse(g)
        out = multiply(out, g)
    return out


def test_reduction_unique_representative():
    rng = random.Random(21)
    for _ in range(100):
        g = _random_word(rng, rng.randint(0, 6))
        f = random_forest(rng, g.leaf_count, g.leaf_count + rng.randint(1, 4))
        padded = FElement(graft(g.top, f), graft(g.bottom, f))
        assert padded == g


def test_multiplication_triple_agreement():
    rng = random.Random(23)
    for _ in range(100):
        g = _random_word(rng, rng.randint(0, 5))
        h = _random_word(rng, rng.randint(0, 5))
        p1 = multiply(g, h)
        p2 = multiply_rewrite(g, h)
        assert p1 == p2
        assert to_pl_map(p1) == compose_pl(to_pl_map(g), to_pl_map(h))


def test_group_axioms():
    rng = random.Random(29)
    e = identity()
    for _ in range(30):
        g = _random_word(rng, rng.randint(1, 5))
        assert multiply(g, inverse(g)) == e
        assert multiply(inverse(g), g) == e
        assert multiply(g, e) == g and multiply(e, g) == g


def test_defining_relation():
    x0 = generator_A()
    x1 = sigma(x0)
    x2 = sigma(x1)
    lhs = multiply(inverse(x0), multiply(x1, x0))
    assert lhs == x2


def test_sigma_is_endomorphism():
    rng = random.Random(31)
    for _ in range(50):
        g = _random_word(rng, rng.randint(0, 4))
        h = _random_word(rng, rng.randint(0, 4))
        assert sigma(multiply(g, h)) == multiply(sigma(g), sigma(h))
        if sigma(g) == sigma(h):
            assert g == h


def test_power_A_matches_iteration():
    a = generator_A()
    acc = identity()
    for n in range(7):
        assert power_A(n) == acc
        assert power_A(-n) == inverse(acc)
        if n >= 1:
            assert power_A(n).leaf_count == n + 2
        acc = multiply(acc, a)


def test_element_D_is_A_times_B_inverse():
    d = element_D()
    assert d == multiply(generator_A(), inverse(generator_B()))
    assert d.top == Tree(Tree(LEAF, LEAF), Tree(LEAF, LEAF))
    assert d.bottom == Tree(LEAF, Tree(Tree(LEAF, LEAF), LEAF))


def test_pl_oracle_properties():
    g = _random_word(random.Random(37), 6)
    m = to_pl_map(g)
    assert m.points[0] == (0, 0)
    assert m.points[-1] == (1, 1)
    assert to_pl_map(inverse(g)) == m.inverse()


def test_parse_element_round_trip():
    rng = random.Random(41)
    for _ in range(30):
        g = _random_word(rng, rng.randint(0, 5))
        assert parse_element(str(g)) == g
    assert parse_element("A^2 B^-1") == multiply(
        power_A(2), inverse(generator_B()))
    assert parse_element("D") == element_D()
    assert parse_element("") == identity()


def test_parse_element_errors():
    for bad in ["C", "A^", "A/B/C", "(.,.)/.", "(.,.)/"]:
        with pytest.raises(ElementParseError):
            parse_element(bad)
