"""Limit vectors and matrix coefficients.

Claims checked here:
  * the vacuum vectors are unit: <Psi, Psi> = <Omega, Omega> = 1, over
    any tree;
  * stabilizing a vector along a forest does not change inner products;
  * the action is unitary on samples: <pi(g) u, pi(g) v> = <u, v>;
  * the staged fast path <pi(g) Psi, Psi> = coeff(psi, g) agrees with the
    materialized stabilize-then-pair route on random elements;
  * coeff is invariant under left and right translation by A in psi mode
    (Psi is A-fixed);
  * the psi coefficient of sigma(g) equals the omega coefficient of g
    (the closed diagrams are isotopic);
  * coeff(psi, D) = (d-2)/(d-1): 0.5 at delta = 2, 0 at delta = sqrt 3;
  * Gram matrices are symmetric with coeff(g^-1) = coeff(g).
"""

from __future__ import annotations

import random

import pytest

from wysiwyg.forests import full_tree, random_forest, right_comb
from wysiwyg.rep import (
    act, an_coefficient, coeff, gram, inner, pair_with_element, vacuum,
)
from wysiwyg.scalars import EXACT, RationalFunction
from wysiwyg.thompson import (
    element_D, generator_A, generator_B, identity, inverse, multiply,
    power_A, sigma,
)

ONE = RationalFunction.from_int(1)


def _random_word(rng, length: int):
    gens = [generator_A(), generator_B(), element_D()]
    out = identity()
    for _ in range(length):
        g = rng.choice(gens)
        if rng.random() < 0.5:
            g = inverse(g)
        out = multiply(out, g)
    return out


def test_vacuum_vectors_are_unit():
    for tree in (full_tree(1), full_tree(2), right_comb(5)):
        for mode in ("psi", "omega"):
            if mode == "psi" and tree.is_leaf:
                continue
            v = vacuum(EXACT, mode, tree)
            assert inner(v, v) == ONE


def test_stabilization_preserves_inner_products():
    rng = random.Random(43)
    xi = act(element_D(), vacuum(EXACT, "psi", full_tree(2)))
    eta = act(generator_B(), vacuum(EXACT, "psi", full_tree(2)))
    base = inner(xi, eta)
    for _ in range(10):
        f = random_forest(rng, xi.tree.leaf_count,
                          xi.tree.leaf_count + rng.randint(1, 3))
        assert inner(xi.stabilize(f), eta) == base
    g = random_forest(rng, eta.tree.leaf_count, eta.tree.leaf_count + 2)
    assert inner(xi, eta.stabilize(g)) == base


def test_action_is_unitary():
    rng = random.Random(47)
    xi = vacuum(EXACT, "psi", full_tree(2))
    eta = act(element_D(), xi)
    base = inner(xi, eta)
    for _ in range(10):
        g = _random_word(rng, rng.randint(1, 4))
        assert inner(act(g, xi), act(g, eta)) == base


def test_fast_path_agrees_with_materialized_pairing():
    rng = random.Random(53)
    for mode in ("psi", "omega"):
        xi = vacuum(EXACT, mode, full_tree(2))
        for _ in range(25):
            g = _random_word(rng, rng.randint(0, 4))
            assert pair_with_element(g, xi, xi) == inner(act(g, xi), xi)
            assert pair_with_element(g, xi, xi) == coeff(EXACT, mode, g)


def test_translation_invariance_in_psi_mode():
    rng = random.Random(59)
    a = generator_A()
    for _ in range(15):
        g = _random_word(rng, rng.randint(0, 4))
        c = coeff(EXACT, "psi", g)
        assert coeff(EXACT, "psi", multiply(a, g)) == c
        assert coeff(EXACT, "psi", multiply(g, a)) == c


def test_sigma_turns_omega_into_psi():
    rng = random.Random(61)
    for _ in range(15):
        g = _random_word(rng, rng.randint(1, 4))
        assert coeff(EXACT, "psi", sigma(g)) == coeff(EXACT, "omega", g)


def test_d_coefficient_values():
    c = coeff(EXACT, "psi", element_D())
    d = RationalFunction.d()
    assert c == (d - 2) / (d - 1)
    assert c.evaluate(2.0) == pytest.approx(0.5)
    assert c.evaluate(3 ** 0.5) == pytest.approx(0.0, abs=1e-12)


def test_an_coefficients():
    for n in range(1, 5):
        assert an_coefficient(EXACT, "psi", n) == ONE
    c = coeff(EXACT, "psi", element_D())
    assert an_coefficient(EXACT, "omega", 1) == c
    assert an_coefficient(EXACT, "omega", 2) == c * c


def test_gram_symmetry():
    elements = [identity(), generator_A(), element_D()]
    for mode in ("psi", "omega"):
        m = gram(EXACT, mode, elements)
        for i in range(3):
            assert m[i][i] == ONE
            for j in range(3):
                assert m[i][j] == m[j][i]
