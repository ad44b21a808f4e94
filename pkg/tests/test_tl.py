"""The cabled Temperley-Lieb category.

Claims checked here:
  * the closed cabled loop (trace of p2) evaluates to d = delta^2 - 1;
  * p2 is an idempotent killed by the cup: p2 o p2 = p2, cap o p2 = 0;
  * adjoint(Y) o Y = lambda p2 with lambda = (d-1)/delta, term by term,
    and the raw theta network closes to lambda d;
  * normalized tree morphisms are isometries: <Phi x, Phi y> = <x, y>
    once lambda^(1/2) per caret is accounted for;
  * composition is associative and tensor is functorial on samples;
  * non-crossing pairings are counted by Catalan numbers.
"""

from __future__ import annotations

import random

import pytest

from wysiwyg.forests import left_comb, random_tree
from wysiwyg.scalars import EXACT, NumericRing, RationalFunction
from wysiwyg.tl import (
    adjoint_vertex, all_pairings, cap, close_scalar, cup, inner_product,
    p2, raw_vertex, tl_compose, tree_to_morphism, vertex_norm_rational,
)

D = RationalFunction.d()
LAM = RationalFunction.vertex_norm()


def test_closed_cabled_loop_is_d():
    assert close_scalar(p2(EXACT)).as_rational() == D


def test_single_strand_loop_is_delta():
    val = tl_compose(cup(EXACT), cap(EXACT)).evaluate_scalar()
    assert val.as_rational() == RationalFunction.delta()


def test_p2_idempotent_and_kills_cup():
    proj = p2(EXACT)
    assert tl_compose(proj, proj) == proj
    assert tl_compose(cup(EXACT), proj).is_zero()
    assert tl_compose(proj, cap(EXACT)).is_zero()


def test_vertex_norm():
    assert vertex_norm_rational() == LAM
    assert LAM == (D - 1) / RationalFunction.delta()
    ring = NumericRing(2.0, warn=False)
    lam_num = LAM.evaluate(2.0)
    ref = p2(ring)
    got = tl_compose(raw_vertex(ring), adjoint_vertex(ring))
    for match, c in got.terms.items():
        assert c == pytest.approx(lam_num * ref.terms[match])


def test_theta_network():
    yy = tl_compose(raw_vertex(EXACT), adjoint_vertex(EXACT))
    assert close_scalar(yy).as_rational() == LAM * D
    assert yy.vertex_count == 2


def test_tree_morphisms_are_isometries():
    rng = random.Random(17)
    norm = inner_product(p2(EXACT), p2(EXACT))
    assert norm == D
    for _ in range(20):
        t = random_tree(rng, rng.randint(2, 5))
        phi = tree_to_morphism(EXACT, t)
        assert phi.vertex_count == t.leaf_count - 1
        # inner_product divides by lambda^(vertex pairs), so the grafting
        # map is an isometry on the nose.
        assert inner_product(phi, phi) == norm
    phi = tree_to_morphism(EXACT, left_comb(4))
    assert inner_product(phi, phi) == norm


def test_compose_associative_tensor_functorial():
    r = EXACT
    a, b, c = p2(r), raw_vertex(r), adjoint_vertex(r)
    assert tl_compose(tl_compose(a, b), c) == tl_compose(a, tl_compose(b, c))
    # (f o g) tensor (h o k) = (f tensor h) o (g tensor k).
    f, g = raw_vertex(r), p2(r)
    h, k = adjoint_vertex(r), raw_vertex(r)
    lhs = tl_compose(g, f).tensor(tl_compose(k, h))
    rhs = tl_compose(g.tensor(k), f.tensor(h))
    assert lhs == rhs


def test_pairing_enumeration_is_catalan():
    assert sum(1 for _ in all_pairings(0, 2)) == 1
    assert sum(1 for _ in all_pairings(0, 4)) == 2
    assert sum(1 for _ in all_pairings(0, 6)) == 5
    assert sum(1 for _ in all_pairings(0, 8)) == 14
    assert sum(1 for _ in all_pairings(2, 4)) == 5
