"""Trees and forests.

Claims checked here:
  * serialize/parse round-trips every tree up to 6 leaves;
  * graft is associative with forest composition;
  * tree_join produces a common refinement, minimal on comb examples;
  * forest factorization into elementary forests recomposes exactly;
  * the Catalan numbers count trees by leaves.
"""

from __future__ import annotations

import random

import pytest

from wysiwyg.forests import (
    ArityMismatch, Forest, LEAF, Tree, all_trees, compose_forests,
    elementary_forest, forest_factorize, forest_from_word, full_tree, graft,
    left_comb, parse_tree, random_forest, random_tree, right_comb,
    serialize_tree, tree_join,
)


def test_catalan_counts():
    counts = [sum(1 for _ in all_trees(n)) for n in range(1, 7)]
    assert counts == [1, 1, 2, 5, 14, 42]


def test_serialize_parse_round_trip():
    for n in range(1, 7):
        for t in all_trees(n):
            assert parse_tree(serialize_tree(t)) == t


def test_parse_rejects_garbage():
    for bad in ["", "(.,.", "(.,.))", "x", "(.,.,.)"]:
        with pytest.raises(ValueError):
            parse_tree(bad)


def test_combs_and_full_tree():
    assert left_comb(3) == Tree(Tree(LEAF, LEAF), LEAF)
    assert right_comb(3) == Tree(LEAF, Tree(LEAF, LEAF))
    assert full_tree(2).leaf_count == 4
    assert full_tree(2).left == full_tree(2).right == Tree(LEAF, LEAF)


def test_graft_composes_with_forest_composition():
    rng = random.Random(7)
    for _ in range(50):
        t = random_tree(rng, rng.randint(1, 6))
        f = random_forest(rng, t.leaf_count, t.leaf_count + rng.randint(0, 4))
        g = random_forest(rng, f.leaves, f.leaves + rng.randint(0, 4))
        assert graft(graft(t, f), g) == graft(t, compose_forests(f, g))


def test_graft_arity_mismatch():
    with pytest.raises(ArityMismatch):
        graft(left_comb(3), Forest((LEAF, LEAF)))


def test_tree_join_is_common_refinement():
    rng = random.Random(11)
    for _ in range(50):
        a = random_tree(rng, rng.randint(1, 7))
        b = random_tree(rng, rng.randint(1, 7))
        fa, fb = tree_join(a, b)
        assert graft(a, fa) == graft(b, fb)


def test_tree_join_of_equal_trees_is_trivial():
    t = full_tree(2)
    fa, fb = tree_join(t, t)
    assert graft(t, fa) == t and graft(t, fb) == t


def test_forest_factorize_recomposes():
    rng = random.Random(13)
    for _ in range(50):
        f = random_forest(rng, rng.randint(1, 4), rng.randint(4, 9))
        word = forest_factorize(f)
        assert forest_from_word(f.roots, word) == f


def test_elementary_forest_shape():
    f = elementary_forest(4, 2)
    assert f.roots == 4 and f.leaves == 5
    assert f.trees[1] == Tree(LEAF, LEAF)
