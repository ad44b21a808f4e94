"""Thompson's group F as reduced tree pairs.

An element is a pair top/bottom of binary trees with equal leaf counts,
stored reduced: no pair of adjacent leaves is a sibling pair in both trees
simultaneously.  Two multiplication algorithms are provided:

  * ``multiply`` stabilises the inner trees with a directed-set join and
    then reduces;
  * ``multiply_rewrite`` runs the stacked-diagram rewrite system: the two
    diagrams are concatenated as a straight-line program of merge/split
    events on numbered strands, "diamonds" (a merge immediately below a
    split of the merged strand, valid only in the group) are removed while
    commuting disjoint events past each other, and the sorted program is
    cut into the resulting tree pair.

A third, independent model — PL homeomorphisms with dyadic breakpoints —
lives in :mod:`wysiwyg.plmaps`; ``to_pl_map`` is a group isomorphism onto
its image and is used as the multiplication oracle in the tests.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import List, Tuple

from .forests import (
    Forest, LEAF, Tree, forest_factorize, graft, left_comb, parse_tree,
    right_comb, serialize_tree, tree_join,
)
from .plmaps import PLMap, compose_pl


def reduce_pair(top: Tree, bottom: Tree) -> Tuple[Tree, Tree]:
    """Cancel opposing carets until none remain.

    The result is independent of the cancellation order (the removals are
    confluent); we take the first common sibling pair each round.
    """
    if top.leaf_count != bottom.leaf_count:
        raise ValueError(
            f"leaf count mismatch: {top.leaf_count} vs {bottom.leaf_count}")
    while True:
        common = set(top.sibling_leaf_pairs()) & set(bottom.sibling_leaf_pairs())
        if not common:
            return top, bottom
        i = min(common)
        top = top.drop_caret(i)
        bottom = bottom.drop_caret(i)


class FElement:
    """A reduced tree pair top/bottom; the unique representative."""

    __slots__ = ("top", "bottom")

    def __init__(self, top: Tree, bottom: Tree):
        self.top, self.bottom = reduce_pair(top, bottom)

    @property
    def leaf_count(self) -> int:
        return self.top.leaf_count

    def is_identity(self) -> bool:
        return self.top.is_leaf

    def __eq__(self, other):
        if not isinstance(other, FElement):
            return NotImplemented
        return self.top == other.top and self.bottom == other.bottom

    def __hash__(self):
        return hash((self.top, self.bottom))

    def __repr__(self):
        return f"FElement({str(self)!r})"

    def __str__(self):
        return f"{serialize_tree(self.top)}/{serialize_tree(self.bottom)}"

    def __mul__(self, other):
        if not isinstance(other, FElement):
            return NotImplemented
        return multiply(self, other)

    def __pow__(self, n: int):
        if n == 0:
            return identity()
        base = self if n > 0 else inverse(self)
        out = base
        for _ in range(abs(n) - 1):
            out = multiply(out, base)
        return out


def identity() -> FElement:
    return FElement(LEAF, LEAF)


def inverse(g: FElement) -> FElement:
    return FElement(g.bottom, g.top)


def multiply(g: FElement, h: FElement) -> FElement:
    """Group product g*h via stabilisation: r/s * s/t = r/t."""
    f_b, f_c = tree_join(g.bottom, h.top)
    return FElement(graft(g.top, f_b), graft(h.bottom, f_c))


# ---------------------------------------------------------------------------
# The stacked-diagram rewrite multiplication.

def _split_word(t: Tree) -> List[int]:
    return [i for _, i in forest_factorize(Forest((t,)))]


def _tree_from_split_word(word) -> Tree:
    roots: List[Tree] = [LEAF]
    # Build top-down: replay the splits on a list of pending subtree slots.
    # Easier: build by composing elementary carets via graft.
    t = LEAF
    for k, i in enumerate(word, start=1):
        if not 1 <= i <= k:
            raise ValueError(f"invalid split index {i} at width {k}")
        f = Forest(tuple(Tree(LEAF, LEAF) if j == i else LEAF
                         for j in range(1, k + 1)))
        t = graft(t, f)
    return t


def multiply_rewrite(g: FElement, h: FElement) -> FElement:
    """Group product via the diagrammatic rewrite system.

    The stacked diagram of g over h is the event list, read bottom to top:
    splits of h.bottom, merges of h.top, splits of g.bottom, merges of
    g.top.  A merge of strands (i, i+1) immediately followed by a split of
    the merged strand is a diamond and is deleted; disjoint merge/split
    pairs commute (with index shifts) so every diamond eventually becomes
    adjacent.  When no merge precedes any split, the program is cut into a
    tree pair; remaining opposing carets (bigons, valid in the category as
    well) are cancelled by the reduced-pair constructor.
    """
    events: List[Tuple[str, int]] = []
    events += [("S", i) for i in _split_word(h.bottom)]
    events += [("M", i) for i in reversed(_split_word(h.top))]
    events += [("S", i) for i in _split_word(g.bottom)]
    events += [("M", i) for i in reversed(_split_word(g.top))]

    changed = True
    while changed:
        changed = False
        k = 0
        while k < len(events) - 1:
            (t1, i), (t2, j) = events[k], events[k + 1]
            if t1 == "M" and t2 == "S":
                changed = True
                if j == i:
                    del events[k:k + 2]
                    k = max(k - 1, 0)
                    continue
                if j < i:
                    events[k], events[k + 1] = ("S", j), ("M", i + 1)
                else:
                    events[k], events[k + 1] = ("S", j + 1), ("M", i)
            k += 1

    splits = [i for t, i in events if t == "S"]
    merges = [i for t, i in events if t == "M"]
    bottom = _tree_from_split_word(splits)
    top = _tree_from_split_word(list(reversed(merges)))
    return FElement(top, bottom)


# ---------------------------------------------------------------------------
# Named elements and the shift endomorphism.

def generator_A() -> FElement:
    """The standard generator: left comb over right comb on 3 leaves."""
    return FElement(left_comb(3), right_comb(3))


def sigma(g: FElement) -> FElement:
    """The shift endomorphism: identity on [0,1/2], rescaled g on [1/2,1]."""
    return FElement(Tree(LEAF, g.top), Tree(LEAF, g.bottom))


def generator_B() -> FElement:
    return sigma(generator_A())


def element_D() -> FElement:
    """The element A*B^-1 (= x0*x1^-1): balanced 4-leaf tree over
    (.,((.,.),.)).  Its vacuum coefficient is (d-2)/(d-1), which is the
    property the representation-level identities rely on."""
    top = Tree(Tree(LEAF, LEAF), Tree(LEAF, LEAF))
    bottom = Tree(LEAF, Tree(Tree(LEAF, LEAF), LEAF))
    return FElement(top, bottom)


def power_A(n: int) -> FElement:
    """A^n built directly from combs: n+2 leaves per tree for n >= 1."""
    if n == 0:
        return identity()
    if n < 0:
        return inverse(power_A(-n))
    return FElement(left_comb(n + 2), right_comb(n + 2))


# ---------------------------------------------------------------------------
# PL oracle.

def _leaf_cuts(t: Tree) -> List[Fraction]:
    """The dyadic partition points of [0,1] cut out by the leaves of t."""
    cuts = [Fraction(0)]

    def walk(tree: Tree, lo: Fraction, hi: Fraction):
        if tree.is_leaf:
            cuts.append(hi)
            return
        mid = (lo + hi) / 2
        walk(tree.left, lo, mid)
        walk(tree.right, mid, hi)

    walk(t, Fraction(0), Fraction(1))
    return cuts


def to_pl_map(g: FElement) -> PLMap:
    """The PL homeomorphism sending the k-th bottom interval to the k-th
    top interval affinely."""
    xs = _leaf_cuts(g.bottom)
    ys = _leaf_cuts(g.top)
    return PLMap(list(zip(xs, ys)))


# ---------------------------------------------------------------------------
# Text formats: tree pairs "top/bottom" and generator words "A^2 B^-1".

_NAMED = {"A": generator_A, "B": generator_B, "D": element_D}

_WORD_TOKEN = re.compile(r"([A-Za-z]+)(?:\^(-?\d+))?$")


class ElementParseError(ValueError):
    pass


def parse_element(text: str) -> FElement:
    """Parse either "top/bottom" tree-pair syntax or a word over A, B, D."""
    text = text.strip()
    if "/" in text:
        parts = text.split("/")
        if len(parts) != 2:
            raise ElementParseError(f"expected exactly one '/' in {text!r}")
        try:
            top, bottom = parse_tree(parts[0]), parse_tree(parts[1])
        except ValueError as exc:
            raise ElementParseError(str(exc)) from exc
        if top.leaf_count != bottom.leaf_count:
            raise ElementParseError(
                "tree pair with mismatched leaf counts: "
                f"{top.leaf_count} vs {bottom.leaf_count}")
        return FElement(top, bottom)
    if not text:
        return identity()
    out = identity()
    for tok in text.split():
        m = _WORD_TOKEN.match(tok)
        if not m or m.group(1) not in _NAMED:
            raise ElementParseError(
                f"bad token {tok!r}: expected A, B or D with optional ^exp")
        power = int(m.group(2)) if m.group(2) is not None else 1
        out = multiply(out, _NAMED[m.group(1)]() ** power)
    return out
