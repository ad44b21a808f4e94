"""Binary planar trees and forests as a combinatorial category.

A tree is either a leaf or a caret with an ordered pair of subtrees; a
forest is an ordered list of trees and represents a morphism m -> n where
m is the number of roots and n the total number of leaves.  Composition
grafts the k-th tree of the upper forest onto the k-th leaf of the lower
one.  Every forest factors as a composition of elementary forests (a
single caret on one of the roots), and trees form a directed set under
refinement whose joins are computed by structural recursion.

Leaves, roots and strand indices are numbered left to right starting at 1.

Text grammar:  tree := "." | "(" tree "," tree ")",  forest := tree (";" tree)*
"""

from __future__ import annotations

from typing import Iterator, Optional


class TreeParseError(ValueError):
    """Malformed tree/forest text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class Tree:
    """A rooted binary planar tree; immutable, compared structurally."""

    __slots__ = ("left", "right", "leaf_count", "_hash")

    def __init__(self, left: Optional["Tree"] = None,
                 right: Optional["Tree"] = None):
        if (left is None) != (right is None):
            raise ValueError("a caret needs both children")
        self.left = left
        self.right = right
        self.leaf_count = 1 if left is None else left.leaf_count + right.leaf_count
        self._hash = None

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Tree):
            return NotImplemented
        if self.is_leaf or other.is_leaf:
            return self.is_leaf and other.is_leaf
        return (self.leaf_count == other.leaf_count
                and self.left == other.left and self.right == other.right)

    def __hash__(self):
        if self._hash is None:
            if self.is_leaf:
                self._hash = hash(("leaf",))
            else:
                self._hash = hash((hash(self.left), hash(self.right)))
        return self._hash

    def __repr__(self):
        return f"Tree({serialize_tree(self)!r})"

    def __str__(self):
        return serialize_tree(self)

    def mirror(self) -> "Tree":
        if self.is_leaf:
            return self
        return Tree(self.right.mirror(), self.left.mirror())

    def subtrees(self) -> Iterator["Tree"]:
        """All subtrees, root first, left before right."""
        yield self
        if not self.is_leaf:
            yield from self.left.subtrees()
            yield from self.right.subtrees()

    def sibling_leaf_pairs(self) -> list:
        """Indices i such that leaves i and i+1 are children of one caret."""
        out = []

        def walk(t: Tree, offset: int):
            if t.is_leaf:
                return
            if t.left.is_leaf and t.right.is_leaf:
                out.append(offset + 1)
            walk(t.left, offset)
            walk(t.right, offset + t.left.leaf_count)

        walk(self, 0)
        return out

    def drop_caret(self, i: int) -> "Tree":
        """Replace the caret whose leaves are i, i+1 by a single leaf."""

        def walk(t: Tree, offset: int) -> Tree:
            if t.is_leaf:
                raise ValueError(f"no caret at leaves {i}, {i + 1}")
            if (t.left.is_leaf and t.right.is_leaf and offset + 1 == i):
                return LEAF
            if i <= offset + t.left.leaf_count - 1:
                return Tree(walk(t.left, offset), t.right)
            return Tree(t.left, walk(t.right, offset + t.left.leaf_count))

        if i < 1 or i >= self.leaf_count:
            raise ValueError(f"leaf pair index {i} out of range")
        return walk(self, 0)


LEAF = Tree()


def caret(left: Tree, right: Tree) -> Tree:
    return Tree(left, right)


def left_comb(n: int) -> Tree:
    """The n-leaf tree ((((.,.),.),.)...)."""
    t = LEAF
    for _ in range(n - 1):
        t = Tree(t, LEAF)
    return t


def right_comb(n: int) -> Tree:
    t = LEAF
    for _ in range(n - 1):
        t = Tree(LEAF, t)
    return t


def full_tree(m: int) -> Tree:
    """The full bifurcating tree with 2^m leaves."""
    t = LEAF
    for _ in range(m):
        t = Tree(t, t)
    return t


class Forest:
    """An ordered list of trees: a morphism roots -> leaves."""

    __slots__ = ("trees",)

    def __init__(self, trees):
        self.trees = tuple(trees)
        if not self.trees:
            raise ValueError("a forest needs at least one root")

    @property
    def roots(self) -> int:
        return len(self.trees)

    @property
    def leaves(self) -> int:
        return sum(t.leaf_count for t in self.trees)

    def is_identity(self) -> bool:
        return all(t.is_leaf for t in self.trees)

    def __eq__(self, other):
        if not isinstance(other, Forest):
            return NotImplemented
        return self.trees == other.trees

    def __hash__(self):
        return hash(self.trees)

    def __repr__(self):
        return f"Forest({serialize_forest(self)!r})"

    def __str__(self):
        return serialize_forest(self)

    def mirror(self) -> "Forest":
        return Forest(tuple(t.mirror() for t in reversed(self.trees)))


def identity_forest(m: int) -> Forest:
    return Forest((LEAF,) * m)


class ArityMismatch(ValueError):
    pass


def graft(tree: Tree, forest: Forest) -> Tree:
    """Graft the k-th tree of forest onto the k-th leaf of tree."""
    if forest.roots != tree.leaf_count:
        raise ArityMismatch(
            f"tree has {tree.leaf_count} leaves, forest has {forest.roots} roots")
    it = iter(forest.trees)

    def walk(t: Tree) -> Tree:
        if t.is_leaf:
            return next(it)
        left = walk(t.left)
        return Tree(left, walk(t.right))

    return walk(tree)


def compose_forests(lower: Forest, upper: Forest) -> Forest:
    """Stack upper on top of lower (graft leafwise)."""
    if lower.leaves != upper.roots:
        raise ArityMismatch(
            f"lower has {lower.leaves} leaves, upper has {upper.roots} roots")
    out = []
    pos = 0
    for t in lower.trees:
        k = t.leaf_count
        out.append(graft(t, Forest(upper.trees[pos:pos + k])))
        pos += k
    return Forest(out)


def elementary_forest(n: int, i: int) -> Forest:
    """n leaves-as-roots, with a single caret on root i: morphism n -> n+1."""
    if not 1 <= i <= n:
        raise ValueError(f"caret index {i} out of range 1..{n}")
    return Forest(tuple(Tree(LEAF, LEAF) if k == i else LEAF
                        for k in range(1, n + 1)))


def forest_factorize(f: Forest) -> list:
    """Factor f as a word of elementary forests, composed in list order.

    The word [(n_1, i_1), (n_2, i_2), ...] satisfies
    compose(...compose(elementary(n_1, i_1), elementary(n_2, i_2))...) = f.
    Carets are emitted root first, left subtree before right, which yields
    the normal order with non-decreasing caret indices.
    """
    word = []
    n = f.roots

    def expand(t: Tree, pos: int):
        nonlocal n
        if t.is_leaf:
            return
        word.append((n, pos))
        n += 1
        expand(t.left, pos)
        expand(t.right, pos + t.left.leaf_count)

    pos = 1
    for t in f.trees:
        expand(t, pos)
        pos += t.leaf_count
    return word


def forest_from_word(roots: int, word) -> Forest:
    f = identity_forest(roots)
    for n, i in word:
        f = compose_forests(f, elementary_forest(n, i))
    return f


def tree_join(s: Tree, t: Tree):
    """Minimal forests (f, g) with graft(s, f) = graft(t, g) = s v t."""
    fs: list = []
    gs: list = []

    def walk(a: Tree, b: Tree) -> Tree:
        if a.is_leaf and b.is_leaf:
            fs.append(LEAF)
            gs.append(LEAF)
            return LEAF
        if a.is_leaf:
            fs.append(b)
            gs.extend([LEAF] * b.leaf_count)
            return b
        if b.is_leaf:
            fs.extend([LEAF] * a.leaf_count)
            gs.append(a)
            return a
        left = walk(a.left, b.left)
        right = walk(a.right, b.right)
        return Tree(left, right)

    walk(s, t)
    return Forest(fs), Forest(gs)


def tree_join_tree(s: Tree, t: Tree) -> Tree:
    f, _ = tree_join(s, t)
    return graft(s, f)


def refines(t: Tree, u: Tree) -> bool:
    """True if u is obtainable from t by grafting a forest (t <= u)."""
    if t.is_leaf:
        return True
    if u.is_leaf:
        return False
    return refines(t.left, u.left) and refines(t.right, u.right)


# ---------------------------------------------------------------------------
# Text format.

def serialize_tree(t: Tree) -> str:
    if t.is_leaf:
        return "."
    return f"({serialize_tree(t.left)},{serialize_tree(t.right)})"


def serialize_forest(f: Forest) -> str:
    return ";".join(serialize_tree(t) for t in f.trees)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def expect(self, ch: str):
        self.skip_ws()
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            raise TreeParseError(f"expected {ch!r}", self.pos)
        self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def tree(self) -> Tree:
        c = self.peek()
        if c == ".":
            self.pos += 1
            return LEAF
        if c == "(":
            self.pos += 1
            left = self.tree()
            self.expect(",")
            right = self.tree()
            self.expect(")")
            return Tree(left, right)
        raise TreeParseError("expected '.' or '('", self.pos)

    def end(self):
        self.skip_ws()
        if self.pos != len(self.text):
            raise TreeParseError("trailing input", self.pos)


def parse_tree(text: str) -> Tree:
    p = _Parser(text)
    t = p.tree()
    p.end()
    return t


def parse_forest(text: str) -> Forest:
    p = _Parser(text)
    trees = [p.tree()]
    while p.peek() == ";":
        p.pos += 1
        trees.append(p.tree())
    p.end()
    return Forest(trees)


def all_trees(n: int) -> Iterator[Tree]:
    """All binary trees with n leaves (Catalan enumeration)."""
    if n == 1:
        yield LEAF
        return
    for k in range(1, n):
        for l in all_trees(k):
            for r in all_trees(n - k):
                yield Tree(l, r)


def random_tree(rng, n: int) -> Tree:
    """A uniformly shaped random binary tree with n leaves."""
    if n == 1:
        return LEAF
    k = rng.randint(1, n - 1)
    return Tree(random_tree(rng, k), random_tree(rng, n - k))


def random_forest(rng, roots: int, leaves: int) -> Forest:
    """A random forest with the given root and leaf counts."""
    if leaves < roots:
        raise ValueError("a forest needs at least one leaf per root")
    sizes = [1] * roots
    for _ in range(leaves - roots):
        sizes[rng.randrange(roots)] += 1
    return Forest(tuple(random_tree(rng, s) for s in sizes))
