"""Frontier-sweep evaluation of closed stabilized pairings.

The naive route to an inner product builds the full morphism of each tree
and composes them once at the end; for comb-shaped trees with ~20 leaves
the intermediate morphisms are far too large.  This module evaluates the
same closed diagram by sweeping it with a narrow frontier: bottom-tree
carets are expanded one split at a time (depth-first) and top-tree carets
are contracted eagerly as soon as both of their children are complete.
For the comb-against-comb diagrams produced by powers of A the frontier
never exceeds a few cables regardless of the exponent.

The closed diagram is ``adjoint(upper o Phi(tf)) o (lower o Phi(bf))``
where lower/upper are small seed vectors over the trees being refined and
bf/tf are the stabilizing forests produced by a directed-set join.  A
dry-run width simulation decides whether the diagram or its mirror image
is cheaper; both give the same scalar (planar reflection).
"""

from __future__ import annotations

from typing import Dict, List, Tuple

from . import config
from .forests import ArityMismatch, Forest, Tree
from .tl import (
    TLMor, adjoint_vertex, apply_block, close_scalar, raw_vertex, tl_compose,
)

Interval = Tuple[int, int]


def _merge_table(tf: Forest) -> Dict[Tuple[Interval, Interval], Interval]:
    """Map (left child interval, right child interval) -> parent interval
    for every caret of the top forest, in global leaf coordinates."""
    table: Dict[Tuple[Interval, Interval], Interval] = {}
    offset = 0

    def walk(t: Tree, lo: int) -> None:
        if t.is_leaf:
            return
        mid = lo + t.left.leaf_count
        hi = lo + t.leaf_count
        table[((lo, mid), (mid, hi))] = (lo, hi)
        walk(t.left, lo)
        walk(t.right, mid)

    for t in tf.trees:
        walk(t, offset)
        offset += t.leaf_count
    return table


def _initial_items(bf: Forest) -> List[Tuple[str, object, int]]:
    items: List[Tuple[str, object, int]] = []
    offset = 0
    for t in bf.trees:
        items.append(("split", t, offset))
        offset += t.leaf_count
    return items


def _sweep_plan(bf: Forest, table) -> Tuple[List[Tuple[str, int]], int]:
    """Simulate the sweep without diagram arithmetic.

    Returns the operation list — ("V", k): raw vertex at cable k,
    ("M", k): adjoint vertex at cables k, k+1 — and the peak frontier
    width in cables.
    """
    items = _initial_items(bf)
    # Completed items are ("up", interval, lo); leaves complete on sight.
    for k, (kind, t, lo) in enumerate(items):
        if kind == "split" and t.is_leaf:
            items[k] = ("up", (lo, lo + 1), lo)
    ops: List[Tuple[str, int]] = []
    width = len(items)

    def merge_pass() -> None:
        nonlocal width
        changed = True
        while changed:
            changed = False
            for k in range(len(items) - 1):
                a, b = items[k], items[k + 1]
                if a[0] == "up" and b[0] == "up" and (a[1], b[1]) in table:
                    ops.append(("M", k))
                    items[k:k + 2] = [("up", table[(a[1], b[1])], a[1][0])]
                    changed = True
                    break

    merge_pass()
    while True:
        k = next((i for i, it in enumerate(items) if it[0] == "split"), None)
        if k is None:
            break
        _, t, lo = items[k]
        ops.append(("V", k))
        mid = lo + t.left.leaf_count
        new = []
        for sub, slo in ((t.left, lo), (t.right, mid)):
            if sub.is_leaf:
                new.append(("up", (slo, slo + 1), slo))
            else:
                new.append(("split", sub, slo))
        items[k:k + 1] = new
        width = max(width, len(items))
        merge_pass()
    return ops, width


def _mirror_forest(f: Forest) -> Forest:
    return Forest(tuple(t.mirror() for t in reversed(f.trees)))


def staged_pairing_raw(lower: TLMor, bf: Forest, upper: TLMor, tf: Forest):
    """Raw ring value of <Phi(bf) lower, Phi(tf) upper> and total vertex
    count; no lambda or d normalization is applied.

    lower/upper are seed vectors of type 0 -> 2a / 0 -> 2b (or 2 -> 2a /
    2 -> 2b for through-strand vectors); bf: a -> m and tf: b -> m refine
    them to a common tree with m leaves.
    """
    if lower.ring is not upper.ring:
        raise ValueError("mixed coefficient rings")
    if lower.dst != 2 * bf.roots or upper.dst != 2 * tf.roots:
        raise ArityMismatch("seed vector arity does not match its forest")
    if bf.leaves != tf.leaves:
        raise ArityMismatch("stabilizing forests disagree on leaf count")
    if lower.src != upper.src:
        raise ArityMismatch("pairing vectors of different source arity")

    plans = []
    for mirrored in (False, True):
        b = _mirror_forest(bf) if mirrored else bf
        t = _mirror_forest(tf) if mirrored else tf
        ops, width = _sweep_plan(b, _merge_table(t))
        plans.append((width, mirrored, b, t, ops))
    width, mirrored, bf, tf, ops = min(plans, key=lambda p: p[0])
    cap = config.max_tree_leaves()
    if width > cap:
        raise config.ResourceCapError(
            f"sweep frontier width {width} exceeds cap {cap}", width)
    if mirrored:
        lower, upper = lower.mirror(), upper.mirror()

    ring = lower.ring
    state = lower
    peak = state.term_count()
    for op, k in ops:
        block = raw_vertex(ring) if op == "V" else adjoint_vertex(ring)
        state = apply_block(state, 2 * k, block)
        peak = max(peak, state.term_count())
    final = tl_compose(state, upper.adjoint())
    return close_scalar(final), final.vertex_count, peak
