"""Independent brute-force evaluator for closed planar trivalent graphs.

This is the test oracle for the diagram engine: it never touches TLMor.
A closed graph is given as vertices (cyclically ordered tuples of
half-edge ids, counterclockwise) and edges (unordered pairs of half-edge
ids).  Every edge is a doubled strand carrying the projector
p2 = id - (1/delta)e; the evaluator expands all projectors (2^E terms),
counts closed loops in each resulting curve configuration with a
union-find, and sums delta^loops * (-1/delta)^(#e-insertions).

Vertices of degree 2 are allowed so that a bare closed loop is
expressible.  The expansion is exponential by design; a size limit keeps
it honest.
"""

from __future__ import annotations

from itertools import product
from typing import Dict, List, Sequence, Tuple

from .forests import Tree
from .scalars import Laurent
from .thompson import FElement

MAX_ORACLE_EDGES = 14


class TrivalentGraph:
    """Closed planar graph: vertices are ccw tuples of half-edge ids."""

    def __init__(self, vertices: Sequence[tuple], edges: Sequence[tuple]):
        self.vertices = [tuple(v) for v in vertices]
        self.edges = [tuple(e) for e in edges]
        halves = [h for v in self.vertices for h in v]
        if sorted(halves) != sorted(h for e in self.edges for h in e):
            raise ValueError("half-edges of vertices and edges disagree")
        if len(set(halves)) != len(halves):
            raise ValueError("duplicate half-edge id")
        if any(len(v) not in (2, 3) for v in self.vertices):
            raise ValueError("only degree 2 and 3 vertices are supported")

    @property
    def vertex_count(self) -> int:
        return sum(1 for v in self.vertices if len(v) == 3)

    @property
    def edge_count(self) -> int:
        return len(self.edges)


class _UnionFind:
    def __init__(self):
        self.parent: Dict = {}

    def find(self, x):
        p = self.parent.setdefault(x, x)
        if p != x:
            p = self.parent[x] = self.find(p)
        return p

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def brute_force_eval(graph: TrivalentGraph) -> Laurent:
    """Exact value of the closed cabled graph (raw vertices, no lambda)."""
    if graph.edge_count > MAX_ORACLE_EDGES:
        raise ValueError(
            f"oracle limited to {MAX_ORACLE_EDGES} edges, "
            f"got {graph.edge_count}")

    # Strand slots: (h, 0) and (h, 1), in ccw order around each vertex.
    vertex_joins: List[Tuple] = []
    for v in graph.vertices:
        k = len(v)
        for i in range(k):
            vertex_joins.append(((v[i], 1), (v[(i + 1) % k], 0)))

    total = Laurent()
    for choice in product((0, 1), repeat=graph.edge_count):
        uf = _UnionFind()
        for (a, b) in vertex_joins:
            uf.union(a, b)
        for (ha, hb), turn in zip(graph.edges, choice):
            if turn:
                uf.union((ha, 0), (ha, 1))
                uf.union((hb, 0), (hb, 1))
            else:
                uf.union((ha, 0), (hb, 1))
                uf.union((ha, 1), (hb, 0))
        roots = {uf.find((h, s)) for e in graph.edges for h in e
                 for s in (0, 1)}
        loops = len(roots)
        turns = sum(choice)
        # (-1/delta)^turns * delta^loops
        sign = -1 if turns % 2 else 1
        total = total + Laurent(loops - turns, (sign,))
    return total


# ---------------------------------------------------------------------------
# Graph builders for the closed tree-pair diagrams.

def loop_graph() -> TrivalentGraph:
    """A single closed cabled loop (one degree-2 vertex)."""
    return TrivalentGraph([(0, 1)], [(0, 1)])


def theta_graph() -> TrivalentGraph:
    """Two trivalent vertices joined by three parallel edges."""
    return TrivalentGraph([(0, 1, 2), (5, 4, 3)], [(0, 3), (1, 4), (2, 5)])


def _contract_joints(vertices: List[tuple], edges: List[tuple]) -> None:
    """Merge the two edges at every degree-2 joint into one (p2 . p2 = p2).

    A joint whose two half-edges belong to the same edge is a bare closed
    loop; it is kept as-is so the component stays representable.
    """
    changed = True
    while changed:
        changed = False
        for vi, v in enumerate(vertices):
            if len(v) != 2:
                continue
            a, b = v
            ea = next(i for i, e in enumerate(edges) if a in e)
            eb = next(i for i, e in enumerate(edges) if b in e)
            if ea == eb:
                continue
            p = edges[ea][0] if edges[ea][1] == a else edges[ea][1]
            q = edges[eb][0] if edges[eb][1] == b else edges[eb][1]
            del vertices[vi]
            for ei in sorted((ea, eb), reverse=True):
                del edges[ei]
            edges.append((p, q))
            changed = True
            break


def closed_pair_graph(g: FElement, mode: str) -> TrivalentGraph:
    """The closed diagram of a tree pair.

    mode "omega": every caret of both trees is a vertex and the two root
    cables are tied to each other around the side.
    mode "psi": the root carets are dropped, each root's two child cables
    becoming a single arc.

    Degree-2 joints arising at glued leaves and dropped roots are
    contracted away, so the result is purely trivalent (except for a bare
    closed loop, which keeps one joint).
    """
    counter = [0]

    def fresh() -> int:
        counter[0] += 1
        return counter[0] - 1

    vertices: List[tuple] = []
    edges: List[tuple] = []

    def build(tree: Tree, flip: bool):
        """Return (root half-edge, [leaf half-edges l2r]) for one tree.

        The returned handles always sit inside an edge, so they can be
        tied together with degree-2 joints.  flip=False: carets open
        upward (bottom tree); flip=True mirrors the vertical direction
        for the top tree, reversing the ccw order.
        """
        if tree.is_leaf:
            a, b = fresh(), fresh()
            edges.append((a, b))
            return a, [b]
        hroot, hl, hr = fresh(), fresh(), fresh()
        # ccw around an upward caret: root, right child, left child.
        if flip:
            vertices.append((hroot, hl, hr))
        else:
            vertices.append((hroot, hr, hl))
        hout, hlx, hrx = fresh(), fresh(), fresh()
        edges.append((hroot, hout))
        edges.append((hl, hlx))
        edges.append((hr, hrx))
        la, lls = build(tree.left, flip)
        ra, rls = build(tree.right, flip)
        vertices.append((hlx, la))
        vertices.append((hrx, ra))
        return hout, lls + rls

    if mode == "omega":
        broot, bleaves = build(g.bottom, flip=False)
        troot, tleaves = build(g.top, flip=True)
        vertices.append((broot, troot))
    elif mode == "psi":
        if g.bottom.is_leaf or g.top.is_leaf:
            raise ValueError("psi-mode closure needs >= 2 leaves")
        bl, blls = build(g.bottom.left, flip=False)
        br, brls = build(g.bottom.right, flip=False)
        vertices.append((bl, br))
        bleaves = blls + brls
        tl_, tlls = build(g.top.left, flip=True)
        tr, trls = build(g.top.right, flip=True)
        vertices.append((tl_, tr))
        tleaves = tlls + trls
    else:
        raise ValueError(f"unknown mode {mode!r}")

    for hb, ht in zip(bleaves, tleaves):
        vertices.append((hb, ht))
    _contract_joints(vertices, edges)
    return TrivalentGraph(vertices, edges)
