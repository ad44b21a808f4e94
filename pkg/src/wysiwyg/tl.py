"""The diagram engine: cabled Temperley-Lieb morphisms.

A basis diagram of type m -> n is a non-crossing perfect matching of m
bottom points and n top points.  Points are numbered 0..m-1 (source, left
to right) then m..m+n-1 (target, left to right) and the matching is stored
as an involutive tuple ``match`` with ``match[i]`` the partner of point i.

A ``TLMor`` is a sparse linear combination of such diagrams with
coefficients in a coefficient ring (exact Laurent polynomials in delta, or
floats at a numeric delta), together with a count of the raw trivalent
vertices used to build it.  Composition concatenates diagrams, traces the
connected components and multiplies by delta per closed loop.

The trivalent category of parameter d = delta^2 - 1 is realised by
cabling: the generating object X is a pair of strands carrying the
two-strand Jones-Wenzl projector p2 = id - (1/delta)e, and the trivalent
vertex is the cabled triple point with p2 on all three legs.  The vertex
normalisation lambda — defined by adjoint(Y) o Y = lambda * p2 — is
computed once per ring and cached; square roots of lambda are never
materialised, callers divide by lambda^(vertex_count/2) instead, which is
well defined because every exposed scalar has an even total vertex count.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Optional, Tuple

from . import config
from .forests import ArityMismatch, Forest, Tree
from .scalars import EXACT, RationalFunction

Match = Tuple[int, ...]


# ---------------------------------------------------------------------------
# Basis diagrams (pairings).

def pairing_is_valid(match: Match, src: int, dst: int) -> bool:
    """Involution without fixed points, non-crossing in the rectangle."""
    n = src + dst
    if len(match) != n or n % 2:
        return False
    if not all(0 <= match[i] < n and match[i] != i and match[match[i]] == i
               for i in range(n)):
        return False
    # Read the boundary as a circle: source left to right, then target
    # right to left; non-crossing iff the induced bracket word is balanced.
    order = list(range(src)) + list(range(n - 1, src - 1, -1))
    position = {p: k for k, p in enumerate(order)}
    stack = []
    for p in order:
        q = match[p]
        if position[q] > position[p]:
            stack.append(q)
        elif not stack or stack.pop() != p:
            return False
    return not stack


def all_pairings(src: int, dst: int) -> Iterator[Match]:
    """All non-crossing perfect matchings of type src -> dst."""
    n = src + dst
    if n % 2:
        return
    order = list(range(src)) + list(range(n - 1, src - 1, -1))
    match = [-1] * n

    def fill(k: int, stack: tuple):
        if k == n:
            if not stack:
                yield tuple(match)
            return
        p = order[k]
        # Either open a new arc at p...
        yield from fill(k + 1, stack + (p,))
        # ...or close the most recent open arc.
        if stack:
            q = stack[-1]
            match[p], match[q] = q, p
            yield from fill(k + 1, stack[:-1])
            match[p] = match[q] = -1

    yield from fill(0, ())


def identity_match(n: int) -> Match:
    return tuple(range(n, 2 * n)) + tuple(range(n))


def _glue(a: Match, m: int, n: int, b: Match, p: int) -> Tuple[Match, int]:
    """Compose diagram a (m -> n) with b (n -> p) on top; return the glued
    matching (m -> p) and the number of closed loops."""
    out = [-1] * (m + p)
    seen = [False] * n
    for start in range(m + p):
        if out[start] >= 0:
            continue
        if start < m:
            side, cur = 0, start          # local point in a
        else:
            side, cur = 1, n + (start - m)  # local point in b
        while True:
            if side == 0:
                nxt = a[cur]
                if nxt < m:
                    end = nxt
                    break
                k = nxt - m
                seen[k] = True
                side, cur = 1, k
            else:
                nxt = b[cur]
                if nxt >= n:
                    end = m + (nxt - n)
                    break
                seen[nxt] = True
                side, cur = 0, m + nxt
        out[start], out[end] = end, start
    loops = 0
    for k in range(n):
        if seen[k]:
            continue
        loops += 1
        cur = k
        while True:
            seen[cur] = True
            k2 = b[cur]          # interface -> interface through b
            seen[k2] = True
            nxt = a[m + k2] - m  # and back through a
            if nxt == k:
                break
            cur = nxt
    return tuple(out), loops


# ---------------------------------------------------------------------------
# Linear combinations.

class TLMor:
    """A linear combination of non-crossing diagrams of one type m -> n."""

    __slots__ = ("ring", "src", "dst", "terms", "vertex_count")

    def __init__(self, ring, src: int, dst: int, terms: dict,
                 vertex_count: int = 0, prune: bool = True):
        self.ring = ring
        self.src = src
        self.dst = dst
        if prune:
            terms = {m: c for m, c in terms.items() if not ring.is_zero(c)}
        self.terms = terms
        self.vertex_count = vertex_count

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_match(cls, ring, src: int, dst: int, match: Match,
                   vertex_count: int = 0) -> "TLMor":
        return cls(ring, src, dst, {tuple(match): ring.one}, vertex_count,
                   prune=False)

    @classmethod
    def identity(cls, ring, n: int) -> "TLMor":
        return cls.from_match(ring, n, n, identity_match(n))

    @classmethod
    def zero(cls, ring, src: int, dst: int, vertex_count: int = 0) -> "TLMor":
        return cls(ring, src, dst, {}, vertex_count, prune=False)

    # -- basics -------------------------------------------------------------

    def term_count(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, TLMor):
            return NotImplemented
        return (self.src == other.src and self.dst == other.dst
                and self.vertex_count == other.vertex_count
                and self.terms == other.terms)

    def __repr__(self):
        return (f"TLMor({self.src}->{self.dst}, {len(self.terms)} terms, "
                f"vc={self.vertex_count})")

    def __add__(self, other: "TLMor") -> "TLMor":
        if (self.src, self.dst) != (other.src, other.dst):
            raise ArityMismatch("adding morphisms of different type")
        if self.vertex_count != other.vertex_count:
            raise ValueError("adding morphisms of different vertex count")
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out[m] + c if m in out else c
        return TLMor(self.ring, self.src, self.dst, out, self.vertex_count)

    def __sub__(self, other: "TLMor") -> "TLMor":
        return self + other.scale(self.ring.from_int(-1))

    def scale(self, coeff) -> "TLMor":
        return TLMor(self.ring, self.src, self.dst,
                     {m: c * coeff for m, c in self.terms.items()},
                     self.vertex_count)

    def adjoint(self) -> "TLMor":
        """Vertical reflection; coefficients are real and unchanged."""
        s, d = self.src, self.dst
        remap = [0] * (s + d)
        for i in range(s):
            remap[i] = d + i
        for j in range(d):
            remap[s + j] = j
        out = {}
        for match, c in self.terms.items():
            new = [-1] * (s + d)
            for i, j in enumerate(match):
                new[remap[i]] = remap[j]
            out[tuple(new)] = c
        return TLMor(self.ring, d, s, out, self.vertex_count, prune=False)

    def mirror(self) -> "TLMor":
        """Left-right reflection of every diagram."""
        s, d = self.src, self.dst

        def remap(i: int) -> int:
            return s - 1 - i if i < s else s + (s + d - 1 - i)

        out = {}
        for match, c in self.terms.items():
            new = [-1] * (s + d)
            for i, j in enumerate(match):
                new[remap(i)] = remap(j)
            out[tuple(new)] = c
        return TLMor(self.ring, s, d, out, self.vertex_count, prune=False)

    def tensor(self, other: "TLMor") -> "TLMor":
        """Horizontal juxtaposition, self to the left of other."""
        s1, d1, s2, d2 = self.src, self.dst, other.src, other.dst

        def remap2(i: int) -> int:
            return s1 + i if i < s2 else s1 + d1 + i

        out = {}
        for m1, c1 in self.terms.items():
            base = [-1] * (s1 + s2 + d1 + d2)
            for i, j in enumerate(m1):
                ii = i if i < s1 else s2 + i
                jj = j if j < s1 else s2 + j
                base[ii] = jj
            for m2, c2 in other.terms.items():
                new = list(base)
                for i, j in enumerate(m2):
                    new[remap2(i)] = remap2(j)
                out[tuple(new)] = (out[tuple(new)] + c1 * c2
                                   if tuple(new) in out else c1 * c2)
        return TLMor(self.ring, s1 + s2, d1 + d2, out,
                     self.vertex_count + other.vertex_count)

    def evaluate_scalar(self):
        """The coefficient of the empty diagram of a 0 -> 0 morphism."""
        if self.src or self.dst:
            raise ArityMismatch("not a closed (0 -> 0) morphism")
        return self.terms.get((), self.ring.zero)


def tl_compose(lower: TLMor, upper: TLMor) -> TLMor:
    """Stack upper on top of lower; delta per closed loop."""
    if lower.ring is not upper.ring:
        raise ValueError("mixed coefficient rings")
    if lower.dst != upper.src:
        raise ArityMismatch(
            f"cannot compose {lower.src}->{lower.dst} with {upper.src}->{upper.dst}")
    ring = lower.ring
    cap = config.max_terms()
    out: dict = {}
    for ma, ca in lower.terms.items():
        for mb, cb in upper.terms.items():
            match, loops = _glue(ma, lower.src, lower.dst, mb, upper.dst)
            c = ring.scale_delta(ca * cb, loops)
            out[match] = out[match] + c if match in out else c
            if len(out) > cap:
                raise config.ResourceCapError(
                    f"term count exceeded cap {cap}", len(out))
    return TLMor(ring, lower.src, upper.dst, out,
                 lower.vertex_count + upper.vertex_count)


def apply_block(state: TLMor, pos: int, block: TLMor) -> TLMor:
    """Post-compose ``id_pos (x) block (x) id_rest`` onto state's target.

    ``pos`` is the 0-based index of the first target strand the block
    consumes.
    """
    rest = state.dst - pos - block.src
    if pos < 0 or rest < 0:
        raise ArityMismatch(
            f"block of arity {block.src} does not fit at position {pos} "
            f"on {state.dst} strands")
    padded = block
    if pos:
        padded = TLMor.identity(state.ring, pos).tensor(padded)
    if rest:
        padded = padded.tensor(TLMor.identity(state.ring, rest))
    return tl_compose(state, padded)


# ---------------------------------------------------------------------------
# The cabled trivalent generators.

def cup(ring) -> TLMor:
    return TLMor.from_match(ring, 0, 2, (1, 0))


def cap(ring) -> TLMor:
    return TLMor.from_match(ring, 2, 0, (1, 0))


def e_diagram(ring) -> TLMor:
    """The Temperley-Lieb generator cup o cap on two strands."""
    return TLMor.from_match(ring, 2, 2, (1, 0, 3, 2))


@lru_cache(maxsize=None)
def p2(ring) -> TLMor:
    """The two-strand Jones-Wenzl projector id - (1/delta) e."""
    minus_inv_delta = ring.scale_delta(ring.from_int(-1), -1)
    return TLMor(ring, 2, 2, {
        identity_match(2): ring.one,
        (1, 0, 3, 2): minus_inv_delta,
    }, prune=False)


def apply_p2(v: TLMor, i: int) -> TLMor:
    """Post-compose p2 on the adjacent target strands (i, i+1), 1-based."""
    if not 1 <= i < v.dst:
        raise ArityMismatch(f"strand pair ({i},{i + 1}) out of range")
    return apply_block(v, i - 1, p2(v.ring))


@lru_cache(maxsize=None)
def raw_vertex(ring) -> TLMor:
    """The cabled triple point: one X cable splitting into two.

    The bottom cable rises to the outer target positions with a cup in the
    middle, and p2 is applied to the bottom pair and to both target pairs.
    vertex_count = 1 so that callers can divide by the cached normalisation
    lambda^(1/2) per vertex (always in pairs).
    """
    lift = TLMor.from_match(ring, 2, 4, (2, 5, 0, 4, 3, 1))
    v = tl_compose(p2(ring), lift)
    v = tl_compose(v, p2(ring).tensor(p2(ring)))
    return TLMor(ring, 2, 4, v.terms, vertex_count=1)


@lru_cache(maxsize=None)
def adjoint_vertex(ring) -> TLMor:
    return raw_vertex(ring).adjoint()


@lru_cache(maxsize=None)
def psi_cup(ring) -> TLMor:
    """The raw two-cable cup: nested strands with p2 on both cables.

    Dividing by sqrt(d) makes it the unit vector; the division is deferred
    to the callers' d-power bookkeeping.
    """
    nested = TLMor.from_match(ring, 0, 4, (3, 2, 1, 0))
    return tl_compose(nested, p2(ring).tensor(p2(ring)))


@lru_cache(maxsize=None)
def vertex_norm_coefficient(ring):
    """lambda with adjoint(Y) o Y = lambda * p2, computed once per ring.

    Determined by expanding the composite and dividing by p2 in the
    two-dimensional algebra on one cable; a ValueError here would mean the
    proportionality fails, which the category forbids.
    """
    yy = tl_compose(raw_vertex(ring), adjoint_vertex(ring))
    target = p2(ring)
    lam = None
    for match, c in yy.terms.items():
        ref = target.terms.get(match)
        if ref is None:
            raise ValueError("adjoint(Y) o Y is not supported on p2")
        # lam = c / ref: ref is 1 on the identity diagram.
        if match == identity_match(2):
            lam = c
    if lam is None:
        raise ValueError("adjoint(Y) o Y has no identity component")
    # Cross-check proportionality on every diagram: c == lam * ref.
    for match, c in yy.terms.items():
        diff = c - lam * target.terms[match]
        if not ring.is_zero(diff):
            raise ValueError("adjoint(Y) o Y is not proportional to p2")
    return lam


def vertex_norm_rational() -> RationalFunction:
    """The exact lambda = (d-1)/delta as a rational function."""
    return vertex_norm_coefficient(EXACT).as_rational()


# ---------------------------------------------------------------------------
# Forests as morphisms.

def tree_to_morphism(ring, t: Tree) -> TLMor:
    """The tree with every caret replaced by the raw vertex: 2 -> 2n."""
    if t.is_leaf:
        return p2(ring)
    left = tree_to_morphism(ring, t.left)
    right = tree_to_morphism(ring, t.right)
    return tl_compose(raw_vertex(ring), left.tensor(right))


def forest_to_morphism(ring, f: Forest, mode: Optional[str] = None) -> TLMor:
    """The cabled interpretation of a forest: TLMor 2m -> 2n.

    The diagram is the same for both functors — psi closes the source of a
    tree with the two-cable cup, omega keeps the through strand — so
    ``mode`` only documents the caller's intent.
    """
    if mode not in (None, "psi", "omega"):
        raise ValueError(f"unknown mode {mode!r}")
    out = tree_to_morphism(ring, f.trees[0])
    for t in f.trees[1:]:
        out = out.tensor(tree_to_morphism(ring, t))
    return out


def tree_vector(ring, t: Tree, mode: str) -> TLMor:
    """The vector attached to a tree: 0 -> 2n (psi) or 2 -> 2n (omega).

    In psi mode the root caret is replaced by the two-cable cup (which is
    why a single leaf is not allowed: that space is zero); in omega mode
    the root cable runs through.
    """
    if mode == "psi":
        if t.is_leaf:
            raise ValueError("psi-mode vectors need a tree with >= 2 leaves")
        wings = tree_to_morphism(ring, t.left).tensor(
            tree_to_morphism(ring, t.right))
        return tl_compose(psi_cup(ring), wings)
    if mode == "omega":
        return tree_to_morphism(ring, t)
    raise ValueError(f"unknown mode {mode!r}")


# ---------------------------------------------------------------------------
# Inner products and closed evaluations (naive path).

def close_scalar(m: TLMor):
    """Close a 0->0 or 2->2 morphism to a raw ring scalar.

    For a 2->2 morphism this is the trace: the source cable is bent around
    and joined to the target cable.
    """
    if m.src == 0 and m.dst == 0:
        return m.evaluate_scalar()
    if m.src == 2 and m.dst == 2:
        nested = TLMor.from_match(m.ring, 0, 4, (3, 2, 1, 0))
        bent = tl_compose(nested, TLMor.identity(m.ring, 2).tensor(m))
        closed = tl_compose(bent, nested.adjoint())
        return closed.evaluate_scalar()
    raise ArityMismatch(f"cannot close a {m.src}->{m.dst} morphism")


def _normalize(ring, raw, vertex_count: int, d_halves: int = 0):
    """Divide a raw scalar by lambda^(vc/2) * d^(d_halves/2)."""
    if ring.exact:
        if vertex_count % 2:
            raise ValueError(
                "odd total vertex count: caller normalisation bug")
        if d_halves % 2:
            raise ValueError("odd total d half-power")
        out = raw.as_rational()
        if vertex_count:
            out = out / vertex_norm_rational() ** (vertex_count // 2)
        if d_halves:
            out = out / RationalFunction.d() ** (d_halves // 2)
        return out
    lam = vertex_norm_coefficient(ring)
    d = ring.delta_power(2) - 1.0
    return raw / lam ** (vertex_count / 2.0) / d ** (d_halves / 2.0)


def inner_product(u: TLMor, v: TLMor):
    """<u, v> = adjoint(v) o u closed to a scalar, over lambda powers.

    Both arguments must be vectors of the same type (0 -> 2n or 2 -> 2n);
    for through-strand vectors the source pair is traced.
    """
    if (u.src, u.dst) != (v.src, v.dst):
        raise ArityMismatch("inner product of vectors of different type")
    raw = close_scalar(tl_compose(u, v.adjoint()))
    return _normalize(u.ring, raw, u.vertex_count + v.vertex_count)
