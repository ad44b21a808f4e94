"""Piecewise-linear homeomorphisms of [0,1] with dyadic data.

These serve as an independent oracle for the tree-pair group arithmetic:
an element maps the dyadic partition cut out by its bottom tree affinely
onto the partition of its top tree.  Breakpoints are exact Fractions, all
slopes are powers of two, and composition/inversion are ordinary function
operations, so agreement with the tree-pair algorithms is a genuine
cross-check rather than a restatement.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Tuple


def _is_pow2(q: Fraction) -> bool:
    n, d = q.numerator, q.denominator
    return n > 0 and (n & (n - 1)) == 0 and (d & (d - 1)) == 0


class PLMap:
    """Increasing PL bijection of [0,1]: breakpoints (x_k, y_k), slopes 2^j."""

    __slots__ = ("points",)

    def __init__(self, points):
        pts = [(Fraction(x), Fraction(y)) for x, y in points]
        if pts[0] != (0, 0) or pts[-1] != (1, 1):
            raise ValueError("PL map must fix 0 and 1")
        clean: List[Tuple[Fraction, Fraction]] = [pts[0]]
        for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
            if x1 <= x0 or y1 <= y0:
                raise ValueError("breakpoints must be strictly increasing")
            slope = (y1 - y0) / (x1 - x0)
            if not _is_pow2(slope):
                raise ValueError(f"slope {slope} is not a power of 2")
            # Drop collinear interior points so equality is canonical.
            if len(clean) >= 2:
                (xa, ya), (xb, yb) = clean[-2], clean[-1]
                if (yb - ya) * (x1 - xb) == (y1 - yb) * (xb - xa):
                    clean.pop()
            clean.append((x1, y1))
        self.points = tuple(clean)

    def __eq__(self, other):
        if not isinstance(other, PLMap):
            return NotImplemented
        return self.points == other.points

    def __hash__(self):
        return hash(self.points)

    def __repr__(self):
        pts = ", ".join(f"({x},{y})" for x, y in self.points)
        return f"PLMap([{pts}])"

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        if not 0 <= x <= 1:
            raise ValueError("argument outside [0,1]")
        pts = self.points
        lo, hi = 0, len(pts) - 1
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if pts[mid][0] <= x:
                lo = mid
            else:
                hi = mid
        (x0, y0), (x1, y1) = pts[lo], pts[hi]
        return y0 + (y1 - y0) * (x - x0) / (x1 - x0)

    def inverse(self) -> "PLMap":
        return PLMap([(y, x) for x, y in self.points])

    def is_identity(self) -> bool:
        return self.points == ((Fraction(0), Fraction(0)),
                               (Fraction(1), Fraction(1)))


def identity_pl() -> PLMap:
    return PLMap([(0, 0), (1, 1)])


def compose_pl(p: PLMap, q: PLMap) -> PLMap:
    """The map x -> p(q(x))."""
    qinv = q.inverse()
    xs = {x for x, _ in q.points}
    xs.update(qinv(x) for x, _ in p.points)
    return PLMap(sorted((x, p(q(x))) for x in xs))
