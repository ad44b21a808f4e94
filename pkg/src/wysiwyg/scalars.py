"""Exact scalar arithmetic in the loop parameter delta.

Scalars live in the rational function field Q(delta).  Three layers:

  * integer polynomials in delta, represented as tuples of int coefficients
    in ascending degree with no trailing zeros (the zero polynomial is ());
  * Laurent polynomials (an integer polynomial times a power of delta),
    which is the ring the diagram engine works in: composing diagrams only
    ever multiplies by delta^k and by -1/delta, so no general denominators
    appear until final normalisation;
  * RationalFunction, the exposed scalar type, kept reduced with
    gcd(num, den) = 1 and positive leading denominator coefficient.

The derived loop value of a doubled strand is d = delta^2 - 1, and the
admissible numeric parameters are delta = 2cos(pi/n) for n >= 4 together
with delta >= 2.

A numeric mode (plain floats at a fixed delta) mirrors the exact mode; the
two are tied together by the ring objects at the bottom of this module.
"""

from __future__ import annotations

import math
import warnings
from fractions import Fraction
from typing import Iterable, Union


# ---------------------------------------------------------------------------
# Integer polynomials as coefficient tuples (ascending degree).

Poly = tuple

def _trim(coeffs) -> Poly:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_from_ints(coeffs: Iterable[int]) -> Poly:
    return _trim(coeffs)


def poly_add(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def poly_neg(a: Poly) -> Poly:
    return tuple(-c for c in a)


def poly_sub(a: Poly, b: Poly) -> Poly:
    return poly_add(a, poly_neg(b))


def poly_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _trim(out)


def poly_scale(a: Poly, k: int) -> Poly:
    if k == 0:
        return ()
    return tuple(c * k for c in a)


def poly_shift(a: Poly, k: int) -> Poly:
    """Multiply by delta^k (k >= 0)."""
    if not a:
        return ()
    return (0,) * k + a


def poly_eval(a: Poly, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def poly_content(a: Poly) -> int:
    g = 0
    for c in a:
        g = math.gcd(g, c)
    return g


def poly_primitive(a: Poly) -> Poly:
    """Divide out the content; normalise the leading coefficient positive."""
    if not a:
        return ()
    g = poly_content(a)
    if a[-1] < 0:
        g = -g
    return tuple(c // g for c in a)


def _frac_divmod(a: list, b: list):
    # Polynomial division over Q; a, b lists of Fractions, b nonzero.
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    inv = 1 / b[-1]
    for i in range(len(a) - len(b), -1, -1):
        coef = a[i + len(b) - 1] * inv
        q[i] = coef
        if coef:
            for j, bj in enumerate(b):
                a[i + j] -= coef * bj
    while a and a[-1] == 0:
        a.pop()
    return q, a


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Primitive gcd, positive leading coefficient."""
    A = [Fraction(c) for c in a]
    B = [Fraction(c) for c in b]
    while B:
        _, r = _frac_divmod(A, B)
        A, B = B, r
    if not A:
        return ()
    # Clear denominators, then take the primitive part.
    lcm = 1
    for c in A:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    return poly_primitive(tuple(int(c * lcm) for c in A))


def poly_div_exact(a: Poly, b: Poly) -> Poly:
    """Exact division a / b; raises if b does not divide a over Q(x)."""
    q, r = _frac_divmod([Fraction(c) for c in a], [Fraction(c) for c in b])
    if r:
        raise ArithmeticError("inexact polynomial division")
    if any(c.denominator != 1 for c in q):
        raise ArithmeticError("non-integer quotient")
    return _trim(int(c) for c in q)


POLY_ONE: Poly = (1,)
POLY_DELTA: Poly = (0, 1)
POLY_D: Poly = (-1, 0, 1)          # d = delta^2 - 1
POLY_LAMBDA_NUM: Poly = (-2, 0, 1)  # lambda = (delta^2 - 2) / delta


# ---------------------------------------------------------------------------
# Laurent polynomials: coeffs * delta^shift.

class Laurent:
    """An integer polynomial in delta times delta^shift (shift may be < 0).

    Closed under the operations the diagram engine needs: ring arithmetic
    plus multiplication by delta^k for any integer k.
    """

    __slots__ = ("shift", "coeffs")

    def __init__(self, shift: int = 0, coeffs: Iterable[int] = ()):
        c = _trim(coeffs)
        if not c:
            shift = 0
        else:
            # Normalise: absorb trailing low-order zeros into the shift.
            k = 0
            while c[k] == 0:
                k += 1
            if k:
                shift += k
                c = c[k:]
        self.shift = shift
        self.coeffs = c

    @classmethod
    def from_int(cls, n: int) -> "Laurent":
        return cls(0, (n,))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Laurent):
            return NotImplemented
        return self.shift == other.shift and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.shift, self.coeffs))

    def __add__(self, other: "Laurent") -> "Laurent":
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        lo = min(self.shift, other.shift)
        a = poly_shift(self.coeffs, self.shift - lo)
        b = poly_shift(other.coeffs, other.shift - lo)
        return Laurent(lo, poly_add(a, b))

    def __sub__(self, other: "Laurent") -> "Laurent":
        return self + (-other)

    def __neg__(self) -> "Laurent":
        return Laurent(self.shift, poly_neg(self.coeffs))

    def __mul__(self, other: "Laurent") -> "Laurent":
        return Laurent(self.shift + other.shift,
                       poly_mul(self.coeffs, other.coeffs))

    def times_delta_power(self, k: int) -> "Laurent":
        return Laurent(self.shift + k, self.coeffs)

    def evaluate(self, delta: float) -> float:
        return float(poly_eval(self.coeffs, delta)) * delta ** self.shift

    def as_rational(self) -> "RationalFunction":
        if self.shift >= 0:
            return RationalFunction(poly_shift(self.coeffs, self.shift), POLY_ONE)
        return RationalFunction(self.coeffs, poly_shift(POLY_ONE, -self.shift))

    def __repr__(self):
        return f"Laurent(delta^{self.shift} * {list(self.coeffs)})"


# ---------------------------------------------------------------------------
# Rational functions: the exposed exact Scalar.

def _format_poly(p: Poly) -> str:
    if not p:
        return "0"
    parts = []
    for deg in range(len(p) - 1, -1, -1):
        c = p[deg]
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if parts else "")
        mag = abs(c)
        if deg == 0:
            term = str(mag)
        else:
            base = "δ" if deg == 1 else f"δ^{deg}"
            term = base if mag == 1 else f"{mag}*{base}"
        parts.append(sign + term)
    return "".join(parts)


class RationalFunction:
    """A reduced fraction of integer polynomials in delta.

    Invariants: gcd(num, den) = 1, den nonzero with positive leading
    coefficient, and gcd of the integer contents of num and den is 1.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=POLY_ONE, reduce: bool = True):
        num = _trim(num)
        den = _trim(den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if reduce and num:
            g = poly_gcd(num, den)
            if len(g) > 1 or g != (1,):
                num = poly_div_exact(num, g)
                den = poly_div_exact(den, g)
            cg = math.gcd(poly_content(num), poly_content(den))
            if den[-1] < 0:
                cg = -cg
            if cg != 1:
                num = tuple(c // cg for c in num)
                den = tuple(c // cg for c in den)
        elif not num:
            den = POLY_ONE
        if den[-1] < 0:
            num = poly_neg(num)
            den = poly_neg(den)
        self.num = num
        self.den = den

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_int(cls, n: int) -> "RationalFunction":
        return cls((n,), POLY_ONE, reduce=False)

    @classmethod
    def delta(cls) -> "RationalFunction":
        return cls(POLY_DELTA, POLY_ONE, reduce=False)

    @classmethod
    def d(cls) -> "RationalFunction":
        """The loop value d = delta^2 - 1."""
        return cls(POLY_D, POLY_ONE, reduce=False)

    @classmethod
    def vertex_norm(cls) -> "RationalFunction":
        """lambda = (d - 1)/delta = (delta^2 - 2)/delta."""
        return cls(POLY_LAMBDA_NUM, POLY_DELTA, reduce=False)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, int):
            return RationalFunction.from_int(other)
        if isinstance(other, Laurent):
            return other.as_rational()
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RationalFunction(
            poly_add(poly_mul(self.num, o.den), poly_mul(o.num, self.den)),
            poly_mul(self.den, o.den))

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(poly_neg(self.num), self.den, reduce=False)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RationalFunction(poly_mul(self.num, o.num),
                                poly_mul(self.den, o.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.num:
            raise ZeroDivisionError("division by zero scalar")
        return RationalFunction(poly_mul(self.num, o.den),
                                poly_mul(self.den, o.num))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int):
        if k < 0:
            return RationalFunction.from_int(1) / self ** (-k)
        out = RationalFunction.from_int(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        # Both sides are reduced canonically, so compare structurally.
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def evaluate(self, delta: float) -> float:
        den = poly_eval(self.den, delta)
        if den == 0:
            raise ZeroDivisionError(f"denominator vanishes at delta={delta}")
        return poly_eval(self.num, delta) / den

    def evaluate_exact(self, delta: Fraction) -> Fraction:
        return Fraction(poly_eval(self.num, delta)) / poly_eval(self.den, delta)

    def __str__(self):
        n = _format_poly(self.num)
        if self.den == POLY_ONE:
            return n
        return f"({n})/({_format_poly(self.den)})"

    def __repr__(self):
        return f"RationalFunction({self})"


Scalar = Union[RationalFunction, float]


# ---------------------------------------------------------------------------
# Admissible numeric parameters.

def admissible_deltas(n_max: int = 24) -> list:
    """The discrete admissible values 2cos(pi/n), n = 4..n_max."""
    return [2.0 * math.cos(math.pi / n) for n in range(4, n_max + 1)]


def is_admissible_delta(delta: float, tol: float = 1e-9) -> bool:
    if delta >= 2.0 - tol:
        return True
    return any(abs(delta - x) <= tol for x in admissible_deltas(360))


# ---------------------------------------------------------------------------
# Coefficient rings: the diagram engine is generic over these two.

class ExactRing:
    """Coefficients are Laurent polynomials in delta."""

    exact = True

    zero = Laurent()
    one = Laurent.from_int(1)

    def from_int(self, n: int) -> Laurent:
        return Laurent.from_int(n)

    def delta_power(self, k: int) -> Laurent:
        return Laurent(k, (1,))

    def scale_delta(self, coeff: Laurent, k: int) -> Laurent:
        return coeff.times_delta_power(k)

    def is_zero(self, coeff: Laurent) -> bool:
        return coeff.is_zero()

    def finalize(self, coeff: Laurent) -> RationalFunction:
        return coeff.as_rational()

    def __repr__(self):
        return "ExactRing()"


class NumericRing:
    """Coefficients are plain floats at a fixed numeric delta."""

    exact = False

    zero = 0.0
    one = 1.0

    def __init__(self, delta: float, warn: bool = True):
        if warn and not is_admissible_delta(delta):
            warnings.warn(
                f"delta={delta} is outside the admissible set "
                "{2cos(pi/n), n>=4} u [2, inf); results are formal",
                stacklevel=2)
        self.delta = float(delta)

    def from_int(self, n: int) -> float:
        return float(n)

    def delta_power(self, k: int) -> float:
        return self.delta ** k

    def scale_delta(self, coeff: float, k: int) -> float:
        return coeff * self.delta ** k

    def is_zero(self, coeff: float) -> bool:
        # Float cancellation leaves residues around machine epsilon; the
        # smallest genuine term coefficients in a capped sweep are orders
        # of magnitude larger.
        return abs(coeff) <= 1e-12

    def finalize(self, coeff: float) -> float:
        return coeff

    def __repr__(self):
        return f"NumericRing(delta={self.delta})"


EXACT = ExactRing()
