"""Thompson's group F: tree pairs, three models of multiplication.

An element of F is a reduced pair of binary trees with the same number
of leaves, written top/bottom.  This script multiplies the standard
generators in three independent ways — directed-set stabilization,
diagrammatic rewriting, and composition of the associated piecewise
linear homeomorphisms of [0,1] — and shows they agree, then exercises
the shift endomorphism sigma and the defining relation of F.

Run:  python3 demos/01_group_arithmetic.py
"""

from __future__ import annotations

from wysiwyg import (
    element_D, generator_A, generator_B, inverse, multiply,
    multiply_rewrite, parse_element, sigma, to_pl_map,
)

A, B, D = generator_A(), generator_B(), element_D()

print("generators as reduced tree pairs (top/bottom):")
print(f"  A = {A}")
print(f"  B = {B} = sigma(A)")
print(f"  D = {D} = A * B^-1")
print()

g = multiply(A, B)
h = multiply(D, inverse(A))
print(f"g = A*B       = {g}")
print(f"h = D*A^-1    = {h}")
print()

print("the same product three ways:")
p_join = multiply(g, h)
p_rewrite = multiply_rewrite(g, h)
print(f"  stabilization : {p_join}")
print(f"  rewriting     : {p_rewrite}")
pl = to_pl_map(p_join)
print(f"  PL breakpoints: {[(str(x), str(y)) for x, y in pl.points]}")
assert p_join == p_rewrite
assert to_pl_map(p_join).points == pl.points
print()

print("the shift endomorphism sigma doubles the support away from 0:")
print(f"  sigma(A)   = {sigma(A)}  (this is B)")
print(f"  sigma^2(A) = {sigma(sigma(A))}")
x0, x1, x2 = A, sigma(A), sigma(sigma(A))
relation = multiply(inverse(x0), multiply(x1, x0))
print(f"  x0^-1 x1 x0 = {relation}")
assert relation == x2, "defining relation of F"
print("  ... which equals x2: the defining relation holds.")
print()

w = parse_element("A^2 B^-1 D")
print(f'parse_element("A^2 B^-1 D") = {w}')
print(f"round-trips through text: {parse_element(str(w)) == w}")
