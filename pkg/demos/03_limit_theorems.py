"""Executable limit theorems: decay, factorization, weak limits.

Three phenomena around the distinguished vector Psi (fixed by A) and
the through-strand vacuum Omega:

  * coeff(omega, A^n) decays geometrically with ratio (d-2)/(d-1);
  * <A^n g Psi, h Psi> factorizes as <g Psi, Psi><Psi, h Psi> for all
    large n — here the threshold is tiny and exact;
  * <sigma^n(g) Psi, Psi> stabilizes to coeff(omega, g), and A^n
    converges weakly to the rank-one projection onto Psi.

Everything below is exact rational-function arithmetic; the thresholds
are found by scanning n and demanding exact equality.

Run:  python3 demos/03_limit_theorems.py
"""

from __future__ import annotations

from wysiwyg import (
    EXACT, NumericRing, decay_check, element_D, generator_B,
    lemma43_threshold, sigma_limit_check, vacuum,
    weak_limit_projection_check, act,
)
from wysiwyg.forests import full_tree

print("geometric decay of coeff(omega, A^n) at delta = 2, d = 3")
print("(exact ratio (d-2)/(d-1) = 1/2):")
ring2 = NumericRing(2.0, warn=False)
for n, c, ratio in decay_check(ring2, 8):
    r = "" if ratio is None else f"   ratio {ratio:.6f}"
    print(f"  n = {n}:  {c:.8f}{r}")
print()

D, B = element_D(), generator_B()
print("factorization thresholds (exact, scanned to n = 12):")
for g, h, name in ((D, D, "(D, D)"), (D, B, "(D, B)"), (B, B, "(B, B)")):
    n = lemma43_threshold(EXACT, g, h, 12)
    print(f"  <A^n g Psi, h Psi> = <g Psi, Psi><Psi, h Psi> for n >= {n}"
          f"   pair {name}")
print()

psi = vacuum(EXACT, "psi", full_tree(2))
print("sigma-limit (exact): <sigma^n(g) Psi, Psi> = coeff(omega, g)")
for g, name in ((D, "D"),):
    n = sigma_limit_check(EXACT, g, psi, psi, 6)
    print(f"  g = {name}: stabilizes from n = {n}")
print()

print("weak convergence of A^n to the projection onto Psi (exact):")
pairs = [(psi, psi, "(Psi, Psi)"), (act(D, psi), psi, "(D Psi, Psi)"),
         (act(D, psi), act(B, psi), "(D Psi, B Psi)")]
for xi, eta, name in pairs:
    n = weak_limit_projection_check(EXACT, xi, eta, 8)
    print(f"  <A^n xi, eta> = <xi, Psi><Psi, eta> for n >= {n}"
          f"   pair {name}")
