"""Acceptance gate: one test per criterion.

The criteria, with their tolerances:
   1. A Psi = Psi as stabilized vectors, and coeff(psi, A^n) = 1 exactly
      for n = 1..6.
   2. coeff(psi, D) (d-1) - (d-2) = 0 identically, cross-checked by a
      brute-force evaluation of both closed graphs of D.
   3. <A^n g Psi, h Psi> factorizes exactly from some N <= 12 for the
      pairs (D, D), (D, B), (B, B); verified through N + 3.
   4. coeff(omega, A^n) at delta = 2 is strictly decreasing for
      n = 2..15 with consecutive ratio within 1e-8 of 1/2.
   5. <sigma^n(g) Psi, Psi> stabilizes to coeff(omega, g) from some
      N <= 10 for g = A and g = D; the A limit differs from 1.
   6. <A^n xi, eta> -> <xi, Psi><Psi, eta> at finite N for all pairs
      from {Psi, D Psi, B Psi} and two vectors outside the vacuum orbit.
   7. Category sanity: closed loop = d, p2 o cup = 0, the vertex norm is
      (d-1)/delta, and 100 random forest morphisms are isometries.
   8. Group engine: 500 random pairs multiply identically under both
      algorithms and the PL oracle; 500 reductions are order-independent.
   9. Gram matrices of {id, A, B, D, DB, D^2} have minimum eigenvalue
      >= -1e-9 at delta = 2cos(pi/5), 2cos(pi/6), 2.
  10. Every exact scalar reported by criteria 1-6 matches a float
      recomputation at delta = 2 to 1e-9.

Criterion 10 consumes the scalars collected by the earlier criteria, so
the whole suite runs once per session and each test inspects its result.
"""

from __future__ import annotations

import pytest

from wysiwyg import acceptance


@pytest.fixture(scope="session")
def results():
    return {r.number: r for r in acceptance.run_all()}


@pytest.mark.parametrize("number", range(1, 11))
def test_criterion(results, number):
    r = results[number]
    assert r.passed, f"criterion {number} ({r.name}): {r.detail}"


def test_all_criteria_present(results):
    assert sorted(results) == list(range(1, 11))
