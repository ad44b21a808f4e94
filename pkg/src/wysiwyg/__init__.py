"""Exact arithmetic for Thompson's group F and the Wysiwyg representations.

The package has three layers:

* group engine — :mod:`wysiwyg.forests`, :mod:`wysiwyg.thompson`,
  :mod:`wysiwyg.plmaps`: binary trees and forests, reduced tree pairs
  with two independent multiplication algorithms, and the PL
  homeomorphism model used as an oracle;
* diagram engine — :mod:`wysiwyg.scalars`, :mod:`wysiwyg.tl`,
  :mod:`wysiwyg.staged`, :mod:`wysiwyg.oracle`: exact rational-function
  scalars in delta, the 2-strand-cabled Temperley-Lieb category with
  Jones-Wenzl projectors, a frontier-sweep evaluator for large closed
  diagrams, and a brute-force closed-graph oracle;
* representation layer — :mod:`wysiwyg.rep`, :mod:`wysiwyg.acceptance`,
  :mod:`wysiwyg.cli`: limit vectors, vacuum coefficients, the executable
  limit theorems, the acceptance suite, and the command-line front end.
"""

from __future__ import annotations

from .config import ResourceCapError
from .forests import Forest, LEAF, Tree, graft, tree_join
from .scalars import EXACT, NumericRing, RationalFunction, admissible_deltas
from .thompson import (
    ElementParseError, FElement, element_D, generator_A, generator_B,
    identity, inverse, multiply, multiply_rewrite, parse_element, power_A,
    sigma, to_pl_map,
)
from .rep import (
    LimitVector, act, an_coefficient, coeff, decay_check, gram, inner,
    lemma43_threshold, pair_with_element, psd_check, sigma_limit_check,
    vacuum, weak_limit_projection_check,
)

__all__ = [
    "EXACT", "ElementParseError", "FElement", "Forest", "LEAF",
    "LimitVector", "NumericRing", "RationalFunction", "ResourceCapError",
    "Tree", "act", "admissible_deltas", "an_coefficient", "coeff",
    "decay_check", "element_D", "generator_A", "generator_B", "graft",
    "gram", "identity", "inner", "inverse", "lemma43_threshold",
    "multiply", "multiply_rewrite", "pair_with_element", "parse_element",
    "power_A", "psd_check", "sigma", "sigma_limit_check", "to_pl_map",
    "tree_join", "vacuum", "weak_limit_projection_check",
]

__version__ = "0.1.0"
