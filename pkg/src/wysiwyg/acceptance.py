"""The full verification suite, shared by the CLI and the test suite.

Each criterion function returns a CriterionResult; run_all executes every
criterion in order.  The checks certify the finitary identities behind
the representation theory: the fixed vector, the distinguishing vacuum
coefficient, factorization and weak-limit thresholds, omega-mode decay,
category sanity, the group-engine oracles, Gram positivity, and
exact/numeric agreement.
"""

from __future__ import annotations

import math
import random
import time
from typing import Callable, List, Optional

from . import oracle, rep, tl
from .forests import (
    Forest, LEAF, Tree, all_trees, compose_forests, full_tree, graft,
    random_forest, random_tree,
)
from .plmaps import compose_pl
from .scalars import EXACT, NumericRing, RationalFunction
from .thompson import (
    FElement, element_D, generator_A, generator_B, identity, inverse,
    multiply, multiply_rewrite, power_A, reduce_pair, sigma, to_pl_map,
)

RING = EXACT
D_MINUS_1 = RationalFunction.d() - 1
D_MINUS_2 = RationalFunction.d() - 2
ONE = RationalFunction.from_int(1)


class CriterionResult:
    __slots__ = ("number", "name", "passed", "detail", "seconds", "scalars")

    def __init__(self, number: int, name: str, passed: bool, detail: str,
                 seconds: float, scalars=None):
        self.number = number
        self.name = name
        self.passed = passed
        self.detail = detail
        self.seconds = seconds
        # (label, exact scalar, recompute-at-numeric-delta callable) triples
        # collected for the exact/numeric agreement criterion.
        self.scalars = scalars or []

    def __repr__(self):
        status = "PASS" if self.passed else "FAIL"
        return (f"[{status}] criterion {self.number}: {self.name} "
                f"({self.seconds:.1f}s) {self.detail}")


def _run(number: int, name: str, body: Callable) -> CriterionResult:
    t0 = time.perf_counter()
    try:
        detail, scalars = body()
        passed = True
    except AssertionError as exc:
        detail, scalars = str(exc), []
        passed = False
    return CriterionResult(number, name, passed, detail,
                           time.perf_counter() - t0, scalars)


def _vectors_equal(u: rep.LimitVector, v: rep.LimitVector) -> bool:
    from .forests import tree_join
    f_u, f_v = tree_join(u.tree, v.tree)
    su, sv = u.stabilize(f_u), v.stabilize(f_v)
    return su.d_half == sv.d_half and su.vec == sv.vec


def criterion_1() -> CriterionResult:
    """Fixed vector: act(A, Psi) = Psi and coeff(psi, A^n) = 1."""

    def body():
        A = generator_A()
        vac = rep.vacuum(RING, "psi", full_tree(2))
        assert _vectors_equal(rep.act(A, vac), vac), \
            "act(A, Psi) differs from Psi as a stabilized vector"
        scalars = []
        for n in range(1, 7):
            c = rep.an_coefficient(RING, "psi", n)
            assert c == ONE, f"coeff(psi, A^{n}) = {c} != 1"
            scalars.append((f"coeff(psi,A^{n})", c,
                            lambda ring, n=n: rep.an_coefficient(ring, "psi", n)))
        return "A Psi = Psi; coeff(psi, A^n) = 1 for n = 1..6", scalars

    return _run(1, "fixed vector", body)


def criterion_2() -> CriterionResult:
    """Inequivalence invariant: coeff(psi, D) = (d-2)/(d-1), independently
    confirmed by the brute-force graph oracle on both closures of D."""

    def body():
        D = element_D()
        d = RationalFunction.d()
        lam = RationalFunction.vertex_norm()
        c = rep.coeff(RING, "psi", D)
        assert c * D_MINUS_1 - D_MINUS_2 == RationalFunction.from_int(0), \
            f"coeff(psi, D)(d-1) - (d-2) = {c * D_MINUS_1 - D_MINUS_2} != 0"

        g_psi = oracle.closed_pair_graph(D, "psi")
        val = oracle.brute_force_eval(g_psi).as_rational() / lam ** 2
        assert val == d * c, \
            "oracle on the root-dropped closure disagrees with d*coeff"

        g_tied = oracle.closed_pair_graph(D, "omega")
        assert (g_tied.vertex_count, g_tied.edge_count) == (6, 9), \
            f"tied closure has {g_tied.vertex_count}v/{g_tied.edge_count}e"
        tied = oracle.brute_force_eval(g_tied).as_rational() / lam ** 3
        c_omega = rep.coeff(RING, "omega", D)
        assert tied == d * c_omega, \
            "oracle on the tied closure disagrees with d*coeff(omega, D)"
        scalars = [("coeff(psi,D)", c,
                    lambda ring: rep.coeff(ring, "psi", element_D()))]
        return (f"coeff(psi,D) = {c}; oracle: dropped-root closure "
                f"({g_psi.vertex_count}v/{g_psi.edge_count}e) = d*coeff, "
                "tied closure (6v/9e, 512 terms) = d*coeff(omega,D)", scalars)

    return _run(2, "inequivalence invariant", body)


def criterion_3() -> CriterionResult:
    """Coefficient factorization: finite lemma-4.3 thresholds."""

    def body():
        B, D = generator_B(), element_D()
        details, scalars = [], []
        for g, h, name in ((D, D, "(D,D)"), (D, B, "(D,B)"), (B, B, "(B,B)")):
            N = rep.lemma43_threshold(RING, g, h, 12)
            assert N is not None and N <= 12, f"no threshold for {name}"
            target = rep.coeff(RING, "psi", g) * rep.coeff(RING, "psi", h)
            for n in range(N, N + 4):
                w = multiply(inverse(h), multiply(power_A(n), g))
                lhs = rep.coeff(RING, "psi", w)
                assert lhs == target, f"{name}: identity fails at n = {n}"
                scalars.append((
                    f"lemma43 {name} n={n}", lhs,
                    lambda ring, w=w: rep.coeff(ring, "psi", w)))
            details.append(f"{name}: N={N}")
        return "; ".join(details), scalars

    return _run(3, "coefficient factorization", body)


def criterion_4() -> CriterionResult:
    """Omega-mode decay of A^n at delta = 2."""

    def body():
        table = rep.decay_check(RING, 15)
        values = [c.evaluate(2.0) for _, c, _ in table]
        for i in range(1, len(values)):
            n = table[i][0]
            if n >= 2:
                assert abs(values[i]) < abs(values[i - 1]), \
                    f"|a_n| not strictly decreasing at n = {n}"
        ratio = values[-1] / values[-2]
        assert abs(ratio - 0.5) <= 1e-8, \
            f"ratio {ratio} not within 1e-8 of 1/2 at n = 15"
        scalars = [(f"coeff(omega,A^{n})", c,
                    lambda ring, n=n: rep.an_coefficient(ring, "omega", n))
                   for n, c, _ in table[:6]]
        return f"strictly decreasing to n = 15; final ratio {ratio}", scalars

    return _run(4, "omega-mode decay", body)


def criterion_5() -> CriterionResult:
    """Sigma-limit: <sigma^n(g) Psi, Psi> stabilizes at coeff(omega, g)."""

    def body():
        vac = rep.vacuum(RING, "psi", full_tree(2))
        details, scalars = [], []
        for g, name in ((generator_A(), "A"), (element_D(), "D")):
            N = rep.sigma_limit_check(RING, g, vac, vac, 10)
            assert N is not None and N <= 10, f"no sigma threshold for {name}"
            limit = rep.coeff(RING, "omega", g)
            if name == "A":
                assert limit != ONE, "sigma-limit of A should differ from 1"
            details.append(f"{name}: N={N}, limit={limit}")
            w = g
            for _ in range(N):
                w = sigma(w)
            scalars.append((
                f"<sigma^{N}({name})Psi,Psi>", rep.coeff(RING, "psi", w),
                lambda ring, w=w: rep.coeff(ring, "psi", w)))
        return "; ".join(details), scalars

    return _run(5, "sigma-limit", body)


def criterion_6() -> CriterionResult:
    """Weak limit of A^n is the projection onto Psi."""

    def body():
        t2 = full_tree(2)
        vac = rep.vacuum(RING, "psi", t2)
        B, D = generator_B(), element_D()
        vectors = {
            "Psi": vac,
            "DPsi": rep.act(D, vac),
            "BPsi": rep.act(B, vac),
        }
        # Two vectors outside the vacuum orbit: cabled basis diagrams over
        # the full 4-leaf tree (nested cups, and a mixed pairing).
        proj = tl.p2(RING)
        for _ in range(3):
            proj = proj.tensor(tl.p2(RING))
        for label, match in (("nested", (7, 6, 5, 4, 3, 2, 1, 0)),
                             ("mixed", (7, 2, 1, 4, 3, 6, 5, 0))):
            vec = tl.tl_compose(tl.TLMor.from_match(RING, 0, 8, match), proj)
            v = rep.LimitVector("psi", t2, vec)
            assert not rep.inner(v, v).is_zero(), f"{label} vector is zero"
            vectors[label] = v
        details, scalars = [], []
        for name_u, u in vectors.items():
            for name_v, v in vectors.items():
                N = rep.weak_limit_projection_check(RING, u, v, 12)
                assert N is not None, f"no weak-limit N for ({name_u},{name_v})"
                details.append(f"({name_u},{name_v}):N={N}")
                if name_u == name_v:
                    n_probe = N + 1
                    scalars.append((
                        f"<A^{n_probe} {name_u}, {name_v}>",
                        rep.pair_with_element(power_A(n_probe), u, v),
                        lambda ring, u=u, v=v, n=n_probe: rep.pair_with_element(
                            power_A(n),
                            _renumber(u, ring), _renumber(v, ring))))
        return " ".join(details), scalars

    return _run(6, "weak limit to projection", body)


def _renumber(v: rep.LimitVector, ring) -> rep.LimitVector:
    """The same limit vector with coefficients moved to another ring."""
    if ring is v.ring:
        return v
    terms = {}
    for match, c in v.vec.terms.items():
        terms[match] = c.evaluate(ring.delta)
    vec = tl.TLMor(ring, v.vec.src, v.vec.dst, terms, v.vec.vertex_count)
    return rep.LimitVector(v.mode, v.tree, vec, v.d_half, v.is_vacuum)


def criterion_7() -> CriterionResult:
    """Category sanity: loop value, dim C1 = 0, lambda, forest isometry."""

    def body():
        # Closed cabled loop.
        loop = tl.close_scalar(tl.p2(RING)).as_rational()
        assert loop == RationalFunction.d(), f"closed loop = {loop} != d"
        # p2 kills the cup.
        killed = tl.apply_p2(tl.cup(RING), 1)
        assert killed.is_zero(), "p2 o cup != 0"
        # Vertex normalization.
        lam = tl.vertex_norm_rational()
        assert lam == RationalFunction.vertex_norm(), f"lambda = {lam}"
        # Isometry of forest maps on random cabled vectors.
        rng = random.Random(20260823)
        for trial in range(100):
            # At least two cables: the one-cable invariant space is zero.
            a = rng.randint(2, 3)
            f = random_forest(rng, a, rng.randint(a, a + 3))
            u, v = (_random_cabled_vector(rng, a) for _ in range(2))
            phi = tl.forest_to_morphism(RING, f)
            lhs = tl.inner_product(tl.tl_compose(u, phi),
                                   tl.tl_compose(v, phi))
            assert lhs == tl.inner_product(u, v), \
                f"forest map is not isometric (trial {trial})"
        return "loop = d; p2 o cup = 0; lambda = (d-1)/delta; 100 isometries", []

    return _run(7, "category sanity", body)


def _random_cabled_vector(rng: random.Random, cables: int) -> tl.TLMor:
    """A nonzero vector 0 -> 2*cables in the cabled category."""
    proj = tl.p2(RING)
    for _ in range(cables - 1):
        proj = proj.tensor(tl.p2(RING))
    while True:
        matches = list(tl.all_pairings(0, 2 * cables))
        base = tl.TLMor.from_match(RING, 0, 2 * cables, rng.choice(matches))
        out = tl.tl_compose(base, proj)
        if not out.is_zero():
            return out


def criterion_8() -> CriterionResult:
    """Group engine: two multiplications and the PL oracle agree."""

    def body():
        rng = random.Random(97)
        gens = [generator_A(), generator_B(), element_D()]
        gens += [inverse(g) for g in gens]

        def word(k):
            g = identity()
            for _ in range(k):
                g = multiply(g, rng.choice(gens))
            return g

        for _ in range(500):
            g, h = word(rng.randint(0, 8)), word(rng.randint(0, 8))
            p1 = multiply(g, h)
            p2_ = multiply_rewrite(g, h)
            assert p1 == p2_, f"multiply vs rewrite mismatch: {g} * {h}"
            assert to_pl_map(p1) == compose_pl(to_pl_map(g), to_pl_map(h)), \
                f"PL oracle mismatch: {g} * {h}"
        for trial in range(500):
            g = word(rng.randint(1, 6))
            f = random_forest(rng, g.leaf_count, g.leaf_count + rng.randint(1, 4))
            top, bottom = graft(g.top, f), graft(g.bottom, f)
            assert FElement(top, bottom) == g, f"confluence fails (trial {trial})"
        return "500 multiplication triples; 500 reductions confluent", []

    return _run(8, "group engine oracle", body)


def criterion_9() -> CriterionResult:
    """Gram positivity at three admissible deltas."""

    def body():
        A, B, D = generator_A(), generator_B(), element_D()
        els = [identity(), A, B, D, multiply(D, B), D ** 2]
        G = rep.gram(RING, "psi", els)
        details = []
        for delta in (2 * math.cos(math.pi / 5), 2 * math.cos(math.pi / 6), 2.0):
            eig = rep.psd_check(G, delta)
            assert eig >= -1e-9, f"min eigenvalue {eig} at delta = {delta}"
            details.append(f"min eig {eig:.2e} at delta={delta:.4f}")
        return "; ".join(details), []

    return _run(9, "Gram positivity", body)


def criterion_10(earlier: List[CriterionResult]) -> CriterionResult:
    """Exact scalars from criteria 1-6 match numeric mode at delta = 2."""

    def body():
        ring = NumericRing(2.0, warn=False)
        count = 0
        for res in earlier:
            for label, exact, recompute in res.scalars:
                numeric = recompute(ring)
                expected = exact.evaluate(2.0)
                assert abs(numeric - expected) <= 1e-9, \
                    f"{label}: exact {expected} vs numeric {numeric}"
                count += 1
        assert count > 0, "no scalars were collected from criteria 1-6"
        return f"{count} scalars agree to 1e-9 at delta = 2", []

    return _run(10, "exact/numeric agreement", body)


def run_all() -> List[CriterionResult]:
    results = [
        criterion_1(), criterion_2(), criterion_3(), criterion_4(),
        criterion_5(), criterion_6(), criterion_7(), criterion_8(),
        criterion_9(),
    ]
    results.append(criterion_10(results[:6]))
    return results
