"""End-to-end checks of the corollaries and propositions, with their converse witnesses.

Every scenario returns a :class:`ScenarioResult`: a list of checks, each with
an expected outcome.  Negative halves ("not preserved") are checks whose
expected outcome is a failure of the named laws.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from .diagram import LayeredDiagram, Node, Wire, compose, identity, tensor, topology
from .evaluation import Labelling
from .frobenius import (AlgebraFunctor, BasisPermutationFunctor, ComposedFunctor,
                        algebra_induced_functor, barbell, check_braided_functor,
                        check_frobenius_functor, complex_over_rationals, conjugate_morphism,
                        dual_numbers, group_algebra_frobenius, is_strong, nary_phi, nary_psi,
                        verify_invariance)
from .laws import LawReport
from .matrix import I, MatMorphism, MatObject, braiding, compose_all, ident, mat_compose, mat_tensor
from .random_diagrams import GeneratorConfig, random_morphism
from .structures import (DistLawData, LaxYBData, WeakYBData, check_bimonoid,
                         check_distributive_law, check_lax_yb, check_prebimonoidal,
                         check_weak_bimonoid, check_weak_distributive_law, check_weak_yb,
                         check_yb, conjugate_bimonoid, conjugate_distributive_law,
                         group_bimonoid, r_matrix, splitting_functor, weak_yb_from_conjugate)


@dataclass
class Check:
    name: str
    expected: bool
    observed: bool
    failed_laws: list = field(default_factory=list)
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.expected == self.observed

    def to_dict(self) -> dict:
        out = {"check": self.name, "expected": "holds" if self.expected else "fails",
               "observed": "holds" if self.observed else "fails", "passed": self.passed}
        if self.failed_laws:
            out["failed_laws"] = self.failed_laws
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class ScenarioResult:
    name: str
    claim: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(c.passed for c in self.checks)

    def add(self, name: str, outcome, expected: bool = True, expect_failed: Optional[Iterable] = None,
            detail: str = "") -> Check:
        """Record a check.  ``outcome`` is a bool or a :class:`LawReport`.

        With ``expect_failed`` the observed failure set must match it exactly.
        """
        failed: list = []
        if isinstance(outcome, LawReport):
            failed = sorted(outcome.failed_laws())
            observed = outcome.ok
            if expect_failed is not None:
                expected = False
                if set(failed) != set(expect_failed):
                    detail = (detail + "; " if detail else "") + \
                        f"expected exactly {sorted(expect_failed)} to fail"
                    observed = True  # mismatch, reported as a failed check
        else:
            observed = bool(outcome)
        c = Check(name, expected, observed, failed, detail)
        self.checks.append(c)
        return c

    def to_dict(self) -> dict:
        return {"scenario": self.name, "claim": self.claim, "passed": self.passed,
                "checks": [c.to_dict() for c in self.checks]}


def _functors():
    return {"complex(2,0)": algebra_induced_functor(complex_over_rationals(2, 0)),
            "group(2)": algebra_induced_functor(group_algebra_frobenius(2))}


def _conj_family(F, y: Callable) -> Callable:
    return lambda a, b: conjugate_morphism(F, y(a, b), [a, b], [b, a])


def _conj_weak_yb(G, w: WeakYBData) -> WeakYBData:
    parts = [w.carrier, w.carrier]
    return WeakYBData(G.object_map(w.carrier),
                      *(conjugate_morphism(G, f, parts, parts) for f in (w.nabla, w.y, w.y_prime)))


def _lax_examples(rng: random.Random):
    v = MatObject.named("V", 2)
    g = random_morphism(rng, v, v)
    g = mat_compose(g, MatMorphism(v, v, [[1, 0], [0, 0]]))  # rank one, so y is singular
    return {"swap": braiding(v, v), "r-matrix(2)": r_matrix(2),
            "c(g⊗g) singular": mat_compose(braiding(v, v), mat_tensor(g, g))}, v


# ---------------------------------------------------------------------------

def yb_lax_preservation(seed: int = 0) -> ScenarioResult:
    res = ScenarioResult("yb-lax-preservation",
                         "the conjugate of a lax YB operator under a separable Frobenius functor is lax YB")
    ys, v = _lax_examples(random.Random(f"{seed}:lax"))
    for fname, F in _functors().items():
        for yname, y in ys.items():
            res.add(f"{yname} is lax YB", check_lax_yb(LaxYBData(v, y)))
            yf = conjugate_morphism(F, y, [v, v], [v, v])
            res.add(f"{yname}^F lax YB under {fname}", check_lax_yb(LaxYBData(F.object_map(v), yf)))
    return res


def yb_not_preserved(seed: int = 0) -> ScenarioResult:
    res = ScenarioResult("yb-not-preserved",
                         "the conjugate of a YB operator is lax YB but need not be invertible")
    a = MatObject.named("A", 2)
    F = _functors()["complex(2,0)"]
    for yname, y, obj in (("swap", braiding(a, a), a), ("r-matrix(2)", r_matrix(2), MatObject.named("V", 2))):
        res.add(f"{yname} is YB", check_yb(LaxYBData(obj, y)))
        yf = conjugate_morphism(F, y, [obj, obj], [obj, obj])
        res.add(f"{yname}^F is YB", check_yb(LaxYBData(F.object_map(obj), yf)),
                expect_failed={"invertible"})
    return res


def weak_yb_preservation(seed: int = 0) -> ScenarioResult:
    res = ScenarioResult("weak-yb-preservation",
                         "conjugates of YB and weak YB operators are weak YB")
    fs = _functors()
    F, G = fs["complex(2,0)"], fs["group(2)"]
    a1, v = MatObject.named("A", 1), MatObject.named("V", 2)
    w_swap = weak_yb_from_conjugate(F, LaxYBData(a1, braiding(a1, a1)))
    w_r = weak_yb_from_conjugate(F, LaxYBData(v, r_matrix(2)))
    res.add("swap^F is weak YB", check_weak_yb(w_swap))
    res.add("r-matrix^F is weak YB", check_weak_yb(w_r))
    res.add("swap^F invertible", w_swap.y.is_invertible(), expected=False)
    res.add("(swap^F)^G is weak YB", check_weak_yb(_conj_weak_yb(G, w_swap)))
    res.add("identity-∇ weak YB", check_weak_yb(WeakYBData(v, ident(v @ v), r_matrix(2), r_matrix(2).inverse())))
    return res


def weak_yb_from_splitting(seed: int = 0) -> ScenarioResult:
    res = ScenarioResult("weak-yb-from-splitting",
                         "each weak YB operator is the image of a genuine YB operator in C(D)")
    F = _functors()["complex(2,0)"]
    a = MatObject.named("A", 1)
    w = weak_yb_from_conjugate(F, LaxYBData(a, braiding(a, a)))
    S = splitting_functor(w.carrier, w.nabla)
    res.add("splitting functor separable Frobenius on counts 1,2",
            check_frobenius_functor(S, [1, 2]))
    res.add("splitting functor strong", is_strong(S, [1, 2]), expected=False)
    res.add("y is invertible in C(D) with inverse y'",
            mat_compose(w.y, w.y_prime) == w.nabla and mat_compose(w.y_prime, w.y) == w.nabla)
    res.add("round trip y", conjugate_morphism(S, w.y) == w.y)
    res.add("round trip y'", conjugate_morphism(S, w.y_prime) == w.y_prime)
    # with phi0, psi0 mutually inverse a Frobenius square through the unit forces strongness
    unit_report = check_frobenius_functor(S, [0, 1]).subset({"frobenius-left", "frobenius-right"})
    res.add("Frobenius squares with the unit count in the middle", unit_report,
            expect_failed={"frobenius-left", "frobenius-right"},
            detail="F(0) = I with φ₀ψ₀ = 1 would force ψφ = 1")
    return res


def _swap_law(prefix_a="A", prefix_b="B") -> DistLawData:
    g, h = group_bimonoid(2, prefix_a), group_bimonoid(2, prefix_b)
    return DistLawData(g.carrier, g.mu, g.eta, h.carrier, h.mu, h.eta, braiding(g.carrier, h.carrier))


def _trivial_law() -> DistLawData:
    q = MatObject.named("Q", 1)
    one = MatMorphism(q @ q, q, [[1]])
    unit = MatMorphism(I, q, [[1]])
    return DistLawData(q, one, unit, q, one, unit, ident(q @ q))


def weak_distlaw_preservation(seed: int = 0) -> ScenarioResult:
    res = ScenarioResult("weak-distlaw-preservation",
                         "conjugates of (weak) distributive laws are weak distributive laws")
    fs = _functors()
    F, G = fs["complex(2,0)"], fs["group(2)"]
    d = _swap_law()
    res.add("swap law on Q[Z/2] strict", check_distributive_law(d))
    res.add("conjugate weak", check_weak_distributive_law(conjugate_distributive_law(F, d)))
    w = conjugate_distributive_law(F, _trivial_law())
    res.add("conjugate of trivial law weak", check_weak_distributive_law(w))
    res.add("conjugate of a weak law weak", check_weak_distributive_law(conjugate_distributive_law(G, w)))
    return res


def distlaw_not_preserved(seed: int = 0) -> ScenarioResult:
    res = ScenarioResult("distlaw-not-preserved",
                         "conjugates of distributive laws need not satisfy the strict unit equations")
    F = _functors()["complex(2,0)"]
    d = _swap_law()
    res.add("swap law strict", check_distributive_law(d))
    res.add("conjugate strict", check_distributive_law(conjugate_distributive_law(F, d)),
            expect_failed={"lambda-unit-a", "lambda-unit-b"})
    return res


def weak_bimonoid_preservation(seed: int = 0) -> ScenarioResult:
    res = ScenarioResult("weak-bimonoid-preservation",
                         "conjugates of weak bimonoids are weak bimonoids")
    fs = _functors()
    res.add("Q[Z/3] weak bimonoid", check_weak_bimonoid(group_bimonoid(3)))
    # Z/3 conjugates live on dimension 6 and the weak unit chains on 6^3; Z/2 stays small
    b = group_bimonoid(2)
    res.add("Q[Z/2] weak bimonoid", check_weak_bimonoid(b))
    for fname, F in fs.items():
        res.add(f"Q[Z/2]^F weak under {fname}", check_weak_bimonoid(conjugate_bimonoid(F, b)))
    return res


def bimonoid_not_preserved(seed: int = 0) -> ScenarioResult:
    res = ScenarioResult("bimonoid-not-preserved",
                         "conjugates of genuine bimonoids need not be bimonoids")
    F = _functors()["complex(2,0)"]
    b = group_bimonoid(2)
    res.add("Q[Z/2] bimonoid", check_bimonoid(b))
    res.add("Q[Z/2]^F bimonoid", check_bimonoid(conjugate_bimonoid(F, b)),
            expect_failed={"delta-eta", "epsilon-mu", "epsilon-eta"})
    res.add("Q[Z/2]^F weak bimonoid", check_weak_bimonoid(conjugate_bimonoid(F, b)))
    return res


def chain_diagram(labels: list[str], start_top: bool, wire: str = "A") -> LayeredDiagram:
    """``(x_n ⊗ 1)(1 ⊗ x_{n-1})⋯`` read right to left; ``labels`` in reading order.

    ``start_top`` places the first node (applied first) on the top pair.
    """
    slices = []
    top = start_top
    for k, sym in enumerate(labels):
        node = Node(sym, (wire, wire), (wire, wire), k)
        slices.append((node, Wire(wire)) if top else (Wire(wire), node))
        top = not top
    word = (wire,) * 3
    return LayeredDiagram(word, word, slices)


def _chain_value(ms: list[MatMorphism], start_top: bool, a: MatObject) -> MatMorphism:
    out, top = ident(a @ a @ a), start_top
    for m in ms:
        step = mat_tensor(m, ident(a)) if top else mat_tensor(ident(a), m)
        out, top = mat_compose(step, out), not top
    return out


def _chain_sides(n: int):
    """Reading-order node orders of both sides for ``n`` factors."""
    # lhs = (a_n ⊗ 1)(1 ⊗ a_{n-1})⋯ : a_1 is applied first, a_n (top) last
    lhs_top_first = (n % 2 == 1)
    rhs_top_first = not lhs_top_first
    return lhs_top_first, rhs_top_first


def alternating_chain(seed: int = 0) -> ScenarioResult:
    res = ScenarioResult("alternating-chain",
                         "equations between alternating chains on A⊗A⊗A are stable under conjugation")
    rng = random.Random(f"{seed}:chain")
    fs = _functors()
    F_sep = fs["complex(2,0)"]
    F_frob = algebra_induced_functor(dual_numbers())

    def run(tag, n, a, as_, bs, functors):
        lt, rt = _chain_sides(n)
        holds = _chain_value(as_, lt, a) == _chain_value(bs, rt, a)
        res.add(f"{tag}: equation holds (n={n})", holds)
        for fname, F in functors.items():
            ca = [conjugate_morphism(F, m, [a, a], [a, a]) for m in as_]
            cb = [conjugate_morphism(F, m, [a, a], [a, a]) for m in bs]
            fa = F.object_map(a)
            res.add(f"{tag}: conjugate equation under {fname}",
                    _chain_value(ca, lt, fa) == _chain_value(cb, rt, fa))

    # n = 3: the YB equation for y = c(g⊗g)
    a = MatObject.named("A", 2)
    g = random_morphism(rng, a, a)
    y = mat_compose(braiding(a, a), mat_tensor(g, g))
    run("yb", 3, a, [y] * 3, [y] * 3, {"complex(2,0)": F_sep})

    # spiders δμ of a Frobenius algebra on A
    def spider(alg):
        return mat_compose(alg.delta, alg.mu).retype(a @ a, a @ a)

    sep = group_algebra_frobenius(2)
    run("spider n=2", 2, a, [spider(sep)] * 2, [spider(sep)] * 2, {"complex(2,0)": F_sep})
    run("spider n=4", 4, a, [spider(sep)] * 4, [spider(sep)] * 4, {"complex(2,0)": F_sep})
    dual = dual_numbers()
    run("dual spider n=2", 2, a, [spider(dual)] * 2, [spider(dual)] * 2, {"dual": F_frob})

    # each side is connected, so its value is invariant for arbitrary labels
    for n in (2, 3, 4):
        for side, top in zip(("lhs", "rhs"), _chain_sides(n)):
            syms = [f"x{k}" for k in range(n)]
            d = chain_diagram(syms, top)
            v = Labelling({"A": a}, {s: random_morphism(rng, a @ a, a @ a) for s in syms},
                          {s: (("A", "A"), ("A", "A")) for s in syms})
            functors = {"complex(2,0)": F_sep}
            if topology(d).betti1 == 0:
                functors["dual"] = F_frob
            for fname, F in functors.items():
                res.add(f"random {side} n={n} invariant under {fname}",
                        verify_invariance(F, d, v).equal)
    return res


def _quadruples(rng: random.Random, objs, k: int):
    all_q = list(itertools.product(objs, repeat=4))
    rng.shuffle(all_q)
    return all_q[:k]


def prebimonoidal_from_separable(seed: int = 0) -> ScenarioResult:
    res = ScenarioResult("prebimonoidal-from-separable",
                         "a separable Frobenius functor is prebimonoidal relative to y and y^F")
    rng = random.Random(f"{seed}:pre")
    objs = [MatObject.named("A", 1), MatObject.named("B", 2), MatObject.named("E", 1)]
    quads = _quadruples(rng, objs, 24)
    for fname, F in _functors().items():
        res.add(f"braiding family under {fname} ({len(quads)} quadruples)",
                check_prebimonoidal(F, braiding, _conj_family(F, braiding), quads))
    v = MatObject.named("V", 2)
    r = r_matrix(2)

    def y(a, b):
        return r

    F = _functors()["complex(2,0)"]
    res.add("r-matrix on V under complex(2,0)",
            check_prebimonoidal(F, y, _conj_family(F, y), [(v, v, v, v)]))
    return res


def prebimonoidal_compose(seed: int = 0) -> ScenarioResult:
    res = ScenarioResult("prebimonoidal-compose", "prebimonoidal functors compose")
    rng = random.Random(f"{seed}:compose")
    fs = _functors()
    F, G = fs["complex(2,0)"], fs["group(2)"]
    objs = [MatObject.named("A", 1), MatObject.named("B", 2), MatObject.named("E", 1)]
    # at most one 2-dimensional factor keeps GF(A⊗B⊗C⊗D) at dimension <= 8
    quads = [q for q in _quadruples(rng, objs, 81) if sum(o.dim for o in q) <= 5][:20]
    z = _conj_family(F, braiding)

    def w(a, b):
        return conjugate_morphism(G, z(a, b), [F.object_map(a), F.object_map(b)],
                                  [F.object_map(b), F.object_map(a)])

    res.add("F prebimonoidal relative to (c, c^F)", check_prebimonoidal(F, braiding, z, quads))
    res.add("G prebimonoidal relative to (c^F, (c^F)^G)",
            check_prebimonoidal(G, z, w, quads, T=F.object_map))
    res.add("GF prebimonoidal relative to (c, (c^F)^G)",
            check_prebimonoidal(ComposedFunctor(G, F), braiding, w, quads))
    return res


def strong_iff_braided(seed: int = 0) -> ScenarioResult:
    res = ScenarioResult("strong-iff-braided",
                         "a strong monoidal functor is prebimonoidal relative to the braidings iff braided")
    a, b = MatObject.named("A", 2), MatObject.named("B", 3)
    samples = [a, b]
    quads = list(itertools.product(samples, repeat=4))
    perms = {"A": [1, 0], "B": [2, 0, 1]}
    cases = {
        "identity twist": BasisPermutationFunctor(perms, {}),
        "symmetric twist": BasisPermutationFunctor(perms, {("A", "B"): 1, ("B", "A"): 1}),
        "asymmetric twist": BasisPermutationFunctor(perms, {("A", "B"): 1}),
    }
    for name, F in cases.items():
        res.add(f"{name}: strong", is_strong(F, samples))
        braided = check_braided_functor(F, samples).ok
        pre = check_prebimonoidal(F, braiding, braiding, quads).ok
        res.add(f"{name}: prebimonoidal iff braided", braided == pre,
                detail=f"braided={braided}, prebimonoidal={pre}")
        res.add(f"{name}: braided", braided, expected=(name != "asymmetric twist"))
    return res


def barbell_counterexample(seed: int = 0) -> ScenarioResult:
    res = ScenarioResult("barbell-counterexample",
                         "disconnected and cyclic diagrams fail invariance for suitable functors")
    c2, dual = complex_over_rationals(2, 0), dual_numbers()
    res.add("complex(2,0) barbell = 2", barbell(c2) == MatMorphism.scalar(2))
    res.add("dual numbers barbell = 0", barbell(dual) == MatMorphism.scalar(0))
    F, D = algebra_induced_functor(c2), algebra_induced_functor(dual)
    a = MatObject.named("A", 2)
    two_wires = identity(("A", "A"))
    v = Labelling({"A": a}, {})
    res.add("two wires invariant under complex(2,0)", verify_invariance(F, two_wires, v).equal,
            expected=False)
    bar = compose(LayeredDiagram((), ("A",), ((Node("eta", (), ("A",)),),)),
                  LayeredDiagram(("A",), (), ((Node("eps", ("A",), ()),),)))
    vb = Labelling({"A": a}, {"eta": MatMorphism(I, a, [[1], [0]]), "eps": MatMorphism(a, I, [[1, 1]])},
                   {"eta": ((), ("A",)), "eps": (("A",), ())})
    res.add("barbell invariant under complex(2,0)", verify_invariance(F, bar, vb).equal)
    res.add("tensored barbells invariant under complex(2,0)",
            verify_invariance(F, tensor(bar, bar), vb).equal, expected=False)
    bubble = LayeredDiagram(("C",), ("C",), ((Node("delta", ("C",), ("C", "C"), 0),),
                                             (Node("mu", ("C", "C"), ("C",), 1),)))
    for name, alg, functor, expect in (("dual", dual, D, False), ("complex(2,0)", c2, F, True)):
        vd = Labelling({"C": alg.carrier}, {"delta": alg.delta, "mu": alg.mu},
                       {"delta": (("C",), ("C", "C")), "mu": (("C", "C"), ("C",))})
        res.add(f"bubble with {name} spiders invariant under {name}",
                verify_invariance(functor, bubble, vd).equal, expected=expect)
    return res


SCENARIOS: dict[str, Callable[..., ScenarioResult]] = {
    "yb-lax-preservation": yb_lax_preservation,
    "yb-not-preserved": yb_not_preserved,
    "weak-yb-preservation": weak_yb_preservation,
    "weak-yb-from-splitting": weak_yb_from_splitting,
    "weak-distlaw-preservation": weak_distlaw_preservation,
    "distlaw-not-preserved": distlaw_not_preserved,
    "weak-bimonoid-preservation": weak_bimonoid_preservation,
    "bimonoid-not-preserved": bimonoid_not_preserved,
    "alternating-chain": alternating_chain,
    "prebimonoidal-compose": prebimonoidal_compose,
    "prebimonoidal-from-separable": prebimonoidal_from_separable,
    "strong-iff-braided": strong_iff_braided,
    "barbell-counterexample": barbell_counterexample,
}


def run_scenario(name: str, seed: int = 0) -> ScenarioResult:
    if name not in SCENARIOS:
        raise KeyError(f"unknown scenario {name!r}; known: {', '.join(SCENARIOS)}")
    return SCENARIOS[name](seed)
