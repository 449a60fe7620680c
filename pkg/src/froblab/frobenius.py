"""Frobenius algebras and Frobenius monoidal functors on the matrix backend.

A functor here is anything exposing ``object_map``, ``morphism_map`` and the
structure maps ``phi``, ``psi``, ``phi0``, ``psi0``.  Nothing about the laws
is assumed; :func:`check_frobenius_functor` verifies them exactly on sample
objects.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .diagram import LayeredDiagram
from .evaluation import Labelling, MATRIX, BackendHandle, evaluate
from .laws import LawCheckError, LawReport
from .matrix import (I, MatMorphism, MatObject, ShapeError, braiding, compose_all, ident,
                     mat_compose, mat_tensor, parse_scalar, tensor_all)


# ---------------------------------------------------------------------------
# algebras

@dataclass(frozen=True)
class FrobeniusAlgebra:
    carrier: MatObject
    mu: MatMorphism
    eta: MatMorphism
    delta: MatMorphism
    epsilon: MatMorphism
    name: str = ""

    def __post_init__(self):
        c = self.carrier
        expected = {"mu": (c @ c, c), "eta": (I, c), "delta": (c, c @ c), "epsilon": (c, I)}
        for attr, (dom, cod) in expected.items():
            f = getattr(self, attr)
            if f.dom != dom or f.cod != cod:
                raise ShapeError(f"{attr} must be {dom} -> {cod}, got {f.dom} -> {f.cod}")

    def to_float(self) -> "FrobeniusAlgebra":
        return FrobeniusAlgebra(self.carrier, self.mu.to_float(), self.eta.to_float(),
                                self.delta.to_float(), self.epsilon.to_float(), self.name)


def _column(obj: MatObject, coeffs) -> MatMorphism:
    return MatMorphism(I, obj, [[x] for x in coeffs])


def multiplication(carrier: MatObject, table) -> MatMorphism:
    """``table[i][j]`` lists the coordinates of ``e_i e_j``."""
    n = carrier.dim
    rows = [[Fraction(0)] * (n * n) for _ in range(n)]
    for i in range(n):
        for j in range(n):
            for k, x in enumerate(table[i][j]):
                rows[k][i * n + j] = parse_scalar(x)
    return MatMorphism(carrier @ carrier, carrier, rows)


def frobenius_algebra_from_form(name: str, table, unit, form, label: Optional[str] = None
                                ) -> FrobeniusAlgebra:
    """Build ``(C, μ, η, δ, ε)`` from structure constants and a Frobenius form.

    The comultiplication comes from the dual basis of the pairing
    ``β(u, w) = ε(uw)``: with ``κ = Σ e_i ⊗ e^i`` we set ``δ = (μ ⊗ 1)(1 ⊗ κ)``.
    """
    n = len(unit)
    carrier = MatObject.named(label or name, n)
    mu = multiplication(carrier, table)
    eta = _column(carrier, unit)
    epsilon = MatMorphism(carrier, I, [list(form)])
    form = [parse_scalar(x) for x in form]
    pairing = [[sum(parse_scalar(c) * f for c, f in zip(table[i][j], form)) for j in range(n)]
               for i in range(n)]
    pair = MatMorphism(carrier, carrier, pairing)
    if pair.rank() < n:
        raise ValueError(f"form {form} is degenerate on {name}")
    g = pair.inverse().entries()
    kappa = _column(carrier @ carrier, [g[k][i] for i in range(n) for k in range(n)])
    delta = compose_all(mat_tensor(ident(carrier), kappa), mat_tensor(mu, ident(carrier)))
    return FrobeniusAlgebra(carrier, mu, eta, delta, epsilon, name)


def complex_over_rationals(a=2, b=0) -> FrobeniusAlgebra:
    """ℚ(i) with basis (1, i) and form ``x + iy ↦ ax + by``."""
    a, b = parse_scalar(a), parse_scalar(b)
    if a == 0 and b == 0:
        raise ValueError("the form 0 is degenerate")
    table = [[(1, 0), (0, 1)], [(0, 1), (-1, 0)]]
    return frobenius_algebra_from_form(f"complex({a},{b})", table, (1, 0), (a, b), label="C")


def dual_numbers() -> FrobeniusAlgebra:
    """ℚ[x]/(x²) with basis (1, x) and form ``a + bx ↦ b``."""
    table = [[(1, 0), (0, 1)], [(0, 1), (0, 0)]]
    return frobenius_algebra_from_form("dual", table, (1, 0), (0, 1), label="C")


def matrix_algebra_frobenius(n: int) -> FrobeniusAlgebra:
    """n×n matrices, basis ``E_ij`` (index ``i*n+j``), form ``n·trace``."""
    if n < 1:
        raise ValueError("n must be positive")
    dim = n * n
    table = [[[0] * dim for _ in range(dim)] for _ in range(dim)]
    for i, j, k, l in itertools.product(range(n), repeat=4):
        if j == k:
            table[i * n + j][k * n + l][i * n + l] = 1
    unit = [1 if i == j else 0 for i in range(n) for j in range(n)]
    form = [n if i == j else 0 for i in range(n) for j in range(n)]
    return frobenius_algebra_from_form(f"matrix({n})", table, unit, form, label="C")


def group_algebra_frobenius(n: int) -> FrobeniusAlgebra:
    """ℚ[ℤ/n] with form ``g ↦ n·[g = e]``, which makes it separable."""
    table = [[[1 if k == (i + j) % n else 0 for k in range(n)] for j in range(n)]
             for i in range(n)]
    unit = [1] + [0] * (n - 1)
    form = [n] + [0] * (n - 1)
    return frobenius_algebra_from_form(f"group({n})", table, unit, form, label="C")


ALGEBRAS = {
    "dual": dual_numbers,
    "complex": complex_over_rationals,
    "matrix": matrix_algebra_frobenius,
    "group": group_algebra_frobenius,
}


def algebra_by_name(spec: str) -> FrobeniusAlgebra:
    """``"complex(2,0)"``, ``"dual"``, ``"matrix(2)"``, ``"group(3)"``."""
    spec = spec.replace(" ", "")
    name, _, rest = spec.partition("(")
    args = [a for a in rest.rstrip(")").split(",") if a] if rest else []
    if name not in ALGEBRAS:
        raise KeyError(f"unknown algebra {spec!r}")
    if name in ("matrix", "group"):
        return ALGEBRAS[name](*map(int, args))
    return ALGEBRAS[name](*map(Fraction, args))


def check_monoid(report: LawReport, a: MatObject, mu: MatMorphism, eta: MatMorphism,
                 prefix: str = "") -> None:
    one = ident(a)
    report.check(prefix + "mu-assoc", mat_compose(mu, mat_tensor(mu, one)),
                 mat_compose(mu, mat_tensor(one, mu)))
    report.check(prefix + "mu-unit-left", mat_compose(mu, mat_tensor(eta, one)), one)
    report.check(prefix + "mu-unit-right", mat_compose(mu, mat_tensor(one, eta)), one)


def check_comonoid(report: LawReport, a: MatObject, delta: MatMorphism, eps: MatMorphism,
                   prefix: str = "") -> None:
    one = ident(a)
    report.check(prefix + "delta-coassoc", mat_compose(mat_tensor(delta, one), delta),
                 mat_compose(mat_tensor(one, delta), delta))
    report.check(prefix + "delta-counit-left", mat_compose(mat_tensor(eps, one), delta), one)
    report.check(prefix + "delta-counit-right", mat_compose(mat_tensor(one, eps), delta), one)


def check_frobenius_algebra(alg: FrobeniusAlgebra) -> LawReport:
    report = LawReport(f"Frobenius algebra {alg.name}".strip())
    c, one = alg.carrier, ident(alg.carrier)
    check_monoid(report, c, alg.mu, alg.eta)
    check_comonoid(report, c, alg.delta, alg.epsilon)
    middle = mat_compose(alg.delta, alg.mu)
    report.check("frobenius-left",
                 compose_all(mat_tensor(one, alg.delta), mat_tensor(alg.mu, one)), middle)
    report.check("frobenius-right",
                 compose_all(mat_tensor(alg.delta, one), mat_tensor(one, alg.mu)), middle)
    return report


def separability_defect(alg: FrobeniusAlgebra) -> MatMorphism:
    """``μ ∘ δ``; the algebra is separable exactly when this is the identity."""
    return mat_compose(alg.mu, alg.delta)


def is_separable(alg: FrobeniusAlgebra) -> bool:
    return separability_defect(alg).is_identity()


def barbell(alg: FrobeniusAlgebra) -> MatMorphism:
    return mat_compose(alg.epsilon, alg.eta)


# ---------------------------------------------------------------------------
# functors

class FrobeniusFunctor:
    """Base class: a functor with monoidal (φ, φ₀) and opmonoidal (ψ, ψ₀) structure.

    Source objects default to :class:`MatObject` words; subclasses with other
    source categories override the ``source_*`` hooks.
    """

    kind = "abstract"

    def object_map(self, a):
        raise NotImplementedError

    def morphism_map(self, f: MatMorphism) -> MatMorphism:
        raise NotImplementedError

    def phi(self, a, b) -> MatMorphism:
        raise NotImplementedError

    def psi(self, a, b) -> MatMorphism:
        raise NotImplementedError

    def phi0(self) -> MatMorphism:
        raise NotImplementedError

    def psi0(self) -> MatMorphism:
        raise NotImplementedError

    def source_tensor(self, a, b):
        return a @ b

    def source_unit(self):
        return I

    def source_parts(self, obj: MatObject) -> list:
        return obj.parts()

    def source_braiding(self, a, b) -> MatMorphism:
        return braiding(a, b)

    def __repr__(self):
        return f"<{type(self).__name__} {self.kind}>"


class IdentityFunctor(FrobeniusFunctor):
    kind = "identity"

    def object_map(self, a):
        return a

    def morphism_map(self, f):
        return f

    def phi(self, a, b):
        return ident(a @ b)

    psi = phi

    def phi0(self):
        return ident(I)

    psi0 = phi0


class AlgebraFunctor(FrobeniusFunctor):
    """``F(A) = A ⊗ C`` and ``F(f) = f ⊗ 1_C`` for a Frobenius algebra C.

    ``φ_{A,B} = (1 ⊗ 1 ⊗ μ)(1 ⊗ c_{C,B} ⊗ 1)`` and
    ``ψ_{A,B} = (1 ⊗ c_{B,C} ⊗ 1)(1 ⊗ 1 ⊗ δ)``, ``φ₀ = η``, ``ψ₀ = ε``.
    """

    kind = "algebra"

    def __init__(self, alg: FrobeniusAlgebra):
        self.alg = alg
        self.c = alg.carrier

    def object_map(self, a):
        return a @ self.c

    def morphism_map(self, f):
        return mat_tensor(f, ident(self.c))

    def phi(self, a, b):
        c = self.c
        swap = tensor_all(ident(a), braiding(c, b), ident(c))
        return mat_compose(tensor_all(ident(a @ b), self.alg.mu), swap)

    def psi(self, a, b):
        c = self.c
        split = tensor_all(ident(a @ b), self.alg.delta)
        return mat_compose(tensor_all(ident(a), braiding(b, c), ident(c)), split)

    def phi0(self):
        return self.alg.eta

    def psi0(self):
        return self.alg.epsilon

    def __repr__(self):
        return f"<AlgebraFunctor {self.alg.name}>"


def algebra_induced_functor(alg: FrobeniusAlgebra) -> AlgebraFunctor:
    report = check_frobenius_algebra(alg)
    if not report.ok:
        raise LawCheckError(f"{alg.name} is not a Frobenius algebra: "
                            f"{sorted(report.failed_laws())}", report)
    return AlgebraFunctor(alg)


class BasisPermutationFunctor(FrobeniusFunctor):
    """A strong monoidal functor that is the identity on objects.

    Morphisms are conjugated by a per-factor basis permutation; φ is the
    scalar ``q^{t(A,B)}`` where ``t`` counts factor pairs with ``weights``
    ``{(x, y): k}`` (x a factor name of A, y of B).  The twist is a
    2-cocycle, so φ is associative; the functor is braided exactly when the
    twist is symmetric on the objects involved.
    """

    kind = "strong"

    def __init__(self, perms: Optional[dict] = None, weights: Optional[dict] = None, q=2):
        self.perms = dict(perms or {})
        self.weights = dict(weights or {})
        self.q = parse_scalar(q)

    def _perm(self, obj: MatObject) -> MatMorphism:
        mats = []
        for name, d in obj.factors:
            p = self.perms.get(name, list(range(d)))
            if sorted(p) != list(range(d)):
                raise ValueError(f"bad permutation for factor {name}")
            f = MatObject(((name, d),))
            mats.append(MatMorphism(f, f, [[1 if p[j] == i else 0 for j in range(d)]
                                           for i in range(d)]))
        return tensor_all(*mats) if mats else ident(I)

    def twist(self, a: MatObject, b: MatObject) -> Fraction:
        k = sum(self.weights.get((x, y), 0) for x, _ in a.factors for y, _ in b.factors)
        return self.q ** k

    def object_map(self, a):
        return a

    def morphism_map(self, f):
        return compose_all(self._perm(f.dom).inverse(), f, self._perm(f.cod))

    def phi(self, a, b):
        return MatMorphism.scalar(self.twist(a, b), a @ b)

    def psi(self, a, b):
        return MatMorphism.scalar(1 / self.twist(a, b), a @ b)

    def phi0(self):
        return ident(I)

    psi0 = phi0


class ComposedFunctor(FrobeniusFunctor):
    """``G ∘ F`` with ``φ = G(φ^F) ∘ φ^G`` and ``ψ = ψ^G ∘ G(ψ^F)``."""

    kind = "composite"

    def __init__(self, g: FrobeniusFunctor, f: FrobeniusFunctor):
        self.g, self.f = g, f

    def object_map(self, a):
        return self.g.object_map(self.f.object_map(a))

    def morphism_map(self, x):
        return self.g.morphism_map(self.f.morphism_map(x))

    def phi(self, a, b):
        g, f = self.g, self.f
        return mat_compose(g.morphism_map(f.phi(a, b)), g.phi(f.object_map(a), f.object_map(b)))

    def psi(self, a, b):
        g, f = self.g, self.f
        return mat_compose(g.psi(f.object_map(a), f.object_map(b)), g.morphism_map(f.psi(a, b)))

    def phi0(self):
        return mat_compose(self.g.morphism_map(self.f.phi0()), self.g.phi0())

    def psi0(self):
        return mat_compose(self.g.psi0(), self.g.morphism_map(self.f.psi0()))

    def source_tensor(self, a, b):
        return self.f.source_tensor(a, b)

    def source_unit(self):
        return self.f.source_unit()

    def source_parts(self, obj):
        return self.f.source_parts(obj)

    def source_braiding(self, a, b):
        return self.f.source_braiding(a, b)


def nary_phi(F: FrobeniusFunctor, objs: Sequence) -> MatMorphism:
    """``F A₁ ⊗ ⋯ ⊗ F Aₙ -> F(A₁ ⊗ ⋯ ⊗ Aₙ)``, left-nested."""
    if not objs:
        return F.phi0()
    acc, src = ident(F.object_map(objs[0])), objs[0]
    for b in objs[1:]:
        acc = mat_compose(F.phi(src, b), mat_tensor(acc, ident(F.object_map(b))))
        src = F.source_tensor(src, b)
    return acc


def nary_psi(F: FrobeniusFunctor, objs: Sequence) -> MatMorphism:
    """``F(A₁ ⊗ ⋯ ⊗ Aₙ) -> F A₁ ⊗ ⋯ ⊗ F Aₙ``, left-nested."""
    if not objs:
        return F.psi0()
    acc, src = ident(F.object_map(objs[0])), objs[0]
    for b in objs[1:]:
        acc = mat_compose(mat_tensor(acc, ident(F.object_map(b))), F.psi(src, b))
        src = F.source_tensor(src, b)
    return acc


def conjugate_morphism(F: FrobeniusFunctor, f: MatMorphism, dom_parts=None, cod_parts=None
                       ) -> MatMorphism:
    """``f^F = ψ_{B₁…Bₘ} ∘ F f ∘ φ_{A₁…Aₙ}``."""
    if dom_parts is None:
        dom_parts = F.source_parts(f.dom)
    if cod_parts is None:
        cod_parts = F.source_parts(f.cod)
    return compose_all(nary_phi(F, list(dom_parts)), F.morphism_map(f),
                       nary_psi(F, list(cod_parts)))


def conjugate_labelling(F: FrobeniusFunctor, v: Labelling) -> Labelling:
    wires = {k: F.object_map(a) for k, a in v.wires.items()}
    nodes = {}
    for symbol, f in v.nodes.items():
        dom_parts, cod_parts = v.parts(symbol, f)
        nodes[symbol] = conjugate_morphism(F, f, dom_parts, cod_parts)
    return Labelling(wires, nodes, dict(v.signatures))


@dataclass
class InvarianceResult:
    lhs: MatMorphism
    rhs: MatMorphism
    equal: bool

    def difference(self) -> MatMorphism:
        return self.lhs - self.rhs


def verify_invariance(F: FrobeniusFunctor, d: LayeredDiagram, v: Labelling,
                      backend: BackendHandle = MATRIX) -> InvarianceResult:
    """Compare the value of the conjugate diagram with the conjugate of the value."""
    lhs = evaluate(d, conjugate_labelling(F, v), backend)
    value = evaluate(d, v, backend)
    rhs = conjugate_morphism(F, value, [v.wires[x] for x in d.input],
                             [v.wires[x] for x in d.output])
    return InvarianceResult(lhs, rhs, backend.equal(lhs, rhs))


def _name(*objs) -> str:
    return ",".join(repr(o) for o in objs)


def check_frobenius_functor(F: FrobeniusFunctor, samples: Sequence) -> LawReport:
    """Exact check of the monoidal, opmonoidal, Frobenius and separability laws.

    Pairs and triples range over ``samples`` with repetition.  The
    separability entries are named ``separability``.
    """
    if not samples:
        raise ValueError("need at least one sample object")
    report = LawReport(f"Frobenius functor {F!r}")
    Fo, T = F.object_map, F.source_tensor
    unit = F.source_unit()
    for a in samples:
        fa = ident(Fo(a))
        report.check("phi-unit-left", mat_compose(F.phi(unit, a), mat_tensor(F.phi0(), fa)), fa, _name(a))
        report.check("phi-unit-right", mat_compose(F.phi(a, unit), mat_tensor(fa, F.phi0())), fa, _name(a))
        report.check("psi-counit-left", mat_compose(mat_tensor(F.psi0(), fa), F.psi(unit, a)), fa, _name(a))
        report.check("psi-counit-right", mat_compose(mat_tensor(fa, F.psi0()), F.psi(a, unit)), fa, _name(a))
    for a, b in itertools.product(samples, repeat=2):
        report.check("separability", mat_compose(F.phi(a, b), F.psi(a, b)), ident(Fo(T(a, b))), _name(a, b))
    for a, b, c in itertools.product(samples, repeat=3):
        fa, fc = ident(Fo(a)), ident(Fo(c))
        name = _name(a, b, c)
        report.check("phi-assoc",
                     mat_compose(F.phi(T(a, b), c), mat_tensor(F.phi(a, b), fc)),
                     mat_compose(F.phi(a, T(b, c)), mat_tensor(fa, F.phi(b, c))), name)
        report.check("psi-coassoc",
                     mat_compose(mat_tensor(F.psi(a, b), fc), F.psi(T(a, b), c)),
                     mat_compose(mat_tensor(fa, F.psi(b, c)), F.psi(a, T(b, c))), name)
        report.check("frobenius-left",
                     mat_compose(F.psi(a, T(b, c)), F.phi(T(a, b), c)),
                     mat_compose(mat_tensor(fa, F.phi(b, c)), mat_tensor(F.psi(a, b), fc)), name)
        report.check("frobenius-right",
                     mat_compose(F.psi(T(a, b), c), F.phi(a, T(b, c))),
                     mat_compose(mat_tensor(F.phi(a, b), fc), mat_tensor(fa, F.psi(b, c))), name)
    return report


FROBENIUS_LAWS = ("phi-unit-left", "phi-unit-right", "psi-counit-left", "psi-counit-right",
                  "phi-assoc", "psi-coassoc", "frobenius-left", "frobenius-right")


def is_strong(F: FrobeniusFunctor, samples: Sequence) -> bool:
    """Separable Frobenius with every φ invertible and φ₀, ψ₀ mutually inverse."""
    if not check_frobenius_functor(F, samples).ok:
        return False
    unit = ident(I)
    if mat_compose(F.psi0(), F.phi0()) != unit:
        return False
    if mat_compose(F.phi0(), F.psi0()) != ident(F.object_map(F.source_unit())):
        return False
    for a, b in itertools.product(samples, repeat=2):
        p = F.phi(a, b)
        if not p.is_invertible() or mat_compose(F.psi(a, b), p) != ident(p.dom):
            return False
    return True


def check_braided_functor(F: FrobeniusFunctor, samples: Sequence) -> LawReport:
    """``(c_{A,B})^F = c_{FA,FB}`` for all sample pairs."""
    report = LawReport(f"braided functor {F!r}")
    for a, b in itertools.product(samples, repeat=2):
        conj = conjugate_morphism(F, F.source_braiding(a, b), [a, b], [b, a])
        report.check("braided", conj, braiding(F.object_map(a), F.object_map(b)), _name(a, b))
    return report
