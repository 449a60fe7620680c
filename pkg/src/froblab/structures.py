"""Yang–Baxter operators, distributive laws, bimonoids and the splitting functor."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .frobenius import (FrobeniusFunctor, check_comonoid, check_frobenius_functor,
                        check_monoid, conjugate_morphism)
from .laws import LawCheckError, LawReport
from .matrix import (I, MatMorphism, MatObject, NotIdempotentError, ShapeError, braiding,
                     compose_all, ident, mat_compose, mat_tensor, parse_scalar, split_idempotent,
                     tensor_all)


# ---------------------------------------------------------------------------
# Yang–Baxter operators

@dataclass
class LaxYBData:
    """A lax YB operator on one object, or a family ``y[(i, j)]: T_i ⊗ T_j -> T_j ⊗ T_i``."""

    carrier: Optional[MatObject] = None
    y: Optional[MatMorphism] = None
    carriers: Sequence[MatObject] = ()
    components: dict = field(default_factory=dict)

    @classmethod
    def family(cls, carriers, component: Callable) -> "LaxYBData":
        carriers = list(carriers)
        comps = {(i, j): component(a, b) for (i, a), (j, b)
                 in itertools.product(enumerate(carriers), repeat=2)}
        return cls(carriers=carriers, components=comps)

    @property
    def is_family(self) -> bool:
        return self.y is None


def _hexagon(y_ab, y_ac, y_bc, ta, tb, tc):
    lhs = compose_all(mat_tensor(y_ab, ident(tc)), mat_tensor(ident(tb), y_ac),
                      mat_tensor(y_bc, ident(ta)))
    rhs = compose_all(mat_tensor(ident(ta), y_bc), mat_tensor(y_ac, ident(tb)),
                      mat_tensor(ident(tc), y_ab))
    return lhs, rhs


def check_lax_yb(d: LaxYBData) -> LawReport:
    report = LawReport("lax Yang-Baxter")
    if not d.is_family:
        a = d.carrier
        if d.y.dom != a @ a or d.y.cod != a @ a:
            raise ShapeError("y must be an endomorphism of A ⊗ A")
        report.check("yang-baxter", *_hexagon(d.y, d.y, d.y, a, a, a))
        return report
    ts = d.carriers
    for i, j, k in itertools.product(range(len(ts)), repeat=3):
        lhs, rhs = _hexagon(d.components[i, j], d.components[i, k], d.components[j, k],
                            ts[i], ts[j], ts[k])
        report.check("yang-baxter", lhs, rhs, f"{i},{j},{k}")
    return report


def check_yb(d: LaxYBData) -> LawReport:
    report = check_lax_yb(d)
    ys = [d.y] if not d.is_family else list(d.components.values())
    for k, y in enumerate(ys):
        report.record("invertible", y.is_invertible(), "" if len(ys) == 1 else str(k))
    return report


@dataclass
class WeakYBData:
    carrier: MatObject
    nabla: MatMorphism
    y: MatMorphism
    y_prime: MatMorphism


def check_weak_yb(w: WeakYBData) -> LawReport:
    d = w.carrier
    one = ident(d)
    n, y, yp = w.nabla, w.y, w.y_prime
    if mat_compose(n, n) != n:
        raise NotIdempotentError("∇ is not idempotent")
    report = LawReport("weak Yang-Baxter")
    report.check("nabla-y", mat_compose(n, y), y, "left")
    report.check("nabla-y", mat_compose(y, n), y, "right")
    report.check("nabla-y'", mat_compose(n, yp), yp, "left")
    report.check("nabla-y'", mat_compose(yp, n), yp, "right")
    report.check("y-inverse", mat_compose(y, yp), n, "y∘y'")
    report.check("y-inverse", mat_compose(yp, y), n, "y'∘y")
    report.check("nabla-interchange",
                 mat_compose(mat_tensor(one, n), mat_tensor(n, one)),
                 mat_compose(mat_tensor(n, one), mat_tensor(one, n)))
    report.check("nabla-y-interchange",
                 mat_compose(mat_tensor(one, y), mat_tensor(n, one)),
                 mat_compose(mat_tensor(n, one), mat_tensor(one, y)))
    report.check("y-nabla-interchange",
                 mat_compose(mat_tensor(one, n), mat_tensor(y, one)),
                 mat_compose(mat_tensor(y, one), mat_tensor(one, n)))
    report.check("yang-baxter", *_hexagon(y, y, y, d, d, d), "y")
    report.check("yang-baxter", *_hexagon(yp, yp, yp, d, d, d), "y'")
    return report


WEAK_YB_EQUATIONS = ("nabla-y", "nabla-y'", "y-inverse", "nabla-interchange",
                     "nabla-y-interchange", "y-nabla-interchange")


def weak_yb_from_conjugate(F: FrobeniusFunctor, d: LaxYBData, samples=None,
                           y_inverse: Optional[MatMorphism] = None) -> WeakYBData:
    """``(F D, (1_{D⊗D})^F, y^F, (y⁻¹)^F)`` for a YB operator y on D."""
    a = d.carrier
    report = check_frobenius_functor(F, samples or [a])
    if not report.ok:
        raise LawCheckError("functor is not separable Frobenius: "
                            f"{sorted(report.failed_laws())}", report)
    y_inv = y_inverse if y_inverse is not None else d.y.inverse()
    parts = [a, a]
    nabla = conjugate_morphism(F, ident(a @ a), parts, parts)
    return WeakYBData(F.object_map(a), nabla, conjugate_morphism(F, d.y, parts, parts),
                      conjugate_morphism(F, y_inv, parts, parts))


def r_matrix(q) -> MatMorphism:
    """The standard 4×4 Hecke-type braided R-matrix on a 2-dimensional space."""
    q = parse_scalar(q)
    v = MatObject.named("V", 2)
    rows = [[q, 0, 0, 0], [0, 0, 1, 0], [0, 1, q - 1 / q, 0], [0, 0, 0, q]]
    return MatMorphism(v @ v, v @ v, rows)


# ---------------------------------------------------------------------------
# distributive laws

@dataclass
class DistLawData:
    a: MatObject
    mu_a: MatMorphism
    eta_a: MatMorphism
    b: MatObject
    mu_b: MatMorphism
    eta_b: MatMorphism
    lam: MatMorphism


def _multiplicative(report: LawReport, d: DistLawData) -> None:
    ia, ib = ident(d.a), ident(d.b)
    report.check("lambda-mu-a", mat_compose(d.lam, mat_tensor(d.mu_a, ib)),
                 compose_all(mat_tensor(ia, d.lam), mat_tensor(d.lam, ia), mat_tensor(ib, d.mu_a)))
    report.check("lambda-mu-b", mat_compose(d.lam, mat_tensor(ia, d.mu_b)),
                 compose_all(mat_tensor(d.lam, ib), mat_tensor(ib, d.lam), mat_tensor(d.mu_b, ia)))


def _check_monoids(report: LawReport, d: DistLawData) -> None:
    check_monoid(report, d.a, d.mu_a, d.eta_a, "A:")
    check_monoid(report, d.b, d.mu_b, d.eta_b, "B:")


def check_distributive_law(d: DistLawData) -> LawReport:
    report = LawReport("distributive law")
    _check_monoids(report, d)
    _multiplicative(report, d)
    ia, ib = ident(d.a), ident(d.b)
    report.check("lambda-unit-a", mat_compose(d.lam, mat_tensor(d.eta_a, ib)), mat_tensor(ib, d.eta_a))
    report.check("lambda-unit-b", mat_compose(d.lam, mat_tensor(ia, d.eta_b)), mat_tensor(d.eta_b, ia))
    return report


def check_weak_distributive_law(d: DistLawData) -> LawReport:
    report = LawReport("weak distributive law")
    _check_monoids(report, d)
    _multiplicative(report, d)
    ia, ib = ident(d.a), ident(d.b)
    lhs = compose_all(tensor_all(d.eta_a, ib, ia), mat_tensor(d.lam, ia), mat_tensor(ib, d.mu_a))
    rhs = compose_all(tensor_all(ib, ia, d.eta_b), mat_tensor(ib, d.lam), mat_tensor(d.mu_b, ia))
    report.check("weak-unit", lhs, rhs)
    return report


def monoid_from_distributive_law(d: DistLawData, check: bool = True):
    """``(B ⊗ A, (μ_B ⊗ μ_A)(1 ⊗ λ ⊗ 1), η_B ⊗ η_A)``.

    λ: A ⊗ B -> B ⊗ A only fits between the middle factors of B ⊗ A ⊗ B ⊗ A,
    so the product lives on B ⊗ A.
    """
    if check:
        report = check_distributive_law(d)
        if not report.ok:
            raise LawCheckError(f"not a distributive law: {sorted(report.failed_laws())}", report)
    mu = mat_compose(mat_tensor(d.mu_b, d.mu_a), tensor_all(ident(d.b), d.lam, ident(d.a)))
    return d.b @ d.a, mu, mat_tensor(d.eta_b, d.eta_a)


def conjugate_distributive_law(F: FrobeniusFunctor, d: DistLawData) -> DistLawData:
    a, b = d.a, d.b
    return DistLawData(
        F.object_map(a), conjugate_morphism(F, d.mu_a, [a, a], [a]),
        conjugate_morphism(F, d.eta_a, [], [a]),
        F.object_map(b), conjugate_morphism(F, d.mu_b, [b, b], [b]),
        conjugate_morphism(F, d.eta_b, [], [b]),
        conjugate_morphism(F, d.lam, [a, b], [b, a]))


# ---------------------------------------------------------------------------
# bimonoids

@dataclass
class BimonoidData:
    carrier: MatObject
    mu: MatMorphism
    eta: MatMorphism
    delta: MatMorphism
    epsilon: MatMorphism


def group_bimonoid(n: int, name: str = "G") -> BimonoidData:
    """The group bialgebra ℚ[ℤ/n]: ``g ↦ g ⊗ g``, ``ε(g) = 1``."""
    a = MatObject.named(name, n)
    mu = MatMorphism(a @ a, a, [[1 if k == (i + j) % n else 0 for i in range(n) for j in range(n)]
                                for k in range(n)])
    eta = MatMorphism(I, a, [[1]] + [[0]] * (n - 1))
    delta = MatMorphism(a, a @ a, [[1 if (i, j) == (k, k) else 0 for k in range(n)]
                                   for i in range(n) for j in range(n)])
    eps = MatMorphism(a, I, [[1] * n])
    return BimonoidData(a, mu, eta, delta, eps)


def _mult_comult(report: LawReport, b: BimonoidData) -> None:
    a = ident(b.carrier)
    c = braiding(b.carrier, b.carrier)
    report.check("mult-comult", mat_compose(b.delta, b.mu),
                 compose_all(mat_tensor(b.delta, b.delta), tensor_all(a, c, a),
                             mat_tensor(b.mu, b.mu)))


def check_weak_bimonoid(b: BimonoidData) -> LawReport:
    """Multiplicativity of δ plus the weak counit and weak unit chains (c⁻¹ = c)."""
    report = LawReport("weak bimonoid")
    a, one = b.carrier, ident(b.carrier)
    check_monoid(report, a, b.mu, b.eta)
    check_comonoid(report, a, b.delta, b.epsilon)
    _mult_comult(report, b)
    c = braiding(a, a)
    mid = tensor_all(one, b.delta, one)
    ee_mm = mat_compose(mat_tensor(b.epsilon, b.epsilon), mat_tensor(b.mu, b.mu))
    first = compose_all(mat_tensor(one, b.mu), b.mu, b.epsilon)
    report.check("weak-counit", first, mat_compose(ee_mm, mid), "1")
    report.check("weak-counit", first, compose_all(mid, tensor_all(one, c, one), ee_mm), "2")
    dd_ee = mat_compose(mat_tensor(b.delta, b.delta), mat_tensor(b.eta, b.eta))
    top = compose_all(b.eta, b.delta, mat_tensor(one, b.delta))
    m = tensor_all(one, b.mu, one)
    report.check("weak-unit", top, mat_compose(m, dd_ee), "1")
    report.check("weak-unit", top, compose_all(dd_ee, tensor_all(one, c, one), m), "2")
    return report


def check_bimonoid(b: BimonoidData) -> LawReport:
    report = LawReport("bimonoid")
    a = b.carrier
    check_monoid(report, a, b.mu, b.eta)
    check_comonoid(report, a, b.delta, b.epsilon)
    _mult_comult(report, b)
    report.check("delta-eta", mat_compose(b.delta, b.eta), mat_tensor(b.eta, b.eta))
    report.check("epsilon-mu", mat_compose(b.epsilon, b.mu), mat_tensor(b.epsilon, b.epsilon))
    report.check("epsilon-eta", mat_compose(b.epsilon, b.eta), ident(I))
    return report


def conjugate_bimonoid(F: FrobeniusFunctor, b: BimonoidData) -> BimonoidData:
    a = b.carrier
    return BimonoidData(F.object_map(a),
                        conjugate_morphism(F, b.mu, [a, a], [a]),
                        conjugate_morphism(F, b.eta, [], [a]),
                        conjugate_morphism(F, b.delta, [a], [a, a]),
                        conjugate_morphism(F, b.epsilon, [a], []))


# ---------------------------------------------------------------------------
# Cauchy completion and the splitting functor

@dataclass(frozen=True)
class CauchyObject:
    base: MatObject
    idem: MatMorphism

    def __post_init__(self):
        if self.idem.dom != self.base or self.idem.cod != self.base:
            raise ShapeError("idempotent must be an endomorphism of the base")
        if mat_compose(self.idem, self.idem) != self.idem:
            raise NotIdempotentError("e ∘ e != e")

    def identity(self) -> MatMorphism:
        return self.idem

    def __matmul__(self, other: "CauchyObject") -> "CauchyObject":
        return CauchyObject(self.base @ other.base, mat_tensor(self.idem, other.idem))


def is_cauchy_morphism(f: MatMorphism, src: CauchyObject, tgt: CauchyObject) -> bool:
    return compose_all(src.idem, f, tgt.idem) == f


def _commutes(nabla: MatMorphism, d: MatObject) -> bool:
    one = ident(d)
    return (mat_compose(mat_tensor(one, nabla), mat_tensor(nabla, one))
            == mat_compose(mat_tensor(nabla, one), mat_tensor(one, nabla)))


def nabla_n(nabla: MatMorphism, n: int, d: Optional[MatObject] = None, check: bool = True
            ) -> MatMorphism:
    """``∇₀ = 1_I``, ``∇₁ = 1_D``, ``∇₂ = ∇``, ``∇ₙ = (1 ⊗ ∇ₙ₋₁)(∇ ⊗ 1)``."""
    if d is None:
        d = MatObject(nabla.dom.factors[:len(nabla.dom) // 2])
    if d @ d != nabla.dom:
        raise ShapeError("∇ must act on D ⊗ D")
    if check and not _commutes(nabla, d):
        raise LawCheckError("(∇ ⊗ 1)(1 ⊗ ∇) != (1 ⊗ ∇)(∇ ⊗ 1)")
    if n == 0:
        return ident(I)
    if n == 1:
        return ident(d)
    acc = nabla
    for k in range(3, n + 1):
        acc = mat_compose(mat_tensor(ident(d), acc), mat_tensor(nabla, ident(d ** (k - 2))))
    return acc


def cd_morphism_check(f: MatMorphism, n: int, m: int, nabla: MatMorphism,
                      d: Optional[MatObject] = None) -> LawReport:
    """Side conditions for ``f: (Dⁿ, ∇ₙ) -> (Dᵐ, ∇ₘ)`` to lie in C(D)."""
    if d is None:
        d = MatObject(nabla.dom.factors[:len(nabla.dom) // 2])
    if f.dom != d ** n or f.cod != d ** m:
        raise ShapeError(f"f must be D^{n} -> D^{m}")
    nn, nm = nabla_n(nabla, n, d), nabla_n(nabla, m, d)
    one = ident(d)
    report = LawReport(f"C(D) morphism {n}->{m}")
    report.check("cauchy", compose_all(nn, f, nm), f)
    report.check("left-slide", mat_compose(mat_tensor(one, f), mat_tensor(nn, one)),
                 mat_compose(mat_tensor(nm, one), mat_tensor(one, f)))
    report.check("right-slide", mat_compose(mat_tensor(f, one), mat_tensor(one, nn)),
                 mat_compose(mat_tensor(one, nm), mat_tensor(f, one)))
    return report


class SplittingFunctor(FrobeniusFunctor):
    """``C(D) -> C`` sending ``(Dⁿ, ∇ₙ)`` to a splitting of ``∇ₙ``.

    Source objects are counts ``n`` with tensor ``n + m``; a source morphism
    ``n -> m`` is a matrix ``Dⁿ -> Dᵐ``.
    """

    kind = "splitting"

    def __init__(self, d: MatObject, nabla: MatMorphism):
        self.d, self.nabla = d, nabla
        nabla_n(nabla, 2, d)  # validates the commuting precondition
        self._cache = {}

    def split(self, n: int):
        if n not in self._cache:
            e = nabla_n(self.nabla, n, self.d, check=False)
            if e.is_identity():
                self._cache[n] = (e, e)
            else:
                self._cache[n] = split_idempotent(e, f"S{n}")
        return self._cache[n]

    def count(self, obj: MatObject) -> int:
        n = len(obj) // len(self.d)
        if obj != self.d ** n:
            raise ShapeError(f"{obj} is not a power of {self.d}")
        return n

    def object_map(self, n):
        return self.split(n)[0].cod

    def morphism_map(self, f):
        n, m = self.count(f.dom), self.count(f.cod)
        return compose_all(self.split(n)[1], f, self.split(m)[0])

    def phi(self, n, m):
        return mat_compose(self.split(n + m)[0], mat_tensor(self.split(n)[1], self.split(m)[1]))

    def psi(self, n, m):
        return mat_compose(mat_tensor(self.split(n)[0], self.split(m)[0]), self.split(n + m)[1])

    def phi0(self):
        return self.split(0)[0]

    def psi0(self):
        return self.split(0)[1]

    def source_tensor(self, a, b):
        return a + b

    def source_unit(self):
        return 0

    def source_parts(self, obj):
        return [1] * self.count(obj)

    def source_braiding(self, a, b):
        raise NotImplementedError("C(D) carries no braiding")


def splitting_functor(d: MatObject, nabla: MatMorphism) -> SplittingFunctor:
    return SplittingFunctor(d, nabla)


# ---------------------------------------------------------------------------
# prebimonoidal functors

def check_prebimonoidal(F: FrobeniusFunctor, y: Callable, z: Callable, quadruples,
                        T: Callable = lambda a: a) -> LawReport:
    """``(φ ⊗ φ)(1 ⊗ z ⊗ 1)(ψ ⊗ ψ) = ψ F(1 ⊗ y ⊗ 1) φ`` on each quadruple.

    ``y(i, j)`` is a morphism ``Ti ⊗ Tj -> Tj ⊗ Ti`` in the source of F and
    ``z(i, j)`` one ``FTi ⊗ FTj -> FTj ⊗ FTi`` in the target.
    """
    report = LawReport(f"prebimonoidal {F!r}")
    T_ = F.source_tensor
    for qa, qb, qc, qd in quadruples:
        ta, tb, tc, td = T(qa), T(qb), T(qc), T(qd)
        fa, fd = ident(F.object_map(ta)), ident(F.object_map(td))
        lhs = compose_all(mat_tensor(F.psi(ta, tb), F.psi(tc, td)),
                          tensor_all(fa, z(qb, qc), fd),
                          mat_tensor(F.phi(ta, tc), F.phi(tb, td)))
        inner = tensor_all(ident(ta), y(qb, qc), ident(td))
        rhs = compose_all(F.phi(T_(ta, tb), T_(tc, td)), F.morphism_map(inner),
                          F.psi(T_(ta, tc), T_(tb, td)))
        report.check("prebimonoidal", lhs, rhs, ",".join(map(repr, (qa, qb, qc, qd))))
    return report
