import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from froblab.frobenius import (BasisPermutationFunctor, ComposedFunctor, IdentityFunctor,
                               algebra_induced_functor, check_braided_functor,
                               check_frobenius_functor, complex_over_rationals, conjugate_morphism,
                               dual_numbers, group_algebra_frobenius, is_strong, nary_phi,
                               nary_psi)
from froblab.laws import LawCheckError
from froblab.matrix import (I, MatMorphism, MatObject, NotIdempotentError, ShapeError, braiding,
                            compose_all, ident, mat_compose, mat_tensor)
from froblab.random_diagrams import random_morphism
from froblab.structures import (WEAK_YB_EQUATIONS, BimonoidData, CauchyObject, DistLawData,
                                LaxYBData, WeakYBData, cd_morphism_check, check_bimonoid,
                                check_distributive_law, check_lax_yb, check_prebimonoidal,
                                check_weak_bimonoid, check_weak_distributive_law, check_weak_yb,
                                check_yb, conjugate_bimonoid, conjugate_distributive_law,
                                group_bimonoid, is_cauchy_morphism, monoid_from_distributive_law,
                                nabla_n, r_matrix, splitting_functor, weak_yb_from_conjugate)

A1, A2, V = MatObject.named("A", 1), MatObject.named("A", 2), MatObject.named("V", 2)


def complex_functor():
    return algebra_induced_functor(complex_over_rationals(2, 0))


def swap_weak_yb(obj=A1):
    return weak_yb_from_conjugate(complex_functor(), LaxYBData(obj, braiding(obj, obj)))


# Yang-Baxter ----------------------------------------------------------------

def test_swap_is_yb():
    assert check_yb(LaxYBData(A2, braiding(A2, A2))).ok


def test_zero_is_lax_but_not_yb():
    z = MatMorphism.zero(A2 @ A2, A2 @ A2)
    assert check_lax_yb(LaxYBData(A2, z)).ok
    assert check_yb(LaxYBData(A2, z)).failed_laws() == {"invertible"}


def test_perturbed_swap_fails_hexagon():
    rows = braiding(A2, A2).entries()
    rows[0][1] += 1
    y = MatMorphism(A2 @ A2, A2 @ A2, rows)
    report = check_lax_yb(LaxYBData(A2, y))
    assert report.failed_laws() == {"yang-baxter"}
    assert report.failures[0].lhs != report.failures[0].rhs


@pytest.mark.parametrize("q", [2, Fraction(1, 3), -3])
def test_r_matrix_is_yb(q):
    assert check_yb(LaxYBData(V, r_matrix(q))).ok


def test_r_matrix_hexagon_by_hand():
    # independent oracle: both sides of the braid relation as index sums
    r = r_matrix(3).entries()

    def act(m, pos, vec):
        out = {}
        for idx, x in vec.items():
            pair = idx[pos] * 2 + idx[pos + 1]
            for row in range(4):
                c = m[row][pair]
                if c:
                    new = list(idx)
                    new[pos], new[pos + 1] = divmod(row, 2)
                    out[tuple(new)] = out.get(tuple(new), 0) + c * x
        return {k: v for k, v in out.items() if v}

    for basis in itertools.product(range(2), repeat=3):
        v = {basis: Fraction(1)}
        assert act(r, 0, act(r, 1, act(r, 0, v))) == act(r, 1, act(r, 0, act(r, 1, v)))


def test_family_form():
    d = LaxYBData.family([A1, A2, V], braiding)
    assert d.is_family and check_yb(d).ok


def test_shape_error():
    with pytest.raises(ShapeError):
        check_lax_yb(LaxYBData(A2, ident(A2)))


# weak Yang-Baxter -----------------------------------------------------------

def test_genuine_yb_is_weak_yb():
    w = WeakYBData(A2, ident(A2 @ A2), braiding(A2, A2), braiding(A2, A2))
    assert check_weak_yb(w).ok


def test_conjugate_swap_is_weak_yb():
    w = swap_weak_yb(A2)
    report = check_weak_yb(w)
    assert report.ok
    assert set(WEAK_YB_EQUATIONS) <= report.laws()
    assert not w.y.is_invertible()


def test_q_swap_as_its_own_inverse_fails():
    q = Fraction(3)
    y = Fraction(q) * braiding(A2, A2)
    w = WeakYBData(A2, ident(A2 @ A2), y, y)
    assert check_weak_yb(w).failed_laws() == {"y-inverse"}
    assert check_weak_yb(WeakYBData(A2, ident(A2 @ A2), y, (1 / q) * braiding(A2, A2))).ok


def test_identity_functor_returns_input():
    y = r_matrix(2)
    w = weak_yb_from_conjugate(IdentityFunctor(), LaxYBData(V, y))
    assert w.nabla.is_identity() and w.y == y and w.y_prime == y.inverse()


def test_dual_numbers_functor_refused():
    F = algebra_induced_functor(dual_numbers())
    with pytest.raises(LawCheckError) as exc:
        weak_yb_from_conjugate(F, LaxYBData(A1, braiding(A1, A1)))
    assert exc.value.report.failed_laws() == {"separability"}


def test_non_idempotent_nabla():
    with pytest.raises(NotIdempotentError):
        check_weak_yb(WeakYBData(A2, 2 * ident(A2 @ A2), ident(A2 @ A2), ident(A2 @ A2)))


@given(st.integers(0, 2 ** 32))
def test_conjugate_of_random_yb_is_weak_yb(seed):
    rng = random.Random(seed)
    g = random_morphism(rng, A2, A2)
    if not g.is_invertible():
        return
    y = mat_compose(braiding(A2, A2), mat_tensor(g, g))
    assert check_yb(LaxYBData(A2, y)).ok
    assert check_weak_yb(weak_yb_from_conjugate(complex_functor(), LaxYBData(A2, y))).ok


# distributive laws ----------------------------------------------------------

def swap_law():
    g, h = group_bimonoid(2, "A"), group_bimonoid(2, "B")
    return DistLawData(g.carrier, g.mu, g.eta, h.carrier, h.mu, h.eta,
                       braiding(g.carrier, h.carrier))


def test_swap_law_strict_and_weak():
    assert check_distributive_law(swap_law()).ok
    assert check_weak_distributive_law(swap_law()).ok


def test_conjugate_law_weak_not_strict():
    c = conjugate_distributive_law(complex_functor(), swap_law())
    assert check_weak_distributive_law(c).ok
    assert check_distributive_law(c).failed_laws() == {"lambda-unit-a", "lambda-unit-b"}


def test_zero_lambda_fails_compatibility():
    d = swap_law()
    d.lam = MatMorphism.zero(d.lam.dom, d.lam.cod)
    failed = check_distributive_law(d).failed_laws()
    assert {"lambda-unit-a", "lambda-unit-b"} <= failed
    # λ(η ⊗ 1) = 0 while 1 ⊗ η ≠ 0
    assert "lambda-mu-a" not in failed  # both sides vanish


def test_product_monoid_is_klein_group_algebra():
    a, mu, eta = monoid_from_distributive_law(swap_law())
    assert a.dim == 4
    # basis (i, j) ↦ index 2i + j; Z/2 × Z/2 multiplication
    for (i, j), (k, l) in itertools.product(itertools.product(range(2), repeat=2), repeat=2):
        col = (2 * i + j) * 4 + (2 * k + l)
        target = 2 * ((i + k) % 2) + (j + l) % 2
        assert [mu.entry(r, col) for r in range(4)] == [int(r == target) for r in range(4)]
    assert [r[0] for r in eta.entries()] == [1, 0, 0, 0]


def test_product_monoid_laws():
    a, mu, eta = monoid_from_distributive_law(swap_law())
    one = ident(a)
    assert mat_compose(mu, mat_tensor(mu, one)) == mat_compose(mu, mat_tensor(one, mu))
    assert mat_compose(mu, mat_tensor(eta, one)) == one == mat_compose(mu, mat_tensor(one, eta))


def test_product_monoid_requires_law():
    d = swap_law()
    d.lam = MatMorphism.zero(d.lam.dom, d.lam.cod)
    with pytest.raises(LawCheckError):
        monoid_from_distributive_law(d)


# bimonoids ------------------------------------------------------------------

@pytest.mark.parametrize("n", [2, 3])
def test_group_bimonoid(n):
    b = group_bimonoid(n)
    assert check_bimonoid(b).ok and check_weak_bimonoid(b).ok


def test_conjugate_bimonoid_weak_not_strict():
    c = conjugate_bimonoid(complex_functor(), group_bimonoid(2))
    assert check_weak_bimonoid(c).ok
    assert check_bimonoid(c).failed_laws() == {"delta-eta", "epsilon-mu", "epsilon-eta"}


def test_zeroed_comultiplication_satisfies_mult_comult():
    # both sides of δμ = (μ⊗μ)(1⊗c⊗1)(δ⊗δ) vanish, so only the counit laws notice
    b = group_bimonoid(2)
    z = BimonoidData(b.carrier, b.mu, b.eta,
                     MatMorphism.zero(b.carrier, b.carrier @ b.carrier), b.epsilon)
    failed = check_weak_bimonoid(z).failed_laws()
    assert "mult-comult" not in failed
    assert {"delta-counit-left", "delta-counit-right"} <= failed


def test_scaled_comultiplication_fails_mult_comult():
    # 2δ: the left side doubles, the right side quadruples
    b = group_bimonoid(2)
    scaled = BimonoidData(b.carrier, b.mu, b.eta, 2 * b.delta, b.epsilon)
    report = check_bimonoid(scaled)
    assert "mult-comult" in report.failed_laws()
    entry = next(e for e in report.failures if e.law == "mult-comult")
    assert entry.rhs == 2 * entry.lhs


# Cauchy completion and splitting --------------------------------------------

def test_cauchy_object():
    w = swap_weak_yb()
    obj = CauchyObject(w.nabla.dom, w.nabla)
    assert obj.identity() == w.nabla
    assert is_cauchy_morphism(w.y, obj, obj)
    with pytest.raises(NotIdempotentError):
        CauchyObject(A2, 2 * ident(A2))


def test_nabla_low_orders():
    w = swap_weak_yb()
    d = w.carrier
    assert nabla_n(w.nabla, 0) == ident(I)
    assert nabla_n(w.nabla, 1) == ident(d)
    assert nabla_n(w.nabla, 2) == w.nabla


@pytest.mark.parametrize("n", range(6))
def test_nabla_n_idempotent(n):
    w = swap_weak_yb()
    e = nabla_n(w.nabla, n)
    assert mat_compose(e, e) == e


def test_nabla_n_is_conjugate_identity():
    # ∇ₙ coincides with ψₙφₙ for the algebra functor
    F = complex_functor()
    w = swap_weak_yb()
    for n in (2, 3):
        objs = [A1] * n
        assert nabla_n(w.nabla, n) == mat_compose(nary_psi(F, objs), nary_phi(F, objs))


def test_nabla_commuting_precondition():
    n = MatMorphism(A2 @ A2, A2 @ A2, [[1, 0, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    assert mat_compose(n, n) == n
    with pytest.raises(LawCheckError):
        nabla_n(n, 3)


def test_cd_checks():
    w = swap_weak_yb()
    assert cd_morphism_check(nabla_n(w.nabla, 3), 3, 3, w.nabla).ok
    assert cd_morphism_check(w.y, 2, 2, w.nabla).ok
    assert cd_morphism_check(w.y_prime, 2, 2, w.nabla).ok


def test_cd_random_fails(rng):
    w = swap_weak_yb()
    d = w.carrier
    found = False
    for _ in range(10):
        f = random_morphism(rng, d @ d, d @ d)
        if not cd_morphism_check(f, 2, 2, w.nabla).ok:
            found = True
            break
    assert found


def test_splitting_identity_nabla_is_strong():
    S = splitting_functor(A2, ident(A2 @ A2))
    assert check_frobenius_functor(S, [0, 1, 2]).ok
    assert is_strong(S, [0, 1, 2])


def test_splitting_of_conjugate_nabla():
    w = swap_weak_yb()
    S = splitting_functor(w.carrier, w.nabla)
    assert check_frobenius_functor(S, [1, 2]).ok
    assert not is_strong(S, [1, 2])
    assert not S.phi(1, 1).is_invertible()
    assert S.object_map(2).dim == w.nabla.rank()


def test_splitting_unit_middle_square_forces_strongness():
    w = swap_weak_yb()
    S = splitting_functor(w.carrier, w.nabla)
    assert S.object_map(0).dim == 1
    assert mat_compose(S.psi0(), S.phi0()) == ident(I)
    report = check_frobenius_functor(S, [0, 1])
    assert report.failed_laws() == {"frobenius-left", "frobenius-right"}
    assert all("0" in e.objects.split(",")[1] for e in report.failures)


def test_splitting_round_trip():
    w = swap_weak_yb()
    S = splitting_functor(w.carrier, w.nabla)
    assert conjugate_morphism(S, w.y) == w.y == compose_all(w.nabla, w.y, w.nabla)
    r, s = S.split(2)
    y_cd = compose_all(s, w.y, r)  # y as a genuine automorphism of the split object
    assert y_cd.is_invertible()


# prebimonoidal --------------------------------------------------------------

def quads(objs, k, seed=0):
    q = list(itertools.product(objs, repeat=4))
    random.Random(seed).shuffle(q)
    return q[:k]


def family_conjugate(F, y):
    return lambda a, b: conjugate_morphism(F, y(a, b), [a, b], [b, a])


def test_prebimonoidal_separable():
    F = complex_functor()
    qs = quads([A1, MatObject.named("B", 2)], 20)
    assert check_prebimonoidal(F, braiding, family_conjugate(F, braiding), qs).ok


def test_prebimonoidal_wrong_z_fails():
    F = complex_functor()
    qs = quads([A1, MatObject.named("B", 2)], 4)
    zf = family_conjugate(F, braiding)
    assert not check_prebimonoidal(F, braiding, lambda a, b: 2 * zf(a, b), qs).ok


def test_prebimonoidal_composite():
    F, G = complex_functor(), algebra_induced_functor(group_algebra_frobenius(2))
    z = family_conjugate(F, braiding)

    def w(a, b):
        return conjugate_morphism(G, z(a, b), [F.object_map(a), F.object_map(b)],
                                  [F.object_map(b), F.object_map(a)])

    qs = quads([A1, MatObject.named("E", 1)], 6)
    assert check_prebimonoidal(ComposedFunctor(G, F), braiding, w, qs).ok


@pytest.mark.parametrize("weights,braided", [({}, True),
                                             ({("A", "B"): 1, ("B", "A"): 1}, True),
                                             ({("A", "B"): 1}, False)])
def test_strong_functor_prebimonoidal_iff_braided(weights, braided):
    a, b = A2, MatObject.named("B", 3)
    F = BasisPermutationFunctor({"A": [1, 0], "B": [2, 0, 1]}, weights)
    assert is_strong(F, [a, b])
    assert check_braided_functor(F, [a, b]).ok is braided
    qs = list(itertools.product([a, b], repeat=4))
    assert check_prebimonoidal(F, braiding, braiding, qs).ok is braided
