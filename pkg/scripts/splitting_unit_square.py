"""Why the splitting functor is only checked on positive counts.

S(0) is the unit with φ₀ψ₀ = 1.  A Frobenius square with 0 in the middle
then reads ψφ = 1 on S(m)⊗S(n), which fails whenever ∇ is a proper
idempotent.  This prints the failing entries for the conjugated swap.
"""

from froblab.frobenius import (algebra_induced_functor, check_frobenius_functor,
                               complex_over_rationals)
from froblab.matrix import MatObject, braiding
from froblab.structures import LaxYBData, splitting_functor, weak_yb_from_conjugate


def main():
    F = algebra_induced_functor(complex_over_rationals(2, 0))
    a = MatObject.named("A", 1)
    w = weak_yb_from_conjugate(F, LaxYBData(a, braiding(a, a)))
    S = splitting_functor(w.carrier, w.nabla)
    print(f"rank ∇ = {w.nabla.rank()} of {w.nabla.dom.dim}")
    for counts in ([1, 2], [0, 1]):
        rep = check_frobenius_functor(S, counts)
        print(f"counts {counts}: {'all laws hold' if rep.ok else 'failed ' + str(sorted(rep.failed_laws()))}")
        for e in rep.failures:
            print(f"    {e.law} at ({e.objects})")


if __name__ == "__main__":
    main()
