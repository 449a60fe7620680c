"""An algebra-induced functor is not braided.

The conjugate c^F = ψ F(c) φ factors through F(A⊗A) = A⊗A⊗C, so its rank is
at most dim(A)² · dim(C).  The braiding of FA ⊗ FB is invertible of rank
dim(A)² · dim(C)², so the two can never agree once dim(C) > 1.
"""

from froblab.frobenius import (algebra_by_name, algebra_induced_functor, check_braided_functor,
                               conjugate_morphism)
from froblab.matrix import MatObject, braiding


def main():
    a = MatObject.named("A", 2)
    for name in ("complex(2,0)", "matrix(2)", "group(2)", "dual"):
        F = algebra_induced_functor(algebra_by_name(name))
        conj = conjugate_morphism(F, braiding(a, a), [a, a], [a, a])
        fa = F.object_map(a)
        print(f"{name:>13}: braided={check_braided_functor(F, [a]).ok}  "
              f"rank c^F={conj.rank()}  rank c_FA,FA={braiding(fa, fa).rank()}  "
              f"dim F(A⊗A)={F.object_map(a @ a).dim}")


if __name__ == "__main__":
    main()
