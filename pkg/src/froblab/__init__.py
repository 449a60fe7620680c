"""Progressive plane string diagrams, exact matrix evaluation and Frobenius conjugation."""

from .diagram import (DiagramError, Generator, InvarianceClass, LayeredDiagram, Node,
                      TensorScheme, TopologyReport, Wire, canonical, compose, exchange,
                      generator_diagram, identity, sequentialize, strip_identities, tensor,
                      topology, validate_scheme)
from .evaluation import (FREE, MATRIX, TERMINAL, BackendHandle, Labelling, LabellingError,
                         SchemeMap, evaluate, free_evaluate, labelling_for)
from .frobenius import (AlgebraFunctor, BasisPermutationFunctor, ComposedFunctor,
                        FrobeniusAlgebra, FrobeniusFunctor, IdentityFunctor, algebra_by_name,
                        algebra_induced_functor, barbell, check_braided_functor,
                        check_frobenius_algebra, check_frobenius_functor, complex_over_rationals,
                        conjugate_labelling, conjugate_morphism, dual_numbers,
                        group_algebra_frobenius, is_separable, is_strong,
                        matrix_algebra_frobenius, nary_phi, nary_psi, separability_defect,
                        verify_invariance)
from .laws import LawCheckError, LawReport
from .matrix import (I, MatMorphism, MatObject, NotIdempotentError, ShapeError, braiding,
                     float_tolerance, mat_compose, mat_tensor, split_idempotent)
from .structures import (BimonoidData, CauchyObject, DistLawData, LaxYBData, WeakYBData,
                         cd_morphism_check, check_bimonoid, check_distributive_law,
                         check_lax_yb, check_prebimonoidal, check_weak_bimonoid,
                         check_weak_distributive_law, check_weak_yb, check_yb,
                         monoid_from_distributive_law, nabla_n, splitting_functor,
                         weak_yb_from_conjugate)

__version__ = "0.1.0"
