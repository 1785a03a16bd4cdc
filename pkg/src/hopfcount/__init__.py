"""Galois objects of small semisimple Hopf algebras via fiber functors on
group-theoretical fusion categories."""

from .groups import (DomainError, FiniteGroup, GroupSpecError, Subgroup, build_group, center, exponent,
                     subgroups)
from .cohomology import (Cochain, H2Description, coboundary, conj_cochain, cyclic_h3_class, h2, is_cocycle,
                         is_nondegenerate, is_trivial, omega_g, restrict, trivialize)
from .bicrossed import (BicrossedProduct, CocyclePair, HopfReport, MatchedPair, build_bicrossed, dual_data,
                        kac_omega, pairing_check, verify_cocycle_pair, verify_hopf, verify_matched_pair)
from .families import (FamilyParams, alpha_xi, build_cyclic_cocycles, build_family, build_omega_zeta_lambda,
                       build_upsilon, family_pair, parse_family_spec)
from .fiber_functors import (CategoryData, FiberFunctorReport, classify_pairs, count_galois,
                             enumerate_fiber_functor_pairs, galois_category, pair_equivalence)
from .morita import (FeasibilityError, InvariantVector, SeparationReport, check_omega_nontrivial,
                     morita_invariants, nu_factor_identity_check, standard_morita_targets)

__version__ = "0.1.0"
