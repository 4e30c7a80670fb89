"""weightcat: exact computations with weight modules over simple Lie algebras.

The package builds root systems with concrete Weyl-algebra realizations for
types A and C, the lattice-indexed degree-one weight modules, truncated
parabolically induced modules with exact quotient projection, a
classification oracle for the categories attached to subsets of simple
roots, and cocycle/coboundary solvers that certify extension vanishing on
finite windows.  All arithmetic is exact over the rationals.
"""

from .categorio import (FamilyDescriptor, MembershipReport, ThetaSpec, Verdict,
                        check_membership, classify, cuspidal_nilpotent_partition,
                        infinite_dim_criterion)
from .degonemod import DegreeOneModule, build_M, build_N
from .extcoh import (Cocycle, ConstraintSystem, ExtensionModule, build_extension,
                     coboundary_quotient_dim, cocycle_space, ext_solve_typeA,
                     ext_solve_typeC, is_coboundary, make_sl2_cocycle, support_disjoint)
from .inducemod import (LeviModule, TruncatedVerma, central_scalars, induce, levi_module,
                        levi_module_product, probe_restriction_failure, restrict_family,
                        u0_compare)
from .paperlab import LEMMAS, LemmaReport, seeded_reports
from .rootsys import (CartanType, RootSubset, RootSystem, build_root_system,
                      classify_subset, lattice_disjoint, levi_decomposition)
from .weylmod import WeylParams, WeylPolynomial, check_weyl_relations, k_member, weyl_act

__version__ = "0.1.0"
