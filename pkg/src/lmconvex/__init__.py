"""Finite-model toolkit for lattice-valued convexity degree structures."""

__version__ = "0.1.0"

from .catalog import chain, diamond, downset_lattice_family, named_lattice, pentagon
from .convex_structures import (ConvexityCertificate, LConvexity, StructureMap,
                                check_classical, check_l_convexity, check_lm_fuzzy,
                                check_m_fuzzifying, cut_lower_structure,
                                cut_upper_structure, is_coarser, meet_structures,
                                structure_from_lower_cuts, structure_from_upper_cuts)
from .constructions import (HullOperator, generate_from_subbase,
                            generate_from_subbase_bruteforce, hull,
                            preimage_structure, product_structure,
                            quotient_by_partition, quotient_structure,
                            restricted_hull_identity, substructure)
from .errors import (BudgetError, FormatError, LatticeError, LmconvexError,
                     PreconditionError)
from .functors import (FunctorContext, adjunction_check, cpf_transfer, iota,
                       iota_subbase, lower_cuts_up_directed, omega)
from .fuzzy_sets import (Carrier, FuzzySet, SpaceMap, backward_image, compose,
                         cut_lower, cut_strict, cut_upper, decompose, forward_image,
                         fs_join, fs_leq, fs_meet, scalar_join, scalar_meet)
from .gallery import (FuzzyRelation, IntervalOperator, fuzzy_convex_sublattice_family,
                      interval_degree_structure, residuum, upper_set_structure)
from .lattice_core import (ElementFamily, FiniteLattice, check_beta_meet_hypothesis,
                           is_distributive, verify_lattice, wedge_below_oracle,
                           op_wedge_below_oracle)
from .morphisms import (SpacePair, cpf_cut_equivalence, is_convex_to_convex, is_cpf,
                        is_cpf_via_preimage, is_quotient_function)
from .theorems import SuiteConfig, run_suite
