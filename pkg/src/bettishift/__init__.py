"""Exact graded Betti numbers of monomial ideals by two independent
engines, with mechanical checking of subadditivity-type inequalities."""

from .betti import BettiTable, MaxShifts, max_shifts
from .complexes import (SimplicialComplex, SubcomplexFamily,
                        from_stanley_reisner, intersect_family,
                        parse_facet_complex, stanley_reisner_ideal,
                        union_family)
from .errors import (BettiShiftError, CapExceededError, EngineBugError,
                     InputError, ParseError)
from .hochster import betti_hochster, betti_of_ideal
from .homology import HomologyProfile, boundary_matrices, reduced_homology
from .inequalities import (check_low_dimension_bound, check_partial_sum_bound,
                           check_step_bound, check_subadditivity)
from .linalg import GF2, QQ, FieldSpec, rank
from .monomials import (DegreeMap, Monomial, MonomialIdeal, divides, lcm_of,
                        minimalize, parse_ideal, polarize)
from .taylor import (TaylorBasisElement, WitnessReport, bar_components,
                     betti_taylor, find_shift_witness, lcm_ratio_criterion,
                     taylor_differential)
from .verify import (FuzzConfig, fuzz_campaign, random_ideal, run_trial,
                     verify_cover_vanishing, verify_union_vanishing)

__version__ = "0.1.0"
