"""Stanley-Reisner rings of simplicial complexes: socles of artinian
reductions, Buchsbaum* detection, level quotients and face-vector bounds."""

from .complex import SimplicialComplex, from_facets, load, parse_facet_list
from .corpus import builtin
from .enumeration import (HVectorBundle, check_bstar_bounds, check_module_macaulay,
                          d_binomial_expansion, f_from_h, h_double_prime, h_from_f, h_prime,
                          macaulay_growth, soderberg_check)
from .homology import (hochster_dims, is_buchsbaum, is_cohen_macaulay, is_two_cm,
                       reduced_betti)
from .linalg import GaloisField, PrimeField, make_field
from .reduction import (graded_reduction, is_buchsbaum_star, level_quotient, random_lsop,
                        socle_lower_bound_check, socle_profile, star_deletion_dim_check,
                        verify_lsop)

__version__ = "0.1.0"
