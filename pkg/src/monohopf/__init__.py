"""Exact constructions and mechanical verification of monomial Hopf algebras.

Everything is computed over cyclotomic fields Q(zeta_N) with exact rational
coordinates; every structural claim (axioms, isomorphisms, block
decompositions, datum correspondences) is checked identity-by-identity with
zero tolerance.
"""

from .cyclo import CycloNum, RootOfUnity, as_root_of_unity, order_of, \
    primitive_roots
from .qcalc import (binomial_vanishes, q_binomial, q_factorial, q_integer,
                    q_power, q_vandermonde_check)
from .quiver import (ComponentVerdict, MonomialPresentation, Path,
                     PathCoalgebra, Quiver, cofrobenius_classify,
                     cycle_quiver, enumerate_small_presentations,
                     frobenius_classify, monomial_algebra, monomial_basis,
                     socle_dimensions)
from .algebra import (FDBialgebra, IsoWitness, MapReport, VerifyReport,
                      center, check_map, coalgebra_components,
                      extend_from_generators, frobenius_oracle, group_likes,
                      hopf_tensor, is_hopf_verified, link_quiver,
                      skew_primitives, verify_algebra, verify_all,
                      verify_antipode, verify_bialgebra, verify_coalgebra)
from .families import (AdmitsReport, FamilyParams, KZWindow, PairVerdict,
                       TruncationError, a_n_d_mu_q, admits_hopf, c_d_n_mu_q,
                       classify_pair, family_iso, kz_n_q_truncated, params)
from .blocks import (BlockInfo, BlockReport, CentralIdempotents, MatrixRep,
                     b_algebra, block_extract, central_idempotents,
                     gabriel_quiver, matrix_algebra, matrix_rep_phi,
                     radical_power_presentation, truncated_cycle_witness,
                     wedderburn_report)
from .groupdata import (DatumVerdict, FiniteGroup, GroupDatum, ShapeReport,
                        TrivialityReport, build_A, catalogue,
                        coalgebra_shape, datum_iso, group_hopf_algebra,
                        induced_datum, is_trivial_datum, tensor_split_check,
                        validate_datum)
from .serialize import (algebra_from_json, algebra_to_json, datum_from_json,
                        datum_to_json, presentation_from_json,
                        presentation_to_json)

__version__ = "0.1.0"
