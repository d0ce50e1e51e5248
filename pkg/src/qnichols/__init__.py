"""qnichols: exact symbolic computations for braidings of diagonal type.

The package builds braiding matrices and their generalized Dynkin diagrams,
walks Weyl groupoids to enumerate root systems with Cartan-orbit flags,
manipulates the braided free algebra (coproducts, braided brackets, the
quantum symmetrizer), computes degree-truncated noncommutative Groebner
bases of graded quotients, expands truncated Hilbert series, and ships a
catalog of presentations for the supported families together with named
verification bundles replaying the computations behind them.
"""

from .braiding import (BraidingMatrix, DynkinDiagram, GeneralizedCartanMatrix,
                       Obstruction, cartan_matrix, dynkin_diagram,
                       finiteness_obstructions, is_cartan_vertex, load_matrix)
from .checks import CheckResult, check_ids, run_check, run_manifest
from .cyclo import (CycScalar, cyclotomic_polynomial, euler_phi, mult_order,
                    q_binomial, q_factorial, q_integer, rational, root_of_unity)
from .families import FamilyError, FamilySpec, build_family, catalog_samples
from .freealg import (FreeElement, TensorElement, adjoint, braided_commutator,
                      coproduct, generator, interval_bracket, is_primitive,
                      iterated_bracket, multiply, one, quantum_symmetrizer,
                      word_element, zero)
from .grammar import GrammarError, parse_element
from .presentations import (ConsequenceCheck, Presentation, catalog_entries,
                            consequence_checks, distinguished_relations,
                            eminent_relations)
from .quotient import (CentralityReport, GradedIdeal, GroebnerBasis, PBWLetter,
                       TruncationError, graded_dimensions, groebner,
                       is_primitive_in_quotient, normal_form, pbw_dimensions,
                       pbw_span_check, skew_central_check, vanishes_in_quotient)
from .series import (TruncatedSeries, extension_check, growth_degree,
                     hilbert_distinguished, hilbert_nichols, series_one,
                     series_product_formula)
from .weyl import (InfiniteRootSystem, Root, RootSystem, WeylOrbit,
                   cartan_roots_positive, distinguished_heights,
                   gkdim_distinguished, positive_roots, reflect_braiding,
                   reflect_root, weyl_orbit)

__version__ = "0.1.0"
