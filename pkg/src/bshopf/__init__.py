"""Building sets, their chromatic invariants, eulerian detection and cd-indices."""
from .core import (BuildingSet, FormalSum, SetFamily, antipode, canonical_form,
                   closure, closure_of, contraction, coproduct_terms, dbar,
                   deletion, discrete, equivalent, full, minimal_generators,
                   minimalization, product, restriction)
from .symfunc import (Composition, Partition, PSymElement, QSymElement,
                      powersum_to_monomial, quasi_shuffle, specialize)
from .chromatic import (ChromaticPolynomial, chromatic_polynomial,
                        count_proper_colorings, psi_monomial,
                        psi_powersum_moebius, psi_powersum_subsets, zeta_alpha)
from .eulerian import (bayer_billera_check, dehn_sommerville_check, is_eulerian,
                       is_eulerian_geometric, zeta_inverse)
from .cdindex import ab_index, andre_phi, cd_index, expand_cd
from .graphs import SimpleGraph, beta_n, graphical, orientation_counts, tutte
from .errors import CrossCheckError, GuardError, InputError

__version__ = "0.1.0"
