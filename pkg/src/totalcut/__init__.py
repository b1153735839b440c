"""Total cut complexes of graphs: construction, discrete Morse element
matchings with certified acyclicity, and exact integer reduced homology."""

from .blocks import BlockWord, encode, enumerate_m1_unmatched, parse_word
from .complexes import (SimplicialComplex, alexander_dual, dual_of_total_cut,
                        format_facets, full_simplex, read_facets,
                        total_cut_complex)
from .graphs import (Graph, complete, cycle, cycle_power, from_edge_list,
                     has_independent_set, independence_number,
                     independent_sets, is_independent, parse_spec,
                     read_edge_list, squared_cycle)
from .homology import (HomologyProfile, IntMatrix, boundary_matrix,
                       homology_via_dual, is_sphere_profile, reduced_homology,
                       smith_normal_form, total_cut_homology)
from .morse import (HomotopySummary, MatchingResult, element_matching_sequence,
                    homotopy_summary, unmatched_after_first, verify_acyclic)

__version__ = "0.1.0"
