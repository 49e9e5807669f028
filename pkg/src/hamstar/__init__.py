"""Certifying toolkit for the Ore-type condition that forces a Hamiltonian
path or an induced K_{1,t} in a connected graph."""
from .errors import (CapacityError, ExtractionFailure, Graph6Error, GraphArgumentError,
                     HamstarError, RegimeError, StructureError)
from .extractor import (ExtractionTrace, IndexSet, check_cycle_claims, check_dominating_cycle,
                        compute_I, extract_star, find_center_and_indices, select_uv)
from .graph import (Graph, complete_bipartite, complete_graph, cycle_graph, empty_graph,
                    equality_family, is_connected, is_independent_set, join, path_graph,
                    sharpness_family, sigma_k, star_graph)
from .graph6 import parse_graph6, to_graph6
from .hamsearch import VertexSequence, has_hamiltonian_cycle, longest_cycle, longest_path
from .stars import StarWitness, find_induced_star, verify_star_witness
from .verdict import Verdict
from .verifier import (SweepReport, check_classical, check_equality_characterization,
                       check_lemma1, check_lemma2, check_main_theorem, sweep)

__version__ = "0.1.0"
