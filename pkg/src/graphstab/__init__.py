"""graphstab: exact verification toolkit for graph states, stabilizer groups,
local-Clifford equivalence, and GHZ-type nonlocality arguments.

Two independent engines back every claim: dense state vectors (module
``states``) and symbolic Pauli algebra (modules ``pauli`` / ``stabilizers``);
the verification battery in ``verify`` cross-checks them.
"""

from .entanglement import Bipartition, DensityMatrix, entropy, is_product_across, reduce
from .graphs import Graph, QubitLabel, canonical_key, local_complement, neighbors
from .lc import (EquivalenceWitness, OrbitMember, OrbitReport, enumerate_orbit,
                 lc_search, tau_unitary)
from .localops import LocalUnitary, single_qubit_cliffords
from .nonlocality import (CorrelationConstraint, constraint_from_pauli,
                          lhv_contradiction_certificate, lhv_solve_exhaustive,
                          quantum_check)
from .pauli import PauliString, commutes, conjugate_by_local, independent, multiply
from .stabilizers import StabilizerSet, conjugate_set, graph_generators, stabilizes
from .states import (StateVector, apply_controlled_phase, apply_local, apply_pauli,
                     build_chi00, build_graph_state, equal_up_to_global_phase,
                     expectation)
from .verify import VerificationReport, verify_all

__version__ = "0.1.0"

__all__ = [
    "Bipartition", "CorrelationConstraint", "DensityMatrix", "EquivalenceWitness",
    "Graph", "LocalUnitary", "OrbitMember", "OrbitReport", "PauliString",
    "QubitLabel", "StabilizerSet", "StateVector", "VerificationReport",
    "apply_controlled_phase", "apply_local", "apply_pauli", "build_chi00",
    "build_graph_state", "canonical_key", "commutes", "conjugate_by_local",
    "conjugate_set", "constraint_from_pauli", "entropy", "enumerate_orbit",
    "equal_up_to_global_phase", "expectation", "graph_generators", "independent",
    "is_product_across", "lc_search", "lhv_contradiction_certificate",
    "lhv_solve_exhaustive", "local_complement", "multiply", "neighbors",
    "quantum_check", "reduce", "single_qubit_cliffords", "stabilizes",
    "tau_unitary", "verify_all",
]
