"""Quantum roots and the affine Bruhat order for Kac-Moody root data."""

from qroots.affine import (
    Affine,
    AffineElement,
    HypothesisNotMet,
    NotSupported,
    PreconditionFailed,
)
from qroots.cartan import GCM, DynkinDiagram, diagram_from_gcm, gcm_from_diagram
from qroots.datum import BudgetExceeded, RootDatum, doubled_datum
from qroots.kernel import IMPLEMENTATION
from qroots.quantum import (
    Classification,
    ComponentClass,
    ConstructionMismatch,
    NotMergeable,
    QuantumRootRecord,
    classify_sequence,
    construct_from_sequence,
    dynkin_sequence,
    enumerate_quantum_roots,
    is_quantum_by_definition,
    is_quantum_by_length,
    merge,
    mergeable,
    root_from_sequence,
)
from qroots.roots import NotReachable, RealRoot, Roots
from qroots.weyl import Weyl, WeylElement

__version__ = "0.1.0"

__all__ = [
    "Affine",
    "AffineElement",
    "HypothesisNotMet",
    "NotSupported",
    "PreconditionFailed",
    "GCM",
    "DynkinDiagram",
    "diagram_from_gcm",
    "gcm_from_diagram",
    "BudgetExceeded",
    "RootDatum",
    "doubled_datum",
    "IMPLEMENTATION",
    "Classification",
    "ComponentClass",
    "ConstructionMismatch",
    "NotMergeable",
    "QuantumRootRecord",
    "classify_sequence",
    "construct_from_sequence",
    "dynkin_sequence",
    "enumerate_quantum_roots",
    "is_quantum_by_definition",
    "is_quantum_by_length",
    "merge",
    "mergeable",
    "root_from_sequence",
    "NotReachable",
    "RealRoot",
    "Roots",
    "Weyl",
    "WeylElement",
    "__version__",
]
