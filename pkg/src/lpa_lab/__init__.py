"""Invariants, case classification and isomorphism tests for Leavitt path algebras of small graphs."""

from __future__ import annotations

__version__ = "0.1.0"

from .abelian import FgAbelianGroup, PointedAnswer, cokernel, element_order, pointed_isomorphic
from .classify import (
    CaseLabel,
    IsoDecision,
    SearchBudget,
    Verdict,
    classify,
    compare,
    enumerate_table,
    verify_decision,
)
from .errors import InputError, LpaError, Overflow
from .graph import MultiGraph, TwoVertexSignature, build_graph, canonical_form, parse_graph_text, two_vertex
from .invariants import franks_triple, ibn_and_type, invariant_bundle, k0_with_unit, type_closed_form_two_vertex
from .kernels import backend_name
from .linalg import IntMatrix, determinant, smith_normal_form
from .moves import OrbitConfig, ShiftSpec, WitnessPath, orbit_search, shift

__all__ = [
    "CaseLabel", "FgAbelianGroup", "InputError", "IntMatrix", "IsoDecision", "LpaError", "MultiGraph",
    "OrbitConfig", "Overflow", "PointedAnswer", "SearchBudget", "ShiftSpec", "TwoVertexSignature", "Verdict",
    "WitnessPath", "backend_name", "build_graph", "canonical_form", "classify", "cokernel", "compare",
    "determinant", "element_order", "enumerate_table", "franks_triple", "ibn_and_type", "invariant_bundle",
    "k0_with_unit", "orbit_search", "parse_graph_text", "pointed_isomorphic", "shift", "smith_normal_form",
    "two_vertex", "type_closed_form_two_vertex", "verify_decision",
]
