"""Algebra invariants computed from the graph alone.

K_0 is the cokernel of ``transpose(N'_E)`` where ``N'_E = A_E - 1'`` and
``1'`` is the identity with sink columns zeroed.  The order unit is the class
of the all-ones vector.  The algebra fails IBN exactly when the all-ones
vector lies in the rational span of the rows of ``N'_E``; the type is then
``(1, 1 + k)`` with ``k`` the order of the order unit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

from . import graph as gc
from .abelian import INFINITE, FgAbelianGroup, GroupElement, cokernel, element_order
from .descriptors import Descriptor
from .errors import TooLarge, TooManyVertices
from .graph import MultiGraph
from .linalg import IntMatrix, content_gcd, determinant


@dataclass(frozen=True)
class TypeResult:
    ibn: bool
    type_n: Optional[int] = None

    def __str__(self) -> str:
        return "IBN" if self.ibn else f"(1,{self.type_n})"

    def to_json(self) -> dict:
        return {"ibn": self.ibn, "type": None if self.ibn else [1, self.type_n]}


@dataclass(frozen=True)
class K0Data:
    group: FgAbelianGroup
    order_unit: GroupElement
    unit_order: float | int
    d_E: int
    delta_E: int

    def to_json(self) -> dict:
        return {
            **self.group.to_json(),
            "unit": self.order_unit.to_json(),
            "unit_order": "inf" if self.unit_order == INFINITE else self.unit_order,
        }


@dataclass(frozen=True)
class FranksTriple:
    group: FgAbelianGroup
    unit: GroupElement
    det: int

    def to_json(self) -> dict:
        return {"k0": self.group.to_json(), "unit": self.unit.to_json(), "det": self.det}


class Flags(NamedTuple):
    soc_nonzero: bool
    decomposable: bool
    simple: bool
    pis: bool
    condition_L: bool


@dataclass(frozen=True)
class InvariantBundle:
    type_result: TypeResult
    k0: K0Data
    p_l: frozenset
    p_c: frozenset
    p_ec: frozenset
    flags: Flags
    ideal_pl: Optional[Descriptor] = None
    ideal_pc: Optional[Descriptor] = None
    ideal_pec: Optional[Descriptor] = None
    quotient: Optional[Descriptor] = None

    @property
    def soc_nonzero(self) -> bool:
        return self.flags.soc_nonzero

    @property
    def decomposable(self) -> bool:
        return self.flags.decomposable

    @property
    def simple(self) -> bool:
        return self.flags.simple

    @property
    def pis(self) -> bool:
        return self.flags.pis

    @property
    def condition_L(self) -> bool:
        return self.flags.condition_L

    @property
    def betti(self) -> int:
        return self.k0.group.free_rank

    def descriptors(self) -> dict:
        return {
            "I(P_l)": self.ideal_pl,
            "I(P_c)": self.ideal_pc,
            "I(P_ec)": self.ideal_pec,
            "quotient": self.quotient,
        }

    def to_json(self) -> dict:
        out = {
            "type": self.type_result.to_json(),
            "k0": self.k0.to_json(),
            "d_E": self.k0.d_E,
            "delta_E": self.k0.delta_E,
            "flags": self.flags._asdict(),
            "sets": {"P_l": sorted(self.p_l), "P_c": sorted(self.p_c), "P_ec": sorted(self.p_ec)},
        }
        if self.ideal_pl is not None:
            out["descriptors"] = {k: v.to_json() for k, v in self.descriptors().items()}
        return out


def n_prime(g: MultiGraph) -> IntMatrix:
    snk = gc.sinks(g)
    return IntMatrix.of(
        [[a - (i == j and i not in snk) for j, a in enumerate(row)] for i, row in enumerate(g.adjacency)]
    )


def _k0(g: MultiGraph):
    npr = n_prime(g)
    group, proj = cokernel(npr.T)
    unit = proj((1,) * g.n)
    return npr, group, unit


def k0_with_unit(g: MultiGraph) -> K0Data:
    npr, group, unit = _k0(g)
    return K0Data(group, unit, element_order(group, unit), content_gcd(npr), determinant(npr))


def ibn_and_type(g: MultiGraph) -> TypeResult:
    _, group, unit = _k0(g)
    k = element_order(group, unit)
    if k == INFINITE:
        return TypeResult(True)
    return TypeResult(False, 1 + k)


def type_closed_form_two_vertex(g: MultiGraph) -> TypeResult:
    """Type from the case-split formulas for graphs with at most two vertices."""
    if g.n > 2:
        raise TooManyVertices("closed forms exist only for graphs with at most two vertices")
    if g.n == 1:
        loops = g.adjacency[0][0]
        return TypeResult(False, loops) if loops >= 2 else TypeResult(True)
    (l1, t1), (t2, l2) = g.adjacency
    pairs = [(l1, t1), (l2, t2)]
    if pairs[0] == (0, 0) and pairs[1] == (0, 0):
        return TypeResult(True)
    if (0, 0) in pairs:
        # one sink: the other vertex must carry n loops and n - 1 edges to the sink
        l, t = pairs[1] if pairs[0] == (0, 0) else pairs[0]
        return TypeResult(False, l) if t >= 1 and t == l - 1 else TypeResult(True)
    if (1, 0) in pairs:
        l, t = pairs[1] if pairs[0] == (1, 0) else pairs[0]
        return TypeResult(False, l) if t >= 1 and t == l - 1 else TypeResult(True)
    balanced = [l - 1 == t for l, t in pairs]
    if all(balanced):
        return TypeResult(False, 1 + math.gcd(t1, t2))
    if balanced[0]:
        return TypeResult(False, 1 + t1)
    if balanced[1]:
        return TypeResult(False, 1 + t2)
    delta = (l1 - 1) * (l2 - 1) - t1 * t2
    if delta == 0:
        return TypeResult(True)
    return TypeResult(False, 1 + abs(delta) // math.gcd(l1 - 1 - t1, l2 - 1 - t2))


def flags(g: MultiGraph) -> Flags:
    if g.n > gc.HS_MAX_VERTICES:
        raise TooLarge(f"flags are limited to {gc.HS_MAX_VERTICES} vertices")
    soc = bool(gc.line_points(g))
    cond_l = not gc.no_exit_cycle_vertices(g)
    simple = cond_l and not gc.has_proper_hereditary_saturated(g)
    dec = len(gc.undirected_components(g)) > 1
    return Flags(soc, dec, simple, simple and not soc, cond_l)


def franks_triple(g: MultiGraph) -> FranksTriple:
    npr, group, unit = _k0(g)
    return FranksTriple(group, unit, determinant(npr))


def invariant_bundle(g: MultiGraph) -> InvariantBundle:
    """All invariants; table descriptors are filled for graphs with at most two vertices."""
    if g.n > gc.HS_MAX_VERTICES:
        raise TooLarge(f"invariant bundles are limited to {gc.HS_MAX_VERTICES} vertices")
    k0 = k0_with_unit(g)
    tr = TypeResult(True) if k0.unit_order == INFINITE else TypeResult(False, 1 + k0.unit_order)
    bundle = InvariantBundle(
        tr,
        k0,
        gc.line_points(g),
        gc.no_exit_cycle_vertices(g),
        gc.extreme_cycle_vertices(g),
        flags(g),
    )
    if g.n <= 2:
        from .classify import case_of

        case = case_of(g, bundle)
        d = case.descriptors
        bundle = InvariantBundle(
            bundle.type_result, k0, bundle.p_l, bundle.p_c, bundle.p_ec, bundle.flags,
            d["I(P_l)"], d["I(P_c)"], d["I(P_ec)"], d["quotient"],
        )
    return bundle
