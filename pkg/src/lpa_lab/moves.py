"""The shift move and a bounded search for shift-move witnesses.

Shifting the edge ``u -> v`` deletes one such edge and adds an edge
``u -> r(f)`` for every edge ``f`` leaving ``v``; on ``N'_E`` this adds row
``v`` to row ``u``.  Shifts at a loop (``u == v``) are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import IndexOutOfRange, LoopShiftUnsupported, NoSuchEdge, RangeIsSink
from .graph import MultiGraph, canonical_form, canonical_key, from_adjacency


@dataclass(frozen=True, order=True)
class ShiftSpec:
    source: int
    range: int

    def to_json(self) -> dict:
        return {"from": self.source, "to": self.range}


def shift(g: MultiGraph, spec: ShiftSpec) -> MultiGraph:
    u, v = spec.source, spec.range
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise IndexOutOfRange(f"shift ({u}, {v}) outside 0..{g.n - 1}")
    if u == v:
        raise LoopShiftUnsupported("shifting along a loop is not supported")
    a = [list(r) for r in g.adjacency]
    if a[u][v] < 1:
        raise NoSuchEdge(f"no edge from {u} to {v}")
    if not any(a[v]):
        raise RangeIsSink(f"vertex {v} is a sink")
    a[u][v] -= 1
    a[u] = [x + y for x, y in zip(a[u], a[v])]
    return from_adjacency(a, g.labels)


def valid_shifts(g: MultiGraph) -> list[ShiftSpec]:
    a = g.adjacency
    return [
        ShiftSpec(u, v)
        for u in range(g.n)
        for v in range(g.n)
        if u != v and a[u][v] and any(a[v])
    ]


def replay(g: MultiGraph, specs) -> MultiGraph:
    for s in specs:
        g = shift(g, s)
    return g


@dataclass(frozen=True)
class WitnessPath:
    """Two forward shift sequences whose endpoints have equal canonical forms."""

    start: MultiGraph
    end: MultiGraph
    steps: tuple[tuple[str, ShiftSpec], ...]
    meet: MultiGraph

    def side(self, which: str) -> list[ShiftSpec]:
        return [s for d, s in self.steps if d == which]

    def check(self) -> bool:
        left = replay(self.start, self.side("forward-from-E"))
        right = replay(self.end, self.side("forward-from-F"))
        return canonical_key(left) == canonical_key(right) == self.meet.flat()

    def __len__(self) -> int:
        return len(self.steps)

    def to_json(self) -> dict:
        return {
            "start": self.start.to_json(),
            "end": self.end.to_json(),
            "steps": [{"direction": d, **s.to_json()} for d, s in self.steps],
            "meet": [list(r) for r in self.meet.adjacency],
        }


@dataclass(frozen=True)
class OrbitConfig:
    max_total_multiplicity: int = 24
    max_depth: int = 6
    max_states: int = 5000


@dataclass
class _Side:
    root: MultiGraph
    # canonical key -> (depth, concrete graph, parent key, spec)
    seen: dict = field(default_factory=dict)
    frontier: list = field(default_factory=list)
    depth: int = 0

    def __post_init__(self):
        k = canonical_key(self.root)
        self.seen[k] = (0, self.root, None, None)
        self.frontier = [k]

    def chain(self, key) -> list[ShiftSpec]:
        out = []
        while True:
            _, _, parent, spec = self.seen[key]
            if parent is None:
                return out[::-1]
            out.append(spec)
            key = parent


def orbit_search(e: MultiGraph, f: MultiGraph, cfg: OrbitConfig = OrbitConfig()) -> Optional[WitnessPath]:
    """Bidirectional breadth-first search over forward shifts from both graphs.

    States are canonical forms; states whose total multiplicity exceeds the
    bound (never lower than the inputs' own totals) are pruned.  ``max_depth``
    bounds the combined depth of the two sides.  Returns the meeting point of
    least combined depth, ties broken by the lexicographically least canonical
    form, or ``None``; ``None`` says nothing about non-isomorphism.
    """
    if e.n != f.n:
        return None
    bound = max(cfg.max_total_multiplicity, e.total_multiplicity, f.total_multiplicity)
    sides = {"E": _Side(e), "F": _Side(f)}

    def meeting():
        common = sides["E"].seen.keys() & sides["F"].seen.keys()
        if not common:
            return None
        return min(common, key=lambda k: (sides["E"].seen[k][0] + sides["F"].seen[k][0], k))

    budget_left = True
    while True:
        key = meeting()
        if key is not None:
            steps = tuple(("forward-from-E", s) for s in sides["E"].chain(key)) + tuple(
                ("forward-from-F", s) for s in sides["F"].chain(key)
            )
            n = e.n
            return WitnessPath(e, f, steps, from_adjacency([key[i * n:(i + 1) * n] for i in range(n)]))
        if not budget_left or sides["E"].depth + sides["F"].depth >= cfg.max_depth:
            return None
        live = [s for s in ("E", "F") if sides[s].frontier]
        if not live:
            return None
        name = min(live, key=lambda s: (sides[s].depth, s))
        side = sides[name]
        nxt = []
        for k in sorted(side.frontier):
            depth, g, _, _ = side.seen[k]
            for spec in valid_shifts(g):
                child = shift(g, spec)
                if child.total_multiplicity > bound:
                    continue
                ck = canonical_key(child)
                if ck in side.seen:
                    continue
                side.seen[ck] = (depth + 1, child, k, spec)
                nxt.append(ck)
                if len(sides["E"].seen) + len(sides["F"].seen) >= cfg.max_states:
                    budget_left = False
                    break
            if not budget_left:
                break
        side.frontier = nxt
        side.depth += 1


__all__ = [
    "ShiftSpec",
    "WitnessPath",
    "OrbitConfig",
    "shift",
    "valid_shifts",
    "replay",
    "orbit_search",
    "canonical_form",
]
