"""Finite directed multigraphs and their purely graph-theoretic invariants.

A graph is stored as an integer adjacency matrix: entry ``(i, j)`` counts the
edges from vertex ``i`` to vertex ``j``.  Everything downstream only ever needs
edge multiplicities, so individual edge identities are never materialised.

Vertex sets are plain ``frozenset`` objects of vertex indices.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import kernels
from .errors import (
    BadGraphFile,
    IndexOutOfRange,
    NegativeMultiplicity,
    TooLarge,
    ZeroVertices,
)

VertexSet = frozenset

HS_MAX_VERTICES = 20
CANONICAL_MAX_VERTICES = 8


@dataclass(frozen=True)
class MultiGraph:
    adjacency: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        adj = tuple(tuple(int(x) for x in row) for row in self.adjacency)
        n = len(adj)
        if n == 0:
            raise ZeroVertices("a graph needs at least one vertex")
        if any(len(row) != n for row in adj):
            raise BadGraphFile("adjacency matrix must be square")
        if any(x < 0 for row in adj for x in row):
            raise NegativeMultiplicity("adjacency entries must be non-negative")
        labels = tuple(self.labels) or tuple(f"v{i}" for i in range(n))
        if len(labels) != n:
            raise BadGraphFile("need exactly one label per vertex")
        object.__setattr__(self, "adjacency", adj)
        object.__setattr__(self, "labels", labels)

    @property
    def n(self) -> int:
        return len(self.adjacency)

    def out_degree(self, v: int) -> int:
        return sum(self.adjacency[v])

    def successors(self, v: int) -> list[int]:
        return [w for w, k in enumerate(self.adjacency[v]) if k]

    @property
    def total_multiplicity(self) -> int:
        return sum(map(sum, self.adjacency))

    def flat(self) -> tuple[int, ...]:
        return tuple(itertools.chain.from_iterable(self.adjacency))

    def to_json(self) -> dict:
        edges = [
            {"from": i, "to": j, "count": k}
            for i, row in enumerate(self.adjacency)
            for j, k in enumerate(row)
            if k
        ]
        default = tuple(f"v{i}" for i in range(self.n))
        vertices = self.n if self.labels == default else list(self.labels)
        return {"vertices": vertices, "edges": edges}

    def __str__(self) -> str:
        if self.n <= 2:
            return format_signature(self)
        return json.dumps([list(r) for r in self.adjacency])


def from_adjacency(rows: Sequence[Sequence[int]], labels: Sequence[str] = ()) -> MultiGraph:
    return MultiGraph(tuple(tuple(r) for r in rows), tuple(labels))


def build_graph(vertex_count: int, edges: Iterable[tuple[int, int, int]]) -> MultiGraph:
    """Accumulate ``(source, range, multiplicity)`` triples into a graph."""
    if vertex_count < 1:
        raise ZeroVertices("vertex_count must be positive")
    adj = [[0] * vertex_count for _ in range(vertex_count)]
    for s, r, m in edges:
        if not (0 <= s < vertex_count and 0 <= r < vertex_count):
            raise IndexOutOfRange(f"edge ({s}, {r}) outside 0..{vertex_count - 1}")
        if m < 1:
            raise NegativeMultiplicity(f"edge ({s}, {r}) has multiplicity {m}; must be >= 1")
        adj[s][r] += m
    return from_adjacency(adj)


def two_vertex(l1: int, t1: int, l2: int, t2: int) -> MultiGraph:
    """The graph with ``l_i`` loops at vertex ``i`` and ``t_i`` edges to the other vertex."""
    return from_adjacency([[l1, t1], [t2, l2]])


# -- signatures ---------------------------------------------------------------


@dataclass(frozen=True, order=True)
class TwoVertexSignature:
    """Unordered pair ``{(l1, t1), (l2, t2)}``, smaller pair stored first."""

    first: tuple[int, int]
    second: tuple[int, int]

    def __post_init__(self):
        a, b = tuple(self.first), tuple(self.second)
        if b < a:
            a, b = b, a
        object.__setattr__(self, "first", a)
        object.__setattr__(self, "second", b)

    @classmethod
    def of(cls, g: MultiGraph) -> "TwoVertexSignature":
        if g.n != 2:
            raise BadGraphFile("signatures are defined for two-vertex graphs only")
        (l1, t1), (t2, l2) = g.adjacency
        return cls((l1, t1), (l2, t2))

    def graph(self) -> MultiGraph:
        (l1, t1), (l2, t2) = self.first, self.second
        return two_vertex(l1, t1, l2, t2)

    def __str__(self) -> str:
        return "{(%d,%d),(%d,%d)}" % (*self.first, *self.second)


def format_signature(g: MultiGraph) -> str:
    if g.n == 1:
        return str(g.adjacency[0][0])
    if g.n == 2:
        (l1, t1), (t2, l2) = g.adjacency
        return f"{l1},{t1};{l2},{t2}"
    raise BadGraphFile("compact form exists only for graphs with at most two vertices")


def parse_compact(text: str) -> MultiGraph:
    """Parse ``"l1,t1;l2,t2"`` (two vertices) or ``"l"`` (one vertex with ``l`` loops)."""
    try:
        parts = [p.strip() for p in text.strip().split(";")]
        if len(parts) == 1 and "," not in parts[0]:
            return from_adjacency([[int(parts[0])]])
        if len(parts) != 2:
            raise ValueError
        (l1, t1), (l2, t2) = (tuple(int(x) for x in p.split(",")) for p in parts)
    except ValueError:
        raise BadGraphFile(f"bad compact signature {text!r}; expected 'l1,t1;l2,t2'") from None
    return two_vertex(l1, t1, l2, t2)


def parse_graph_json(obj) -> MultiGraph:
    if not isinstance(obj, dict) or "vertices" not in obj:
        raise BadGraphFile("graph JSON needs a 'vertices' field")
    vertices = obj["vertices"]
    if isinstance(vertices, bool):
        raise BadGraphFile("'vertices' must be a count or a list of names")
    if isinstance(vertices, int):
        labels = [f"v{i}" for i in range(vertices)]
    elif isinstance(vertices, list) and all(isinstance(v, str) for v in vertices):
        labels = list(vertices)
        if len(set(labels)) != len(labels):
            raise BadGraphFile("duplicate vertex names")
    else:
        raise BadGraphFile("'vertices' must be a count or a list of names")
    index = {name: i for i, name in enumerate(labels)}

    def resolve(ref):
        if isinstance(ref, bool):
            raise BadGraphFile(f"bad vertex reference {ref!r}")
        if isinstance(ref, int):
            return ref
        if isinstance(ref, str) and ref in index:
            return index[ref]
        raise BadGraphFile(f"unknown vertex {ref!r}")

    edges = []
    for e in obj.get("edges", []):
        if not isinstance(e, dict) or "from" not in e or "to" not in e:
            raise BadGraphFile(f"bad edge record {e!r}")
        count = e.get("count", 1)
        if isinstance(count, bool) or not isinstance(count, int):
            raise BadGraphFile(f"edge count must be an integer, got {count!r}")
        edges.append((resolve(e["from"]), resolve(e["to"]), count))
    g = build_graph(len(labels), edges)
    return from_adjacency(g.adjacency, labels)


def parse_graph_text(text: str) -> MultiGraph:
    """Parse either the JSON graph format or the compact signature form."""
    stripped = text.strip()
    if stripped.startswith("sig:"):
        return parse_compact(stripped[4:])
    if stripped.startswith("{"):
        try:
            obj = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise BadGraphFile(f"malformed graph JSON: {exc}") from None
        return parse_graph_json(obj)
    return parse_compact(stripped)


# -- reachability -------------------------------------------------------------


def _reach_masks(g: MultiGraph) -> list[int]:
    """Bitmask of vertices reachable from each vertex by paths of length >= 0."""
    n = g.n
    reach = [1 << v for v in range(n)]
    for v in range(n):
        stack = [v]
        while stack:
            w = stack.pop()
            for x in g.successors(w):
                if not reach[v] >> x & 1:
                    reach[v] |= 1 << x
                    stack.append(x)
    return reach


def _on_cycle(g: MultiGraph, reach: list[int]) -> list[bool]:
    return [any(reach[w] >> v & 1 for w in g.successors(v)) for v in range(g.n)]


def _members(mask: int) -> frozenset[int]:
    return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)


def _sccs(g: MultiGraph, reach: list[int]) -> list[int]:
    """Strongly connected components as bitmasks, in order of smallest member."""
    seen = 0
    comps = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = 0
        for w in range(g.n):
            if reach[v] >> w & 1 and reach[w] >> v & 1:
                comp |= 1 << w
        seen |= comp
        comps.append(comp)
    return comps


def sinks(g: MultiGraph) -> frozenset[int]:
    return frozenset(v for v in range(g.n) if g.out_degree(v) == 0)


def line_points(g: MultiGraph) -> frozenset[int]:
    reach = _reach_masks(g)
    cyc = _on_cycle(g, reach)
    bad = {w for w in range(g.n) if g.out_degree(w) > 1 or cyc[w]}
    return frozenset(v for v in range(g.n) if not any(w in bad for w in _members(reach[v])))


def _nontrivial_sccs(g: MultiGraph):
    reach = _reach_masks(g)
    cyc = _on_cycle(g, reach)
    for comp in _sccs(g, reach):
        members = _members(comp)
        if cyc[min(members)]:
            yield comp, members


def no_exit_cycle_vertices(g: MultiGraph) -> frozenset[int]:
    """Vertices on cycles without exits (the set usually written P_c)."""
    out = set()
    for _, members in _nontrivial_sccs(g):
        if all(g.out_degree(v) == 1 for v in members):
            out |= members
    return frozenset(out)


def extreme_cycle_vertices(g: MultiGraph) -> frozenset[int]:
    """Vertices on extreme cycles (the set usually written P_ec).

    These are the members of closed nontrivial strongly connected components
    that are not a single exitless cycle.
    """
    out = set()
    for comp, members in _nontrivial_sccs(g):
        closed = all((1 << w) & comp for v in members for w in g.successors(v))
        if closed and any(g.out_degree(v) >= 2 for v in members):
            out |= members
    return frozenset(out)


def _saturation_data(g: MultiGraph) -> tuple[list[int], list[int], int]:
    reach = _reach_masks(g)
    out_masks = [sum(1 << w for w in g.successors(v)) for v in range(g.n)]
    nonsink = sum(1 << v for v in range(g.n) if out_masks[v])
    return reach, out_masks, nonsink


def hereditary_saturated_subsets(g: MultiGraph) -> list[frozenset[int]]:
    """All hereditary and saturated vertex sets, sorted by size then members."""
    if g.n > HS_MAX_VERTICES:
        raise TooLarge(f"hereditary saturated enumeration is limited to {HS_MAX_VERTICES} vertices")
    reach, out_masks, nonsink = _saturation_data(g)
    masks = kernels.hs_scan(g.n, reach, out_masks, nonsink)
    sets = [_members(m) for m in masks]
    return sorted(sets, key=lambda s: (len(s), sorted(s)))


def saturated_closure(g: MultiGraph, mask: int) -> int:
    """Smallest hereditary saturated set containing the vertices in ``mask``."""
    reach, out_masks, nonsink = _saturation_data(g)
    h = 0
    for v in range(g.n):
        if mask >> v & 1:
            h |= reach[v]
    changed = True
    while changed:
        changed = False
        for v in range(g.n):
            if nonsink >> v & 1 and not h >> v & 1 and out_masks[v] & ~h == 0:
                h |= 1 << v
                changed = True
    return h


def has_proper_hereditary_saturated(g: MultiGraph) -> bool:
    """Whether some hereditary saturated set other than the empty set and E^0 exists.

    Every nonempty such set contains the closure of a single vertex, so it is
    enough to close each vertex.
    """
    full = (1 << g.n) - 1
    return any(saturated_closure(g, 1 << v) != full for v in range(g.n))


def connects_to_plec(g: MultiGraph) -> bool:
    target = line_points(g) | no_exit_cycle_vertices(g) | extreme_cycle_vertices(g)
    tmask = sum(1 << v for v in target)
    return all(r & tmask for r in _reach_masks(g))


def undirected_components(g: MultiGraph) -> list[frozenset[int]]:
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(g.n):
        for j in g.successors(i):
            parent[find(i)] = find(j)
    groups: dict[int, set[int]] = {}
    for v in range(g.n):
        groups.setdefault(find(v), set()).add(v)
    return sorted((frozenset(s) for s in groups.values()), key=min)


def permute(g: MultiGraph, perm: Sequence[int]) -> MultiGraph:
    """Relabel so that new vertex ``i`` is old vertex ``perm[i]``."""
    a = g.adjacency
    return from_adjacency([[a[p][q] for q in perm] for p in perm])


def canonical_form(g: MultiGraph) -> MultiGraph:
    """Lexicographically least row-major adjacency over all vertex orderings."""
    if g.n > CANONICAL_MAX_VERTICES:
        raise TooLarge(f"canonical form is limited to {CANONICAL_MAX_VERTICES} vertices")
    a = g.adjacency
    best = None
    for perm in itertools.permutations(range(g.n)):
        flat = tuple(a[p][q] for p in perm for q in perm)
        if best is None or flat < best:
            best = flat
    n = g.n
    return from_adjacency([best[i * n:(i + 1) * n] for i in range(n)])


def canonical_key(g: MultiGraph) -> tuple[int, ...]:
    return canonical_form(g).flat()
