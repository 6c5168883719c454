"""Zero-divisor graphs and the graph-theoretic notions built on them.

Everything here is a pure function over immutable :class:`LabeledGraph`
values: distances, the cycle core, cap sets C(a,b), end-vertex sets T_a,
the split {a,b} | C(a,b) | B | L induced by a witness, the four
realizability pre-checks, family recognizers and a small exact isomorphism
test.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .algebra import CayleyTable, ZERO_NAME, _check_name
from .errors import InputError

ISO_VERTEX_LIMIT = 16


class LabeledGraph:
    """Simple undirected graph with named vertices (never named "0")."""

    __slots__ = ("vertices", "_adj", "_index")

    def __init__(
        self, vertices: Sequence[str], edges: Iterable[tuple[str, str]] = ()
    ):
        vertices = tuple(vertices)
        seen = set()
        for name in vertices:
            _check_name(name)
            if name == ZERO_NAME:
                raise InputError('"0" cannot name a vertex')
            if name in seen:
                raise InputError(f"duplicate vertex {name!r}")
            seen.add(name)
        adj: dict[str, set[str]] = {v: set() for v in vertices}
        for x, y in edges:
            if x not in adj or y not in adj:
                raise InputError(f"edge ({x},{y}) uses an unknown vertex")
            if x == y:
                raise InputError(f"loop at {x!r}: the graph is simple")
            adj[x].add(y)
            adj[y].add(x)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "_adj", {v: frozenset(nb) for v, nb in adj.items()})
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(vertices)})

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("LabeledGraph is immutable")

    @property
    def n(self) -> int:
        return len(self.vertices)

    def has_vertex(self, x: str) -> bool:
        return x in self._adj

    def check_vertex(self, x: str) -> None:
        if x not in self._adj:
            raise InputError(f"unknown vertex {x!r}")

    def neighbors(self, x: str) -> frozenset[str]:
        self.check_vertex(x)
        return self._adj[x]

    def closed_neighborhood(self, x: str) -> frozenset[str]:
        return self.neighbors(x) | {x}

    def degree(self, x: str) -> int:
        return len(self.neighbors(x))

    def has_edge(self, x: str, y: str) -> bool:
        self.check_vertex(x)
        self.check_vertex(y)
        return y in self._adj[x]

    def edges(self) -> tuple[tuple[str, str], ...]:
        """All edges as name-sorted pairs, lexicographically ordered."""
        out = {tuple(sorted((x, y))) for x in self.vertices for y in self._adj[x]}
        return tuple(sorted(out))

    def end_vertices(self) -> set[str]:
        return {v for v in self.vertices if len(self._adj[v]) == 1}

    def same_graph(self, other: "LabeledGraph") -> bool:
        return set(self.vertices) == set(other.vertices) and self.edges() == other.edges()

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LabeledGraph) and self.same_graph(other)

    def __hash__(self) -> int:
        return hash((frozenset(self.vertices), self.edges()))

    def __repr__(self) -> str:
        return f"LabeledGraph({len(self.vertices)} vertices, {len(self.edges())} edges)"


# --- construction from a table -------------------------------------------


def zero_divisor_graph(table: CayleyTable) -> LabeledGraph:
    """The graph on the nonzero zero-divisors of the table.

    A nonzero element is a vertex iff it annihilates some nonzero element
    (possibly itself); distinct vertices are joined iff their product is 0.
    A self-annihilating element with no distinct partner shows up as an
    isolated vertex; see :func:`isolated_vertices`.
    """
    names = table.names
    n = table.order
    verts = [
        names[i]
        for i in range(1, n)
        if any(table.rows[i][j] == 0 for j in range(1, n))
    ]
    vset = set(verts)
    edges = [
        (names[i], names[j])
        for i in range(1, n)
        for j in range(i + 1, n)
        if table.rows[i][j] == 0 and names[i] in vset and names[j] in vset
    ]
    return LabeledGraph(verts, edges)


def isolated_vertices(g: LabeledGraph) -> set[str]:
    """Degree-0 vertices. Semigroup graphs of interest here never have any."""
    return {v for v in g.vertices if g.degree(v) == 0}


# --- distances -------------------------------------------------------------


def distances_from(g: LabeledGraph, source: str) -> dict[str, float]:
    """BFS distances from ``source``; unreachable vertices get math.inf."""
    g.check_vertex(source)
    dist: dict[str, float] = {v: math.inf for v in g.vertices}
    dist[source] = 0
    frontier = [source]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for v in frontier:
            for w in g.neighbors(v):
                if dist[w] == math.inf:
                    dist[w] = d
                    nxt.append(w)
        frontier = nxt
    return dist

def distance(g: LabeledGraph, x: str, y: str) -> float:
    g.check_vertex(y)
    return distances_from(g, x)[y]


def diameter(g: LabeledGraph) -> float:
    """Largest pairwise distance; 0 for graphs with at most one vertex."""
    best: float = 0
    for v in g.vertices:
        dv = max(distances_from(g, v).values(), default=0)
        best = max(best, dv)
    return best


def is_connected(g: LabeledGraph) -> bool:
    if g.n <= 1:
        return True
    return all(d < math.inf for d in distances_from(g, g.vertices[0]).values())


# --- core (union of the cycles) --------------------------------------------


@dataclass(frozen=True)
class CoreDecomposition:
    core_edges: frozenset[tuple[str, str]]
    core_vertices: frozenset[str]
    pendant_vertices: frozenset[str]
    edges_on_triangle_or_square: bool
    pendants_are_ends_on_core: bool


def _bridges(g: LabeledGraph) -> set[tuple[str, str]]:
    """Bridge edges via one iterative depth-first pass (low-link)."""
    disc: dict[str, int] = {}
    low: dict[str, int] = {}
    parent: dict[str, str | None] = {}
    bridges: set[tuple[str, str]] = set()
    counter = 0
    for root in g.vertices:
        if root in disc:
            continue
        parent[root] = None
        stack: list[tuple[str, Iterable[str]]] = [(root, iter(sorted(g.neighbors(root))))]
        disc[root] = low[root] = counter
        counter += 1
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if w not in disc:
                    parent[w] = v
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((w, iter(sorted(g.neighbors(w)))))
                    advanced = True
                    break
                elif w != parent[v]:
                    low[v] = min(low[v], disc[w])
            if not advanced:
                stack.pop()
                p = parent[v]
                if p is not None:
                    low[p] = min(low[p], low[v])
                    if low[v] > disc[p]:
                        bridges.add(tuple(sorted((p, v))))
    return bridges


def _edge_on_triangle_or_square(g: LabeledGraph, x: str, y: str) -> bool:
    nx, ny = g.neighbors(x), g.neighbors(y)
    if nx & ny:
        return True  # triangle
    for w in nx - {y}:
        for z in ny - {x}:
            if w != z and g.has_edge(w, z):
                return True  # square x-y-z-w-x
    return False


def core(g: LabeledGraph) -> CoreDecomposition:
    """Split the graph into its cycle core (the non-bridge edges) and pendants.

    Also reports whether every core edge lies on a 3- or 4-cycle and whether
    every pendant vertex is an end vertex hanging off the core - the shape
    every zero-divisor graph with a cycle must have.
    """
    if not is_connected(g):
        raise InputError("core() requires a connected graph")
    bridges = _bridges(g)
    core_edges = frozenset(e for e in g.edges() if e not in bridges)
    core_vertices = frozenset(v for e in core_edges for v in e)
    pendants = frozenset(v for v in g.vertices if v not in core_vertices)
    on_cycles = all(_edge_on_triangle_or_square(g, x, y) for x, y in core_edges)
    pendants_ok = bool(core_edges) and all(
        g.degree(v) == 1 and next(iter(g.neighbors(v))) in core_vertices
        for v in pendants
    )
    if not core_edges:
        pendants_ok = True  # no cycle: nothing to hang off
    return CoreDecomposition(core_edges, core_vertices, pendants, on_cycles, pendants_ok)


# --- caps, end sets, the condition-(triangle) witness ----------------------


def c_set(g: LabeledGraph, a: str, b: str) -> set[str]:
    """C(a,b): vertices whose neighborhood is exactly {a, b}."""
    if not g.has_edge(a, b):
        raise InputError(f"c_set requires adjacent vertices, got {a!r},{b!r}")
    want = {a, b}
    return {z for z in g.vertices if set(g.neighbors(z)) == want}


def t_set(g: LabeledGraph, a: str) -> set[str]:
    """T_a: the end vertices adjacent to a."""
    return {z for z in g.neighbors(a) if g.degree(z) == 1}


def is_internal_vertex(g: LabeledGraph, v: str) -> bool:
    """Not an end vertex, and with no end vertex among its neighbors."""
    if g.degree(v) <= 1:
        return False
    return all(g.degree(w) > 1 for w in g.neighbors(v))


@dataclass(frozen=True)
class DeltaWitness:
    """Adjacent a,b plus s in C(a,b) and z at distance exactly 3 from s."""

    a: str
    b: str
    s: str
    z: str


def find_delta_witness(
    g: LabeledGraph, all_witnesses: bool = False
) -> DeltaWitness | None | list[DeltaWitness]:
    """First witness in lexicographic (a, b, s, z) order, or all of them.

    Both orientations of each edge are tried: the roles of a and b are
    asymmetric in everything built on top of the witness.
    """
    found: list[DeltaWitness] = []
    for a in sorted(g.vertices):
        for b in sorted(g.neighbors(a)):
            caps = sorted(c_set(g, a, b))
            if not caps:
                continue
            for s in caps:
                dist = distances_from(g, s)
                for z in sorted(g.vertices):
                    if dist[z] == 3:
                        w = DeltaWitness(a, b, s, z)
                        if not all_witnesses:
                            return w
                        found.append(w)
    if all_witnesses:
        return found
    return None


@dataclass(frozen=True)
class StructurePartition:
    """The split {a,b} | C(a,b) | B | L of the vertex set around a witness."""

    ab: frozenset[str]
    c_ab: frozenset[str]
    b_set: frozenset[str]
    l_set: frozenset[str]
    t_a: frozenset[str]
    t_b: frozenset[str]
    b1: frozenset[str]
    b2: frozenset[str]
    violations: tuple[str, ...]
    notes: tuple[str, ...]


def partition(g: LabeledGraph, w: DeltaWitness) -> StructurePartition:
    """Partition the vertices by distance from the witness cap s.

    B holds the distance-2 vertices outside C(a,b), L the distance-3
    vertices. The two structural observations every semigroup graph obeys
    (L is independent; a B-vertex with an L-neighbor is adjacent to both a
    and b) are checked, and violations reported: a violation means the graph
    is not a semigroup graph at all.
    """
    for v in (w.a, w.b, w.s, w.z):
        g.check_vertex(v)
    if not g.has_edge(w.a, w.b):
        raise InputError(f"invalid witness: {w.a!r} and {w.b!r} are not adjacent")
    caps = c_set(g, w.a, w.b)
    if w.s not in caps:
        raise InputError(f"invalid witness: {w.s!r} is not in C({w.a},{w.b})")
    dist = distances_from(g, w.s)
    if dist[w.z] != 3:
        raise InputError(f"invalid witness: d({w.s},{w.z}) != 3")
    ab = frozenset((w.a, w.b))
    b_set = frozenset(v for v in g.vertices if v not in caps and dist[v] == 2)
    l_set = frozenset(v for v in g.vertices if dist[v] == 3)
    violations: list[str] = []
    notes: list[str] = []
    covered = ab | caps | b_set | l_set
    for v in g.vertices:
        if v not in covered:
            violations.append(f"vertex {v} is neither in {{a,b}}, C(a,b), B nor L")
    t_a = frozenset(t_set(g, w.a))
    t_b = frozenset(t_set(g, w.b))
    rest = b_set - t_a - t_b
    b2 = frozenset(v for v in rest if g.has_edge(v, w.a) and g.has_edge(v, w.b))
    b1 = rest - b2
    for x, y in combinations(sorted(l_set), 2):
        if g.has_edge(x, y):
            violations.append(f"L is not independent: {x}-{y}")
    for k in sorted(b_set):
        if any(l in g.neighbors(k) for l in l_set):
            if not (g.has_edge(k, w.a) and g.has_edge(k, w.b)):
                violations.append(
                    f"B-vertex {k} has an L-neighbor but is not adjacent to both {w.a} and {w.b}"
                )
    for v in sorted(b1):
        if not any(u in b_set for u in g.neighbors(v)):
            violations.append(f"B1-vertex {v} has no neighbor inside B")
    for v in sorted(b2):
        if any(u in b_set for u in g.neighbors(v)):
            notes.append(f"B2-vertex {v} is also adjacent to another B-vertex")
    return StructurePartition(
        ab, frozenset(caps), b_set, l_set, t_a, t_b, b1, b2,
        tuple(violations), tuple(notes),
    )


# --- necessary conditions ---------------------------------------------------


@dataclass(frozen=True)
class NecessaryConditionsReport:
    """The four pre-checks every realizable graph must pass.

    Passing all four does not imply realizability; failing any one certifies
    non-realizability.
    """

    connected: bool
    diameter_le_3: bool
    core_ok: bool
    cover_ok: bool
    detail: str = ""

    @property
    def failed(self) -> tuple[str, ...]:
        out = []
        if not self.connected:
            out.append("connected")
        if not self.diameter_le_3:
            out.append("diameter")
        if not self.core_ok:
            out.append("core")
        if not self.cover_ok:
            out.append("cover")
        return tuple(out)

    @property
    def passed(self) -> bool:
        return not self.failed


def necessary_conditions(g: LabeledGraph) -> NecessaryConditionsReport:
    connected = is_connected(g)
    diam_ok = connected and diameter(g) <= 3
    detail = ""
    if connected:
        dec = core(g)
        core_ok = dec.edges_on_triangle_or_square and dec.pendants_are_ends_on_core
        if not core_ok:
            detail = "core is not a union of triangles and squares with end vertices attached"
    else:
        core_ok = False
        detail = "graph is disconnected"
    cover_ok = True
    for x, y in combinations(sorted(g.vertices), 2):
        if g.has_edge(x, y):
            continue
        need = g.neighbors(x) | g.neighbors(y)
        if not any(need <= g.closed_neighborhood(z) for z in g.vertices):
            cover_ok = False
            detail = f"no vertex dominates N({x}) | N({y})"
            break
    return NecessaryConditionsReport(connected, diam_ok, core_ok, cover_ok, detail)


# --- family recognizers ------------------------------------------------------


def _is_tree(g: LabeledGraph) -> bool:
    return is_connected(g) and len(g.edges()) == g.n - 1


def _is_path(g: LabeledGraph) -> bool:
    if g.n == 1:
        return True
    return _is_tree(g) and all(g.degree(v) <= 2 for v in g.vertices)


def _complete_bipartite_sides(g: LabeledGraph) -> tuple[set[str], set[str]] | None:
    if g.n < 2 or not is_connected(g):
        return None
    color: dict[str, int] = {g.vertices[0]: 0}
    frontier = [g.vertices[0]]
    while frontier:
        nxt = []
        for v in frontier:
            for w in g.neighbors(v):
                if w not in color:
                    color[w] = 1 - color[v]
                    nxt.append(w)
                elif color[w] == color[v]:
                    return None
        frontier = nxt
    left = {v for v in g.vertices if color[v] == 0}
    right = set(g.vertices) - left
    for x in left:
        if g.neighbors(x) != frozenset(right):
            return None
    return (left, right)


def _fan_center(g: LabeledGraph) -> str | None:
    for c in sorted(g.vertices):
        if len(g.neighbors(c)) == g.n - 1:
            rest = [v for v in g.vertices if v != c]
            sub = LabeledGraph(
                rest,
                [(x, y) for x, y in g.edges() if x != c and y != c],
            )
            if _is_path(sub):
                return c
    return None


def _without_vertex(g: LabeledGraph, v: str) -> LabeledGraph:
    rest = [x for x in g.vertices if x != v]
    return LabeledGraph(rest, [(x, y) for x, y in g.edges() if v not in (x, y)])


def classify_special(g: LabeledGraph) -> str:
    """Recognize the families with known realizability classifications.

    Checks, in order: star, two-star, complete bipartite, complete bipartite
    with a thorn, triangle with up to three thorns, fan, fan with a thorn at
    the center. Returns the first matching tag, or "none".
    """
    if g.n == 0 or not is_connected(g):
        return "none"
    if _is_tree(g):
        hubs = [v for v in g.vertices if g.degree(v) > 1]
        if len(hubs) <= 1 and g.n >= 2:
            return "star"
        if len(hubs) == 2 and g.has_edge(*hubs):
            return "two-star"
    sides = _complete_bipartite_sides(g)
    if sides:
        return "complete-bipartite"
    for w in sorted(g.end_vertices()):
        if _complete_bipartite_sides(_without_vertex(g, w)):
            return "complete-bipartite-with-thorn"
    hubs = sorted(v for v in g.vertices if g.degree(v) >= 2)
    if 3 <= g.n <= 6 and len(hubs) == 3:
        a, b, c = hubs
        if g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c):
            thorns = [v for v in g.vertices if v not in hubs]
            if all(g.degree(v) == 1 for v in thorns) and all(
                len([t for t in thorns if g.has_edge(t, h)]) <= 1 for h in hubs
            ):
                return f"triangle-{len(thorns)}-thorns"
    if _fan_center(g) is not None:
        return "fan"
    for w in sorted(g.end_vertices()):
        rest = _without_vertex(g, w)
        center = _fan_center(rest)
        if center is not None and g.has_edge(w, center):
            return "fan-with-thorn"
    return "none"


# --- isomorphism --------------------------------------------------------------


def is_isomorphic(g1: LabeledGraph, g2: LabeledGraph) -> bool:
    """Exact isomorphism test by backtracking with degree pruning.

    Meant for the small graphs this package deals in; refuses anything with
    more than 16 vertices.
    """
    if g1.n > ISO_VERTEX_LIMIT or g2.n > ISO_VERTEX_LIMIT:
        raise InputError(f"isomorphism test is limited to {ISO_VERTEX_LIMIT} vertices")
    if g1.n != g2.n or len(g1.edges()) != len(g2.edges()):
        return False

    def signature(g: LabeledGraph, v: str) -> tuple:
        return (g.degree(v), tuple(sorted(g.degree(w) for w in g.neighbors(v))))

    sig1 = {v: signature(g1, v) for v in g1.vertices}
    sig2 = {v: signature(g2, v) for v in g2.vertices}
    if sorted(sig1.values()) != sorted(sig2.values()):
        return False
    order = sorted(g1.vertices, key=lambda v: (-g1.degree(v), v))
    candidates = {
        v: [w for w in g2.vertices if sig2[w] == sig1[v]] for v in order
    }
    mapping: dict[str, str] = {}
    used: set[str] = set()

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in candidates[v]:
            if w in used:
                continue
            ok = True
            for u in mapping:
                if g1.has_edge(v, u) != g2.has_edge(w, mapping[u]):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used.add(w)
                if extend(i + 1):
                    return True
                del mapping[v]
                used.remove(w)
        return False

    return extend(0)


# --- file formats ---------------------------------------------------------
#
# Graph files are plain text: '#' comment lines are ignored, the first
# significant line lists the vertex names, every following line one edge.


def parse_graph_text(text: str) -> LabeledGraph:
    lines = [
        line.strip()
        for line in text.splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise InputError("empty graph file")
    vertices = lines[0].split()
    edges = []
    for i, line in enumerate(lines[1:]):
        parts = line.split()
        if len(parts) != 2:
            raise InputError(f"edge line {i + 1}: expected two names, got {line!r}")
        edges.append((parts[0], parts[1]))
    return LabeledGraph(vertices, edges)


def emit_graph_text(g: LabeledGraph) -> str:
    lines = [" ".join(g.vertices)]
    lines.extend(f"{x} {y}" for x, y in g.edges())
    return "\n".join(lines) + "\n"


def emit_dot(g: LabeledGraph) -> str:
    """DOT rendering of the graph; output only, never parsed back."""
    lines = ["graph G {"]
    for v in g.vertices:
        if g.degree(v) == 0:
            lines.append(f"  {v};")
    for x, y in g.edges():
        lines.append(f"  {x} -- {y};")
    lines.append("}")
    return "\n".join(lines) + "\n"
