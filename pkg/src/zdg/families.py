"""Parametric graph families and their matching multiplication tables.

Four families are supported:

* ``fig3``: triangle a-b-d with caps C(a,b)={y1..ym} and C(a,d)={x1..xn},
  plus end vertices u1.. on a and v1.. on d.
* ``fig4``: triangle a-b-d with caps C(a,b)={c1..}, end vertices u1.. on a,
  v1.. on b and w1.. on d.
* ``fig5``: edge a-b with caps C(a,b)={c1..cm}, two vertices x1,x2 adjacent
  to both a and b, vertices y1..yn adjacent to exactly x1 and x2, and end
  vertices v1.. on b.
* ``kn2``: the complete graph on {a,b,x1,x2,p5..pn} with end vertices
  y1 on x1 and y2 on x2, plus optional caps c1.. over {x1,x2}.

``generate_table`` extends the known finite constructions class-by-class:
elements of one parametric class share a row pattern, and the table is
re-validated after generation, so a rule that broke associativity for some
parameter choice would be caught immediately rather than silently shipped.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .algebra import CayleyTable, ZERO_NAME, validate
from .errors import InputError
from .graph import LabeledGraph, zero_divisor_graph

FAMILIES = ("fig3", "fig4", "fig5", "kn2")


@dataclass(frozen=True)
class FamilySpec:
    """A family id plus its integer parameters (unused ones stay 0)."""

    family: str
    m: int = 0
    n: int = 0
    u: int = 0
    v: int = 0
    w: int = 0
    caps: int = 0

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise InputError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        for field in ("m", "n", "u", "v", "w", "caps"):
            value = getattr(self, field)
            if not isinstance(value, int) or value < 0:
                raise InputError(f"{self.family}: parameter {field} must be a non-negative integer")
        if self.family == "fig3" and (self.m < 1 or self.n < 1):
            raise InputError("fig3 requires m >= 1 and n >= 1")
        if self.family == "fig4" and (self.caps < 1 or self.w < 1):
            raise InputError("fig4 requires caps >= 1 and w >= 1")
        if self.family == "fig5" and (self.m < 1 or self.n < 1):
            raise InputError("fig5 requires m >= 1 and n >= 1")
        if self.family == "kn2" and self.n < 4:
            raise InputError("kn2 requires n >= 4")


def _names(prefix: str, count: int) -> list[str]:
    return [f"{prefix}{i}" for i in range(1, count + 1)]


# --- graphs -----------------------------------------------------------------


def generate_graph(spec: FamilySpec) -> LabeledGraph:
    if spec.family == "fig3":
        xs, ys = _names("x", spec.n), _names("y", spec.m)
        us, vs = _names("u", spec.u), _names("v", spec.v)
        vertices = ["a", "b", "d"] + xs + ys + us + vs
        edges = [("a", "b"), ("a", "d"), ("b", "d")]
        edges += [("a", x) for x in xs] + [("d", x) for x in xs]
        edges += [("a", y) for y in ys] + [("b", y) for y in ys]
        edges += [("a", u) for u in us] + [("d", v) for v in vs]
        return LabeledGraph(vertices, edges)
    if spec.family == "fig4":
        cs = _names("c", spec.caps)
        us, vs, ws = _names("u", spec.u), _names("v", spec.v), _names("w", spec.w)
        vertices = ["a", "b", "d"] + cs + us + vs + ws
        edges = [("a", "b"), ("a", "d"), ("b", "d")]
        edges += [("a", c) for c in cs] + [("b", c) for c in cs]
        edges += [("a", u) for u in us] + [("b", v) for v in vs] + [("d", w) for w in ws]
        return LabeledGraph(vertices, edges)
    if spec.family == "fig5":
        cs, ys, vs = _names("c", spec.m), _names("y", spec.n), _names("v", spec.v)
        vertices = ["a", "b"] + cs + ["x1", "x2"] + ys + vs
        edges = [("a", "b")]
        edges += [("a", c) for c in cs] + [("b", c) for c in cs]
        edges += [("a", "x1"), ("a", "x2"), ("b", "x1"), ("b", "x2")]
        edges += [(x, y) for x in ("x1", "x2") for y in ys]
        edges += [("b", v) for v in vs]
        return LabeledGraph(vertices, edges)
    # kn2
    clique = ["a", "b", "x1", "x2"] + _names("p", spec.n)[4:]
    cs = _names("c", spec.caps)
    vertices = clique + ["y1", "y2"] + cs
    edges = [(p, q) for i, p in enumerate(clique) for q in clique[i + 1 :]]
    edges += [("x1", "y1"), ("x2", "y2")]
    edges += [(c, "x1") for c in cs] + [(c, "x2") for c in cs]
    return LabeledGraph(vertices, edges)


# --- graph surgery ------------------------------------------------------------


def fresh_vertex_name(g: LabeledGraph, prefix: str = "w") -> str:
    k = 1
    existing = set(g.vertices)
    while f"{prefix}{k}" in existing:
        k += 1
    return f"{prefix}{k}"


def add_end(g: LabeledGraph, p: str, name: str | None = None) -> LabeledGraph:
    """New graph with a fresh end vertex attached to p; g is unchanged."""
    g.check_vertex(p)
    w = name or fresh_vertex_name(g)
    if g.has_vertex(w):
        raise InputError(f"vertex {w!r} already exists")
    return LabeledGraph(list(g.vertices) + [w], list(g.edges()) + [(p, w)])


def add_cap(g: LabeledGraph, p: str, q: str, name: str | None = None) -> LabeledGraph:
    """New graph with a fresh vertex adjacent to exactly p and q."""
    g.check_vertex(p)
    g.check_vertex(q)
    if p == q:
        raise InputError("a cap needs two distinct vertices")
    w = name or fresh_vertex_name(g)
    if g.has_vertex(w):
        raise InputError(f"vertex {w!r} already exists")
    return LabeledGraph(list(g.vertices) + [w], list(g.edges()) + [(p, w), (q, w)])


def add_edge(g: LabeledGraph, p: str, q: str) -> LabeledGraph:
    """New graph with the edge p-q added."""
    if g.has_edge(p, q):
        raise InputError(f"edge ({p},{q}) already present")
    if p == q:
        raise InputError("loops are not allowed")
    return LabeledGraph(g.vertices, list(g.edges()) + [(p, q)])


# --- tables -------------------------------------------------------------------


def _build_table(names: list[str], prod: Callable[[str, str], str]) -> CayleyTable:
    full = [ZERO_NAME] + names
    index = {name: i for i, name in enumerate(full)}
    rows = []
    for x in full:
        row = []
        for y in full:
            if x == ZERO_NAME or y == ZERO_NAME:
                row.append(0)
            else:
                row.append(index[prod(x, y)])
        rows.append(row)
    return CayleyTable(full, rows)


def _class_of(name: str) -> tuple[str, int]:
    """Split "x12" into ("x", 12); fixed names map to themselves with index 0."""
    head = name.rstrip("0123456789")
    tail = name[len(head) :]
    return (head, int(tail) if tail else 0)


def _fig3_product(x: str, y: str) -> str:
    cx, ix = _class_of(x)
    cy, iy = _class_of(y)
    if cx > cy or (cx == cy and ix > iy):
        cx, ix, cy, iy = cy, iy, cx, ix
    pair = (cx, cy)
    if pair == ("a", "a"):
        return "a"
    if pair in (("a", "b"), ("a", "d"), ("a", "x"), ("a", "y"), ("a", "u")):
        return ZERO_NAME
    if pair == ("a", "v"):
        return "a"
    if pair in (("b", "b"), ("b", "d"), ("b", "y")):
        return ZERO_NAME
    if pair in (("b", "x"), ("b", "u"), ("b", "v")):
        return "b"
    if pair in (("d", "d"), ("d", "y"), ("d", "u")):
        return "d"
    if pair in (("d", "x"), ("d", "v")):
        return ZERO_NAME
    if pair == ("x", "x"):
        return f"x{max(ix, iy)}"
    if pair == ("x", "y"):
        return "b"
    if pair in (("u", "x"), ("v", "x")):
        return f"x{ix if cx == 'x' else iy}"
    if pair == ("y", "y"):
        return "d"
    if pair == ("u", "y"):
        return f"y{iy if cy == 'y' else ix}"
    if pair == ("v", "y"):
        return "b"
    if pair == ("u", "u"):
        return f"u{max(ix, iy)}"
    if pair == ("u", "v"):
        return "x1"
    if pair == ("v", "v"):
        return "v1"
    raise AssertionError(f"fig3 rule missing for {x},{y}")


def _fig5_product(x: str, y: str) -> str:
    cx, ix = _class_of(x)
    cy, iy = _class_of(y)
    if cx > cy or (cx == cy and ix > iy):
        cx, ix, cy, iy = cy, iy, cx, ix
    pair = (cx, cy)
    if pair == ("a", "a"):
        return "a"
    if pair in (("a", "b"), ("a", "c"), ("a", "x")):
        return ZERO_NAME
    if pair in (("a", "y"), ("a", "v")):
        return "a"
    if pair in (("b", "b"), ("b", "c"), ("b", "x"), ("b", "v")):
        return ZERO_NAME
    if pair == ("b", "y"):
        return "b"
    if pair in (("c", "c"), ("c", "v"), ("c", "x")):
        return "x1"
    if pair == ("c", "y"):
        return "b"
    if pair == ("v", "v"):
        return "v1"
    if pair in (("v", "x"),):
        return "x1"
    if pair == ("v", "y"):
        return "a"
    if pair == ("x", "x"):
        return "x2" if ix == iy == 2 else "x1"
    if pair == ("x", "y"):
        return ZERO_NAME
    if pair == ("y", "y"):
        return "y1"
    raise AssertionError(f"fig5 rule missing for {x},{y}")


def _fig4_table(spec: FamilySpec) -> CayleyTable:
    if spec.u > 0 and spec.v > 0:
        raise InputError(
            "fig4 with end vertices on both a and b is not a semigroup graph; "
            "no table exists (need u = 0 or v = 0)"
        )
    cs = _names("c", spec.caps)
    ws = _names("w", spec.w)
    if spec.u == 0 and spec.v == 0:
        # Caps-and-W only: restriction of the fig3 construction with the
        # C(a,d) and U rows deleted.
        names = ["a", "b", "d"] + cs + ws

        def prod(x: str, y: str) -> str:
            cx, _ = _class_of(x)
            cy, _ = _class_of(y)
            if cx > cy:
                x, y = y, x
                cx, cy = cy, cx
            pair = (cx, cy)
            if pair == ("a", "a"):
                return "a"
            if pair in (("a", "b"), ("a", "d"), ("a", "c")):
                return ZERO_NAME
            if pair == ("a", "w"):
                return "a"
            if pair in (("b", "b"), ("b", "d"), ("b", "c")):
                return ZERO_NAME
            if pair == ("b", "w"):
                return "b"
            if pair == ("d", "d"):
                return "d"
            if pair == ("c", "d"):
                return "d"
            if pair == ("d", "w"):
                return ZERO_NAME
            if pair == ("c", "c"):
                return "d"
            if pair == ("c", "w"):
                return "b"
            if pair == ("w", "w"):
                return "w1"
            raise AssertionError(f"fig4 rule missing for {x},{y}")

        return _build_table(names, prod)

    # One side carries end vertices: X is that endpoint, Y the other.
    if spec.u > 0:
        ends, X, Y = _names("u", spec.u), "a", "b"
        names = ["a", "b", "d"] + cs + ends + ws
    else:
        ends, X, Y = _names("v", spec.v), "b", "a"
        names = ["a", "b", "d"] + cs + ends + ws
    end_class = ends[0][0]

    def prod(x: str, y: str) -> str:
        def kind(z: str) -> str:
            cz, _ = _class_of(z)
            if cz == X:
                return "X"
            if cz == Y:
                return "Y"
            if cz == end_class:
                return "e"
            return cz

        kx, ky = kind(x), kind(y)
        if kx > ky:
            kx, ky = ky, kx
        pair = (kx, ky)
        if pair == ("X", "X"):
            return ZERO_NAME
        if pair == ("Y", "Y"):
            return X
        if pair in (("X", "Y"), ("X", "d"), ("Y", "d")):
            return ZERO_NAME
        if pair in (("X", "c"), ("Y", "c")):
            return ZERO_NAME
        if pair == ("c", "d"):
            return "d"
        if pair == ("c", "c"):
            return "d"
        if pair == ("X", "e"):
            return ZERO_NAME
        if pair == ("Y", "e"):
            return X
        if pair == ("d", "e"):
            return "d"
        if pair == ("c", "e"):
            return "d"
        if pair == ("e", "e"):
            return "c1"
        if pair == ("X", "w"):
            return X
        if pair == ("Y", "w"):
            return Y
        if pair == ("d", "w"):
            return ZERO_NAME
        if pair == ("c", "w"):
            return X
        if pair == ("e", "w"):
            return Y
        if pair == ("w", "w"):
            return "w1"
        if pair == ("d", "d"):
            return "d"
        raise AssertionError(f"fig4 rule missing for {x},{y}")

    return _build_table(names, prod)


def _kn2_table(spec: FamilySpec) -> CayleyTable:
    clique = ["a", "b", "x1", "x2"] + _names("p", spec.n)[4:]
    if spec.caps == 0:
        names = clique + ["y1", "y2"]
        clique_set = set(clique)

        def prod(x: str, y: str) -> str:
            if x in clique_set and y in clique_set:
                return "a" if x == y == "a" else ZERO_NAME
            if x in clique_set or y in clique_set:
                q, e = (x, y) if x in clique_set else (y, x)
                if q == "a":
                    return "a"
                if q == "x1":
                    return ZERO_NAME if e == "y1" else "x1"
                if q == "x2":
                    return "x2" if e == "y1" else ZERO_NAME
                return "x2" if e == "y1" else "x1"
            if x == y:
                return x
            return "a"  # y1 * y2

        return _build_table(names, prod)

    if spec.n != 4:
        raise InputError("kn2 tables with caps are constructed for n = 4 only")
    cs = _names("c", spec.caps)
    names = clique + ["y1", "y2"] + cs
    clique_set = set(clique)

    def prod(x: str, y: str) -> str:
        in_x, in_y = x in clique_set, y in clique_set
        if in_x and in_y:
            return x if x == y else ZERO_NAME
        if in_x or in_y:
            q, other = (x, y) if in_x else (y, x)
            if other[0] == "c":
                return ZERO_NAME if q in ("x1", "x2") else q
            # other is y1 or y2
            if q in ("a", "b"):
                return q
            if q == "x1":
                return ZERO_NAME if other == "y1" else "x1"
            return "x2" if other == "y1" else ZERO_NAME
        if x == y and x[0] == "y":
            return x
        return "c1"  # y1*y2 and every product touching a cap collapse to c1

    return _build_table(names, prod)


def generate_table(spec: FamilySpec) -> CayleyTable:
    """A commutative, associative, zero-absorbing table realizing the family.

    The result is checked on the way out: it must validate and its
    zero-divisor graph must equal ``generate_graph(spec)`` with the same
    labels. For the parameter choices whose tables are known from the
    literature the output reproduces them cell for cell.
    """
    if spec.family == "fig3":
        names = (
            ["a", "b", "d"]
            + _names("x", spec.n)
            + _names("y", spec.m)
            + _names("u", spec.u)
            + _names("v", spec.v)
        )
        table = _build_table(names, _fig3_product)
    elif spec.family == "fig4":
        table = _fig4_table(spec)
    elif spec.family == "fig5":
        names = (
            ["a", "b"]
            + _names("c", spec.m)
            + ["x1", "x2"]
            + _names("y", spec.n)
            + _names("v", spec.v)
        )
        table = _build_table(names, _fig5_product)
    else:
        table = _kn2_table(spec)
    report = validate(table)
    if not report.ok:
        raise RuntimeError(
            f"generated table for {spec} failed validation: "
            f"{report.first_failure.describe(table) if report.first_failure else report}"
        )
    if not zero_divisor_graph(table).same_graph(generate_graph(spec)):
        raise RuntimeError(f"generated table for {spec} does not match its graph")
    return table
