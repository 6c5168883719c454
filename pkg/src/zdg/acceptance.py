"""The acceptance suite: ten executable criteria over the whole package.

Each criterion is a function returning a :class:`CriterionResult`; the CLI
verb ``reproduce`` runs them all and prints one pass/fail line each, and
``tests/test_acceptance.py`` asserts them individually.

Criterion 5 contains a deliberate red: its part (i) declares a graph
unrealizable that is in fact realizable (it is isomorphic to a member of the
realizable family it was built from once the pendant set V is empty, and an
exhaustively verified witness exists). The literal check is kept and fails
honestly; the corrected form of the statement, with V nonempty, is verified
alongside it. See the repository notes for the full analysis.
"""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from importlib import resources
from typing import Callable, Iterable

from .algebra import CayleyTable, ZERO_NAME, parse_table_csv, same_products, validate
from .families import FamilySpec, add_cap, add_edge, add_end, generate_graph, generate_table
from .graph import (
    LabeledGraph,
    is_isomorphic,
    necessary_conditions,
    zero_divisor_graph,
)
from .search import Outcome, SearchConfig, enumerate_tables, realize
from .theorems import run_all

GOLDEN = {
    "fig3_2_2_1_2": FamilySpec("fig3", m=2, n=2, u=1, v=2),
    "fig4_2_2_0_2": FamilySpec("fig4", caps=2, u=2, v=0, w=2),
    "fig5_2_2_2": FamilySpec("fig5", m=2, n=2, v=2),
    "kn2_4": FamilySpec("kn2", n=4),
    "kn2_4_caps2": FamilySpec("kn2", n=4, caps=2),
}


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"criterion {self.number:2d} [{status}] {self.name}: {self.detail} ({self.seconds:.1f}s)"


def load_golden_table(name: str) -> CayleyTable:
    text = resources.files("zdg").joinpath(f"data/{name}.csv").read_text(encoding="utf-8")
    return parse_table_csv(text)


def sweep_specs() -> list[FamilySpec]:
    """The criterion-2 parameter grid: every parameter from its bound to 3."""
    specs = []
    for m, n, u, v in itertools.product(range(1, 4), range(1, 4), range(4), range(4)):
        specs.append(FamilySpec("fig3", m=m, n=n, u=u, v=v))
    for m, n, v in itertools.product(range(1, 4), range(1, 4), range(4)):
        specs.append(FamilySpec("fig5", m=m, n=n, v=v))
    for caps, w in itertools.product(range(1, 4), range(1, 4)):
        for u, v in ((0, 0), (1, 0), (2, 0), (3, 0), (0, 1), (0, 2), (0, 3)):
            specs.append(FamilySpec("fig4", caps=caps, u=u, v=v, w=w))
    for caps in range(4):
        specs.append(FamilySpec("kn2", n=4, caps=caps))
    return specs


def brute_force_realizations(g: LabeledGraph) -> set[tuple[tuple[int, ...], ...]]:
    """Independent oracle: try every filling of every unknown cell.

    Filters by graph exactness and a direct associativity scan; shares no
    code with the search engine.
    """
    names = [ZERO_NAME] + list(g.vertices)
    n = len(names)
    idx = {v: i for i, v in enumerate(names)}
    adj = [[False] * n for _ in range(n)]
    for x, y in g.edges():
        adj[idx[x]][idx[y]] = adj[idx[y]][idx[x]] = True
    cells = [
        (i, j) for i in range(1, n) for j in range(i, n) if not (i < j and adj[i][j])
    ]
    solutions = set()
    for values in itertools.product(range(n), repeat=len(cells)):
        P = [[0] * n for _ in range(n)]
        for (i, j), v in zip(cells, values):
            P[i][j] = P[j][i] = v
        ok = True
        for i in range(1, n):
            for j in range(i + 1, n):
                if (P[i][j] == 0) != adj[i][j]:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        for i in range(n):
            if not ok:
                break
            Pi = P[i]
            for j in range(n):
                if not ok:
                    break
                row_ij = P[Pi[j]]
                Pj = P[j]
                for k in range(n):
                    if row_ij[k] != Pi[Pj[k]]:
                        ok = False
                        break
        if ok:
            solutions.add(tuple(tuple(row) for row in P))
    return solutions


ORACLE_GRAPHS: dict[str, LabeledGraph] = {
    "K2": LabeledGraph(["a", "b"], [("a", "b")]),
    "P3": LabeledGraph(["a", "b", "c"], [("a", "b"), ("b", "c")]),
    "K3": LabeledGraph(["a", "b", "c"], [("a", "b"), ("b", "c"), ("a", "c")]),
    "P4": LabeledGraph(["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("c", "d")]),
    "K1_3": LabeledGraph(["a", "b", "c", "d"], [("a", "b"), ("a", "c"), ("a", "d")]),
    "paw": LabeledGraph(["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("a", "c"), ("a", "d")]),
    "C4": LabeledGraph(["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("c", "d"), ("a", "d")]),
    "diamond": LabeledGraph(
        ["a", "b", "c", "d"],
        [("a", "b"), ("b", "c"), ("c", "d"), ("a", "d"), ("a", "c")],
    ),
    "K4": LabeledGraph(
        ["a", "b", "c", "d"],
        [("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d")],
    ),
}


def graph_automorphisms(g: LabeledGraph) -> list[dict[str, str]]:
    """All adjacency-preserving vertex bijections (small graphs only)."""
    verts = sorted(g.vertices)
    degs = {v: g.degree(v) for v in verts}
    edges = set(g.edges())
    out = []
    for perm in itertools.permutations(verts):
        mapping = dict(zip(verts, perm))
        if any(degs[v] != degs[mapping[v]] for v in verts):
            continue
        if all(
            (tuple(sorted((mapping[x], mapping[y]))) in edges) == (tuple(sorted((x, y))) in edges)
            for x, y in itertools.combinations(verts, 2)
        ):
            out.append(mapping)
    return out


def relabel_table(table: CayleyTable, mapping: dict[str, str]) -> CayleyTable:
    """Apply a vertex relabeling to a table (zero stays fixed)."""
    m = {ZERO_NAME: ZERO_NAME}
    m.update(mapping)
    inv = {v: k for k, v in m.items()}
    rows = []
    for x in table.names:
        rows.append(
            [table.names.index(m[table.mul(inv[x], inv[y])]) for y in table.names]
        )
    return CayleyTable(table.names, rows)


class Corpus:
    """Everything later criteria consume from earlier ones."""

    def __init__(self) -> None:
        self.golden: dict[str, CayleyTable] = {}
        self.sweep_tables: list[CayleyTable] = []
        self.witnesses: list[tuple[str, CayleyTable]] = []
        self.remark_graph: LabeledGraph | None = None

    def add_witness(self, label: str, table: CayleyTable) -> None:
        self.witnesses.append((label, table))


def _timed(fn: Callable[[], tuple[bool, str]], number: int, name: str) -> CriterionResult:
    t0 = time.perf_counter()
    try:
        passed, detail = fn()
    except Exception as exc:  # a crashed criterion is a failed criterion
        passed, detail = False, f"crashed: {exc!r}"
    return CriterionResult(number, name, passed, detail, time.perf_counter() - t0)


def criterion_1(corpus: Corpus) -> CriterionResult:
    def run() -> tuple[bool, str]:
        problems = []
        for name, spec in GOLDEN.items():
            table = load_golden_table(name)
            corpus.golden[name] = table
            if not validate(table).ok:
                problems.append(f"{name} fails validation")
            if not zero_divisor_graph(table).same_graph(generate_graph(spec)):
                problems.append(f"{name} graph mismatch")
            if not same_products(generate_table(spec), table):
                problems.append(f"{name} generator not verbatim")
        if problems:
            return False, "; ".join(problems)
        return True, "5 golden tables validate, match their graphs, generators reproduce them verbatim"

    return _timed(run, 1, "golden tables")


def criterion_2(corpus: Corpus) -> CriterionResult:
    def run() -> tuple[bool, str]:
        specs = sweep_specs()
        for spec in specs:
            table = generate_table(spec)
            if not validate(table).ok:
                return False, f"{spec} failed validation"
            if not zero_divisor_graph(table).same_graph(generate_graph(spec)):
                return False, f"{spec} graph mismatch"
            corpus.sweep_tables.append(table)
        return True, f"{len(specs)} parametric tables validate and match their graphs"

    return _timed(run, 2, "extension sweep")


def _expect(
    corpus: Corpus,
    label: str,
    g: LabeledGraph,
    expected: Outcome,
    config: SearchConfig | None = None,
) -> str | None:
    """Run realize, record witnesses, return an error string on mismatch."""
    out = realize(g, config)
    if out.tag == Outcome.REALIZED and out.witness is not None:
        corpus.add_witness(label, out.witness)
    if out.tag != expected:
        return f"{label}: expected {expected.value}, got {out.tag.value}"
    if expected == Outcome.UNREALIZABLE and not (out.reason or "").startswith(
        ("exhausted", "necessary-conditions")
    ):
        return f"{label}: unrealizable but not certified ({out.reason})"
    return None


def criterion_3(corpus: Corpus) -> CriterionResult:
    def run() -> tuple[bool, str]:
        base = generate_graph(FamilySpec("fig3", m=1, n=1, u=0, v=1))
        cases = {
            "fig3(1,1,0,1)+end(b)": add_end(base, "b"),
            "fig3(1,1,0,1)+cap(b,d)": add_cap(base, "b", "d"),
        }
        corpus.remark_graph = cases["fig3(1,1,0,1)+end(b)"]
        problems = []
        nodes = 0
        for label, g in cases.items():
            out = realize(g)
            nodes += out.stats.nodes
            if out.tag != Outcome.UNREALIZABLE:
                problems.append(f"{label}: got {out.tag.value}")
            elif not (out.reason or "").startswith("exhausted"):
                # must be a search-tree certificate, not a pre-screen verdict
                problems.append(f"{label}: not by exhaustion ({out.reason})")
        if problems:
            return False, "; ".join(problems)
        return True, f"both modifications certified unrealizable by full exhaustion ({nodes} nodes)"

    return _timed(run, 3, "non-realizability of the two fig3 modifications")


def criterion_4(corpus: Corpus) -> CriterionResult:
    def run() -> tuple[bool, str]:
        wrong = []
        count = 0
        for caps, u, v, w in itertools.product((1, 2), (0, 1, 2), (0, 1, 2), (1, 2)):
            g = generate_graph(FamilySpec("fig4", caps=caps, u=u, v=v, w=w))
            expected = Outcome.REALIZED if (u == 0 or v == 0) else Outcome.UNREALIZABLE
            problem = _expect(corpus, f"fig4({caps},{u},{v},{w})", g, expected)
            if problem:
                wrong.append(problem)
            count += 1
        if wrong:
            return False, "; ".join(wrong)
        return True, f"{count} searches: realized exactly when u=0 or v=0"

    return _timed(run, 4, "fig4 classification sweep")


def criterion_5_parts(corpus: Corpus) -> dict[str, tuple[bool, str]]:
    """Returns named part-results so the literal defect stays visible."""
    base = generate_graph(FamilySpec("fig5", m=1, n=1, v=0))
    parts: dict[str, tuple[bool, str]] = {}

    p = _expect(corpus, "fig5(1,1,0)", base, Outcome.REALIZED)
    parts["plain"] = (p is None, p or "fig5(1,1,0) realized")

    p = _expect(corpus, "fig5(1,1,0)+end(x1)", add_end(base, "x1"), Outcome.UNREALIZABLE)
    parts["end_on_x1"] = (p is None, p or "certified unrealizable")

    p = _expect(
        corpus, "fig5(1,1,0)+edge(x1,x2)", add_edge(base, "x1", "x2"), Outcome.UNREALIZABLE
    )
    parts["edge_x1_x2"] = (p is None, p or "certified unrealizable")

    # Literal part (i): the stated expectation is UNREALIZABLE. The graph is
    # actually realizable: with V empty it is isomorphic to fig5(1,1,1),
    # a member of the family proved realizable, and the engine exhibits a
    # witness that survives independent validation.
    g_i = add_end(base, "a")
    out = realize(g_i)
    if out.tag == Outcome.REALIZED and out.witness is not None:
        corpus.add_witness("fig5(1,1,0)+end(a)", out.witness)
    literal_ok = out.tag == Outcome.UNREALIZABLE
    iso = is_isomorphic(g_i, generate_graph(FamilySpec("fig5", m=1, n=1, v=1)))
    corrected = realize(add_end(generate_graph(FamilySpec("fig5", m=1, n=1, v=1)), "a"))
    corrected_ok = corrected.tag == Outcome.UNREALIZABLE
    detail = (
        f"literal expectation unrealizable, engine says {out.tag.value}; "
        f"graph isomorphic to fig5(1,1,1): {iso}; "
        f"corrected form with V nonempty (fig5(1,1,1)+end(a)) unrealizable: {corrected_ok}"
    )
    parts["end_on_a_literal"] = (literal_ok, detail)
    parts["end_on_a_corrected"] = (corrected_ok and iso, detail)
    return parts


def criterion_5(corpus: Corpus) -> CriterionResult:
    def run() -> tuple[bool, str]:
        parts = criterion_5_parts(corpus)
        failed = {k: v for k, (ok, v) in parts.items() if not ok}
        if failed:
            msgs = "; ".join(f"{k}: {v}" for k, v in failed.items())
            return False, f"known defect in part (i), see notes. {msgs}"
        return True, "all parts as stated"

    return _timed(run, 5, "fig5 modification remarks")


def criterion_6(corpus: Corpus) -> CriterionResult:
    def run() -> tuple[bool, str]:
        k42 = generate_graph(FamilySpec("kn2", n=4))
        one_cap = add_cap(k42, "x1", "x2")
        problems = [
            p
            for p in (
                _expect(corpus, "kn2(4)+cap(a,b)", add_cap(k42, "a", "b"), Outcome.UNREALIZABLE),
                _expect(corpus, "kn2(4)+cap(a,x1)", add_cap(k42, "a", "x1"), Outcome.UNREALIZABLE),
                _expect(corpus, "kn2(4)+cap(x1,x2)", one_cap, Outcome.REALIZED),
                _expect(
                    corpus,
                    "kn2(4)+2caps(x1,x2)",
                    add_cap(one_cap, "x1", "x2"),
                    Outcome.REALIZED,
                ),
            )
            if p
        ]
        if problems:
            return False, "; ".join(problems)
        return True, "caps on the clique realizable exactly over the end-vertex corners"

    return _timed(run, 6, "caps on the complete-graph family")


def criterion_7(corpus: Corpus) -> CriterionResult:
    def run() -> tuple[bool, str]:
        g = generate_graph(FamilySpec("kn2", n=4))
        res = enumerate_tables(g)  # symmetry defaults off for enumeration
        table6 = corpus.golden.get("kn2_4") or load_golden_table("kn2_4")
        if not res.exhaustive:
            return False, "enumeration did not exhaust the tree"
        found6 = any(same_products(t, table6) for t in res.tables)
        for t in res.tables:
            corpus.add_witness("kn2(4) enumeration", t)
        if len(res.tables) == 1:
            return found6, f"unique labeled table, equal to the fixture: {found6}"
        autos = graph_automorphisms(g)
        twists = [relabel_table(table6, m) for m in autos]
        all_twists = all(
            any(same_products(t, tw) for tw in twists) for t in res.tables
        )
        return (
            found6 and all_twists,
            f"{len(res.tables)} labeled tables, every one a graph-automorphism relabeling "
            f"of the fixture (unique up to relabeling); fixture itself found: {found6}",
        )

    return _timed(run, 7, "uniqueness for the 4-clique family")


def criterion_8(corpus: Corpus) -> CriterionResult:
    def run() -> tuple[bool, str]:
        for name, g in ORACLE_GRAPHS.items():
            want = brute_force_realizations(g)
            res = enumerate_tables(g)
            got = {t.rows for t in res.tables}
            if not res.exhaustive:
                return False, f"{name}: enumeration not exhaustive"
            if got != want:
                return False, (
                    f"{name}: engine found {len(got)} solutions, oracle {len(want)}"
                )
            for t in res.tables:
                corpus.add_witness(f"oracle:{name}", t)
        return True, f"exact solution-set match on {len(ORACLE_GRAPHS)} graphs"

    return _timed(run, 8, "oracle equivalence on all connected graphs up to 4 vertices")


def _ensure_base_corpus(corpus: Corpus) -> None:
    """Fill in the criterion-1/2 corpus when running later criteria alone."""
    if not corpus.golden:
        for name in GOLDEN:
            corpus.golden[name] = load_golden_table(name)
    if not corpus.sweep_tables:
        corpus.sweep_tables = [generate_table(spec) for spec in sweep_specs()]


def criterion_9(corpus: Corpus) -> CriterionResult:
    def run() -> tuple[bool, str]:
        _ensure_base_corpus(corpus)
        tables: list[tuple[str, CayleyTable]] = []
        tables += [(name, t) for name, t in corpus.golden.items()]
        tables += [(f"sweep[{i}]", t) for i, t in enumerate(corpus.sweep_tables)]
        tables += corpus.witnesses
        failures = []
        for label, table in tables:
            report = run_all(table)
            for bad in report.failures():
                failures.append(f"{label}: {bad.line()}")
        if failures:
            return False, "; ".join(failures[:5])
        return True, f"zero applicable-claim failures over {len(tables)} corpus tables"

    return _timed(run, 9, "machine verification of the structure theorems")


def criterion_10(corpus: Corpus) -> CriterionResult:
    def run() -> tuple[bool, str]:
        _ensure_base_corpus(corpus)
        graphs: list[tuple[str, LabeledGraph]] = []
        for name, table in corpus.golden.items():
            graphs.append((name, zero_divisor_graph(table)))
        for i, table in enumerate(corpus.sweep_tables):
            graphs.append((f"sweep[{i}]", zero_divisor_graph(table)))
        for name, g in ORACLE_GRAPHS.items():
            graphs.append((f"oracle:{name}", g))
        for label, g in graphs:
            if not necessary_conditions(g).passed:
                return False, f"{label}: necessary conditions failed on a semigroup graph"
        if corpus.remark_graph is None:
            base = generate_graph(FamilySpec("fig3", m=1, n=1, u=0, v=1))
            corpus.remark_graph = add_end(base, "b")
        nc = necessary_conditions(corpus.remark_graph)
        if not nc.passed:
            return False, "the unrealizable end-vertex modification fails the pre-screen"
        return True, (
            f"pre-screen passes on {len(graphs)} semigroup graphs and on the provably "
            "unrealizable end-vertex modification: necessary but not sufficient"
        )

    return _timed(run, 10, "pre-screen soundness and insufficiency")


CRITERIA = (
    criterion_1,
    criterion_2,
    criterion_3,
    criterion_4,
    criterion_5,
    criterion_6,
    criterion_7,
    criterion_8,
    criterion_9,
    criterion_10,
)


def run_acceptance(
    numbers: Iterable[int] | None = None, emit: Callable[[str], None] | None = None
) -> list[CriterionResult]:
    """Run the requested criteria (all by default) in order, sharing a corpus."""
    wanted = set(numbers) if numbers is not None else set(range(1, 11))
    corpus = Corpus()
    results = []
    for i, criterion in enumerate(CRITERIA, start=1):
        if i not in wanted:
            continue
        result = criterion(corpus)
        results.append(result)
        if emit is not None:
            emit(result.line())
    return results
