"""The ten acceptance criteria, one test each, printed as pass/fail lines.

Criterion 5 is split in two: the parts that hold, and the literal part (i),
which is kept exactly as specified and fails honestly. The graph it declares
unrealizable is isomorphic to a realizable member of the same family (the
empty-pendant-set corner case) and the engine exhibits an independently
validated witness; the corrected form of the statement, with a nonempty
pendant set on b, is verified in the passing test. Details live in the
repository notes.
"""
import pytest

from zdg.acceptance import Corpus, CRITERIA, criterion_5_parts


@pytest.fixture(scope="module")
def results():
    corpus = Corpus()
    out = {}
    for i, criterion in enumerate(CRITERIA, start=1):
        out[i] = criterion(corpus)
    out["corpus"] = corpus
    return out


def _report(result):
    print(result.line())
    return result


def test_criterion_01_golden_tables(results):
    r = _report(results[1])
    assert r.passed, r.detail


def test_criterion_02_extension_sweep(results):
    r = _report(results[2])
    assert r.passed, r.detail


def test_criterion_03_nonrealizability_certificates(results):
    r = _report(results[3])
    assert r.passed, r.detail


def test_criterion_04_classification_sweep(results):
    r = _report(results[4])
    assert r.passed, r.detail


def test_criterion_05_parts_that_hold():
    parts = criterion_5_parts(Corpus())
    for key in ("plain", "end_on_x1", "edge_x1_x2", "end_on_a_corrected"):
        ok, detail = parts[key]
        print(f"criterion 5 part {key}: {'PASS' if ok else 'FAIL'} ({detail})")
        assert ok, (key, detail)


def test_criterion_05_end_vertex_on_a_as_specified(results):
    # Literal statement: the empty-pendant-set graph with an extra end vertex
    # on a must be unrealizable. It is not: an exhaustively verified witness
    # exists and the graph is isomorphic to a realizable family member. The
    # assertion is kept as specified and is expected to fail.
    r = _report(results[5])
    assert r.passed, r.detail


def test_criterion_06_caps_on_clique(results):
    r = _report(results[6])
    assert r.passed, r.detail


def test_criterion_07_uniqueness_up_to_relabeling(results):
    r = _report(results[7])
    assert r.passed, r.detail


def test_criterion_08_oracle_equivalence(results):
    r = _report(results[8])
    assert r.passed, r.detail


def test_criterion_09_theorem_sweep(results):
    r = _report(results[9])
    assert r.passed, r.detail


def test_criterion_10_prescreen_sound_but_insufficient(results):
    r = _report(results[10])
    assert r.passed, r.detail
