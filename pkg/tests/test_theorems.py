import pytest

from zdg.algebra import CayleyTable
from zdg.errors import InputError
from zdg.families import FamilySpec, generate_table
from zdg.graph import DeltaWitness, find_delta_witness, zero_divisor_graph
from zdg.theorems import (
    check_lemma_2_1,
    check_prop_2_2,
    check_prop_2_8,
    check_thm_2_4,
    check_thm_2_6,
    run_all,
)


def _by_claim(report, claim):
    return [c for c in report.checks if c.claim == claim]


def test_square_nonzero_checker(table3, table5):
    report = check_lemma_2_1(table3)
    subjects = {c.subject for c in report.checks if c.applicable}
    assert "x=y1" in subjects and "x=u1" in subjects
    assert not report.failures()
    report5 = check_lemma_2_1(table5)
    assert any(c.subject == "x=c1" and c.holds for c in report5.checks)


def test_square_nonzero_vacuous_on_small_diameter():
    # null semigroup on two generators: diameter 1, nothing at distance 3
    table = CayleyTable(["0", "a", "b"], [[0, 0, 0], [0, 0, 0], [0, 0, 0]])
    report = check_lemma_2_1(table)
    assert all(not c.applicable for c in report.checks)


def test_end_vertex_checker(table3, table6):
    report = check_prop_2_2(table3, "a")
    part1 = _by_claim(report, "prop_2_2.1")[0]
    part2 = _by_claim(report, "prop_2_2.2")[0]
    assert part1.applicable and part1.holds
    assert part2.applicable and part2.holds

    report = check_prop_2_2(table6, "x1")
    part1 = _by_claim(report, "prop_2_2.1")[0]
    part2 = _by_claim(report, "prop_2_2.2")[0]
    assert not part1.applicable  # x1*x1 = 0
    assert part2.applicable and part2.holds

    # an end vertex is vacuous for part 2
    report = check_prop_2_2(table3, "u1")
    assert not _by_claim(report, "prop_2_2.2")[0].applicable

    with pytest.raises(InputError):
        check_prop_2_2(table3, "0")


def test_main_structure_checker(table3):
    g = zero_divisor_graph(table3)
    w = find_delta_witness(g)
    report = check_thm_2_4(table3, w)
    names = {c.claim: c for c in report.checks}
    assert names["thm_2_4.ideal_0ab"].holds
    assert names["thm_2_4.ideal_complement"].holds
    assert names["thm_2_4.l_closed"].holds
    assert not names["thm_2_4.case1_ideal"].applicable  # a has an end vertex
    assert not report.failures()
    # flipped orientation: the end-free endpoint plays the internal role
    flipped = DeltaWitness("b", "a", w.s, w.z)
    report2 = check_thm_2_4(table3, flipped)
    case2 = {c.claim: c for c in report2.checks}["thm_2_4.case2_subsemigroup"]
    assert case2.applicable and case2.holds


def test_main_structure_checker_on_square_family(table5):
    g = zero_divisor_graph(table5)
    w = find_delta_witness(g)
    report = check_thm_2_4(table5, w)
    names = {c.claim: c for c in report.checks}
    assert names["thm_2_4.l_closed"].holds  # y1*y2 stays inside L
    assert not names["thm_2_4.case2_subsemigroup"].applicable  # b*b = 0
    assert not report.failures()


def test_two_singleton_ideals_checker(table3, table5):
    g = zero_divisor_graph(table3)
    w = find_delta_witness(g)
    flipped = DeltaWitness("b", "a", w.s, w.z)
    report = check_thm_2_6(table3, flipped)
    check = report.checks[0]
    assert check.applicable and check.holds
    # on the square family the roles never line up: b*b = 0 there
    g5 = zero_divisor_graph(table5)
    w5 = find_delta_witness(g5)
    assert not check_thm_2_6(table5, w5).checks[0].applicable


def test_cap_adjunction_checker(table3):
    g = zero_divisor_graph(table3)
    w = find_delta_witness(g)
    flipped = DeltaWitness("b", "a", w.s, w.z)
    report = check_prop_2_8(table3, flipped)
    check = report.checks[0]
    assert check.applicable and check.holds
    assert check.detail == "c=y1"  # y1*u1 = y1 and y1*y1 = d keep the set closed


def test_cap_adjunction_both_internal():
    table = generate_table(FamilySpec("fig5", m=2, n=2, v=0))
    g = zero_divisor_graph(table)
    w = find_delta_witness(g)
    report = check_prop_2_8(table, w)
    check = report.checks[0]
    assert check.applicable and check.holds
    assert check.detail.startswith("c=c")


def test_run_all_on_fixtures(table3, table4, table5, table6, table7):
    for table in (table3, table4, table5, table6, table7):
        report = run_all(table)
        assert not report.failures()


def test_run_all_trivial_table():
    report = run_all(CayleyTable(["0"], [[0]]))
    assert all(not c.applicable for c in report.checks)
    assert not report.failures()


def test_run_all_requires_valid_table(table6):
    broken = table6.with_cell("y1", "y2", "b")
    with pytest.raises(InputError):
        run_all(broken)


def test_report_serialization_is_stable(table6):
    report = run_all(table6)
    text = report.to_text()
    assert text == run_all(table6).to_text()
    lines = text.splitlines()
    assert lines == sorted(lines)
    assert all(line.startswith("CLAIM ") for line in lines)
    assert any("vacuous" in line for line in lines)
    assert any(" holds" in line for line in lines)
