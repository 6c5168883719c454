import pytest

from zdg.acceptance import load_golden_table
from zdg.families import FamilySpec, generate_graph, generate_table


@pytest.fixture(scope="session")
def table3():
    return load_golden_table("fig3_2_2_1_2")


@pytest.fixture(scope="session")
def table4():
    return load_golden_table("fig4_2_2_0_2")


@pytest.fixture(scope="session")
def table5():
    return load_golden_table("fig5_2_2_2")


@pytest.fixture(scope="session")
def table6():
    return load_golden_table("kn2_4")


@pytest.fixture(scope="session")
def table7():
    return load_golden_table("kn2_4_caps2")


@pytest.fixture(scope="session")
def fig3_graph():
    return generate_graph(FamilySpec("fig3", m=2, n=2, u=1, v=2))


@pytest.fixture(scope="session")
def kn2_graph():
    return generate_graph(FamilySpec("kn2", n=4))


@pytest.fixture(scope="session")
def small_table_corpus(table3, table4, table5, table6, table7):
    corpus = [table3, table4, table5, table6, table7]
    for spec in (
        FamilySpec("fig3", m=1, n=1, u=2, v=1),
        FamilySpec("fig5", m=2, n=1, v=0),
        FamilySpec("fig4", caps=1, u=0, v=2, w=1),
        FamilySpec("kn2", n=5),
    ):
        corpus.append(generate_table(spec))
    return corpus
