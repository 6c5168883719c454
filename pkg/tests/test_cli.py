from zdg.algebra import parse_table_csv, same_products
from zdg.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_then_verify_round_trip(tmp_path, capsys, table3):
    table_path = tmp_path / "t3.csv"
    code, out, _ = run(
        capsys, "gen", "fig3", "--m", "2", "--n", "2", "--u", "1", "--v", "2",
        "--with-table", "--out-table", str(table_path),
    )
    assert code == 0
    assert same_products(parse_table_csv(table_path.read_text()), table3)
    code, out, _ = run(capsys, "verify", str(table_path))
    assert code == 0
    assert "associative: yes" in out


def test_gen_graph_stdout(capsys):
    code, out, _ = run(capsys, "gen", "fig5", "--m", "1", "--n", "1")
    assert code == 0
    assert out.splitlines()[0].split() == ["a", "b", "c1", "x1", "x2", "y1"]


def test_gen_kn2_with_cap_and_end(tmp_path, capsys):
    code, out, _ = run(capsys, "gen", "kn2", "--n", "4", "--caps", "1", "--at", "a,b")
    assert code == 0
    assert "c1" in out.split("\n")[0]
    code, _, err = run(
        capsys, "gen", "kn2", "--n", "4", "--caps", "1", "--at", "a,b", "--with-table"
    )
    assert code == 3  # no table construction away from x1,x2
    code, out, _ = run(capsys, "gen", "kn2", "--n", "4", "--end", "a")
    assert code == 0
    assert "w1" in out.split("\n")[0]


def test_realize_unrealizable_exit_code(tmp_path, capsys):
    graph_path = tmp_path / "bad.graph"
    code, out, _ = run(capsys, "gen", "fig4", "--caps", "1", "--u", "1", "--v", "1",
                       "--w", "1", "--out-graph", str(graph_path))
    assert code == 0
    code, out, _ = run(capsys, "realize", str(graph_path))
    assert code == 1
    assert "outcome: unrealizable" in out


def test_realize_writes_witness(tmp_path, capsys):
    graph_path = tmp_path / "g.graph"
    witness_path = tmp_path / "w.csv"
    run(capsys, "gen", "fig5", "--m", "1", "--n", "1", "--out-graph", str(graph_path))
    code, out, _ = run(
        capsys, "realize", str(graph_path), "--out-table", str(witness_path)
    )
    assert code == 0
    assert "outcome: realized" in out
    code, out, _ = run(capsys, "verify", str(witness_path), "--graph", str(graph_path))
    assert code == 0
    assert "graph-match: yes" in out


def test_realize_budget_exit_code(tmp_path, capsys):
    graph_path = tmp_path / "g.graph"
    run(capsys, "gen", "kn2", "--n", "4", "--out-graph", str(graph_path))
    code, out, _ = run(capsys, "realize", str(graph_path), "--budget", "1",
                       "--symmetry", "off")
    assert code == 2
    assert "outcome: budget-exceeded" in out


def test_enumerate_cli(tmp_path, capsys):
    graph_path = tmp_path / "k2.graph"
    graph_path.write_text("a b\na b\n")
    code, out, _ = run(capsys, "enumerate", str(graph_path))
    assert code == 0
    assert "solutions: 6" in out and "exhaustive: yes" in out
    code, out, _ = run(capsys, "enumerate", str(graph_path), "--max-solutions", "2")
    assert code == 0
    assert "solutions: 2" in out and "exhaustive: no" in out


def test_analyze_output(tmp_path, capsys):
    graph_path = tmp_path / "g.graph"
    run(capsys, "gen", "fig3", "--m", "2", "--n", "2", "--u", "1", "--v", "2",
        "--out-graph", str(graph_path))
    code, out, _ = run(capsys, "analyze", str(graph_path))
    assert code == 0
    assert "diameter: 3" in out
    assert "witness: (a,b,y1,v1)" in out
    assert "necessary-conditions: connected=pass diameter=pass core=pass cover=pass" in out


def test_analyze_empty_file_is_input_error(tmp_path, capsys):
    empty = tmp_path / "empty.graph"
    empty.write_text("")
    code, _, err = run(capsys, "analyze", str(empty))
    assert code == 3
    assert "error:" in err


def test_unknown_flag_rejected(capsys):
    code, _, err = run(capsys, "analyze", "x", "--frobnicate")
    assert code == 3


def test_unknown_verb_rejected(capsys):
    code, _, err = run(capsys, "transmogrify")
    assert code == 3


def test_missing_file_is_input_error(capsys):
    code, _, err = run(capsys, "analyze", "/nonexistent/file.graph")
    assert code == 3


def test_graph_of_round_trip(tmp_path, capsys, table6):
    table_path = tmp_path / "t6.csv"
    run(capsys, "gen", "kn2", "--n", "4", "--with-table", "--out-table", str(table_path))
    out_path = tmp_path / "g.graph"
    dot_path = tmp_path / "g.dot"
    code, out, _ = run(capsys, "graph-of", str(table_path), "--out", str(out_path),
                       "--dot", str(dot_path))
    assert code == 0
    text = out_path.read_text()
    # canonical emit(parse(emit(...))) is byte-identical
    from zdg.graph import emit_graph_text, parse_graph_text

    assert emit_graph_text(parse_graph_text(text)) == text
    assert dot_path.read_text().startswith("graph G {")


def test_graph_of_agrees_with_gen(tmp_path, capsys):
    table_path = tmp_path / "t.csv"
    run(capsys, "gen", "fig5", "--m", "2", "--n", "1", "--v", "1", "--with-table",
        "--out-table", str(table_path))
    code, gen_graph, _ = run(capsys, "gen", "fig5", "--m", "2", "--n", "1", "--v", "1")
    assert code == 0
    code, derived, _ = run(capsys, "graph-of", str(table_path))
    assert code == 0
    from zdg.graph import parse_graph_text

    assert parse_graph_text(derived).same_graph(parse_graph_text(gen_graph))


def test_theorems_cli(tmp_path, capsys):
    table_path = tmp_path / "t5.csv"
    run(capsys, "gen", "fig5", "--m", "2", "--n", "2", "--v", "2", "--with-table",
        "--out-table", str(table_path))
    code, out, _ = run(capsys, "theorems", str(table_path))
    assert code == 0
    assert "failures: 0" in out
    assert "CLAIM lemma_2_1" in out


def test_verify_graph_mismatch(tmp_path, capsys):
    table_path = tmp_path / "t.csv"
    graph_path = tmp_path / "g.graph"
    run(capsys, "gen", "kn2", "--n", "4", "--with-table", "--out-table", str(table_path))
    graph_path.write_text("a b\na b\n")
    code, out, _ = run(capsys, "verify", str(table_path), "--graph", str(graph_path))
    assert code == 1
    assert "graph-match: no" in out


def test_config_file_flag(tmp_path, capsys):
    graph_path = tmp_path / "g.graph"
    run(capsys, "gen", "kn2", "--n", "4", "--out-graph", str(graph_path))
    config_path = tmp_path / "search.cfg"
    config_path.write_text("budget=1\nsymmetry=off\n")
    code, out, _ = run(capsys, "realize", str(graph_path), "--config", str(config_path))
    assert code == 2  # the config's tiny budget wins
    code, out, _ = run(capsys, "realize", str(graph_path), "--config", str(config_path),
                       "--budget", "100000")
    assert code == 0  # explicit flag overrides the file


def test_reproduce_single_criterion(capsys):
    code, out, _ = run(capsys, "reproduce", "--only", "1")
    assert code == 0
    assert "criterion  1 [PASS]" in out
    code, _, err = run(capsys, "reproduce", "--only", "11")
    assert code == 3
