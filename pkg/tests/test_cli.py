"""Graph-spec parsing and the CLI subcommands."""

import json
import subprocess
import sys

import pytest

from gamecol.cli import main
from gamecol.graphs import canonical_key, cartesian_product, complete, cycle, path
from gamecol.gspec import GraphSpecError, parse_graph_spec


# -- spec mini-language ----------------------------------------------------------


def test_parse_generators():
    assert parse_graph_spec("complete:4").edge_count == 6
    assert parse_graph_spec("path:3").edge_count == 2
    assert parse_graph_spec("cycle:5").edge_count == 5
    assert parse_graph_spec("star:3").n == 4
    assert parse_graph_spec("cocktail:2").edge_count == 4
    assert parse_graph_spec("empty:3").edge_count == 0


def test_parse_nested():
    g = parse_graph_spec("cartesian(complete:3,path:3)")
    assert g.n == 9
    assert g.edge_count == 15
    sq = parse_graph_spec("square(path:3)")
    assert sq.edge_count == 3
    u = parse_graph_spec("union(complete:2,add_isolated(complete:2))")
    assert u.n == 5


def test_parse_deeply_nested():
    g = parse_graph_spec("cartesian(cartesian(complete:2,complete:2),complete:2)")
    assert g.n == 8
    assert g.max_degree == 3


def test_parse_g6():
    g = parse_graph_spec("g6:C~")
    assert canonical_key(g) == canonical_key(complete(4))


def test_parse_file(tmp_path):
    target = tmp_path / "g.g6"
    target.write_text("C~\n")
    assert parse_graph_spec(f"file:{target}").edge_count == 6


def test_parse_error_positions():
    with pytest.raises(GraphSpecError) as err:
        parse_graph_spec("cartesian(complete:3 path:3)")
    assert "position 20" in str(err.value)  # points at the space
    with pytest.raises(GraphSpecError):
        parse_graph_spec("complete")
    with pytest.raises(GraphSpecError):
        parse_graph_spec("complete:x")
    with pytest.raises(GraphSpecError):
        parse_graph_spec("wat:3")
    with pytest.raises(GraphSpecError):
        parse_graph_spec("cartesian(g6:C~,complete:2)")
    with pytest.raises(GraphSpecError):
        parse_graph_spec("complete:3garbage")


# -- CLI ---------------------------------------------------------------------------


def run_cli(*argv):
    return main(list(argv))


def test_solve_chi_g(capsys):
    assert run_cli("solve", "complete:4", "--value", "chi_g") == 0
    assert capsys.readouterr().out.strip() == "4"
    assert run_cli("solve", "path:4", "--value", "chi_g") == 0
    assert capsys.readouterr().out.strip() == "3"


def test_solve_col_g_star(capsys):
    assert run_cli("solve", "star:5", "--value", "col_g") == 0
    assert capsys.readouterr().out.strip() == "2"


def test_solve_json_record(capsys):
    assert run_cli("solve", "path:4", "--json") == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["result"] == 3
    assert doc["solves"][0]["winner"] == "bob"
    assert {"graph6", "s", "first", "winner", "nodes_expanded", "millis"} <= set(
        doc["solves"][0]
    )


def test_product_commands(capsys):
    assert run_cli("product", "cartesian", "complete:2", "complete:2") == 0
    g6 = capsys.readouterr().out.strip()
    from gamecol.graph6 import parse_graph6

    assert canonical_key(parse_graph6(g6)) == canonical_key(cycle(4))
    assert run_cli("product", "strong", "complete:2", "complete:2") == 0
    assert capsys.readouterr().out.strip() == "C~"
    assert run_cli("product", "square", "path:3") == 0
    assert canonical_key(parse_graph6(capsys.readouterr().out.strip())) == canonical_key(
        complete(3)
    )


def test_product_arity_error(capsys):
    assert run_cli("product", "square", "path:3", "path:3") == 2


def test_refute_certified(capsys):
    rc = run_cli(
        "refute", "cycle:5", "--shades", "12", "--strategy", "composed(base=forest)"
    )
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["status"] == "certified"


def test_refute_certificate(capsys):
    rc = run_cli("refute", "path:4", "--shades", "2", "--strategy", "naive-lowest")
    assert rc == 1
    doc = json.loads(capsys.readouterr().out)
    assert doc["status"] == "refuted"
    assert doc["certificate"][-1]["player"] == "bob"


def test_refute_marking_name_rejected(capsys):
    assert (
        run_cli("refute", "path:4", "--shades", "2", "--strategy", "forest-reactive")
        == 2
    )


def test_audit_unknown_claim(capsys):
    assert run_cli("audit", "bogus") == 2


def test_audit_writes_reports(tmp_path, capsys):
    rc = run_cli(
        "audit",
        "bound-table",
        "--out",
        str(tmp_path),
    )
    assert rc == 0
    report = json.loads((tmp_path / "report.json").read_text())
    assert report["passed"] is True
    csv_lines = (tmp_path / "report.csv").read_text().splitlines()
    assert csv_lines[0] == "claim_id,population,checked,violations,seconds"
    assert (tmp_path / "bound_table.csv").exists()


def test_audit_subprocess_determinism(tmp_path):
    """Two cold CLI runs of the same audit produce identical report bytes."""
    outs = []
    for sub in ("a", "b"):
        out = tmp_path / sub
        proc = subprocess.run(
            [
                sys.executable,
                "-m",
                "gamecol.cli",
                "audit",
                "value-chains",
                "--nmax-graphs",
                "4",
                "--out",
                str(out),
            ],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0, proc.stderr
        outs.append((out / "report.json").read_bytes())
        assert (out / "report.csv").exists()
    assert outs[0] == outs[1]


def test_spec_error_exit_code(capsys):
    assert run_cli("solve", "complete") == 2
