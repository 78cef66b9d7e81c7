"""End-to-end command line checks through real subprocesses.

Exit status contract: 0 success, 1 domain error (with an ``error:`` line
on stderr), 2 usage error.
"""

from __future__ import annotations

import json
import subprocess
import sys

import pytest

GAP5 = "p hg 5 5\ne 1 2\ne 1 3 4 5\ne 2 4 5\ne 2 3 5\ne 2 3 4\n"
P4 = "p edge 4 3\ne 1 2\ne 2 3\ne 3 4\n"
TWO_EDGES = "p hg 3 2\ne 1 2\ne 2 3\n"


def run_cli(*args, stdin=None):
    return subprocess.run(
        [sys.executable, "-m", "hypercover", *args],
        input=stdin,
        capture_output=True,
        text=True,
        timeout=120,
    )


class TestGen:
    def test_gap_bytes(self):
        result = run_cli("gen", "gap", "--n", "5")
        assert result.returncode == 0
        assert result.stdout == GAP5

    def test_tree_is_deterministic(self):
        a = run_cli("gen", "tree", "--n", "9", "--seed", "4")
        b = run_cli("gen", "tree", "--n", "9", "--seed", "4")
        assert a.returncode == 0
        assert a.stdout == b.stdout
        assert a.stdout.startswith("p edge 9 8\n")

    def test_hg_is_deterministic(self):
        args = ("gen", "hg", "--n", "8", "--m", "6", "--max-size", "3", "--seed", "2")
        assert run_cli(*args).stdout == run_cli(*args).stdout

    def test_gap_too_small_fails(self):
        result = run_cli("gen", "gap", "--n", "2")
        assert result.returncode == 1
        assert result.stderr.startswith("error: NTooSmall")


class TestInputPlumbing:
    def test_stdin_is_the_default(self):
        result = run_cli("degeneracy", stdin=GAP5)
        assert result.returncode == 0
        assert "value: 3" in result.stdout

    def test_dash_reads_stdin(self):
        assert run_cli("degeneracy", "-", stdin=GAP5).returncode == 0

    def test_file_input(self, tmp_path):
        path = tmp_path / "gap5.hg"
        path.write_text(GAP5)
        result = run_cli("degeneracy", str(path))
        assert result.returncode == 0
        assert "value: 3" in result.stdout

    def test_input_flag(self, tmp_path):
        path = tmp_path / "gap5.hg"
        path.write_text(GAP5)
        assert run_cli("degeneracy", "--input", str(path)).returncode == 0

    def test_positional_and_flag_conflict(self, tmp_path):
        path = tmp_path / "gap5.hg"
        path.write_text(GAP5)
        result = run_cli("degeneracy", str(path), "--input", str(path))
        assert result.returncode == 2

    def test_missing_file(self):
        result = run_cli("degeneracy", "no-such-file.hg")
        assert result.returncode == 1
        assert result.stderr.startswith("error: cannot open no-such-file.hg")

    def test_malformed_input(self):
        result = run_cli("degeneracy", stdin="p hg 2 1\nx 1 2\n")
        assert result.returncode == 1
        assert result.stderr.startswith("error: SyntaxError")

    def test_duplicate_edges_merge_by_default(self):
        text = "p hg 3 3\ne 1 2\ne 2 1\ne 3\n"
        assert run_cli("degeneracy", stdin=text).returncode == 0
        strict = run_cli("degeneracy", "--strict", stdin=text)
        assert strict.returncode == 1
        assert strict.stderr.startswith("error: DuplicateEdge")

    def test_unknown_subcommand(self):
        assert run_cli("solve").returncode == 2


class TestCommands:
    def test_degeneracy_json(self):
        payload = json.loads(run_cli("degeneracy", "--json", stdin=GAP5).stdout)
        assert payload["kind"] == "strong"
        assert payload["value"] == 3
        assert payload["order"] == [1, 2, 3, 4, 5]
        assert payload["step_values"] == [2, 3, 1, 1, 1]

    def test_degeneracy_kinds(self):
        assert json.loads(run_cli("degeneracy", "--kind", "plain", "--json", stdin=GAP5).stdout)["value"] == 3
        assert json.loads(run_cli("degeneracy", "--kind", "mighty-bf", "--json", stdin=GAP5).stdout)["value"] == 2
        assert json.loads(run_cli("degeneracy", "--kind", "strong-bf", "--json", stdin=GAP5).stdout)["value"] == 3

    def test_cover(self):
        payload = json.loads(run_cli("cover", "--json", "--mighty", stdin=GAP5).stdout)
        assert payload["cover"] == [1, 2]
        assert payload["cover_size"] == 2
        assert payload["independent"] == [1]
        assert payload["independent_size"] == 1
        assert payload["bound_factor"] == 3
        assert payload["mighty_factor"] == 2

    def test_transversal(self):
        payload = json.loads(run_cli("transversal", "--json", stdin=TWO_EDGES).stdout)
        assert payload["transversal"] == [2]
        assert payload["matching"] == [1]

    def test_dominate(self):
        payload = json.loads(run_cli("dominate", "--json", stdin=P4).stdout)
        assert payload["dominating"] == [2, 3]
        assert payload["packing"] == [1, 4]
        assert payload["equal"] is True

    def test_dominate_open(self):
        payload = json.loads(run_cli("dominate", "--kind", "open", "--json", stdin=P4).stdout)
        assert payload["dominating"] == [2, 3]

    def test_dominate_rejects_cycles(self):
        cycle = "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n"
        result = run_cli("dominate", stdin=cycle)
        assert result.returncode == 1
        assert result.stderr.startswith("error: NotATree")

    def test_exact_hypergraph(self):
        payload = json.loads(run_cli("exact", "--problem", "min-edge-cover", "--json", stdin=GAP5).stdout)
        assert payload["value"] == 2
        assert payload["witness"] == [1, 2]

    def test_exact_graph(self):
        payload = json.loads(run_cli("exact", "--problem", "min-dominating", "--json", stdin=P4).stdout)
        assert payload["value"] == 2
        assert payload["witness"] == [1, 3]

    def test_vc(self):
        text = "p hg 2 3\ne 1\ne 2\ne 1 2\n"
        payload = json.loads(run_cli("vc", "--json", stdin=text).stdout)
        assert payload["value"] == 1
        assert payload["witness"]["shattered"] is True

    def test_verify(self):
        ok = run_cli("verify", "--kind", "edge-cover", "--ids", "1", "2", stdin=GAP5)
        assert ok.returncode == 0
        assert "valid: True" in ok.stdout
        bad = run_cli("verify", "--kind", "edge-cover", "--ids", "1", stdin=GAP5)
        assert "valid: False" in bad.stdout

    def test_verify_graph_kind(self):
        result = run_cli("verify", "--kind", "dominating", "--ids", "2", "3", stdin=P4)
        assert result.returncode == 0
        assert "valid: True" in result.stdout

    def test_verify_bad_id(self):
        result = run_cli("verify", "--kind", "edge-cover", "--ids", "9", stdin=GAP5)
        assert result.returncode == 1
        assert result.stderr.startswith("error: IdOutOfRange")

    def test_dual_text(self):
        result = run_cli("dual", stdin=TWO_EDGES)
        assert result.returncode == 0
        assert result.stdout == "p hg 2 3\ne 1\ne 1 2\ne 2\n"

    def test_dual_json_labels(self):
        payload = json.loads(run_cli("dual", "--json", stdin=TWO_EDGES).stdout)
        assert payload["n"] == 2
        assert payload["edges"] == [[1], [1, 2], [2]]
        assert payload["labels"] == ["v1", "v2", "v3"]

    def test_audit(self):
        payload = json.loads(run_cli("audit", "--trials", "5", "--json", stdin=P4).stdout)
        assert payload["trials"] == 5
        assert payload["failures"] == 0
        assert payload["degree_bound_failures"] == 0


class TestPipelines:
    def test_gen_into_cover(self):
        gen = run_cli("gen", "gap", "--n", "7")
        cover = json.loads(run_cli("cover", "--json", stdin=gen.stdout).stdout)
        assert cover["cover_size"] == 2
        assert cover["independent_size"] == 1

    def test_gen_tree_into_dominate(self):
        gen = run_cli("gen", "tree", "--n", "15", "--seed", "8")
        payload = json.loads(run_cli("dominate", "--json", stdin=gen.stdout).stdout)
        assert payload["equal"] is True
        assert payload["dominating_size"] == payload["packing_size"]

    def test_gen_into_dual_round_trip(self):
        gen = run_cli("gen", "hg", "--n", "6", "--m", "8", "--max-size", "3", "--seed", "3")
        once = run_cli("dual", stdin=gen.stdout)
        assert once.returncode == 0
        # commands are pure functions of their input bytes
        again = run_cli("dual", stdin=gen.stdout)
        assert once.stdout == again.stdout
