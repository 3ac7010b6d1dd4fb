import io
import subprocess
import sys

import pytest

from fwlab import parse_graph, random_graph, serialize_graph
from fwlab.cli import EXIT_INPUT, EXIT_OK, EXIT_USAGE, main

from conftest import DATA_DIR


def run_cli(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def kv_dict(text):
    pairs = [line.split("=", 1) for line in text.splitlines() if line]
    keys = [k for k, _ in pairs]
    assert len(keys) == len(set(keys)), "duplicate key in kv output"
    return dict(pairs)


@pytest.fixture
def g3_path():
    return str(DATA_DIR / "g3.edges")


@pytest.fixture
def g5div_path():
    return str(DATA_DIR / "g5div.edges")


class TestGen:
    def test_complete_graph_header(self):
        code, text = run_cli("gen", "--V", "3", "--p", "1", "--seed", "0")
        assert code == EXIT_OK
        assert text.splitlines()[0] == "3 6"

    def test_single_node(self):
        code, text = run_cli("gen", "--V", "1", "--p", "0.5", "--seed", "0")
        assert code == EXIT_OK
        assert text == "1 0\n"

    def test_deterministic(self):
        first = run_cli("gen", "--V", "9", "--p", "0.4", "--seed", "7")
        second = run_cli("gen", "--V", "9", "--p", "0.4", "--seed", "7")
        assert first == second

    def test_writes_file(self, tmp_path):
        target = tmp_path / "g.edges"
        code, text = run_cli("gen", "--V", "4", "--p", "0.5", "--seed", "1",
                             "-o", str(target))
        assert code == EXIT_OK and text == ""
        parse_graph(target.read_text())

    def test_rejects_bad_probability(self):
        code, _ = run_cli("gen", "--V", "3", "--p", "2", "--seed", "0")
        assert code == EXIT_USAGE


class TestSolve:
    def test_classical_matrix(self, g3_path):
        code, text = run_cli("solve", g3_path, "--solver", "classical")
        assert code == EXIT_OK
        assert text.splitlines()[0] == "0 1 3"

    def test_all_solvers_print_the_same_matrix(self, g3_path):
        outputs = set()
        for solver in ("classical", "layered", "parallel", "parallel-inplace", "qfw"):
            code, text = run_cli("solve", g3_path, "--solver", solver)
            assert code == EXIT_OK
            outputs.add(text)
        assert len(outputs) == 1

    def test_kv_format(self, g3_path):
        code, text = run_cli("solve", g3_path, "--format", "kv")
        assert code == EXIT_OK
        data = kv_dict(text)
        assert data["solver"] == "classical"
        assert data["row.0"] == "0 1 3"
        assert data["row.2"] == "INF INF 0"

    def test_paths_flag(self, g3_path):
        code, text = run_cli("solve", g3_path, "--paths", "0:2", "--paths", "2:0")
        assert code == EXIT_OK
        assert "path 0 -> 2: 0 1 2 (weight 3)" in text
        assert "path 2 -> 0: none" in text

    def test_paths_unavailable_for_stale_variant(self, g3_path):
        code, _ = run_cli("solve", g3_path, "--solver", "layered-printed",
                          "--paths", "0:2")
        assert code == EXIT_USAGE

    def test_paths_out_of_range(self, g3_path):
        code, _ = run_cli("solve", g3_path, "--paths", "0:9")
        assert code == EXIT_USAGE

    def test_missing_file(self):
        code, _ = run_cli("solve", "no-such-file.edges")
        assert code == EXIT_INPUT

    def test_malformed_file_names_line(self, tmp_path, capsys):
        bad = tmp_path / "bad.edges"
        bad.write_text("2 1\n0 0 5\n")
        code, _ = run_cli("solve", str(bad))
        assert code == EXIT_INPUT
        assert "line 2" in capsys.readouterr().err


class TestCompare:
    def test_g3_all_agree(self, g3_path):
        code, text = run_cli("compare", g3_path, "--format", "kv")
        assert code == EXIT_OK
        data = kv_dict(text)
        for solver in ("classical", "layered", "parallel", "parallel-inplace", "qfw"):
            assert data[f"match.{solver}"] == "true"
        assert data["match.layered-printed"] == "true"
        assert data["consistent"] == "true"

    def test_g5div_reports_divergence_but_passes(self, g5div_path):
        code, text = run_cli("compare", g5div_path, "--format", "kv")
        assert code == EXIT_OK
        data = kv_dict(text)
        assert data["match.layered-printed"] == "false"
        assert data["divergence.cell"] == "0,3"
        assert data["divergence.printed"] == "10"
        assert data["divergence.oracle"] == "2"
        assert data["consistent"] == "true"

    def test_text_mode_mentions_divergence(self, g5div_path):
        code, text = run_cli("compare", g5div_path)
        assert code == EXIT_OK
        assert "diverges at (0, 3)" in text
        assert "result: consistent" in text

    def test_oracle_mismatch_exits_3(self, g3_path, monkeypatch):
        import fwlab.cli as cli
        from fwlab import DistanceMatrix

        real = cli._run_solver

        def sabotaged(name, graph, config):
            dist, pred = real(name, graph, config)
            if name == "classical":
                rows = [list(row) for row in dist.rows]
                rows[0][1] += 1
                dist = DistanceMatrix(rows)
            return dist, pred

        monkeypatch.setattr(cli, "_run_solver", sabotaged)
        code, text = run_cli("compare", g3_path, "--format", "kv")
        assert code == 3
        data = kv_dict(text)
        assert data["match.classical"] == "false"
        assert data["consistent"] == "false"


class TestAudit:
    def test_g3(self, g3_path):
        code, text = run_cli("audit", g3_path, "--format", "kv")
        assert code == EXIT_OK
        data = kv_dict(text)
        assert data["printed_matches_oracle"] == "true"
        assert data["corrected_matches_oracle"] == "true"

    def test_g5div(self, g5div_path):
        code, text = run_cli("audit", g5div_path, "--format", "kv")
        assert code == EXIT_OK
        data = kv_dict(text)
        assert data["printed_matches_oracle"] == "false"
        assert data["first_divergent_cell"] == "0,3"


class TestQsim:
    def test_g3_counters(self, g3_path):
        code, text = run_cli("qsim", g3_path, "--format", "kv")
        assert code == EXIT_OK
        data = kv_dict(text)
        assert data["row.0"] == "0 1 3"
        assert data["model.hadamard_gates"] == "16"
        assert data["simulation.branch_evaluations"] == "64"

    def test_shuffle_seed_changes_nothing(self, g5div_path):
        baseline = run_cli("qsim", g5div_path, "--format", "kv")
        shuffled = run_cli("qsim", g5div_path, "--format", "kv", "--shuffle-seed", "5")
        assert baseline == shuffled

    def test_cap_is_enforced(self, g3_path):
        code, _ = run_cli("qsim", g3_path, "--qfw-cap", "2")
        assert code == EXIT_USAGE


class TestBench:
    def test_counts_for_sixteen_nodes(self):
        code, text = run_cli("bench", "--V", "16", "--seed", "7", "--format", "kv")
        assert code == EXIT_OK
        data = kv_dict(text)
        assert data["model.hadamard_gates"] == "128"
        assert data["simulation.branch_evaluations"] == "4096"
        assert "time.classical" in data
        assert "time.parallel.w1" in data or any(k.startswith("time.parallel.") for k in data)

    def test_single_node(self):
        code, text = run_cli("bench", "--V", "1", "--seed", "0", "--format", "kv")
        assert code == EXIT_OK
        assert kv_dict(text)["model.hadamard_gates"] == "0"

    def test_worker_list_reports_each(self):
        code, text = run_cli("bench", "--V", "12", "--seed", "3",
                             "--workers", "1,2", "--format", "kv")
        assert code == EXIT_OK
        data = kv_dict(text)
        assert "time.parallel.w1" in data
        assert "time.parallel.w2" in data

    def test_large_graph_skips_enumeration(self):
        code, text = run_cli("bench", "--V", "80", "--seed", "0", "--p", "0.1",
                             "--format", "kv")
        assert code == EXIT_OK
        data = kv_dict(text)
        assert data["qfw"].startswith("skipped")
        assert data["model.hadamard_gates"] == str(128 * 2 * 7)


class TestWorkersEnv:
    def test_env_value_is_used(self, g3_path, monkeypatch):
        monkeypatch.setenv("FWLAB_WORKERS", "2")
        code, _ = run_cli("solve", g3_path, "--solver", "parallel")
        assert code == EXIT_OK

    def test_invalid_env_is_usage_error(self, g3_path, monkeypatch):
        monkeypatch.setenv("FWLAB_WORKERS", "soon")
        code, _ = run_cli("solve", g3_path, "--solver", "parallel")
        assert code == EXIT_USAGE

    def test_flag_overrides_env(self, g3_path, monkeypatch):
        monkeypatch.setenv("FWLAB_WORKERS", "soon")
        code, _ = run_cli("solve", g3_path, "--solver", "parallel", "--workers", "2")
        assert code == EXIT_OK


def test_round_trip_pipeline(tmp_path):
    for seed in range(5):
        target = tmp_path / f"g{seed}.edges"
        assert run_cli("gen", "--V", "10", "--p", "0.4", "--seed", str(seed),
                       "-o", str(target))[0] == EXIT_OK
        assert run_cli("solve", str(target))[0] == EXIT_OK
        assert run_cli("compare", str(target))[0] == EXIT_OK
        graph = random_graph(10, 0.4, max_weight=100, seed=seed)
        assert parse_graph(target.read_text()) == parse_graph(serialize_graph(graph))


def test_module_entry_point(tmp_path):
    result = subprocess.run(
        [sys.executable, "-m", "fwlab", "gen", "--V", "2", "--p", "1", "--seed", "0"],
        capture_output=True, text=True,
    )
    assert result.returncode == 0
    assert result.stdout.splitlines()[0] == "2 2"
