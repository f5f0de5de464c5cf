import io
import json
import math

import pytest

from netentropy import dynamics, entropy
from netentropy.cli import main
from netentropy.generators import watts_strogatz
from netentropy.graph import read_edge_list
from netentropy.metrics import network_stats


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def structured(*argv):
    code, out, err = run(*argv, "--format", "structured")
    assert code == 0, err
    return json.loads(out)


@pytest.fixture
def k4_file(tmp_path):
    path = tmp_path / "k4.txt"
    path.write_text("a b\na c\na d\nb c\nb d\nc d\n")
    return path


def test_stats_k4_reports_log_base_error(k4_file):
    doc = structured("stats", str(k4_file))
    assert doc["stats"]["n"] == 4 and doc["stats"]["L"] == 1.0 and doc["stats"]["C"] == 1.0
    assert doc["entropy"]["error"] == "InvalidLogBaseError"
    assert doc["entropy"]["H_ideal"] == math.log(4)


def test_stats_path(tmp_path):
    path = tmp_path / "p3.txt"
    path.write_text("# path\na b\nb c\n")
    doc = structured("stats", str(path))
    assert doc["stats"]["L"] == pytest.approx(4 / 3, abs=1e-15)
    assert doc["stats"]["C"] == 0.0
    assert doc["entropy"]["H"] == 0.0


def test_stats_matches_library_for_generated_graph(tmp_path):
    path = tmp_path / "ws.txt"
    code, _, err = run("generate", "ws", "--n", "1000", "--k", "10", "--p", "0.01",
                       "--seed", "7", "-o", str(path))
    assert code == 0, err
    doc = structured("stats", str(path))
    lib = network_stats(watts_strogatz(1000, 10, 0.01, seed=7))
    assert doc["stats"]["L"] == lib.L
    assert doc["stats"]["C"] == lib.C
    assert doc["entropy"]["H"] == entropy.network_entropy(lib.n, lib.L, lib.C).H


def test_stats_disconnected(tmp_path):
    path = tmp_path / "two.txt"
    path.write_text("a b\nb c\nc a\nx y\n")
    doc = structured("stats", str(path))
    assert doc["stats"]["restricted"] and doc["stats"]["n"] == 3 and doc["stats"]["original_n"] == 5
    code, _, err = run("stats", str(path), "--strict-connectivity")
    assert code == 1 and "DisconnectedGraphError" in err


def test_stats_sampling_flags(tmp_path):
    path = tmp_path / "ws.txt"
    run("generate", "ws", "--n", "100", "--k", "4", "--p", "0.1", "--seed", "1", "-o", str(path))
    doc = structured("stats", str(path), "--sample-size", "10", "--seed", "3")
    assert doc["stats"]["method"] == "sampled" and doc["stats"]["sample_size"] == 10
    doc = structured("stats", str(path), "--exact")
    assert doc["stats"]["method"] == "exact"


@pytest.mark.parametrize("content", ["a a\n", "a b c\n", "# nothing\n"])
def test_stats_bad_input_is_usage_error(tmp_path, content):
    path = tmp_path / "bad.txt"
    path.write_text(content)
    assert run("stats", str(path))[0] == 2


def test_stats_missing_file():
    assert run("stats", "/no/such/file")[0] == 2


def test_entropy_brain():
    doc = structured("entropy", "--n", "1e11", "--L", "2.49", "--C", "0.53")
    assert doc["H"] == entropy.network_entropy(1e11, 2.49, 0.53).H
    assert doc["H"] == pytest.approx(14.71, abs=0.01)


def test_entropy_single_node():
    assert structured("entropy", "--n", "1", "--L", "2.49", "--C", "0.53")["H"] == 0


def test_entropy_thesaurus_text():
    code, out, _ = run("entropy", "--n", "616000", "--L", "3.16", "--C", "0.53")
    assert code == 0
    line = next(l for l in out.splitlines() if l.startswith("H "))
    assert float(line.split()[1]) == pytest.approx(6.14, abs=0.01)


def test_entropy_invalid_base_exit_1():
    code, _, err = run("entropy", "--n", "4", "--L", "1", "--C", "1")
    assert code == 1 and "InvalidLogBaseError" in err


def test_rate_lexical():
    doc = structured("rate", "--q1", "200000", "--q2", "616000", "--years", "332")
    assert doc["m"] == dynamics.exponential_rate(200000, 616000, 332).m
    assert doc["per_decade"] == pytest.approx(0.034, abs=0.001)


def test_rate_needs_one_interval():
    assert run("rate", "--q1", "1", "--q2", "2")[0] == 2
    assert run("rate", "--q1", "1", "--q2", "2", "--years", "1", "--t", "1")[0] == 2


def test_rate_custom_unit():
    doc = structured("rate", "--q1", "14.0766", "--q2", "14.7148", "--t", "3", "--unit", "Myr")
    assert doc["time_unit"] == "Myr" and doc["m"] == pytest.approx(0.01478, abs=1e-5)


def test_date_both_interpretations():
    doc = structured("date", "--m", "5.66e-5", "--q-start", "100", "--q-end", "616500")
    assert doc["interpretation"] == "exponential"
    assert doc["duration"] == dynamics.date_duration(5.66e-5, 100, 616500).duration
    doc = structured("date", "--m", "0.01478", "--h-end", "14.71",
                     "--interpretation", "paper-linear", "--unit", "Myr")
    assert doc["interpretation"] == "paper-linear"
    assert doc["duration"] == pytest.approx(995.3, abs=0.05)
    assert run("date", "--m", "0.1")[0] == 2


def test_value_zero_growth():
    doc = structured("value", "--m", "1", "--C", "1", "--L", "2.718281828", "--n1", "100", "--A", "0")
    assert doc["value_delta"] == 0


def test_value_population():
    doc = structured("value", "--m", "1", "--C", "0.79", "--L", "3.65",
                     "--n1", "5281347", "--A", "344718653")
    assert doc["value_delta"] == entropy.value_delta(1, 0.79, 3.65, 5281347, 344718653)


def test_generate_to_stdout_and_file(tmp_path):
    code, out, _ = run("generate", "ring", "--n", "6", "--k", "2")
    assert code == 0 and out.count("\n") == 6
    path = tmp_path / "k5.txt"
    assert run("generate", "complete", "--n", "5", "-o", str(path))[0] == 0
    assert read_edge_list(path).edge_count == 10
    assert run("generate", "ring", "--n", "6", "--k", "3")[0] == 1
    assert run("generate", "ws")[0] == 2


def test_generate_hierarchy(tmp_path):
    doc = structured("generate", "hierarchy", "--L", "3", "--eta", "3")
    assert doc["leaves"] == 27 and doc["valid"] is True
    path = tmp_path / "h.json"
    run("generate", "hierarchy", "--L", "2", "--eta", "2", "-o", str(path))
    assert json.loads(path.read_text()) == [[0, 1], [2, 3]]


def test_replicate_all_pass():
    code, out, _ = run("replicate")
    assert code == 0
    assert "overall: PASS" in out
    code, out, _ = run("replicate", "--format", "structured")
    doc = json.loads(out)
    assert doc["pass"] and all(r["pass"] for r in doc["scenarios"])


def test_structured_round_trip():
    code, out, _ = run("entropy", "--n", "616000", "--L", "2.67", "--C", "0.437", "--format", "structured")
    doc = json.loads(out)
    assert json.loads(json.dumps(doc, indent=2, sort_keys=True)) == doc
    assert set(doc) == {"n", "L", "C", "eta", "H", "H_ideal"}


def test_usage_errors():
    assert run()[0] == 2
    assert run("bogus")[0] == 2
    assert run("entropy", "--n", "x", "--L", "2", "--C", "0.5")[0] == 2
    assert run("--help")[0] == 0
