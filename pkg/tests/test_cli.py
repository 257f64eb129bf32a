"""End-to-end tests for the stratchi command line"""

import json
import os
import sys

import pytest

sys.path.append(os.path.join(os.path.dirname(__file__), '../'))

from apps.cli.catalog.examples import EXAMPLES
from apps.cli.main import main

INCONSISTENT_BLOW_UP = {
    "name": "bad-blow-up",
    "source": "catalog:blow-up-source",
    "target": "catalog:blow-up-target",
    "kernel": [
        {"target": "p", "source": "X", "chi": 3},
        {"target": "S", "source": "X", "chi": 1},
    ],
}


def _run_json(capsys, *argv):
    code = main(list(argv) + ["--json"])
    return code, json.loads(capsys.readouterr().out)


def _write(tmp_path, name, data):
    path = tmp_path / name
    path.write_text(json.dumps(data), encoding="utf-8")
    return str(path)


def test_blow_up_chi_formula(capsys):
    code, payload = _run_json(capsys, "verify", "catalog:blow-up", "--formula", "eq6")
    assert code == 0
    assert payload["passed"] is True
    (report,) = payload["reports"]
    assert (report["left"], report["right"]) == (4, 4)
    assert [(t["stratum"], t["coefficient"], t["value"]) for t in report["terms"]] == [("S", 1, 3), ("p", 1, 1)]
    assert report["context"]["fiber_chi"] == {"p": 2, "S": 1}


def test_nodal_cubic_comparison(capsys):
    code, payload = _run_json(capsys, "verify", "catalog:nodal-cubic", "--formula", "c1")
    assert code == 0
    (report,) = payload["reports"]
    assert report["left"] == 1
    assert [(t["stratum"], t["coefficient"], t["value"]) for t in report["terms"]] == [("S", 1, 2), ("node", -1, 1)]


@pytest.mark.parametrize("reference", ["catalog:blow-up", "catalog:nodal-normalization", "catalog:diamond"])
def test_verify_all_formulas(capsys, reference):
    code, payload = _run_json(capsys, "verify", reference)
    assert code == 0
    assert len(payload["reports"]) == 15
    assert all(report["passed"] for report in payload["reports"])
    assert payload["skipped"] == {}


def test_class_formula_output(capsys):
    code, payload = _run_json(capsys, "verify", "catalog:blow-up", "--formula", "eq7")
    assert code == 0
    assert payload["reports"][0]["left"] == {"family": "closed", "terms": {"S": 1, "p": 1}}


def test_verify_with_function(tmp_path, capsys):
    function = _write(tmp_path, "alpha.json", {"X": 3})
    code, payload = _run_json(capsys, "verify", "catalog:blow-up", "--formula", "eq4", "--function", function)
    assert code == 0
    assert payload["reports"][0]["left"] == 12


def test_cycle_is_invalid_input(tmp_path, capsys):
    path = _write(tmp_path, "cycle.json", {
        "strata": [{"id": "a", "complex_dim": 1, "chi_c": 1}, {"id": "b", "complex_dim": 1, "chi_c": 1}],
        "order": [["a", "b"], ["b", "a"]],
    })
    assert main(["validate", path]) == 2
    assert "error:" in capsys.readouterr().err


def test_inconsistent_kernel(tmp_path, capsys):
    path = _write(tmp_path, "bad.json", INCONSISTENT_BLOW_UP)
    assert main(["verify", path, "--formula", "eq6"]) == 2
    assert "X" in capsys.readouterr().err

    code, payload = _run_json(capsys, "verify", path, "--formula", "eq6", "--skip-kernel-validation")
    assert code == 1
    assert payload["passed"] is False
    assert (payload["reports"][0]["left"], payload["reports"][0]["right"]) == (4, 5)


def test_validate_reports_waived_defects(tmp_path, capsys):
    path = _write(tmp_path, "waived.json", dict(INCONSISTENT_BLOW_UP, validate=False))
    code, payload = _run_json(capsys, "validate", path)
    assert code == 0
    assert payload["kernel"] == {"validated": False, "defects": [["X", 5, 4]]}


def test_validate_space(capsys):
    code, payload = _run_json(capsys, "validate", "catalog:three-chain")
    assert code == 0
    assert payload["space"]["order"] == [["a", "b"], ["b", "c"]]
    assert payload["space"]["links_complete"] is True


def test_bases_two_chain(capsys):
    code, payload = _run_json(capsys, "bases", "catalog:two-chain")
    assert code == 0
    assert payload["order"] == ["W", "S"]
    matrices = payload["matrices"]
    assert matrices["closed"] == {"matrix": [[1, 1], [0, 1]], "inverse": [[1, -1], [0, 1]]}
    assert matrices["ic"] == {"matrix": [[1, 2], [0, 1]], "inverse": [[1, -2], [0, 1]]}


def test_bases_three_chain_inverse(capsys):
    code, payload = _run_json(capsys, "bases", "catalog:three-chain")
    assert code == 0
    assert payload["matrices"]["ic"]["inverse"] == [[1, -2, 7], [0, 1, -5], [0, 0, 1]]


def test_decompose(capsys):
    code, payload = _run_json(capsys, "decompose", "catalog:two-chain")
    assert code == 0
    assert payload["round_trip"] is True
    assert payload["decompositions"]["closed"] == {"W": 0, "S": 1}
    assert payload["decompositions"]["ic"] == {"W": -1, "S": 1}


UNLINKED_CHAIN = {
    "name": "unlinked-chain",
    "strata": [{"id": "W", "complex_dim": 0, "chi_c": 1}, {"id": "S", "complex_dim": 1, "chi_c": 1}],
    "order": [["W", "S"]],
}

TWO_MAXIMA = {
    "name": "two-maxima",
    "strata": [
        {"id": "W", "complex_dim": 0, "chi_c": 1},
        {"id": "A", "complex_dim": 1, "chi_c": 1},
        {"id": "B", "complex_dim": 1, "chi_c": 1},
    ],
    "order": [["W", "A"], ["W", "B"]],
    "links": [{"lower": "W", "upper": "A", "ichi_cone": 2}, {"lower": "W", "upper": "B", "ichi_cone": 2}],
}


def test_bases_without_links(tmp_path, capsys):
    """The closed and hat matrices need no link data; the ic ones list what is missing"""
    code, payload = _run_json(capsys, "bases", _write(tmp_path, "chain.json", UNLINKED_CHAIN))
    assert code == 0
    matrices = payload["matrices"]
    assert matrices["closed"] == {"matrix": [[1, 1], [0, 1]], "inverse": [[1, -1], [0, 1]]}
    assert matrices["hat"] == {"matrix": [[1, -1], [0, 1]], "inverse": [[1, 1], [0, 1]]}
    assert matrices["ic"] == {"missing_links": [["W", "S"]]}
    assert matrices["ic-hat"] == {"missing_links": [["W", "S"]]}


def test_bases_text_names_the_missing_pairs(tmp_path, capsys):
    assert main(["bases", _write(tmp_path, "chain.json", UNLINKED_CHAIN)]) == 0
    out = capsys.readouterr().out
    assert "closed inverse:" in out
    assert "ic: skipped, missing link data for (W, S)" in out


def test_decompose_without_a_dense_stratum(tmp_path, capsys):
    code, payload = _run_json(capsys, "decompose", _write(tmp_path, "maxima.json", TWO_MAXIMA))
    assert code == 0
    assert payload["round_trip"] is True
    assert set(payload["decompositions"]) == {"open", "closed", "hat", "ic"}
    assert payload["decompositions"]["closed"] == {"W": -1, "A": 1, "B": 1}
    assert set(payload["skipped"]) == {"hat-dense", "ic-dense"}


def test_decompose_without_links(tmp_path, capsys):
    code, payload = _run_json(capsys, "decompose", _write(tmp_path, "chain.json", UNLINKED_CHAIN))
    assert code == 0
    assert set(payload["decompositions"]) == {"open", "closed", "hat", "hat-dense"}
    assert set(payload["skipped"]) == {"ic", "ic-dense"}


def test_verify_all_without_links_runs_the_rest(tmp_path, capsys):
    code, payload = _run_json(capsys, "verify", _write(tmp_path, "chain.json", UNLINKED_CHAIN))
    assert code == 0
    assert [report["formula"] for report in payload["reports"]] == ["eq3", "eq4", "eq5", "eq6", "eq7"]
    assert set(payload["skipped"]) == {
        "eq11", "eq12", "eq13", "eq14", "eq15", "eq16", "eq17", "eq18", "c1", "c2",
    }
    assert "Missing link data" in payload["skipped"]["c1"]


def test_single_formula_without_links_is_invalid_input(tmp_path, capsys):
    assert main(["verify", _write(tmp_path, "chain.json", UNLINKED_CHAIN), "--formula", "eq11"]) == 2


def test_pushforward(capsys):
    code, payload = _run_json(capsys, "pushforward", "catalog:blow-up")
    assert code == 0
    assert payload["pushforward"] == {"p": 2, "S": 1}
    assert payload["report"]["passed"] is True


def test_catalog_list(capsys):
    code, payload = _run_json(capsys, "catalog", "list")
    assert code == 0
    assert [entry["name"] for entry in payload] == list(EXAMPLES)
    assert len(payload) == 6


@pytest.mark.parametrize("name", list(EXAMPLES))
def test_catalog_examples_pass(capsys, name):
    code, payload = _run_json(capsys, "catalog", "run", name)
    assert code == 0
    assert payload["passed"] is True


def test_catalog_errors(capsys):
    assert main(["catalog", "run"]) == 2
    assert main(["catalog", "run", "klein-bottle"]) == 2
    err = capsys.readouterr().err
    assert "klein-bottle" in err


def test_int_bits_below_minimum():
    assert main(["verify", "catalog:blow-up", "--int-bits", "32"]) == 2


def test_metrics_file(tmp_path, capsys):
    path = tmp_path / "metrics.prom"
    assert main(["verify", "catalog:nodal-cubic", "--formula", "c1", "--metrics-out", str(path)]) == 0
    text = path.read_text(encoding="utf-8")
    assert 'stratchi_formula_checks_total{formula="c1",outcome="pass"}' in text
    assert "stratchi_command_latency_ms_bucket" in text


def test_fuzz_command(tmp_path, capsys):
    code, payload = _run_json(capsys, "fuzz", "--seed", "0", "--trials", "5", "--strata", "4")
    assert code == 0
    assert payload["passed"] is True
    assert payload["trials"] == 5


def test_fuzz_fault_writes_counterexample(tmp_path, capsys):
    output = tmp_path / "counterexample.json"
    code = main(["fuzz", "--seed", "0", "--trials", "5", "--strata", "4", "--inject-fault", "--output", str(output)])
    assert code == 1
    document = json.loads(output.read_text(encoding="utf-8"))
    assert document["seed"] == 0
    assert document["failed"]


def test_fuzz_rejects_zero_trials():
    assert main(["fuzz", "--trials", "0"]) == 2


def test_missing_command():
    with pytest.raises(SystemExit) as excinfo:
        main([])
    assert excinfo.value.code == 2


if __name__ == "__main__":
    pytest.main([__file__])
