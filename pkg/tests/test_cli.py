"""CLI parsing, exit codes, report rendering, and JSON round trips."""

import json

import pytest

from skewq.classify import verify_conjecture
from skewq.cli import (
    EXIT_COUNTEREXAMPLE,
    EXIT_INPUT,
    EXIT_OK,
    InputError,
    analysis_from_json_dict,
    analysis_to_json_dict,
    analyze,
    load_input_spec,
    main,
    sweep_from_json_dict,
    sweep_to_json_dict,
)

EXAMPLE_1 = {
    "n": 6,
    "neg_pairs": [[1, 3], [1, 5], [2, 3], [2, 4], [2, 5], [3, 5], [4, 5]],
}


def write_input(tmp_path, doc, name="input.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc), encoding="utf-8")
    return str(path)


def test_analyze_published_6var_example(tmp_path, capsys):
    path = write_input(tmp_path, EXAMPLE_1)
    assert main(["analyze", path, "--json"]) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["ell"] == 1
    assert doc["wedderburn"] == {"d": 4, "c": 2}
    assert doc["category"] == "Db(mod k^2)"
    assert doc["conjecture_match"] is True
    assert doc["oracle_certified"] is True


def test_analyze_key_order_fixed(tmp_path, capsys):
    path = write_input(tmp_path, {"n": 3, "neg_pairs": []})
    assert main(["analyze", path, "--json"]) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert list(doc.keys()) == [
        "n",
        "neg_pairs",
        "bad_triples",
        "components",
        "ell",
        "mu_neg_pairs",
        "wedderburn",
        "category",
        "oracle_certified",
        "conjecture_expected_N",
        "conjecture_match",
        "certification_failures",
    ]
    assert doc["components"] == [[1, 2, 3]]
    assert doc["ell"] == 0
    assert doc["category"] == "Db(mod k)"


def test_analyze_n2_any_sign(tmp_path, capsys):
    path = write_input(tmp_path, {"n": 2, "neg_pairs": [[1, 2]]})
    assert main(["analyze", path]) == EXIT_OK
    out = capsys.readouterr().out
    assert "lines (ell): 1" in out
    assert "Db(mod k^2)" in out


def test_analyze_no_oracle(tmp_path, capsys):
    path = write_input(tmp_path, EXAMPLE_1)
    assert main(["analyze", path, "--json", "--no-oracle"]) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["oracle_certified"] is None


def test_analyze_json_round_trip(tmp_path, capsys):
    path = write_input(tmp_path, EXAMPLE_1)
    main(["analyze", path, "--json"])
    doc = json.loads(capsys.readouterr().out)
    report = analyze(load_input_spec(path))
    assert analysis_from_json_dict(doc) == report
    assert analysis_to_json_dict(report) == doc


@pytest.mark.parametrize(
    "doc",
    [
        {"neg_pairs": []},
        {"n": 0, "neg_pairs": []},
        {"n": 4, "neg_pairs": [[1, 1]]},
        {"n": 4, "neg_pairs": [[3, 1]]},
        {"n": 4, "neg_pairs": [[1, 5]]},
        {"n": 4, "neg_pairs": [[1, 2], [1, 2]]},
        {"n": 4, "neg_pairs": [[1]]},
        {"n": 4, "neg_pairs": "nope"},
        {"n": 4, "neg_pairs": [], "extra": 1},
        {"n": True, "neg_pairs": []},
    ],
)
def test_analyze_rejects_malformed_input(tmp_path, capsys, doc):
    path = write_input(tmp_path, doc)
    assert main(["analyze", path]) == EXIT_INPUT
    assert "error" in capsys.readouterr().err


def test_analyze_invalid_json_reports_location(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text('{"n": 4,\n "neg_pairs": [[1, 2],]}', encoding="utf-8")
    assert main(["analyze", str(path)]) == EXIT_INPUT
    err = capsys.readouterr().err
    assert "line" in err


def test_load_input_spec_missing_file():
    with pytest.raises(InputError):
        load_input_spec("/nonexistent/path.json")


def test_sweep_n5_holds(capsys):
    assert main(["sweep", "--n", "5", "--json"]) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["verdict"] == "holds"
    assert sum(e["count"] for e in doc["histogram"]) == 64
    assert doc["oracle_certified"] == {"checked": 64, "total": 64}


def test_sweep_n4_histogram_keys(capsys):
    assert main(["sweep", "--n", "4", "--json"]) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    keys = {(e["ell"], e["N"]) for e in doc["histogram"]}
    assert keys <= {(0, 2), (1, 2), (6, 8)}


def test_sweep_json_key_order_and_round_trip(capsys):
    assert main(["sweep", "--n", "5", "--json"]) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert list(doc.keys()) == [
        "n",
        "histogram",
        "verdict",
        "counterexamples",
        "orbits",
        "total_configs",
        "oracle_certified",
        "certification_failures",
        "converse_witnesses",
        "converse_witness_count",
    ]
    report = verify_conjecture(5)
    assert sweep_from_json_dict(doc) == report
    assert sweep_to_json_dict(report) == doc


def test_sweep_output_byte_identical_across_runs_and_jobs(capsys):
    main(["sweep", "--n", "6", "--json"])
    first = capsys.readouterr().out
    main(["sweep", "--n", "6", "--json"])
    second = capsys.readouterr().out
    main(["sweep", "--n", "6", "--jobs", "2", "--json"])
    third = capsys.readouterr().out
    assert first == second == third


def test_sweep_flag_validation(capsys):
    assert main(["sweep", "--n", "8"]) == EXIT_INPUT
    assert main(["sweep", "--n", "1"]) == EXIT_INPUT
    assert main(["sweep", "--n", "5", "--sample-certify", "150"]) == EXIT_INPUT


def test_sweep_env_guard_override(capsys, monkeypatch):
    monkeypatch.setenv("SKEWQ_MAX_N", "6")
    assert main(["sweep", "--n", "7"]) == EXIT_INPUT
    err = capsys.readouterr().err
    assert "SKEWQ_MAX_N" in err


def test_catalog_row_counts(capsys):
    assert main(["catalog", "--n", "4"]) == EXIT_OK
    out = capsys.readouterr().out
    assert len(out.strip().split("\n")) == 4  # header plus three rows
    for tag in ("(4a)", "(4b)", "(4c)"):
        assert tag in out

    assert main(["catalog", "--n", "5"]) == EXIT_OK
    out5 = capsys.readouterr().out
    for tag in ("(5a)", "(5b)", "(5c)", "(5d)", "(5e)", "(5f)", "(5g)"):
        assert tag in out5

    assert main(["catalog", "--n", "3"]) == EXIT_OK
    out3 = capsys.readouterr().out
    assert "2 orbit classes" in out3

    assert main(["catalog", "--n", "7"]) == EXIT_INPUT


def test_catalog_renders_subspace_notation(capsys):
    main(["catalog", "--n", "4"])
    out = capsys.readouterr().out
    assert "P(1,2,3,4)" in out
    assert "∪" in out


def test_cli_text_analyze_scheme_rendering(tmp_path, capsys):
    path = write_input(tmp_path, {"n": 4, "neg_pairs": [[1, 3], [2, 3]]})
    assert main(["analyze", path]) == EXIT_OK
    out = capsys.readouterr().out
    assert "P(1,2,3) ∪ P(1,2,4) ∪ P(3,4)" in out
    assert "M_2(k)^2" in out


def test_exit_counterexample_constant_reserved():
    # the n=7 sweep exercises this path in the acceptance suite
    assert EXIT_COUNTEREXAMPLE == 4


def test_sweep_n2_single_pattern(capsys):
    assert main(["sweep", "--n", "2", "--json"]) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["histogram"] == [{"ell": 1, "N": 2, "count": 1}]
    assert doc["verdict"] == "holds"


def test_analyze_certificate_failure_exits_3(tmp_path, capsys, monkeypatch):
    # wire check only: force a failed certificate and confirm the report is
    # still emitted together with exit code 3
    import skewq.cli as cli_mod
    from skewq.oracle import WedderburnCertificate

    def fake_certify(tab, w, rep):
        return WedderburnCertificate(
            passed=False,
            failures=("forced failure",),
            center_dim=0,
            semisimple=True,
            block_size=w.d,
            block_count=w.c,
            rescaled=False,
        )

    monkeypatch.setattr(cli_mod, "certify_wedderburn", fake_certify)
    path = write_input(tmp_path, {"n": 3, "neg_pairs": []})
    assert main(["analyze", path, "--json"]) == 3
    captured = capsys.readouterr()
    doc = json.loads(captured.out)  # report still emitted
    assert doc["oracle_certified"] is False
    assert doc["certification_failures"] == ["forced failure"]
    assert "certificate failed" in captured.err
