"""Command line behavior: exit codes, report envelopes, JSON stability."""

import json

import pytest

from triplemoduli.cli import build_parser, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    assert code == 0, err
    return json.loads(out)


def assert_no_floats(value):
    assert not isinstance(value, float), value
    if isinstance(value, list):
        for item in value:
            assert_no_floats(item)
    if isinstance(value, dict):
        for item in value.values():
            assert_no_floats(item)


class TestExitCodes:
    def test_success(self, capsys):
        code, out, _ = run(
            capsys, "walls", "--n1", "2", "--n2", "1", "--d1", "4", "--d2", "1"
        )
        assert code == 0
        assert "5/2" in out

    def test_domain_error_is_exit_one_and_names_the_precondition(
        self, capsys
    ):
        code, _, err = run(
            capsys, "chambers", "--n1", "2", "--n2", "1",
            "--d1", "0", "--d2", "5", "--g", "2",
        )
        assert code == 1
        assert "error:" in err
        assert "empty admissible range" in err

    def test_usage_error_is_exit_two(self, capsys):
        code, _, _ = run(capsys, "walls", "--badflag")
        assert code == 2

    def test_missing_required_flag_is_exit_two(self, capsys):
        code, _, _ = run(capsys, "walls", "--n1", "2")
        assert code == 2

    def test_malformed_rational_is_exit_two(self, capsys):
        code, _, _ = run(
            capsys, "walls", "--n1", "2", "--n2", "1", "--d1", "4",
            "--d2", "1", "--alpha", "2.5",
        )
        assert code == 2

    def test_unknown_command_is_exit_two(self, capsys):
        code, _, _ = run(capsys, "frobnicate")
        assert code == 2

    def test_help_is_exit_zero(self, capsys):
        code, _, _ = run(capsys, "--help")
        assert code == 0

    def test_bad_genus_is_exit_one(self, capsys):
        code, _, err = run(
            capsys, "classify", "--p", "1", "--q", "1", "--a", "0",
            "--b", "0", "--g", "1",
        )
        assert code == 1
        assert "genus" in err


class TestEnvelope:
    def test_keys_and_echoed_inputs(self, capsys):
        rep = run_json(
            capsys, "walls", "--n1", "2", "--n2", "1", "--d1", "4",
            "--d2", "1",
        )
        assert sorted(rep) == [
            "citations", "command", "inputs", "outputs", "warnings",
        ]
        assert rep["command"] == "walls"
        assert rep["inputs"] == {"n1": 2, "n2": 1, "d1": 4, "d2": 1}

    def test_json_output_is_byte_stable(self, capsys):
        args = (
            "classify", "--p", "2", "--q", "3", "--a", "1", "--b", "1",
            "--g", "2", "--json",
        )
        code, first, _ = run(capsys, *args)
        assert code == 0
        code, second, _ = run(capsys, *args)
        assert first == second

    @pytest.mark.parametrize(
        "argv",
        [
            ("triple", "--n1", "3", "--n2", "2", "--d1", "5", "--d2", "2",
             "--g", "2", "--alpha", "3/2"),
            ("walls", "--n1", "2", "--n2", "1", "--d1", "4", "--d2", "1",
             "--alpha", "5/2"),
            ("chambers", "--n1", "2", "--n2", "1", "--d1", "4", "--d2", "1",
             "--g", "2"),
            ("higgs", "--p", "1", "--q", "2", "--a", "2", "--b", "1",
             "--g", "2"),
            ("rigidity", "--p", "1", "--q", "2", "--a", "2", "--b", "1",
             "--g", "2"),
            ("morse", "--ranks", "1,1,1", "--degrees", "2,1,0", "--g", "2"),
            ("census", "--p", "2", "--q", "4", "--g", "2", "--a", "3",
             "--b", "1"),
            ("classify", "--p", "1", "--q", "2", "--a", "2", "--b", "1",
             "--g", "2"),
        ],
    )
    def test_reports_never_contain_floats(self, capsys, argv):
        rep = run_json(capsys, *argv)
        assert_no_floats(rep)


class TestTripleCommand:
    def test_threshold_block(self, capsys):
        rep = run_json(
            capsys, "triple", "--n1", "3", "--n2", "2", "--d1", "5",
            "--d2", "2",
        )
        th = rep["outputs"]["thresholds"]
        assert th["alpha_m"] == "2/3"
        assert th["alpha_M"] == 4
        assert th["alpha_t"] == "3/2"

    def test_equal_ranks_report_infinite_top(self, capsys):
        rep = run_json(
            capsys, "triple", "--n1", "1", "--n2", "1", "--d1", "1",
            "--d2", "0",
        )
        assert rep["outputs"]["alpha_range"]["hi"] == "inf"
        assert rep["outputs"]["thresholds"]["alpha_M"] == "inf"

    def test_inverted_slopes_warn_instead_of_failing(self, capsys):
        rep = run_json(
            capsys, "triple", "--n1", "1", "--n2", "2", "--d1", "0",
            "--d2", "5",
        )
        assert rep["outputs"]["thresholds"] is None
        assert rep["outputs"]["alpha_range"]["empty"] is True
        assert any("thresholds omitted" in w for w in rep["warnings"])

    def test_dimension_with_genus(self, capsys):
        rep = run_json(
            capsys, "triple", "--n1", "2", "--n2", "1", "--d1", "4",
            "--d2", "1", "--g", "2",
        )
        assert rep["outputs"]["dim_stable_moduli"] == 6
        assert rep["outputs"]["fibration"]["fiber_dim"] == 3


class TestWallsCommand:
    def test_frozen_wall_set(self, capsys):
        rep = run_json(
            capsys, "walls", "--n1", "2", "--n2", "1", "--d1", "4",
            "--d2", "1",
        )
        assert rep["outputs"]["count"] == 1
        wall = rep["outputs"]["walls"][0]
        assert wall["alpha"] == "5/2"
        assert wall["witnesses"] == [[0, 1, 0], [2, 0, 5]]

    def test_interval_and_criticality_probe(self, capsys):
        rep = run_json(
            capsys, "walls", "--n1", "1", "--n2", "1", "--d1", "1",
            "--d2", "0", "--interval", "1", "5", "--alpha", "3",
        )
        assert [w["alpha"] for w in rep["outputs"]["walls"]] == [3, 5]
        assert rep["outputs"]["alpha_test"]["critical"] is True

    def test_equal_ranks_without_window_fail_cleanly(self, capsys):
        code, _, err = run(
            capsys, "walls", "--n1", "1", "--n2", "1", "--d1", "1",
            "--d2", "0",
        )
        assert code == 1
        assert "unbounded" in err


class TestChambersCommand:
    def test_frozen_decomposition(self, capsys):
        rep = run_json(
            capsys, "chambers", "--n1", "2", "--n2", "1", "--d1", "4",
            "--d2", "1", "--g", "2",
        )
        out = rep["outputs"]
        assert out["count"] == 2
        assert out["chambers"][0]["lo"] == 1
        assert out["chambers"][0]["hi"] == "5/2"
        assert out["flips_to_large"] == 1

    def test_marker_on_the_range_end_warns(self, capsys):
        rep = run_json(
            capsys, "chambers", "--n1", "2", "--n2", "1", "--d1", "3",
            "--d2", "1", "--g", "2",
        )
        assert rep["outputs"]["marker_status"] == "at_alpha_M"
        assert any("alpha_M" in w for w in rep["warnings"])


class TestHiggsCommand:
    def test_saturated_report(self, capsys):
        rep = run_json(
            capsys, "higgs", "--p", "1", "--q", "2", "--a", "2", "--b", "1",
            "--g", "2",
        )
        out = rep["outputs"]
        assert out["toledo"]["tau"] == 2
        assert out["toledo"]["saturated"] is True
        assert out["minima"]["triple"] == {"n1": 2, "n2": 1, "d1": 5, "d2": 2}
        assert out["range_placement"]["facts"][
            "two_g_minus_2_ge_alpha_m"
        ] is True


class TestRigidityCommand:
    def test_erratum_warning_travels_on_the_report(self, capsys):
        rep = run_json(
            capsys, "rigidity", "--p", "1", "--q", "2", "--a", "2",
            "--b", "1", "--g", "2",
        )
        assert rep["outputs"]["dim_sum"] == 7
        assert any("erratum" in w for w in rep["warnings"])

    def test_non_applicable_case_reports_reason(self, capsys):
        rep = run_json(
            capsys, "rigidity", "--p", "2", "--q", "2", "--a", "1",
            "--b", "0", "--g", "2",
        )
        assert rep["outputs"]["applies"] is False
        assert rep["outputs"]["reason"] == "requires p != q"


class TestMorseCommand:
    def test_negative_index_raises_advisory(self, capsys):
        rep = run_json(
            capsys, "morse", "--ranks", "1,1,1", "--degrees", "0,1,2",
            "--g", "2",
        )
        assert rep["outputs"]["index"] == -1
        assert any("not realizable" in w for w in rep["warnings"])

    def test_frozen_profile(self, capsys):
        rep = run_json(
            capsys, "morse", "--ranks", "1,1,1", "--degrees", "2,1,0",
            "--g", "2",
        )
        assert rep["outputs"]["index"] == 3
        top = [u for u in rep["outputs"]["uk"] if u["k"] == 2]
        assert top == [{"k": 2, "rank": 1, "degree": -2}]

    def test_ragged_chain_is_exit_one(self, capsys):
        code, _, err = run(
            capsys, "morse", "--ranks", "1,1", "--degrees", "1", "--g", "2"
        )
        assert code == 1
        assert "equal length" in err


class TestCensusCommand:
    def test_frozen_census(self, capsys):
        rep = run_json(capsys, "census", "--p", "1", "--q", "1", "--g", "2")
        assert rep["outputs"]["count"] == 5
        assert rep["outputs"]["points_per_line"] == 1
        assert rep["outputs"]["quotient"]["image_lattice_step"] == 1

    def test_canonicalize_probe(self, capsys):
        rep = run_json(
            capsys, "census", "--p", "1", "--q", "1", "--g", "2",
            "--a", "3", "--b", "1",
        )
        assert rep["outputs"]["canonical"] == [0, -2]

    def test_half_given_pair_is_exit_one(self, capsys):
        code, _, err = run(
            capsys, "census", "--p", "1", "--q", "1", "--g", "2", "--a", "3"
        )
        assert code == 1
        assert "--a and --b" in err


class TestClassifyCommand:
    def test_citations_accompany_every_definite_verdict(self, capsys):
        rep = run_json(
            capsys, "classify", "--p", "2", "--q", "3", "--a", "1",
            "--b", "1", "--g", "2",
        )
        out = rep["outputs"]
        assert out["stable_smooth_dim"] == 26
        assert out["case"] == "interior-toledo"
        for field in (
            "stable_nonempty",
            "full_space_nonempty",
            "full_space_connected",
        ):
            assert out[field] == "yes"
            assert field in rep["citations"]

    def test_rigid_verdict_embeds_the_decomposition(self, capsys):
        rep = run_json(
            capsys, "classify", "--p", "1", "--q", "2", "--a", "2",
            "--b", "1", "--g", "2",
        )
        out = rep["outputs"]
        assert out["rigid"] is True
        assert out["rigidity_data"]["dim_sum"] == 7
        assert out["stable_nonempty"] == "no"
        assert out["full_space_connected"] == "yes"


class TestParser:
    def test_all_subcommands_registered(self):
        parser = build_parser()
        subactions = [
            a for a in parser._actions if hasattr(a, "choices") and a.choices
        ]
        names = set(subactions[0].choices)
        assert names == {
            "triple", "walls", "chambers", "higgs", "rigidity",
            "morse", "census", "classify",
        }
