"""CLI behavior: golden outputs, determinism, cache transparency, exit codes."""

import json

import pytest

from charvar import cli
from charvar.errors import NotPolynomial


@pytest.fixture(autouse=True)
def isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv(cli.CACHE_ENV_VAR, str(tmp_path / "cache"))
    return tmp_path / "cache"


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestCompute:
    def test_e_2_3_text_golden(self, capsys):
        code, out, _ = run(capsys, "compute", "--kind", "E", "--n", "2", "--g", "3")
        assert code == 0
        assert out == "1 - 4*q^2 + 6*q^4 - 14*q^6 + 6*q^8 - 4*q^10 + q^12\n"

    def test_hqt_1_5_is_one(self, capsys):
        code, out, _ = run(capsys, "compute", "--kind", "hqt", "--n", "1", "--g", "5")
        assert code == 0 and out == "1\n"

    def test_pp_2_3_text(self, capsys):
        code, out, _ = run(
            capsys, "compute", "--kind", "pp", "--n", "2", "--g", "3", "--format", "text"
        )
        assert code == 0 and out == "1 + t^4 + t^8\n"

    def test_json_schema(self, capsys):
        code, out, _ = run(
            capsys, "compute", "--kind", "E", "--n", "2", "--g", "3", "--format", "json"
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["kind"] == "E" and doc["n"] == 2 and doc["g"] == 3
        assert doc["vars"] == ["q"] and doc["version"] == 1
        assert doc["terms"][0] == {"e": [0], "c": "1"}
        assert doc["terms"][-1] == {"e": [12], "c": "1"}
        assert doc["meta"]["dim2N"] == 12
        assert set(doc["meta"]["checks"]) == {"degrees", "duality", "euler"}

    def test_byte_determinism_and_cache_transparency(self, capsys):
        args = ("compute", "--kind", "hqt", "--n", "2", "--g", "2", "--format", "json")
        code1, cold, _ = run(capsys, *args)
        code2, warm, _ = run(capsys, *args)  # second run served from disk cache
        assert code1 == code2 == 0
        assert cold == warm

    def test_bad_kind_is_usage_error(self, capsys):
        code, _, err = run(capsys, "compute", "--kind", "zz", "--n", "2", "--g", "3")
        assert code == 2 and "kind" in err

    def test_bad_n_is_usage_error(self, capsys):
        code, _, _ = run(capsys, "compute", "--kind", "E", "--n", "0", "--g", "3")
        assert code == 2

    def test_missing_flags_exit_2(self, capsys):
        assert run(capsys, "compute", "--kind", "E")[0] == 2

    def test_unusable_cache_directory_exits_2(self, capsys, monkeypatch):
        from charvar.invariants import InvariantCache

        def refuse(self, result):
            raise OSError("read-only file system")

        monkeypatch.setattr(InvariantCache, "store", refuse)
        code, _, err = run(capsys, "compute", "--kind", "E", "--n", "1", "--g", "2")
        assert code == 2 and "cache directory unusable" in err

    def test_assertion_failure_exits_3(self, capsys, monkeypatch):
        def boom(*args, **kwargs):
            raise NotPolynomial("falsified", factor=None)

        monkeypatch.setattr(cli, "compute_invariant", boom)
        code, out, _ = run(capsys, "compute", "--kind", "E", "--n", "2", "--g", "2")
        assert code == 3 and "NotPolynomial" in out
        code, out, _ = run(
            capsys, "compute", "--kind", "E", "--n", "2", "--g", "2", "--format", "json"
        )
        assert code == 3
        assert json.loads(out)["error"]["type"] == "NotPolynomial"


class TestCheck:
    def test_euler_pass(self, capsys):
        code, out, _ = run(capsys, "check", "--suite", "euler", "--n", "2", "--g", "3")
        assert code == 0 and "PASS euler" in out and "-8" in out

    def test_closedform_pass(self, capsys):
        code, out, _ = run(capsys, "check", "--suite", "closedform", "--n", "3", "--g", "2")
        assert code == 0
        assert "PASS closed_form_H3" in out and "PASS closed_form_PP3" in out

    def test_duality_pass(self, capsys):
        code, out, _ = run(capsys, "check", "--suite", "duality", "--n", "2", "--g", "3")
        assert code == 0
        assert "PASS duality" in out and "PASS degrees" in out and "PASS positivity" in out

    def test_duality_full_scan_rank_four(self, capsys):
        code, out, _ = run(capsys, "check", "--suite", "duality", "--n", "4", "--g", "2")
        assert code == 0 and "PASS duality" in out

    def test_all_suite_json(self, capsys):
        code, out, _ = run(
            capsys, "check", "--suite", "all", "--n", "2", "--g", "2", "--format", "json"
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["passed"] is True
        assert "to_E_match" in doc["checks"] and "closed_form_E2" in doc["checks"]

    def test_euler_low_genus_usage_error(self, capsys):
        assert run(capsys, "check", "--suite", "euler", "--n", "2", "--g", "1")[0] == 2

    def test_all_suite_skips_inapplicable_checks_at_degenerate_genus(self, capsys):
        code, out, _ = run(capsys, "check", "--suite", "all", "--n", "2", "--g", "0")
        assert code == 0
        assert "euler" not in out and "closed_form" not in out

    def test_closedform_unknown_n_usage_error(self, capsys):
        assert run(capsys, "check", "--suite", "closedform", "--n", "4", "--g", "2")[0] == 2

    def test_failing_check_exits_1(self, capsys, monkeypatch):
        from charvar.invariants import CheckEntry, CheckReport

        report = CheckReport()
        report.add("duality", CheckEntry(False, witness="made-up witness"))
        monkeypatch.setattr(cli, "run_check", lambda *a, **k: report)
        code, out, _ = run(capsys, "check", "--suite", "duality", "--n", "2", "--g", "2")
        assert code == 1 and "FAIL duality: made-up witness" in out


class TestCount:
    def test_both_oracles_agree(self, capsys):
        code, out, _ = run(
            capsys, "count", "--family", "sl", "--q", "3", "--g", "1",
            "--zeta-order", "2", "--oracle", "both",
        )
        assert code == 0
        assert "brute_tuples: 24" in out and "character_tuples: 24" in out
        assert "agreement: True" in out

    def test_character_oracle_bridge_value(self, capsys):
        code, out, _ = run(
            capsys, "count", "--family", "gl", "--q", "3", "--g", "2",
            "--zeta-order", "2", "--oracle", "character",
        )
        assert code == 0
        # |PGL(2,3)| * (q-1)^4 * E_2(3) = 24 * 16 * 550
        assert "character_tuples: 211200" in out

    def test_unavailable_central_order_exits_2(self, capsys):
        code, _, err = run(
            capsys, "count", "--family", "gl", "--q", "3", "--g", "1", "--zeta-order", "3"
        )
        assert code == 2 and "central element of order 3 unavailable" in err

    def test_sl_center_misses_order_allowed_by_q(self, capsys):
        # 4 divides q-1 = 4, but the SL(2,5) center is only {±Id}
        code, _, err = run(
            capsys, "count", "--family", "sl", "--q", "5", "--g", "1", "--zeta-order", "4"
        )
        assert code == 2 and "central element of order 4 unavailable" in err

    def test_group_too_large_exits_2(self, capsys):
        code, _, err = run(
            capsys, "count", "--family", "gl", "--q", "7", "--g", "1", "--zeta-order", "2"
        )
        assert code == 2

    def test_character_assertion_failure_exits_3(self, capsys, monkeypatch):
        from charvar.errors import LiftFailure

        def boom(group):
            raise LiftFailure("no consistent cyclotomic lift")

        monkeypatch.setattr(cli, "character_table", boom)
        code, _, err = run(
            capsys, "count", "--family", "sl", "--q", "3", "--g", "1",
            "--zeta-order", "2", "--oracle", "character",
        )
        assert code == 3 and "LiftFailure" in err

    def test_disagreement_exits_1(self, capsys, monkeypatch):
        monkeypatch.setattr(cli, "tuple_count", lambda *a, **k: 999)
        code, out, _ = run(
            capsys, "count", "--family", "sl", "--q", "3", "--g", "1",
            "--zeta-order", "2", "--oracle", "both",
        )
        assert code == 1 and "agreement: False" in out

    def test_json_output(self, capsys):
        code, out, _ = run(
            capsys, "count", "--family", "sl", "--q", "3", "--g", "2",
            "--zeta-order", "1", "--format", "json",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["agreement"] is True
        assert doc["brute_tuples"] == doc["character_tuples"]


class TestCache:
    def test_list_empty(self, capsys):
        code, out, _ = run(capsys, "cache", "--list")
        assert code == 0 and out == ""

    def test_compute_then_list_then_clear(self, capsys):
        run(capsys, "compute", "--kind", "E", "--n", "2", "--g", "3")
        code, out, _ = run(capsys, "cache", "--list")
        assert code == 0 and out == "E/2/3\n"
        assert run(capsys, "cache", "--clear")[0] == 0
        code, out, _ = run(capsys, "cache", "--list")
        assert code == 0 and out == ""

    def test_cache_dir_flag_overrides_env(self, capsys, tmp_path):
        other = tmp_path / "other-cache"
        run(
            capsys, "compute", "--kind", "E", "--n", "1", "--g", "2",
            "--cache-dir", str(other),
        )
        code, out, _ = run(capsys, "cache", "--list", "--cache-dir", str(other))
        assert code == 0 and out == "E/1/2\n"
        code, out, _ = run(capsys, "cache", "--list")  # env cache untouched
        assert "E/1/2" not in out
