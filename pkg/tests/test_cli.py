from __future__ import annotations

import io
import json

from realchar.cli import Config, cmd_info, cmd_scan, cmd_table, cmd_verify, main


def run_table(source, config=Config(), **kw):
    out = io.StringIO()
    code = cmd_table(source, config, out=out, **kw)
    return code, out.getvalue()


def run_verify(source, config=Config()):
    out = io.StringIO()
    code = cmd_verify(source, config, out=out)
    return code, out.getvalue()


def run_scan(manifest, config=Config()):
    out = io.StringIO()
    code = cmd_scan(manifest, config, out=out)
    return code, out.getvalue()


class TestTable:
    def test_a5(self):
        code, text = run_table("A5")
        assert code == 0
        assert "degrees: 1,3,3,4,5" in text
        assert "real rows: 5 of 5" in text

    def test_c4(self):
        code, text = run_table("C4")
        assert code == 0
        assert "real rows: 2 of 4" in text
        assert text.count("\n") >= 5  # header + 4 rows + summary

    def test_exact_flag(self):
        code, text = run_table("S3", exact=True)
        assert code == 0
        assert "exact 0" in text

    def test_bad_grp_file(self, tmp_path):
        bad = tmp_path / "bad.grp"
        bad.write_text("degree 3\n(1,4)\n")
        assert main(["table", str(bad)]) == 2

    def test_unknown_name(self):
        assert main(["table", "NoSuchGroup"]) == 2


class TestVerify:
    def test_sl25_circ_c4(self):
        code, text = run_verify("SL2x5circC4")
        assert code == 0
        assert "verdict=CaseII" in text
        assert "H_order=4 O_order=1" in text

    def test_s5(self):
        code, text = run_verify("S5")
        assert code == 0
        assert "verdict=HypothesisFails" in text
        assert "witness_degree=6" in text

    def test_c12(self):
        code, text = run_verify("C12")
        assert code == 0
        assert "verdict=SolvableSkip" in text

    def test_machine_output(self):
        code, text = run_verify("A5", Config(machine=True))
        assert code == 0
        payload = json.loads(text)
        assert payload["verdict"] == "CaseI"
        assert payload["K"] == "A5"
        assert payload["ms"] == 0

    def test_grp_file_source(self, tmp_path):
        path = tmp_path / "s3.grp"
        path.write_text("degree 3\n(1,2)\n(1,2,3)\n")
        code, text = run_verify(str(path))
        assert code == 0 and "SolvableSkip" in text


class TestScan:
    def test_small_manifest(self, tmp_path):
        manifest = tmp_path / "names.txt"
        manifest.write_text("A5\nL2_8\n")
        code, text = run_scan(str(manifest))
        assert code == 0
        lines = text.strip().splitlines()
        assert len(lines) == 3
        assert all("verdict=CaseI" in ln for ln in lines[:2])
        assert lines[2].startswith("summary: groups=2 CaseI=2")

    def test_empty_manifest(self, tmp_path):
        manifest = tmp_path / "empty.txt"
        manifest.write_text("# nothing\n")
        code, text = run_scan(str(manifest))
        assert code == 0
        assert text.strip() == "summary: groups=0"

    def test_error_entries_recorded_and_scan_continues(self, tmp_path):
        manifest = tmp_path / "names.txt"
        manifest.write_text("NoSuchGroup\nA5\n")
        code, text = run_scan(str(manifest), Config(machine=True))
        assert code == 1
        lines = text.strip().splitlines()
        first = json.loads(lines[0])
        assert first["verdict"] == "Error" and "NoSuchGroup" in first["error"]
        assert json.loads(lines[1])["verdict"] == "CaseI"

    def test_machine_scan_is_byte_identical(self, tmp_path):
        manifest = tmp_path / "names.txt"
        manifest.write_text("A5\nS5\nQ8\n")
        config = Config(machine=True, rng_seed=5)
        _, first = run_scan(str(manifest), config)
        _, second = run_scan(str(manifest), config)
        assert first == second

    def test_parallel_scan_matches_serial(self, tmp_path):
        manifest = tmp_path / "names.txt"
        manifest.write_text("A5\nS3\nQ8\nC4\n")
        _, serial = run_scan(str(manifest), Config(machine=True))
        _, parallel = run_scan(str(manifest), Config(machine=True, jobs=3))
        assert serial == parallel

    def test_order_mismatch_fails_scan(self, tmp_path, monkeypatch):
        import realchar.catalog as catalog
        from realchar.catalog import CatalogEntry

        monkeypatch.setattr(
            catalog, "default_corpus", lambda: [CatalogEntry("A5", 61, "CaseI")]
        )
        code, _ = run_scan(None)
        assert code == 1


class TestCache:
    def test_hit_and_miss_agree(self, tmp_path):
        config = Config(cache_dir=str(tmp_path / "cache"))
        code1, miss = run_verify("A5", config)
        assert (tmp_path / "cache").is_dir()
        files = list((tmp_path / "cache").glob("*.tbl"))
        assert len(files) == 1
        code2, hit = run_verify("A5", config)
        assert code1 == code2 == 0
        strip = lambda s: s[: s.rindex("ms=")]
        assert strip(miss) == strip(hit)

    def test_machine_reports_identical_across_cache_states(self, tmp_path):
        config = Config(cache_dir=str(tmp_path / "cache"), machine=True)
        _, miss = run_verify("S4", config)
        _, hit = run_verify("S4", config)
        assert miss == hit

    def test_key_depends_on_seed_and_prime(self, tmp_path):
        cache = tmp_path / "cache"
        run_verify("S3", Config(cache_dir=str(cache)))
        run_verify("S3", Config(cache_dir=str(cache), rng_seed=9))
        run_verify("S3", Config(cache_dir=str(cache), prime_override=13))
        assert len(list(cache.glob("*.tbl"))) == 3


class TestInfo:
    def test_s5(self):
        out = io.StringIO()
        assert cmd_info("S5", Config(), out=out) == 0
        text = out.getvalue()
        assert "order: 120" in text
        assert "derived limit order: 60" in text
        assert "derived limit recognized: A5" in text
        assert "solvable: False" in text


class TestConfig:
    def test_caps_must_be_positive(self):
        import pytest

        from realchar.errors import ToolkitError

        with pytest.raises(ToolkitError):
            Config(order_cap=0)
        with pytest.raises(ToolkitError):
            Config(jobs=0)


class TestMain:
    def test_env_overrides(self, monkeypatch, capsys):
        monkeypatch.setenv("REALCHAR_MACHINE", "1")
        assert main(["verify", "C4"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["verdict"] == "SolvableSkip"

    def test_flag_beats_default(self, capsys):
        assert main(["--machine", "verify", "Q8"]) == 0
        assert json.loads(capsys.readouterr().out)["order"] == 8

    def test_capacity_error_exit_code(self, capsys):
        assert main(["--cap-order", "10", "table", "A5"]) == 2
        assert "cap" in capsys.readouterr().err
