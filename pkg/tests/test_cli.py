import json

from plucker import RunReport, format_matrix, reports
from plucker.cli import main
from plucker.reports import ClaimReport


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEnumerate:
    def test_projective_line_over_gf2(self, capsys):
        code, out, _ = run_cli(capsys, "enumerate", "--k", "1", "--n", "2", "--q", "2")
        assert code == 0
        assert len(out.strip().splitlines()) == 3

    def test_locus_filter(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "enumerate",
            "--k", "2", "--n", "4", "--q", "2",
            "--spec", "w", "--beta", "{1,2}", "--gamma", "{3,4}",
        )
        assert code == 0
        assert len(out.strip().splitlines()) == 4  # q^2 (q-1)^2 at q=2

    def test_missing_subsets_is_config_error(self, capsys):
        code, _, err = run_cli(capsys, "enumerate", "--k", "2", "--n", "4", "--q", "2", "--spec", "w")
        assert code == 2 and "error" in err

    def test_budget_guard(self, capsys):
        code, _, err = run_cli(capsys, "enumerate", "--k", "4", "--n", "14", "--q", "2")
        assert code == 2 and "budget" in err


class TestCount:
    def test_w_count(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "count",
            "--k", "2", "--n", "4", "--q", "3",
            "--spec", "w", "--beta", "{1,2}", "--gamma", "{3,4}",
        )
        assert code == 0 and out.strip() == "36"

    def test_full_grassmannian_count(self, capsys):
        code, out, _ = run_cli(capsys, "count", "--k", "2", "--n", "4", "--q", "3")
        assert code == 0 and out.strip() == "130"


class TestCertificate:
    def test_trivial_target(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "certificate",
            "--n", "4", "--beta", "{1,2}", "--gamma", "{3,4}", "--t", "1",
            "--alpha", "{1,4}",
        )
        assert code == 0
        assert "target {1,4}" in out and "pivot {1,4}" in out
        assert "cofactor 1\n1\n" in out  # the constant 1

    def test_unit_default_target(self, capsys):
        code, out, _ = run_cli(
            capsys, "certificate", "--n", "5", "--beta", "{1,4}", "--gamma", "{2,5}", "--t", "1"
        )
        assert code == 0 and "pivot-inverse" in out

    def test_domain_error(self, capsys):
        code, _, err = run_cli(
            capsys,
            "certificate",
            "--n", "4", "--beta", "{1,2}", "--gamma", "{3,4}", "--t", "1",
            "--alpha", "{2,3}",
        )
        assert code == 2 and "error" in err


class TestParam:
    def test_round_trip_bytes(self, capsys, tmp_path):
        from plucker import QQ, KSubset, phi, sample_y

        beta, gamma = KSubset((1, 3), 5), KSubset((3, 5), 5)
        n_mat = phi(sample_y(beta, gamma, QQ, seed=77), beta, gamma)
        src = tmp_path / "echelon.txt"
        src.write_text(format_matrix(n_mat))

        code, out, _ = run_cli(
            capsys,
            "param", "--beta", "{1,3}", "--gamma", "{3,5}",
            "--direction", "psi", "--matrix-file", str(src),
        )
        assert code == 0
        banded = tmp_path / "banded.txt"
        banded.write_text(out)

        code, out2, _ = run_cli(
            capsys,
            "param", "--beta", "{1,3}", "--gamma", "{3,5}",
            "--direction", "phi", "--matrix-file", str(banded),
        )
        assert code == 0
        assert out2 == src.read_text()

    def test_parse_error_reported(self, capsys, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("field rational\n1 x\n")
        code, _, err = run_cli(
            capsys,
            "param", "--beta", "{1}", "--gamma", "{2}",
            "--direction", "phi", "--matrix-file", str(bad),
        )
        assert code == 2 and "line 2" in err


class TestVerifyAll:
    def test_tiny_sweep_passes(self, capsys, tmp_path):
        cfg = tmp_path / "sweep.cfg"
        cfg.write_text(
            "k_range = 1:2\nn_range = 1:4\nprimes = 2\nrational_samples = 5\n"
            "matrix_samples = 5\n"
        )
        report_path = tmp_path / "report.json"
        code, out, _ = run_cli(
            capsys, "verify-all", "--config", str(cfg), "--report", str(report_path)
        )
        assert code == 0
        assert "overall: PASS" in out
        doc = json.loads(report_path.read_text())
        assert doc["overall"] == "pass"
        assert [c["claim"] for c in doc["claims"]] == [
            "Eq1-relations",
            "Thm3-roundtrip",
            "Thm6-positroidset",
            "Lem4-certificates",
            "Cor5-unit",
            "Thm7-divisor",
            "S7-complement",
            "S7-shifted-schubert",
            "W-count",
        ]

    def test_seed_changes_keep_verdicts(self, capsys, tmp_path):
        cfg = tmp_path / "sweep.cfg"
        cfg.write_text(
            "k_range = 2:2\nn_range = 4:4\nprimes = 2\nrational_samples = 3\n"
            "matrix_samples = 3\n"
        )
        verdicts = []
        for seed in ("1", "2"):
            report_path = tmp_path / f"report{seed}.json"
            code, _, _ = run_cli(
                capsys,
                "verify-all", "--config", str(cfg), "--seed", seed,
                "--report", str(report_path),
            )
            assert code == 0
            doc = json.loads(report_path.read_text())
            verdicts.append([c["verdict"] for c in doc["claims"]])
        assert verdicts[0] == verdicts[1]

    def test_bad_config_exits_2(self, capsys, tmp_path):
        cfg = tmp_path / "sweep.cfg"
        cfg.write_text("primes = 4\n")
        code, _, err = run_cli(capsys, "verify-all", "--config", str(cfg))
        assert code == 2 and "error" in err

    def test_flag_and_env_overrides(self, capsys, tmp_path, monkeypatch):
        cfg = tmp_path / "sweep.cfg"
        cfg.write_text("k_range = 2:2\nn_range = 4:4\nprimes = 2,3\nrational_samples = 3\nmatrix_samples = 3\n")
        monkeypatch.setenv("PLUCKER_SEED", "77")
        report_path = tmp_path / "report.json"
        code, _, _ = run_cli(
            capsys, "verify-all", "--config", str(cfg), "--q", "2",
            "--report", str(report_path),
        )
        assert code == 0
        doc = json.loads(report_path.read_text())
        assert doc["config"]["primes"] == "2"  # flag beats file
        assert doc["config"]["seed"] == 77  # env beats file

    def test_failing_claim_exits_1(self, capsys, tmp_path, monkeypatch):
        import plucker.cli as cli_mod

        def fake_run_all(cfg):
            rep = RunReport(config=cfg.to_dict(), version="test")
            rep.claims.append(ClaimReport("Thm3-roundtrip", {}, reports.FAIL, "forced"))
            return rep

        monkeypatch.setattr(cli_mod, "run_all", fake_run_all)
        report_path = tmp_path / "report.json"
        code, out, _ = run_cli(capsys, "verify-all", "--report", str(report_path))
        assert code == 1 and "overall: FAIL" in out


class TestReportDeterminism:
    def test_same_config_same_report_modulo_timing(self):
        from plucker import SweepConfig
        from plucker.claims import run_all

        cfg = SweepConfig(
            k_range=(2, 2), n_range=(2, 4), primes=(2,),
            rational_samples=3, matrix_samples=3,
        ).validate()

        def stripped(report):
            doc = json.loads(report.to_json())
            for claim in doc["claims"]:
                del claim["seconds"]
            del doc["version"]
            return doc

        assert stripped(run_all(cfg)) == stripped(run_all(cfg))


class TestReportRoundTrip:
    def test_json_round_trip(self):
        rep = RunReport(
            claims=[ClaimReport("W-count", {"checks": 3}, "pass", None, 0.5)],
            config={"seed": 1},
            version="0.1.0",
        )
        back = RunReport.from_json(rep.to_json())
        assert back.claims[0].claim == "W-count"
        assert back.overall == "pass"

    def test_overall_is_conjunction(self):
        rep = RunReport(claims=[ClaimReport("a", {}, "pass"), ClaimReport("b", {}, "flag")])
        assert rep.overall == "pass"
        rep.claims.append(ClaimReport("c", {}, "fail", "bad"))
        assert rep.overall == "fail"
