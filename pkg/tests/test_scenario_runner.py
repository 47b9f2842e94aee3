import pytest

from utils.cone_search import FAILED, VERIFIED
from utils.exceptions import ScenarioError
from utils.scenario_runner import (EXIT_OK, EXIT_VERDICT_MISMATCH, EXIT_VERIFICATION_FAILED, REPORT_FORMAT,
                                   run_scenario)


@pytest.mark.parametrize("name, verdict", [
    ("free_rank2_hnn.scn", "NOT-LEFT-ORDERABLE"),
    ("polycyclic_gamma.scn", "NOT-LEFT-ORDERABLE"),
    ("klein_bottle.scn", "INCONCLUSIVE"),
    ("baumslag_solitar_1_2.scn", "INCONCLUSIVE"),
    ("unipotent_u3.scn", "INCONCLUSIVE"),
])
def test_shipped_scenarios(scenario_path, name, verdict):
    report = run_scenario(scenario_path(name))
    assert report.verdict == verdict
    assert report.exit_code == EXIT_OK
    assert all(check["passes"] for check in report.checks.values())


def test_free_scenario_records_ranks(scenario_path):
    report = run_scenario(scenario_path("free_rank2_hnn.scn"))
    assert report.checks["rank of A"]["details"]["rank"] == 8
    assert report.checks["rank of B"]["details"]["rank"] == 8
    assert report.cone.names == ("a", "b", "ta", "tb")


def test_gamma_scenario_constructs_the_unmixed_assignments(scenario_path):
    report = run_scenario(scenario_path("gamma_n_hnn.scn"), depth=2)
    assert report.exit_code == EXIT_OK
    assert report.cone.depth == 2
    assert report.checks["lattice rank of A"]["passes"]
    assert len(report.checks["constructed assignments"]["details"]["searched"]) == 8
    constructed = [r for r in report.cone.results if r.witness is not None and r.witness.source == "constructed"]
    assert len(constructed) == 8


def test_tampered_pairing_fails_four_witnesses(scenario_path):
    report = run_scenario(scenario_path("free_rank2_hnn_tampered.scn"))
    assert report.exit_code == EXIT_VERIFICATION_FAILED
    counts = report.cone.counts()
    assert counts[VERIFIED] == 12
    assert counts[FAILED] == 4
    failing = sorted(str(r.assignment) for r in report.cone.results if r.status == FAILED)
    assert failing == ["+,+,-,-", "+,-,-,-", "-,+,+,+", "-,-,+,+"]


def test_verdict_mismatch(write_scenario):
    path = write_scenario("name = z\ngroup = cyclic a\nelement a = a\ndepth = 3\nexpect = NOT-LEFT-ORDERABLE\n")
    report = run_scenario(path)
    assert report.verdict == "INCONCLUSIVE"
    assert report.exit_code == EXIT_VERDICT_MISMATCH


def test_failed_identity_check(write_scenario):
    report = run_scenario(write_scenario("name = z\ngroup = cyclic a\nidentity = a\nnontrivial = a a^-1\n"))
    assert report.verdict == "CHECKS-ONLY"
    assert report.exit_code == EXIT_VERIFICATION_FAILED
    assert not report.checks["identity 1: a"]["passes"]
    assert not report.checks["nontrivial 1: a a^-1"]["passes"]


def test_report_dict(write_scenario):
    payload = run_scenario(write_scenario("name = z\ngroup = cyclic a\nidentity = a^2 a^-2\n")).to_dict()
    assert payload["format"] == REPORT_FORMAT
    assert payload["scenario"] == "z"
    assert payload["group"] == "cyclic a"
    assert payload["cone"] is None
    assert payload["exit_code"] == EXIT_OK


def test_default_depth_applies_without_a_depth_key(write_scenario):
    report = run_scenario(write_scenario("name = z\ngroup = cyclic a\nelement a = a\n"), default_depth=3)
    assert report.cone.depth == 3


def test_word_errors_point_into_the_file(write_scenario):
    path = write_scenario("name = z\ngroup = cyclic a\nelement g = a^x\n")
    with pytest.raises(ScenarioError) as info:
        run_scenario(path)
    assert (info.value.line, info.value.column) == (3, 15)
    assert str(info.value).startswith(f"{path}:3:15:")


@pytest.mark.parametrize("text, message", [
    ("name = z\ngroup = free a b\nA = a ; a^2\nB = a ; b\n", "invalid HNN data"),
    ("name = z\ngroup = free a b\nA = a ; 1\nB = a ; b\n", "subgroup generator is the identity"),
    ("name = z\ngroup = gamma 1\n", "gamma modulus must be at least 2"),
    ("name = z\ngroup = cyclic a\nelement a = a\nwitness +,- = a\n", "has 2 signs for 1 elements"),
    ("name = z\ngroup = cyclic a\nelement a = a\nwitness + = b\n", "unknown element 'b'"),
    ("name = z\ngroup = cyclic a\nelement a = a\nwitness + = a^-1\n", "signs come from the assignment"),
    ("name = z\ngroup = cyclic a\nelement e = a a^-1\n", "is the identity"),
])
def test_invalid_scenarios(write_scenario, text, message):
    with pytest.raises(ScenarioError) as info:
        run_scenario(write_scenario(text))
    assert message in str(info.value)


@pytest.mark.parametrize("name", ["free_rank2_hnn.scn", "polycyclic_gamma.scn"])
def test_certificate_scenarios_verify_every_assignment(scenario_path, name):
    report = run_scenario(scenario_path(name))
    assert report.cone.counts()[VERIFIED] == 16
    assert len(report.cone.certificates) == 16
