import pytest

from components.report_view import render, render_claims_text
from utils.claims import ClaimSuite, verify_claims
from utils.exceptions import HnnLabError


@pytest.fixture(scope="module")
def claim_run():
    return verify_claims(n=12, seed=12345, depth=6, samples=20)


def test_every_claim_passes(claim_run):
    assert claim_run["summary"]["failed"] == 0, claim_run["summary"]["failing"]
    assert claim_run["summary"]["passed"] == len(ClaimSuite().claims())


def test_run_metadata(claim_run):
    assert claim_run["format"] == "hnnlab-report/1"
    assert claim_run["suite"] == "claims"
    assert (claim_run["n"], claim_run["seed"], claim_run["samples"]) == (12, 12345, 20)


def test_antidiagonal_rule_is_reported_only(claim_run):
    entry = claim_run["claims"]["unipotent: antidiagonal rule statistics"]
    assert entry["reported_only"]
    assert set(entry["details"]) == {"m=3", "m=4", "m=5", "m=6"}


def test_claim_labels_follow_n():
    labels = [label for label, _ in ClaimSuite(n=13).claims()]
    assert "gamma-13: defining relations" in labels
    assert "gamma-hnn-13: 8/8 unmixed assignments verified" in labels
    assert "gamma-13: associativity" in labels
    assert "gamma-13: gamma_eval is a homomorphism" in labels


def test_exceptions_become_failed_entries(monkeypatch):
    suite = ClaimSuite(samples=5)

    def broken():
        raise HnnLabError("oracle disagreed")

    monkeypatch.setattr(suite, "claims", lambda: [("small", suite.check_small_rank), ("broken", broken)])
    result = suite.run()
    assert result["claims"]["small"]["passes"]
    assert not result["claims"]["broken"]["passes"]
    assert result["claims"]["broken"]["reason"] == "HnnLabError: oracle disagreed"
    assert result["summary"] == {"passed": 1, "failed": 1, "failing": ["broken"]}
    text = render_claims_text(result)
    assert "failing: broken" in text
    assert render(result, text, "text") == text


def test_default_sample_count():
    assert ClaimSuite().samples == 10_000


@pytest.mark.slow
@pytest.mark.parametrize("claim", ["check_gamma_order", "check_gamma_associativity",
                                   "check_gamma_eval_homomorphism", "check_unipotent_order"])
def test_randomized_claims_at_full_size(claim):
    entry = getattr(ClaimSuite(samples=10_000), claim)()
    assert entry["passes"], entry["reason"]
