"""The verification engine end to end: verdicts, rigor labels, scans."""

import dataclasses
from math import gcd

import pytest

from etaq.characters import kronecker
from etaq.claims import builtin_claims
from etaq.congruence import (
    VerificationReport,
    classify_square_class_prime,
    clear_expansion_cache,
    scan_exceptional,
    verify_claim,
    verify_claims,
)
from etaq.etaquot import lookup


def claim_by_id(claim_id):
    matches = [c for c in builtin_claims() if c.claim_id == claim_id]
    assert len(matches) == 1, claim_id
    return matches[0]


def test_two_exponent_delta_691():
    report = verify_claim(claim_by_id("two-exponent:delta:l691"))
    assert report.verdict == "proved"
    assert report.rigor == "sturm-proved"
    assert report.status == "ok"
    assert report.bound == 58
    assert report.first_failure is None


def test_two_exponent_ell_dividing_level_is_only_evidence():
    report = verify_claim(claim_by_id("two-exponent:eta2^12:l2"))
    assert report.verdict == "evidence"
    assert report.rigor == "numerical-evidence"
    assert report.status == "ok"


def test_square_class_delta_23():
    report = verify_claim(claim_by_id("square-class:delta:l23"))
    assert report.verdict == "proved"
    assert report.bound == 25


def test_square_class_planted_refutation():
    report = verify_claim(claim_by_id("square-class:delta:l29"))
    assert report.verdict == "failed"
    assert report.status == "refuted-as-expected"
    assert report.first_failure is not None
    assert report.first_failure <= 50


def test_square_class_coefficient_restatement():
    # a(n) = 0 mod ell whenever (n/ell) = -1 and gcd(n, N ell) = 1, n <= 500
    for form_id, ell in (
        ("delta", 23),
        ("eta1^4 eta2^2 eta4^4", 7),
        ("eta2^12", 11),
        ("eta3^8", 5),
    ):
        entry = lookup(form_id)
        f = entry.expand(500)
        hits = 0
        for n in range(1, 501):
            if kronecker(n, ell) == -1 and gcd(n, entry.level * ell) == 1:
                assert f[n] % ell == 0, (form_id, ell, n)
                hits += 1
        assert hits > 100, (form_id, ell)


def test_prime_power_scan_details():
    report = verify_claim(claim_by_id("prime-power:eta2^12:l3^2"))
    assert report.verdict == "evidence"
    assert report.rigor == "numerical-evidence"
    assert report.primes_checked and report.primes_checked > 100


def test_prime_power_sharpened_control_fails():
    report = verify_claim(claim_by_id("prime-power:eta1^8 eta2^8:l2^8:sharpened"))
    assert report.verdict == "failed"
    assert report.status == "refuted-as-expected"
    assert report.first_failure == 3


def test_prime_power_respects_prime_bound_flag():
    claim = claim_by_id("prime-power:eta1^2 eta11^2:l5^2")
    small = verify_claim(claim, prime_bound=500)
    assert small.verdict == "evidence"
    assert small.primes_checked < verify_claim(claim, prime_bound=2000).primes_checked
    with pytest.raises(ValueError):
        verify_claim(claim, prime_bound=10)


def test_unit_factor_rows():
    for claim_id in ("unit-factor:eta2^12:l2", "unit-factor:eta1^6 eta3^6:l2"):
        report = verify_claim(claim_by_id(claim_id))
        assert report.verdict == "evidence", claim_id
        assert report.status == "ok"


def test_twist_power_rows_and_control():
    for a in (1, 2, 3):
        report = verify_claim(claim_by_id(f"twist-power:eta2^12:l3^{a}"))
        assert report.verdict == "proved", a
    control = verify_claim(claim_by_id("twist-power:eta2^12:l3^4"))
    assert control.verdict == "failed"
    assert control.status == "refuted-as-expected"
    assert control.first_failure == 5


def test_twist_power_cm_rows_prove_to_depth_five():
    for form in ("eta3^8", "eta2^3 eta6^3", "eta3^2 eta9^2", "eta6^4"):
        for a in (1, 5):
            report = verify_claim(claim_by_id(f"twist-power:{form}:l3^{a}"))
            assert report.verdict == "proved", (form, a)


def test_raw_identity_replication():
    report = verify_claim(claim_by_id("raw-identity:eta1^8 eta2^8:l3^3"))
    assert report.verdict == "proved"
    assert report.bound == 1918
    assert report.weight == 320
    assert report.level == 36


def test_margin_extends_the_agreement_check():
    claim = claim_by_id("square-class:delta:l23")
    wider = verify_claim(claim, margin=50)
    assert wider.bound == 25 + 50
    assert wider.verdict == "proved"
    deep = verify_claim(claim_by_id("two-exponent:delta:l691"), margin=50)
    assert deep.verdict == "proved"


def test_corrupted_claim_is_caught():
    base = claim_by_id("two-exponent:delta:l691")
    bad = dataclasses.replace(base, m=2, m_prime=9, claim_id="two-exponent:delta:l691:bad")
    report = verify_claim(bad)
    assert report.verdict == "failed"
    assert report.status == "fail"
    assert report.first_failure is not None


def test_exponent_relation_violation_raises():
    base = claim_by_id("two-exponent:delta:l691")
    bad = dataclasses.replace(base, m_prime=12, claim_id="x")
    with pytest.raises(ValueError, match="exponents violate"):
        verify_claim(bad)


def test_report_json_shape():
    report = verify_claim(claim_by_id("square-class:delta:l23"))
    data = report.to_json()
    assert data["claim"] == "square-class:delta:l23"
    assert data["verdict"] == "proved"
    assert data["rigor"] == "sturm-proved"
    assert data["status"] == "ok"
    assert data["bound"] == 25
    assert isinstance(data["seconds"], float)


def test_report_invariant_proved_requires_sturm():
    claim = claim_by_id("square-class:delta:l23")
    with pytest.raises(ValueError):
        VerificationReport(
            claim=claim, verdict="proved", rigor="numerical-evidence", bound=10
        )


def test_verify_claims_is_deterministic_across_jobs():
    subset = [c for c in builtin_claims() if c.form == "delta"]
    seq = verify_claims(subset, jobs=1)
    par = verify_claims(subset, jobs=4)
    assert [r.claim.claim_id for r in seq] == [r.claim.claim_id for r in par]
    assert [r.verdict for r in seq] == [r.verdict for r in par]
    assert [r.bound for r in seq] == [r.bound for r in par]


def test_classifier_branches():
    assert classify_square_class_prime("delta", 23) == "two-k-minus-1"
    assert classify_square_class_prime("eta1^4 eta2^2 eta4^4", 7) == "two-k-minus-3"
    assert classify_square_class_prime("eta3^8", 3) == "small-ell"


def test_classifier_rejects_inconsistent_prime():
    with pytest.raises(ValueError):
        classify_square_class_prime("delta", 19)


def test_scan_square_class_delta():
    findings = scan_exceptional("delta", "square-class", ell_max=40)
    by_ell = {f.ell: f for f in findings}
    assert set(by_ell) == {3, 7, 23}
    assert not by_ell[23].masked
    assert by_ell[3].masked
    assert by_ell[7].masked


def test_scan_square_class_eta3_8():
    findings = scan_exceptional("eta3^8", "square-class", ell_max=10)
    assert sorted(f.ell for f in findings) == [3, 5, 7]
    assert all(not f.masked for f in findings)


def test_scan_square_class_level_11_form_finds_nothing():
    assert scan_exceptional("eta1^2 eta11^2", "square-class", ell_max=40) == []


def test_scan_two_exponent_delta_hits_the_table():
    findings = scan_exceptional("delta", "two-exponent", ell_max=700)
    found = {(f.ell, f.m, f.m_prime) for f in findings}
    assert (691, 0, 11) in found
    assert (3, 0, 1) in found
    assert {f.ell for f in findings} >= {3, 5, 7, 691}


def test_scan_rejects_bad_input():
    with pytest.raises(ValueError):
        scan_exceptional("delta", "twist-power")
    with pytest.raises(ValueError):
        scan_exceptional("delta", "square-class", prime_bound=10)
    with pytest.raises(KeyError):
        scan_exceptional("eta9^99", "square-class")


def test_expansion_cache_can_be_cleared():
    clear_expansion_cache()
    verify_claim(claim_by_id("square-class:delta:l23"))
    clear_expansion_cache()
