"""Claims catalog tests."""

import json

import pytest

from integra.verify import list_claims, result_to_dict, run_all, run_claim


def test_registry_shape():
    claims = list_claims()
    assert len(claims) == 17
    ids = [c.id for c in claims]
    assert ids == [f"C{i}" for i in range(1, 18)]
    assert len(set(ids)) == 17
    assert all(c.anchor for c in claims)
    assert all(c.description for c in claims)
    assert all(c.scale in ("fast", "moderate") for c in claims)


def test_unknown_claim_rejected():
    with pytest.raises(ValueError, match="unknown claim"):
        run_claim("C0")


def test_c1_cycle_orders():
    res = run_claim("C1")
    assert res.passed
    assert res.evidence["integral_orders"] == [3, 4, 6]
    assert res.evidence["per_order"]["5"] is False


def test_c2_dihedral_witness():
    res = run_claim("C2")
    assert res.passed
    assert res.evidence["set"] == [2, 3, 5]
    assert res.evidence["divisor"] == [-1, 2, 1]
    assert res.evidence["divides"] is True
    assert res.evidence["a3_witness"] == [2, 3, 4]


def test_c4_alternating_cubic_sets():
    res = run_claim("C4")
    assert res.passed
    assert res.evidence["sets_checked"] == 13


def test_c5_symmetric_subgroup_filter():
    res = run_claim("C5")
    assert res.passed
    assert res.evidence["with_s3_subgroup"] == ["S3", "D12", "S4", "D6xZ4"]
    assert res.evidence["a3_members"] == ["S3"]


def test_run_all_filters():
    assert [r.id for r in run_all("C1").results] == ["C1"]
    assert len(run_all("ZZZ").results) == 0
    assert run_all("ZZZ").ok
    summary = run_all("C4")
    assert summary.passed == 1
    assert summary.failed == 0
    assert summary.ok


def test_result_serialization_is_deterministic():
    first = json.dumps(result_to_dict(run_claim("C3")), sort_keys=True)
    second = json.dumps(result_to_dict(run_claim("C3")), sort_keys=True)
    assert first == second
    doc = result_to_dict(run_claim("C3"))
    assert set(doc) == {"id", "passed", "evidence"}
