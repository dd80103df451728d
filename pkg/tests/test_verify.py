import json
import pathlib

import pytest

from cubicaut.catalog import TAGS, catalog_build
from cubicaut.aut import compute_automorphism_group
from cubicaut.verify import (
    Claim,
    all_pass,
    necessary_conditions,
    render_report,
    verify_entry,
)

from conftest import by_prefix

GOLDEN = pathlib.Path(__file__).parent / "golden"


def test_claim_defaults():
    c = Claim("x:y", "pass")
    assert c.witness == ""
    assert c.source == "computed"
    assert c.seconds == 0.0


def test_render_report_shape(full_run):
    claims, _ = full_run
    text = render_report(claims)
    data = json.loads(text)
    assert set(data) == {"claims", "summary"}
    assert data["summary"]["total"] == len(claims)
    assert data["summary"]["pass"] + data["summary"]["fail"] + \
        data["summary"]["skipped"] == len(claims)
    first = data["claims"][0]
    assert list(first)[:2] == ["id", "status"]


def test_render_report_without_timing(full_run):
    claims, _ = full_run
    text = render_report(claims, include_timing=False)
    assert '"seconds"' not in text
    json.loads(text)


@pytest.mark.parametrize("tag", TAGS)
def test_row_reports_match_golden(tag, full_run):
    claims, _ = full_run
    row = by_prefix(claims, f"{tag}:")
    rendered = render_report(row, include_timing=False)
    want = (GOLDEN / f"{tag}.json").read_text(encoding="utf-8")
    assert rendered == want


def test_only_known_failure_is_j5b_classification(full_run):
    claims, _ = full_run
    failing = [c.id for c in claims if c.status == "fail"]
    assert failing == ["J5b:all-A1"]
    assert not all_pass(claims)
    (bad,) = [c for c in claims if c.id == "J5b:all-A1"]
    assert "cA2-class" in bad.witness


def test_five_rows_fully_pass(full_run):
    claims, _ = full_run
    for tag in ("J15", "J14", "J9a", "J9b", "J5a"):
        row = by_prefix(claims, f"{tag}:")
        assert row
        assert all(c.status in ("pass", "skipped") for c in row)


def test_pr1_bundle(full_run):
    claims, _ = full_run
    bundle = by_prefix(claims, "pr1:")
    assert all_pass(bundle)
    ids = {c.id for c in bundle}
    for name in ("h11", "h12", "h13", "h2", "h31", "h32", "h33"):
        assert f"pr1:{name}" in ids
    assert "pr1:mutation-detected" in ids


def test_eliminations_bundle(full_run):
    claims, _ = full_run
    bundle = by_prefix(claims, "elim")
    assert bundle
    assert all_pass(bundle)


def test_excluded_battery(full_run):
    claims, _ = full_run
    bundle = by_prefix(claims, "excluded:")
    assert all_pass(bundle)
    ids = {c.id for c in bundle}
    assert "excluded:J9:Dih12:invariant-plane" in ids
    assert "excluded:J9:Sym3:invariant-plane" in ids
    assert "excluded:J9:Sym3xC3:orbit-flat" in ids
    assert "excluded:J14:Sym3xC3:invariant-plane" in ids
    assert "excluded:J5:Dih10:invariant-line" in ids
    assert "excluded:J11:C2xSym3:invariant-plane" in ids
    assert "excluded:J11:Sym4xC2:invariant-plane" in ids


def test_family_members_bundle(full_run):
    claims, _ = full_run
    bundle = by_prefix(claims, "family:")
    assert bundle
    assert all_pass(bundle)


def test_necessary_conditions_direct():
    entry = catalog_build("J5a")
    group = compute_automorphism_group(entry.form, entry.singular_points)
    checks, details = necessary_conditions(
        entry.form, group, entry.singular_points, label="probe")
    assert all_pass(checks)
    ids = [c.id for c in checks]
    assert ids == ["probe:acts", "probe:no-fixed-singular-point",
                   "probe:singular-orbits-ge-4", "probe:no-invariant-line",
                   "probe:no-invariant-plane"]
    assert details["orbit_sizes"] == [5]


def test_verify_entry_standalone_matches_table(full_run):
    claims, _ = full_run
    fresh = verify_entry("J5a")
    table_row = by_prefix(claims, "J5a:")
    assert [c.id for c in fresh] == [c.id for c in table_row]
    assert [c.status for c in fresh] == [c.status for c in table_row]
