"""Census over all systems at a fixed color count: enumeration order,
record serialization, dedupe correctness, resumable streaming, and the
frozen small-n summaries."""

import os

import pytest

import quadcolor as qc
from quadcolor.census import census_records
from conftest import brute_max_length, brute_torus_colorings

CAPS = qc.SearchBudget(depth_cap=32, period_cap=4)

# Regression pin for the full two-color census at the caps above.  The
# 22 unknowns are systems that color the whole quadrant without any
# periodic coloring passing through the origin, so no witness at any
# period cap can close them.
N2_SUMMARY = {
    "n": 2,
    "total_systems": 512,
    "bounded": 314,
    "has_coloring": 176,
    "unknown": 22,
    "mu_exact": None,
    "mu_lower_bound": 6,
    "champion": 41,
}


def test_total_systems():
    assert qc.total_systems(1) == 4
    assert qc.total_systems(2) == 512
    assert qc.total_systems(3) == 3 * 2**18
    for bad in (0, 9, -1, True, "2"):
        with pytest.raises(qc.InputError):
            qc.total_systems(bad)


def test_system_index_roundtrip():
    for index in range(qc.total_systems(2)):
        s = qc.system_at(2, index)
        assert qc.system_index(s) == index
    with pytest.raises(qc.InputError):
        qc.system_at(2, 512)
    with pytest.raises(qc.InputError):
        qc.system_at(2, -1)


def test_enumeration_order_is_origin_then_h_then_v():
    listed = list(qc.enumerate_systems(1))
    assert [(s.origin, s.h_mask, s.v_mask) for s in listed] == [
        (0, 0, 0),
        (0, 0, 1),
        (0, 1, 0),
        (0, 1, 1),
    ]
    # v varies fastest, then h, then origin
    s0, s1 = qc.system_at(2, 0), qc.system_at(2, 1)
    assert (s0.h_mask, s0.v_mask) == (0, 0)
    assert (s1.h_mask, s1.v_mask) == (0, 1)
    assert qc.system_at(2, 256).origin == 1


def test_one_color_census_against_brute():
    # oracle first: re-derive each verdict from the definitions
    records = list(census_records(1, CAPS))
    assert len(records) == 4
    for rec in records:
        sys = rec.system
        brute_len = brute_max_length(sys, 5)
        if isinstance(rec.verdict, qc.Bounded):
            assert rec.verdict.max_len == brute_len
            assert not brute_torus_colorings(sys, 1, 1)
        else:
            assert isinstance(rec.verdict, qc.HasColoring)
            assert brute_len == 5  # hit the oracle cap
    lengths = sorted(
        r.verdict.max_len for r in records if isinstance(r.verdict, qc.Bounded)
    )
    assert lengths == [1, 1, 2]


def test_mu_one_is_three():
    estimate = qc.mu(1, CAPS)
    assert estimate == qc.MuEstimate(exact=3, lower_bound=3)


def test_one_color_summary_champion():
    summary = qc.run_census(1, CAPS)
    assert summary.champion == 1
    assert qc.system_at(1, 1).v_mask == 1  # the H-less ladder, two tiles tall


def test_two_color_summary_is_pinned():
    summary = qc.run_census(2, CAPS)
    assert qc.summary_to_json(summary) == N2_SUMMARY


def test_record_line_roundtrip():
    for rec in census_records(2, CAPS, start=0, stop=64):
        record_back = qc.parse_record_line(2, qc.record_line(rec))
        assert record_back.system_index == rec.system_index
        assert record_back.system == rec.system
        assert record_back.verdict == rec.verdict
        assert record_back.canonical_id == rec.canonical_id


def test_record_line_parse_is_strict():
    with pytest.raises(qc.FileFormatError):
        qc.parse_record_line(2, "not json")
    with pytest.raises(qc.FileFormatError):
        qc.parse_record_line(2, '{"system_index": 0}')
    good = qc.record_line(next(census_records(2, CAPS, stop=1)))
    with pytest.raises(qc.FileFormatError):
        qc.parse_record_line(2, good.replace("bounded", "mystery"))
    with pytest.raises(qc.FileFormatError):
        qc.parse_record_line(2, good.replace('"system_index":0', '"system_index":true'))


def test_dedupe_matches_direct_classification():
    budget = qc.SearchBudget(depth_cap=16, period_cap=3)
    shared = list(census_records(2, budget, dedupe=True))
    direct = list(census_records(2, budget, dedupe=False))
    for a, b in zip(shared, direct):
        assert qc.verdict_kind(a.verdict) == qc.verdict_kind(b.verdict)
        if isinstance(a.verdict, qc.Bounded):
            assert a.verdict.max_len == b.verdict.max_len


def test_relabeled_witnesses_certify_their_own_system():
    for rec in census_records(2, CAPS):
        if isinstance(rec.verdict, qc.HasColoring):
            assert rec.verdict.witness.problems(rec.system) == []


def test_canonical_id_matches_canonical_form():
    for rec in census_records(2, CAPS, start=100, stop=140):
        assert rec.canonical_id == qc.canonical_id(qc.canonical_form(rec.system))


def test_summarize_records_counts():
    records = list(census_records(1, CAPS))
    summary = qc.summarize_records(1, records)
    assert (summary.bounded, summary.has_coloring, summary.unknown) == (3, 1, 0)
    assert summary.mu_exact == 3
    # a partial record set cannot certify exactness
    partial = qc.summarize_records(1, records[:3])
    assert partial.mu_exact is None
    assert partial.mu_lower_bound == 3


def test_tiny_depth_cap_weakens_the_bound():
    # a cap of 2 cannot certify the length-2 system bounded (that needs the
    # absence of length-3 sequences), so only Bounded(1) is observed and the
    # reported bound drops to 2; still sound, just weaker
    est = qc.mu(1, qc.SearchBudget(depth_cap=2, period_cap=4))
    assert est == qc.MuEstimate(exact=None, lower_bound=2)


def test_bound_is_monotone_in_color_count():
    # a bounded system keeps its max length when a fresh unusable color is
    # added, so the lower bound cannot drop as n grows
    assert qc.mu(1, CAPS).lower_bound <= qc.mu(2, CAPS).lower_bound


def test_embedded_one_color_system_bounds_two_colors():
    embedded = qc.ColoringSystem.from_pairs(2, 0, [], [(0, 0)])
    assert brute_max_length(embedded, 5) == 2  # color 1 appears in no pair
    verdict = qc.classify(embedded, qc.SearchBudget(depth_cap=8, period_cap=2))
    assert verdict == qc.Bounded(max_len=2)
    est = qc.mu(2, qc.SearchBudget(depth_cap=8, period_cap=2))
    assert est.lower_bound >= 3


def test_run_census_streams_jsonl(tmp_path):
    out = tmp_path / "n2.jsonl"
    summary = qc.run_census(2, CAPS, out_path=str(out))
    lines = out.read_text().splitlines()
    assert len(lines) == 512
    assert [qc.parse_record_line(2, ln).system_index for ln in lines] == list(range(512))
    assert not os.path.exists(str(out) + ".cursor")
    sidecar = tmp_path / "n2.jsonl.summary.json"
    assert sidecar.exists()
    assert qc.summary_to_json(summary) == N2_SUMMARY


def test_run_census_workers_agree(tmp_path):
    solo = tmp_path / "solo.jsonl"
    pooled = tmp_path / "pooled.jsonl"
    qc.run_census(2, CAPS, jobs=1, out_path=str(solo))
    qc.run_census(2, CAPS, jobs=3, out_path=str(pooled))
    assert solo.read_bytes() == pooled.read_bytes()


def test_stop_after_pauses_and_resume_completes(tmp_path):
    out = tmp_path / "paused.jsonl"
    assert qc.run_census(2, CAPS, out_path=str(out), stop_after=100) is None
    assert len(out.read_text().splitlines()) == 100
    assert os.path.exists(str(out) + ".cursor")
    summary = qc.run_census(2, CAPS, out_path=str(out), resume=True)
    assert qc.summary_to_json(summary) == N2_SUMMARY
    reference = tmp_path / "reference.jsonl"
    qc.run_census(2, CAPS, out_path=str(reference))
    assert out.read_bytes() == reference.read_bytes()


def test_resume_truncates_torn_tail(tmp_path):
    out = tmp_path / "torn.jsonl"
    qc.run_census(2, CAPS, out_path=str(out), stop_after=40)
    with open(out, "a") as fh:
        fh.write('{"system_index": 40, "canonical')  # interrupted mid-record
    summary = qc.run_census(2, CAPS, out_path=str(out), resume=True)
    assert qc.summary_to_json(summary) == N2_SUMMARY
    assert len(out.read_text().splitlines()) == 512


def test_resume_rejects_mismatched_budget(tmp_path):
    out = tmp_path / "mix.jsonl"
    qc.run_census(2, CAPS, out_path=str(out), stop_after=10)
    with pytest.raises(qc.InputError):
        qc.run_census(
            2, qc.SearchBudget(depth_cap=8, period_cap=4), out_path=str(out), resume=True
        )


def test_run_census_validates_knobs(tmp_path):
    with pytest.raises(qc.InputError):
        qc.run_census(2, CAPS, jobs=0)
    with pytest.raises(qc.InputError):
        qc.run_census(2, CAPS, flush_every=0)
    with pytest.raises(qc.InputError):
        qc.run_census(2, CAPS, resume=True)  # nothing to resume from
