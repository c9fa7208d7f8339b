"""Incidence matrix construction, event selection, decade bins, interchange."""

import io

import numpy as np
import pytest

from coocnet.errors import ConfigError, IntegrityError, RecordError
from coocnet.incidence import (
    DecadeBinning,
    EventCatalog,
    IncidenceMatrix,
    add_bin_events,
    build_incidence,
    read_incidence,
    select_events,
    select_events_grouped,
    write_incidence,
)
from coocnet.ingest import ScenarioRecord


def rec(sid, *events, **attrs):
    return ScenarioRecord(sid, frozenset(events), dict(attrs))


def make(rows, marker_labels=()):
    records = [rec(f"s{i}", *evs) for i, evs in enumerate(rows)]
    return build_incidence(records, marker_labels)


def dense(inc):
    x = np.zeros((len(inc.scenario_ids), len(inc.catalog.labels)), dtype=np.int64)
    for r in range(len(inc.scenario_ids)):
        x[r, inc.indices[inc.indptr[r] : inc.indptr[r + 1]]] = 1
    return x


def test_build_orders_events_by_frequency_then_label():
    inc = make([("B", "A"), ("B",), ("C", "B"), ("A",)])
    # hand counts: B=3, A=2, C=1
    assert inc.catalog.labels == ("B", "A", "C")
    assert inc.catalog.frequencies.tolist() == [3, 2, 1]


def test_build_breaks_frequency_ties_lexicographically():
    inc = make([("Z", "A"), ("Z", "A"), ("M",), ("M",)])
    assert inc.catalog.labels == ("A", "M", "Z")


def test_build_is_independent_of_record_order():
    rows = [("B", "A"), ("B",), ("C", "B"), ("A",)]
    a = make(rows)
    b = build_incidence([rec(f"s{i}", *evs) for i, evs in enumerate(rows)][::-1])
    assert a.catalog.labels == b.catalog.labels
    assert a.catalog.frequencies.tolist() == b.catalog.frequencies.tolist()


def test_build_column_sums_equal_frequencies():
    inc = make([("B", "A"), ("B",), ("C", "B"), ("A",)])
    np.testing.assert_array_equal(dense(inc).sum(axis=0), inc.catalog.frequencies)


def test_build_rows_sorted_and_unique():
    inc = make([("D", "A", "C", "B"), ("B", "A")])
    for r in range(2):
        row = inc.indices[inc.indptr[r] : inc.indptr[r + 1]]
        assert (np.diff(row) > 0).all()


def test_build_empty_stream():
    with pytest.raises(ConfigError, match="no scenarios"):
        build_incidence([])


def test_build_scenario_with_no_events_keeps_row():
    inc = make([("A",), ()])
    assert len(inc.scenario_ids) == 2
    assert inc.indptr.tolist() == [0, 1, 1]


def test_build_marker_flags():
    inc = make([("A", "1960s"), ("A",)], marker_labels={"1960s"})
    flags = dict(zip(inc.catalog.labels, inc.catalog.marker.tolist()))
    assert flags == {"A": False, "1960s": True}


def test_build_reads_marker_labels_after_stream():
    # marker set is filled while records are consumed, as the bin stage does
    markers = set()

    def stream():
        yield rec("s0", "A")
        markers.add("A")

    inc = build_incidence(stream(), markers)
    assert inc.catalog.marker.tolist() == [True]


def test_catalog_rejects_wrong_order():
    with pytest.raises(IntegrityError):
        EventCatalog(
            ("A", "B"),
            np.array([1, 2], dtype=np.int64),
            np.array([False, False]),
        )


def test_catalog_rejects_tie_out_of_lex_order():
    with pytest.raises(IntegrityError):
        EventCatalog(
            ("B", "A"),
            np.array([2, 2], dtype=np.int64),
            np.array([False, False]),
        )


def test_catalog_rejects_duplicate_labels():
    with pytest.raises(IntegrityError):
        EventCatalog(
            ("A", "A"),
            np.array([2, 2], dtype=np.int64),
            np.array([False, False]),
        )


def test_catalog_rejects_zero_frequency():
    with pytest.raises(IntegrityError):
        EventCatalog(("A",), np.array([0], dtype=np.int64), np.array([False]))


def test_catalog_id_of():
    inc = make([("A", "B"), ("A",)])
    assert inc.catalog.id_of("A") == 0
    with pytest.raises(ConfigError, match="Q"):
        inc.catalog.id_of("Q")


def test_incidence_rejects_column_sum_mismatch():
    inc = make([("A", "B"), ("A",)])
    bad = inc.catalog.frequencies.copy()
    bad[0] = 1
    cat = EventCatalog(inc.catalog.labels, bad, inc.catalog.marker)
    with pytest.raises(IntegrityError, match="column sum"):
        IncidenceMatrix(cat, inc.indptr, inc.indices, inc.scenario_ids)


def test_incidence_rejects_unsorted_row():
    inc = make([("A", "B")])
    with pytest.raises(IntegrityError):
        IncidenceMatrix(
            inc.catalog,
            inc.indptr,
            inc.indices[::-1].copy(),
            inc.scenario_ids,
        )


# --- selection ---


def zipf_incidence():
    # frequencies A=6, B=3, C=1 (mass 10)
    rows = [("A",)] * 4 + [("A", "B")] * 2 + [("B",), ("C",)]
    return make(rows)


def test_select_requires_exactly_one_mode():
    inc = zipf_incidence()
    with pytest.raises(ConfigError):
        select_events(inc)
    with pytest.raises(ConfigError):
        select_events(inc, min_count=2, top_k=1)


def test_select_min_count():
    out = select_events(zipf_incidence(), min_count=3)
    assert out.catalog.labels == ("A", "B")
    assert out.catalog.frequencies.tolist() == [6, 3]


def test_select_min_count_validates_bound():
    with pytest.raises(ConfigError):
        select_events(zipf_incidence(), min_count=-1)


def test_select_top_k():
    out = select_events(zipf_incidence(), top_k=2)
    assert out.catalog.labels == ("A", "B")


def test_select_top_k_oversized_warns_and_keeps_all():
    inc = zipf_incidence()
    with pytest.warns(UserWarning):
        out = select_events(inc, top_k=99)
    assert out.catalog.labels == inc.catalog.labels


def test_select_coverage_half_of_six_three_one():
    # cumulative 6, 9, 10 against bound 5: first event already covers
    out = select_events(zipf_incidence(), coverage=0.5)
    assert out.catalog.labels == ("A",)


def test_select_coverage_boundary_is_inclusive():
    out = select_events(zipf_incidence(), coverage=0.6)
    assert out.catalog.labels == ("A",)
    out = select_events(zipf_incidence(), coverage=0.61)
    assert out.catalog.labels == ("A", "B")


def test_select_coverage_full_keeps_all():
    inc = zipf_incidence()
    out = select_events(inc, coverage=1.0)
    assert out.catalog.labels == inc.catalog.labels


def test_select_coverage_range_check():
    for bad in (0.0, -0.5, 1.5):
        with pytest.raises(ConfigError):
            select_events(zipf_incidence(), coverage=bad)


def test_select_keeps_scenario_count():
    out = select_events(zipf_incidence(), coverage=0.5)
    assert len(out.scenario_ids) == 8
    # rows that contained only dropped events are now empty, not removed
    assert out.indptr[-1] == 6


def test_select_preserves_global_frequencies():
    rows = [("A", "B"), ("A", "B"), ("A",), ("B",), ("C", "B")]
    out = select_events(make(rows), top_k=2)
    assert out.catalog.frequencies.tolist() == [4, 3]
    np.testing.assert_array_equal(dense(out).sum(axis=0), out.catalog.frequencies)


def test_select_coverage_not_idempotent_on_ties():
    # frequencies 4, 3, 3 with f=0.5: bound 5 keeps two events, then
    # re-selecting over mass 7 has bound 3.5 and keeps one. The post
    # condition (smallest prefix covering f of the current mass) holds at
    # each step even though the composition is not a fixed point.
    rows = [("A", "B")] * 3 + [("A",), ("C",), ("C",), ("C",)]
    inc = make(rows)
    assert inc.catalog.frequencies.tolist() == [4, 3, 3]
    once = select_events(inc, coverage=0.5)
    assert once.catalog.labels == ("A", "B")
    twice = select_events(once, coverage=0.5)
    assert twice.catalog.labels == ("A",)


def test_select_min_count_idempotent():
    inc = zipf_incidence()
    once = select_events(inc, min_count=3)
    twice = select_events(once, min_count=3)
    assert once.catalog.labels == twice.catalog.labels


# --- grouped selection ---


def grouped_incidence():
    rows = [
        ("G1", "A", "B"),
        ("G1", "A"),
        ("G1", "C"),
        ("G2", "B"),
        ("G2", "B", "C"),
        ("D",),
    ]
    return make(rows, marker_labels={"G1", "G2"})


def test_grouped_selection_per_group_coverage():
    out = select_events_grouped(grouped_incidence(), ["G1", "G2"], 0.5)
    # G1 scenarios hold A=2, B=1, C=1 (mass 4, bound 2): keep A
    # G2 scenarios hold B=2, C=1 (mass 3, bound 1.5): keep B
    assert set(out.catalog.labels) == {"A", "B", "G1", "G2"}


def test_grouped_selection_keeps_global_frequencies():
    out = select_events_grouped(grouped_incidence(), ["G1", "G2"], 0.5)
    by_label = dict(zip(out.catalog.labels, out.catalog.frequencies.tolist()))
    assert by_label == {"A": 2, "B": 3, "G1": 3, "G2": 2}


def test_grouped_selection_preserves_marker_flags():
    out = select_events_grouped(grouped_incidence(), ["G1", "G2"], 0.5)
    flags = dict(zip(out.catalog.labels, out.catalog.marker.tolist()))
    assert flags == {"A": False, "B": False, "G1": True, "G2": True}


def test_grouped_selection_counts_shared_events_once():
    rows = [("G1", "A"), ("G1", "A"), ("G2", "A"), ("G2", "A")]
    out = select_events_grouped(make(rows), ["G1", "G2"], 1.0)
    # A is picked by both groups; it appears once in the union
    assert sorted(out.catalog.labels) == ["A", "G1", "G2"]


def test_grouped_selection_excludes_other_groups_from_mass():
    # G2 co-occurs inside G1 scenarios but never counts toward G1 coverage
    rows = [("G1", "G2", "A"), ("G1", "G2", "A"), ("G1", "B"), ("G2", "C")]
    out = select_events_grouped(make(rows), ["G1", "G2"], 1.0)
    assert set(out.catalog.labels) == {"A", "B", "C", "G1", "G2"}
    # with half coverage both groups stop at A (masses 3, bounds 1.5)
    out = select_events_grouped(make(rows), ["G1", "G2"], 0.5)
    assert set(out.catalog.labels) == {"A", "G1", "G2"}


def test_grouped_selection_unknown_group():
    with pytest.raises(ConfigError, match="G9"):
        select_events_grouped(grouped_incidence(), ["G9"], 0.5)


def test_grouped_selection_validates_coverage():
    with pytest.raises(ConfigError):
        select_events_grouped(grouped_incidence(), ["G1"], 0.0)


def test_grouped_selection_needs_groups():
    with pytest.raises(ConfigError):
        select_events_grouped(grouped_incidence(), [], 0.5)


# --- decade bins ---


@pytest.mark.parametrize(
    "year,label",
    [
        ("1961", "1960s"),
        ("1960", "1960s"),
        ("1969", "1960s"),
        ("1970", "1970s"),
        ("2005", "2000s"),
        ("5", "0s"),
        ("-5", "-10s"),
        ("1969.9", "1960s"),
    ],
)
def test_decade_label(year, label):
    assert DecadeBinning().bin_label(year) == label


def test_decade_label_unparseable():
    b = DecadeBinning()
    assert b.bin_label("c1965") is None
    assert b.bin_label(None) is None


def test_add_bin_events_appends_and_counts():
    b = DecadeBinning()
    records = [
        rec("a", "X", year="1961"),
        rec("b", "Y", year="oops"),
        rec("c", "Z"),
    ]
    out = list(add_bin_events(records, b))
    assert out[0].events == frozenset({"X", "1960s"})
    assert out[1].events == frozenset({"Y"})
    assert b.skipped == 2
    assert b.labels == {"1960s"}


def test_bin_then_build_marks_bin_columns():
    b = DecadeBinning()
    records = [rec("a", "X", year="1961"), rec("b", "X", year="1975")]
    inc = build_incidence(add_bin_events(records, b), b.labels)
    flags = dict(zip(inc.catalog.labels, inc.catalog.marker.tolist()))
    assert flags == {"X": False, "1960s": True, "1970s": True}


def test_custom_bin_attribute():
    b = DecadeBinning(attribute="published")
    out = list(add_bin_events([rec("a", "X", published="1983")], b))
    assert "1980s" in out[0].events


# --- interchange files ---


def test_incidence_roundtrip(tmp_path):
    inc = make([("B", "A", "1960s"), ("B",), ("C", "B")], marker_labels={"1960s"})
    cat_f = tmp_path / "catalog.tsv"
    rows_f = tmp_path / "rows.tsv"
    write_incidence(inc, cat_f, rows_f)
    again = read_incidence(cat_f, rows_f)
    assert again.catalog.labels == inc.catalog.labels
    np.testing.assert_array_equal(again.catalog.frequencies, inc.catalog.frequencies)
    np.testing.assert_array_equal(again.catalog.marker, inc.catalog.marker)
    np.testing.assert_array_equal(again.indptr, inc.indptr)
    np.testing.assert_array_equal(again.indices, inc.indices)
    assert again.scenario_ids == inc.scenario_ids


def test_incidence_write_rejects_tabs_in_labels(tmp_path):
    inc = build_incidence([rec("s\t0", "A")])
    with pytest.raises(ConfigError):
        write_incidence(inc, tmp_path / "c.tsv", tmp_path / "r.tsv")


def test_incidence_read_rejects_gapped_ids(tmp_path):
    cat_f = tmp_path / "c.tsv"
    rows_f = tmp_path / "r.tsv"
    cat_f.write_text("0\tA\t1\t0\n2\tB\t1\t0\n")
    rows_f.write_text("s0\t0 1\n")
    with pytest.raises(RecordError, match="line 2"):
        read_incidence(cat_f, rows_f)


def test_incidence_read_rejects_bad_marker(tmp_path):
    cat_f = tmp_path / "c.tsv"
    rows_f = tmp_path / "r.tsv"
    cat_f.write_text("0\tA\t1\tyes\n")
    rows_f.write_text("s0\t0\n")
    with pytest.raises(RecordError):
        read_incidence(cat_f, rows_f)


def test_incidence_read_rejects_frequency_mismatch(tmp_path):
    cat_f = tmp_path / "c.tsv"
    rows_f = tmp_path / "r.tsv"
    cat_f.write_text("0\tA\t2\t0\n")
    rows_f.write_text("s0\t0\n")
    with pytest.raises(IntegrityError):
        read_incidence(cat_f, rows_f)


# --- randomized structural checks ---


def test_random_streams_keep_invariants():
    rng = np.random.default_rng(20240917)
    alphabet = [f"E{i:02d}" for i in range(30)]
    for _ in range(50):
        n = int(rng.integers(1, 40))
        records = []
        for i in range(n):
            k = int(rng.integers(0, 8))
            events = rng.choice(alphabet, size=k, replace=False) if k else []
            records.append(rec(f"s{i}", *events))
        if not any(r.events for r in records):
            continue
        inc = build_incidence(records)
        x = dense(inc)
        np.testing.assert_array_equal(x.sum(axis=0), inc.catalog.frequencies)
        freqs = inc.catalog.frequencies
        assert (freqs[:-1] >= freqs[1:]).all()
        # ties in lex order
        for a in range(len(freqs) - 1):
            if freqs[a] == freqs[a + 1]:
                assert inc.catalog.labels[a] < inc.catalog.labels[a + 1]
        # selection never changes N or surviving frequencies
        k = int(rng.integers(1, len(freqs) + 1))
        sub = select_events(inc, top_k=k)
        assert len(sub.scenario_ids) == len(inc.scenario_ids)
        assert set(sub.catalog.labels) <= set(inc.catalog.labels)
        for lab, f in zip(sub.catalog.labels, sub.catalog.frequencies):
            assert f == freqs[inc.catalog.id_of(lab)]
