"""Binary incidence matrix construction and event-level data reduction.

The matrix X is N scenarios by M events, stored sparsely as per-row sorted
event id lists (CSR-style).  Event ids are assigned frequency-descending,
ties broken lexicographically by label, so top-k selections are prefix
operations and all outputs are deterministic regardless of input hashing.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Iterable, Iterator, Sequence, Union

import numpy as np

from .errors import ConfigError, IntegrityError, RecordError
from .ingest import ScenarioRecord


@dataclass(frozen=True, eq=False)
class EventCatalog:
    """Ordered event directory: dense ids 0..M-1, labels, frequencies.

    Ordering invariant: ids are frequency-descending, ties lexicographic by
    label.  ``marker`` flags synthetic bin events (rendered as crosses).
    """

    labels: tuple[str, ...]
    frequencies: np.ndarray
    marker: np.ndarray
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        freq = np.asarray(self.frequencies, dtype=np.int64)
        mark = np.asarray(self.marker, dtype=bool)
        object.__setattr__(self, "frequencies", freq)
        object.__setattr__(self, "marker", mark)
        if not (len(self.labels) == freq.shape[0] == mark.shape[0]):
            raise IntegrityError("catalog arrays disagree in length")
        if freq.size and freq.min() < 1:
            raise IntegrityError("every retained event must have frequency >= 1")
        index = {}
        for i, label in enumerate(self.labels):
            if label in index:
                raise IntegrityError(f"duplicate event label {label!r}")
            index[label] = i
        object.__setattr__(self, "_index", index)
        for i in range(len(self.labels) - 1):
            a, b = freq[i], freq[i + 1]
            if a < b or (a == b and self.labels[i] >= self.labels[i + 1]):
                raise IntegrityError(
                    "catalog order must be frequency-descending with lexicographic ties"
                )

    def __len__(self) -> int:
        return len(self.labels)

    def id_of(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise ConfigError(f"unknown event label {label!r}") from None

    def restrict(self, keep_ids: np.ndarray) -> "EventCatalog":
        """New catalog of the given ids; ids must be ascending (order-preserving)."""
        keep_ids = np.asarray(keep_ids, dtype=np.int64)
        return EventCatalog(
            tuple(self.labels[i] for i in keep_ids),
            self.frequencies[keep_ids],
            self.marker[keep_ids],
        )


@dataclass(frozen=True, eq=False)
class IncidenceMatrix:
    """Sparse binary N x M matrix: per-scenario sorted event id lists.

    Column sums always equal catalog frequencies; selections restrict columns
    without recomputing frequencies, so the equality survives every reduction.
    """

    catalog: EventCatalog
    indptr: np.ndarray
    indices: np.ndarray
    scenario_ids: tuple[str, ...]

    def __post_init__(self):
        indptr = np.asarray(self.indptr, dtype=np.int64)
        indices = np.asarray(self.indices, dtype=np.int64)
        object.__setattr__(self, "indptr", indptr)
        object.__setattr__(self, "indices", indices)
        nnz = indices.shape[0]
        if indptr.ndim != 1 or indptr[0] != 0 or indptr[-1] != nnz:
            raise IntegrityError("row pointer array is inconsistent")
        if np.any(np.diff(indptr) < 0):
            raise IntegrityError("row pointers must be nondecreasing")
        if len(self.scenario_ids) != indptr.shape[0] - 1:
            raise IntegrityError("scenario id count does not match row count")
        m = len(self.catalog)
        if nnz and (indices.min() < 0 or indices.max() >= m):
            raise IntegrityError("event id out of range")
        if nnz > 1:
            gaps = np.diff(indices)
            bounds = indptr[1:-1]
            bounds = bounds[(bounds > 0) & (bounds < nnz)]
            inside = np.ones(nnz - 1, dtype=bool)
            inside[bounds - 1] = False
            if not np.all(gaps[inside] > 0):
                raise IntegrityError("row entries must be strictly increasing")
        sums = np.bincount(indices, minlength=m)
        if not np.array_equal(sums, self.catalog.frequencies):
            raise IntegrityError("column sums do not match catalog frequencies")

    @property
    def n_scenarios(self) -> int:
        return len(self.scenario_ids)

    @property
    def n_events(self) -> int:
        return len(self.catalog)

    def row(self, i: int) -> np.ndarray:
        return self.indices[self.indptr[i] : self.indptr[i + 1]]

    def to_dense(self) -> np.ndarray:
        """Dense 0/1 array; intended for tests and small matrices only."""
        dense = np.zeros((self.n_scenarios, self.n_events), dtype=np.int8)
        rows = np.repeat(np.arange(self.n_scenarios), np.diff(self.indptr))
        dense[rows, self.indices] = 1
        return dense


def build_incidence(
    records: Iterable[ScenarioRecord],
    marker_labels: Iterable[str] = (),
) -> IncidenceMatrix:
    """Build X from a record stream in one pass.

    Event ids are interned on first appearance and remapped afterwards to
    frequency-descending order (ties lexicographic), which also makes the
    result independent of set iteration order.  ``marker_labels`` may be a
    live collection still being filled by an upstream stage; it is read only
    after the stream is exhausted.
    """
    intern: dict[str, int] = {}
    labels: list[str] = []
    counts: list[int] = []
    flat: list[int] = []
    indptr: list[int] = [0]
    scenario_ids: list[str] = []

    for rec in records:
        scenario_ids.append(rec.scenario_id)
        for label in rec.events:
            pid = intern.get(label)
            if pid is None:
                pid = intern[label] = len(labels)
                labels.append(label)
                counts.append(0)
            counts[pid] += 1
            flat.append(pid)
        indptr.append(len(flat))

    if not scenario_ids:
        raise ConfigError("no scenarios")

    order = sorted(range(len(labels)), key=lambda t: (-counts[t], labels[t]))
    rank = np.empty(len(labels), dtype=np.int64)
    rank[order] = np.arange(len(labels))

    indptr_arr = np.asarray(indptr, dtype=np.int64)
    mapped = rank[np.asarray(flat, dtype=np.int64)] if flat else np.empty(0, np.int64)
    rows = np.repeat(np.arange(len(scenario_ids)), np.diff(indptr_arr))
    mapped = mapped[np.lexsort((mapped, rows))]

    marker_set = set(marker_labels)
    catalog = EventCatalog(
        tuple(labels[t] for t in order),
        np.asarray([counts[t] for t in order], dtype=np.int64),
        np.asarray([labels[t] in marker_set for t in order], dtype=bool),
    )
    return IncidenceMatrix(catalog, indptr_arr, mapped, tuple(scenario_ids))


def _restrict(inc: IncidenceMatrix, keep_ids: np.ndarray) -> IncidenceMatrix:
    """Drop all columns not in keep_ids (ascending); N and row order unchanged."""
    m = inc.n_events
    lookup = np.full(m, -1, dtype=np.int64)
    lookup[keep_ids] = np.arange(len(keep_ids))
    mapped = lookup[inc.indices]
    sel = mapped >= 0
    rows = np.repeat(np.arange(inc.n_scenarios), np.diff(inc.indptr))
    per_row = np.bincount(rows[sel], minlength=inc.n_scenarios)
    indptr = np.concatenate(([0], np.cumsum(per_row)))
    return IncidenceMatrix(
        inc.catalog.restrict(keep_ids), indptr, mapped[sel], inc.scenario_ids
    )


def select_events(
    inc: IncidenceMatrix,
    *,
    min_count: int | None = None,
    top_k: int | None = None,
    coverage: float | None = None,
) -> IncidenceMatrix:
    """Keep a subset of events; N is never changed, frequencies never recomputed.

    Exactly one mode must be given.  min_count keeps events with frequency >=
    the bound; top_k keeps the k most frequent (ties lexicographic, already
    encoded in id order); coverage keeps the smallest frequency-descending
    prefix whose cumulative frequency is >= coverage * total frequency.
    """
    modes = [m for m in (min_count, top_k, coverage) if m is not None]
    if len(modes) != 1:
        raise ConfigError("exactly one of min_count, top_k, coverage must be given")
    freq = inc.catalog.frequencies
    m = inc.n_events

    if min_count is not None:
        if min_count < 0:
            raise ConfigError(f"min_count must be >= 0, got {min_count}")
        keep = np.flatnonzero(freq >= min_count)
    elif top_k is not None:
        if top_k < 0:
            raise ConfigError(f"top_k must be >= 0, got {top_k}")
        if top_k > m:
            warnings.warn(f"top_k={top_k} exceeds event count {m}; keeping all events")
        keep = np.arange(min(top_k, m))
    else:
        if not (0.0 < coverage <= 1.0):
            raise ConfigError(f"coverage must be in (0, 1], got {coverage}")
        if m == 0:
            keep = np.arange(0)
        else:
            cum = np.cumsum(freq)
            target = coverage * cum[-1]
            keep = np.arange(np.searchsorted(cum, target, side="left") + 1)

    return _restrict(inc, keep)


def select_events_grouped(
    inc: IncidenceMatrix,
    group_labels: Sequence[str],
    coverage: float,
) -> IncidenceMatrix:
    """Per-group coverage selection, then union plus the group events themselves.

    For each group event g: restrict to scenarios containing g, rank the other
    (non-group) events by within-group frequency (ties lexicographic), and keep
    the smallest prefix covering ``coverage`` of the within-group occurrence
    mass.  The kept set is the union over groups plus every group event.
    Shared events are counted once.  Global frequencies are preserved.
    """
    if not (0.0 < coverage <= 1.0):
        raise ConfigError(f"coverage must be in (0, 1], got {coverage}")
    if not group_labels:
        raise ConfigError("grouped selection needs at least one group event")
    group_ids = np.asarray([inc.catalog.id_of(g) for g in group_labels], dtype=np.int64)

    m = inc.n_events
    labels = inc.catalog.labels
    rows = np.repeat(np.arange(inc.n_scenarios), np.diff(inc.indptr))
    in_group_mask = np.zeros(m, dtype=bool)
    in_group_mask[group_ids] = True

    selected: set[int] = set()
    for gid in group_ids:
        member = np.zeros(inc.n_scenarios, dtype=bool)
        member[rows[inc.indices == gid]] = True
        counts = np.bincount(inc.indices[member[rows]], minlength=m)
        counts[in_group_mask] = 0
        candidates = np.flatnonzero(counts)
        if candidates.size == 0:
            continue
        ranked = sorted(candidates, key=lambda ev: (-counts[ev], labels[ev]))
        total = counts[candidates].sum()
        target = coverage * total
        acc = 0
        for ev in ranked:
            selected.add(int(ev))
            acc += counts[ev]
            if acc >= target:
                break

    keep = np.asarray(sorted(selected | set(int(g) for g in group_ids)), dtype=np.int64)
    return _restrict(inc, keep)


@dataclass
class DecadeBinning:
    """Maps a numeric year attribute to a decade label like "1960s".

    ``labels`` collects every bin label produced so far (feed it to
    build_incidence as marker_labels); ``skipped`` counts scenarios whose
    attribute was missing or unparseable.
    """

    attribute: str = "year"
    labels: set[str] = field(default_factory=set)
    skipped: int = 0

    def bin_label(self, value: str | None) -> str | None:
        if value is None:
            return None
        try:
            year = float(value)
        except ValueError:
            return None
        return f"{int(math.floor(year / 10.0)) * 10}s"


def add_bin_events(
    records: Iterable[ScenarioRecord], binning: DecadeBinning
) -> Iterator[ScenarioRecord]:
    """Add one synthetic bin event per scenario whose attribute parses."""
    for rec in records:
        label = binning.bin_label(rec.attributes.get(binning.attribute))
        if label is None:
            binning.skipped += 1
            yield rec
        else:
            binning.labels.add(label)
            yield ScenarioRecord(rec.scenario_id, rec.events | {label}, rec.attributes)


def write_incidence(
    inc: IncidenceMatrix,
    catalog_target: Union[str, Path, IO[str]],
    rows_target: Union[str, Path, IO[str]],
) -> None:
    """Two-file text interchange.

    Catalog: one event per line, ``id<TAB>label<TAB>frequency<TAB>marker``
    (marker as 0/1), ascending id.  Rows: one scenario per line,
    ``scenario_id<TAB>space-separated ascending event ids``.
    """

    def check(value: str, what: str):
        if "\t" in value or "\n" in value or "\r" in value:
            raise ConfigError(f"{what} {value!r} contains a tab or newline")

    own_cat = isinstance(catalog_target, (str, Path))
    fh = open(catalog_target, "w", encoding="utf-8", newline="") if own_cat else catalog_target
    try:
        cat = inc.catalog
        for i, label in enumerate(cat.labels):
            check(label, "event label")
            fh.write(f"{i}\t{label}\t{cat.frequencies[i]}\t{int(cat.marker[i])}\n")
    finally:
        if own_cat:
            fh.close()

    own_rows = isinstance(rows_target, (str, Path))
    fh = open(rows_target, "w", encoding="utf-8", newline="") if own_rows else rows_target
    try:
        for i, sid in enumerate(inc.scenario_ids):
            check(sid, "scenario id")
            ids = " ".join(str(v) for v in inc.row(i))
            fh.write(f"{sid}\t{ids}\n")
    finally:
        if own_rows:
            fh.close()


def read_incidence(
    catalog_source: Union[str, Path, IO[str]],
    rows_source: Union[str, Path, IO[str]],
) -> IncidenceMatrix:
    """Inverse of write_incidence; validates all structural invariants."""
    from .ingest import _text_lines  # same line normalization as the parsers

    labels: list[str] = []
    freqs: list[int] = []
    marks: list[bool] = []
    for lineno, line in enumerate(_text_lines(catalog_source), start=1):
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != 4:
            raise RecordError("catalog line needs 4 tab-separated fields", line=lineno, text=line)
        try:
            eid = int(parts[0])
            freq = int(parts[2])
            mark = int(parts[3])
        except ValueError:
            raise RecordError("non-integer catalog field", line=lineno, text=line) from None
        if eid != len(labels):
            raise RecordError(f"expected event id {len(labels)}, got {eid}", line=lineno)
        if mark not in (0, 1):
            raise RecordError("marker flag must be 0 or 1", line=lineno, text=line)
        labels.append(parts[1])
        freqs.append(freq)
        marks.append(bool(mark))
    catalog = EventCatalog(tuple(labels), np.asarray(freqs, np.int64), np.asarray(marks, bool))

    scenario_ids: list[str] = []
    flat: list[int] = []
    indptr: list[int] = [0]
    for lineno, line in enumerate(_text_lines(rows_source), start=1):
        if not line:
            continue
        sid, _, rest = line.partition("\t")
        if not sid:
            raise RecordError("empty scenario id", line=lineno, text=line)
        scenario_ids.append(sid)
        if rest.strip():
            try:
                flat.extend(int(tok) for tok in rest.split())
            except ValueError:
                raise RecordError("non-integer event id", line=lineno, text=line) from None
        indptr.append(len(flat))

    return IncidenceMatrix(
        catalog,
        np.asarray(indptr, np.int64),
        np.asarray(flat, np.int64) if flat else np.empty(0, np.int64),
        tuple(scenario_ids),
    )
