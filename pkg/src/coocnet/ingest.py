"""Record ingestion and scenario filtering.

Two source formats produce the same uniform stream of :class:`ScenarioRecord`:

* delimited text with a header row (one scenario per row, multi-valued
  event cells), and
* a line-oriented N-Triples subset (IRIs and plain or escaped string
  literals; no blank nodes, language tags, or datatypes).

Both parsers are streaming: they never require the whole input in memory,
except the buffered triple-grouping mode which accumulates per subject.
"""

from __future__ import annotations

import io
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Iterable, Iterator, Union

from .errors import ConfigError, RecordError

Source = Union[str, Path, IO[str], IO[bytes], Iterable[str]]

ROLE_EVENT = "event-source"
ROLE_ATTRIBUTE = "attribute"
ROLE_SCENARIO_KEY = "scenario-key"
_ROLES = frozenset({ROLE_EVENT, ROLE_ATTRIBUTE, ROLE_SCENARIO_KEY})


@dataclass(frozen=True)
class ScenarioRecord:
    """One scenario (e.g. a book) with its event labels and attributes."""

    scenario_id: str
    events: frozenset[str]
    attributes: dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        if not self.scenario_id:
            raise RecordError("empty scenario id")
        if any(not e for e in self.events):
            raise RecordError(f"empty event label in scenario {self.scenario_id!r}")


@dataclass(frozen=True)
class IngestConfig:
    """Parsing options for both source formats.

    ``event_columns``/``attribute_columns`` apply to delimited input, where
    the first header column always holds the scenario id.  ``predicate_map``
    applies to triple input and maps full predicate IRIs to one of the roles
    ``event-source``, ``attribute`` or ``scenario-key``.  When
    ``iri_label_suffix`` is set, object IRIs are shortened to the fragment
    after the last ``/`` or ``#``; subject IRIs are always kept verbatim.
    """

    field_delimiter: str = ";"
    multi_value_separator: str = "|"
    event_columns: tuple[str, ...] = ()
    attribute_columns: tuple[str, ...] = ()
    predicate_map: dict[str, str] = field(default_factory=dict)
    iri_label_suffix: bool = False
    grouping: str = "buffered"  # "buffered" | "contiguous"

    def __post_init__(self):
        if len(self.field_delimiter) != 1 or len(self.multi_value_separator) != 1:
            raise ConfigError("delimiter and multi-value separator must be single characters")
        if self.field_delimiter == self.multi_value_separator:
            raise ConfigError("field delimiter must differ from multi-value separator")
        if self.grouping not in ("buffered", "contiguous"):
            raise ConfigError(f"unknown grouping mode {self.grouping!r}")
        for pred, role in self.predicate_map.items():
            if role not in _ROLES:
                raise ConfigError(f"unknown role {role!r} for predicate {pred!r}")

    def validate_delimited(self):
        if not self.event_columns:
            raise ConfigError("delimited mode requires at least one event column")

    def validate_triples(self):
        if ROLE_EVENT not in self.predicate_map.values():
            raise ConfigError("triples mode requires at least one event-source predicate")


@dataclass
class TripleParseStats:
    """Counters filled while parsing triples."""

    lines: int = 0
    triples: int = 0
    skipped_predicates: Counter = field(default_factory=Counter)

    @property
    def skipped_total(self) -> int:
        return sum(self.skipped_predicates.values())


def _text_lines(source: Source) -> Iterator[str]:
    if isinstance(source, (str, Path)):
        with open(source, "r", encoding="utf-8", newline="") as fh:
            yield from (line.rstrip("\r\n") for line in fh)
        return
    if isinstance(source, io.TextIOBase):
        yield from (line.rstrip("\r\n") for line in source)
        return
    if hasattr(source, "read"):  # binary file object
        text = io.TextIOWrapper(source, encoding="utf-8", newline="")
        yield from (line.rstrip("\r\n") for line in text)
        text.detach()
        return
    yield from (line.rstrip("\r\n") for line in source)


def parse_delimited(source: Source, config: IngestConfig) -> Iterator[ScenarioRecord]:
    """Parse header-row delimited text into scenario records, in input order.

    The first column is the scenario id.  Event cells are split on the
    multi-value separator, trimmed and deduplicated.  Attribute cells are
    stored verbatim (trimmed); empty cells leave the attribute absent.
    """
    config.validate_delimited()
    lines = _text_lines(source)
    try:
        header_line = next(lines)
    except StopIteration:
        raise RecordError("empty input: missing header row") from None
    header = [h.strip() for h in header_line.split(config.field_delimiter)]
    position = {name: idx for idx, name in enumerate(header)}
    for name in (*config.event_columns, *config.attribute_columns):
        if name not in position:
            raise ConfigError(f"column {name!r} not found in header {header!r}")

    seen: set[str] = set()
    sep = config.multi_value_separator
    for lineno, line in enumerate(lines, start=2):
        if not line.strip():
            continue
        fields = line.split(config.field_delimiter)
        if len(fields) != len(header):
            raise RecordError(
                f"expected {len(header)} fields, got {len(fields)}", line=lineno, text=line
            )
        sid = fields[0].strip()
        if not sid:
            raise RecordError("empty scenario id", line=lineno, text=line)
        if sid in seen:
            raise RecordError(f"duplicate scenario id {sid!r}", line=lineno)
        seen.add(sid)
        events = set()
        for name in config.event_columns:
            cell = fields[position[name]]
            events.update(tok for tok in (t.strip() for t in cell.split(sep)) if tok)
        attributes = {}
        for name in config.attribute_columns:
            cell = fields[position[name]].strip()
            if cell:
                attributes[name] = cell
        yield ScenarioRecord(sid, frozenset(events), attributes)


def write_delimited(
    records: Iterable[ScenarioRecord],
    target: Union[str, Path, IO[str]],
    attribute_columns: tuple[str, ...] = (),
    config: IngestConfig | None = None,
) -> None:
    """Serialize records to the canonical delimited form.

    Header is ``id<D>events<D>attr...`` with all events joined (sorted) in a
    single column, so re-parsing with ``event_columns=("events",)`` restores
    the records exactly.  Values containing the delimiter, the separator or a
    newline are not representable and raise :class:`ConfigError`.
    """
    cfg = config or IngestConfig()
    delim, sep = cfg.field_delimiter, cfg.multi_value_separator
    own = isinstance(target, (str, Path))
    fh = open(target, "w", encoding="utf-8", newline="") if own else target
    try:
        fh.write(delim.join(["id", "events", *attribute_columns]) + "\n")
        forbidden = (delim, sep, "\n", "\r")
        for rec in records:
            values = [rec.scenario_id, sep.join(sorted(rec.events))]
            for name in attribute_columns:
                values.append(rec.attributes.get(name, ""))
            for v in (rec.scenario_id, *sorted(rec.events), *values[2:]):
                if any(ch in v for ch in forbidden):
                    raise ConfigError(f"value {v!r} is not representable in delimited form")
            fh.write(delim.join(values) + "\n")
    finally:
        if own:
            fh.close()


_ESCAPES = {'"': '"', "\\": "\\", "n": "\n", "t": "\t"}


def _parse_iri(line: str, pos: int, lineno: int) -> tuple[str, int]:
    if pos >= len(line) or line[pos] != "<":
        raise RecordError(f"expected '<' at column {pos + 1}", line=lineno, text=line)
    end = line.find(">", pos + 1)
    if end < 0:
        raise RecordError("unterminated IRI", line=lineno, text=line)
    iri = line[pos + 1 : end]
    if not iri:
        raise RecordError("empty IRI", line=lineno, text=line)
    return iri, end + 1


def _parse_literal(line: str, pos: int, lineno: int) -> tuple[str, int]:
    out = []
    i = pos + 1
    while i < len(line):
        ch = line[i]
        if ch == "\\":
            if i + 1 >= len(line) or line[i + 1] not in _ESCAPES:
                raise RecordError(f"bad escape at column {i + 1}", line=lineno, text=line)
            out.append(_ESCAPES[line[i + 1]])
            i += 2
        elif ch == '"':
            return "".join(out), i + 1
        else:
            out.append(ch)
            i += 1
    raise RecordError("unterminated string literal", line=lineno, text=line)


def _skip_ws(line: str, pos: int, lineno: int, require: bool = True) -> int:
    start = pos
    while pos < len(line) and line[pos] in " \t":
        pos += 1
    if require and pos == start:
        raise RecordError(f"expected whitespace at column {pos + 1}", line=lineno, text=line)
    return pos


def _parse_triple(line: str, lineno: int) -> tuple[str, str, bool, str]:
    """Return (subject, predicate, object_is_iri, object_value)."""
    pos = _skip_ws(line, 0, lineno, require=False)
    subject, pos = _parse_iri(line, pos, lineno)
    pos = _skip_ws(line, pos, lineno)
    predicate, pos = _parse_iri(line, pos, lineno)
    pos = _skip_ws(line, pos, lineno)
    if pos >= len(line):
        raise RecordError("missing object", line=lineno, text=line)
    if line[pos] == "<":
        obj, pos = _parse_iri(line, pos, lineno)
        is_iri = True
    elif line[pos] == '"':
        obj, pos = _parse_literal(line, pos, lineno)
        is_iri = False
        if pos < len(line) and line[pos] in "@^":
            raise RecordError(
                "language tags and datatypes are not supported", line=lineno, text=line
            )
    else:
        raise RecordError(f"bad object at column {pos + 1}", line=lineno, text=line)
    pos = _skip_ws(line, pos, lineno, require=False)
    if pos >= len(line) or line[pos] != ".":
        raise RecordError("missing terminal '.'", line=lineno, text=line)
    if line[pos + 1 :].strip():
        raise RecordError("trailing content after '.'", line=lineno, text=line)
    return subject, predicate, is_iri, obj


def _iri_suffix(iri: str) -> str:
    for mark in ("#", "/"):
        if mark in iri:
            return iri.rsplit(mark, 1)[1]
    return iri


class _PendingScenario:
    __slots__ = ("events", "attributes", "key_override")

    def __init__(self):
        self.events: set[str] = set()
        self.attributes: dict[str, set[str]] = {}
        self.key_override: str | None = None


def parse_ntriples(
    source: Source,
    config: IngestConfig,
    stats: TripleParseStats | None = None,
) -> Iterator[ScenarioRecord]:
    """Parse the N-Triples subset and group triples by subject IRI.

    Lines whose predicate is not in ``predicate_map`` are skipped and counted
    in ``stats``.  In ``buffered`` grouping (the default) subjects may appear
    anywhere in the input and records are emitted in first-appearance order;
    ``contiguous`` grouping emits each subject as soon as the next one starts
    and rejects inputs where a subject reappears later.

    Multi-valued attributes are joined with the multi-value separator after
    sorting, so the resulting records do not depend on line order.
    """
    config.validate_triples()
    if stats is None:
        stats = TripleParseStats()
    sep = config.multi_value_separator

    def shorten(iri: str) -> str:
        return _iri_suffix(iri) if config.iri_label_suffix else iri

    def finish(subject: str, pending: _PendingScenario, lineno: int) -> ScenarioRecord:
        sid = pending.key_override if pending.key_override is not None else subject
        if not sid:
            raise RecordError(f"empty scenario id for subject {subject!r}", line=lineno)
        attributes = {k: sep.join(sorted(vs)) for k, vs in pending.attributes.items()}
        return ScenarioRecord(sid, frozenset(pending.events), attributes)

    def apply(pending: _PendingScenario, role: str, label: str, pred: str, lineno: int, line: str):
        if role == ROLE_EVENT:
            if not label:
                raise RecordError("empty event label", line=lineno, text=line)
            pending.events.add(label)
        elif role == ROLE_ATTRIBUTE:
            key = shorten(pred)
            pending.attributes.setdefault(key, set()).add(label)
        else:  # scenario-key
            if pending.key_override is not None and pending.key_override != label:
                raise RecordError(
                    f"conflicting scenario keys {pending.key_override!r} and {label!r}",
                    line=lineno,
                    text=line,
                )
            pending.key_override = label

    contiguous = config.grouping == "contiguous"
    buffered: dict[str, _PendingScenario] = {}
    current_subject: str | None = None
    current: _PendingScenario | None = None
    emitted: set[str] = set()
    lineno = 0

    for lineno, line in enumerate(_text_lines(source), start=1):
        stats.lines += 1
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        subject, predicate, is_iri, obj = _parse_triple(line, lineno)
        stats.triples += 1
        role = config.predicate_map.get(predicate)
        if role is None:
            stats.skipped_predicates[predicate] += 1
            continue
        label = shorten(obj) if is_iri else obj

        if contiguous:
            if subject != current_subject:
                if current is not None:
                    yield finish(current_subject, current, lineno)
                    emitted.add(current_subject)
                if subject in emitted:
                    raise RecordError(
                        f"subject {subject!r} reappears non-contiguously", line=lineno, text=line
                    )
                current_subject, current = subject, _PendingScenario()
            apply(current, role, label, predicate, lineno, line)
        else:
            pending = buffered.get(subject)
            if pending is None:
                pending = buffered[subject] = _PendingScenario()
            apply(pending, role, label, predicate, lineno, line)

    if contiguous:
        if current is not None:
            yield finish(current_subject, current, lineno)
    else:
        for subject, pending in buffered.items():
            yield finish(subject, pending, lineno)


class FilterPredicate:
    """Base class only for isinstance checks; predicates are small dataclasses."""

    def describe(self) -> str:
        raise NotImplementedError

    def evaluate(self, record: ScenarioRecord) -> bool | None:
        """True/False to pass/drop, None when a numeric comparison cannot parse."""
        raise NotImplementedError


@dataclass(frozen=True)
class NonEmptyEvents(FilterPredicate):
    def describe(self) -> str:
        return "nonempty-events"

    def evaluate(self, record: ScenarioRecord) -> bool | None:
        return bool(record.events)


@dataclass(frozen=True)
class AttributePresent(FilterPredicate):
    attribute: str

    def describe(self) -> str:
        return f"{self.attribute} present"

    def evaluate(self, record: ScenarioRecord) -> bool | None:
        return self.attribute in record.attributes


_OP_ALIASES = {"=": "=", "==": "=", "!=": "!=", "≠": "!=", "<": "<", ">=": ">=", "≥": ">="}


def _as_number(value) -> float | None:
    if isinstance(value, bool):
        return None
    if isinstance(value, (int, float)):
        return float(value)
    try:
        return float(str(value).strip())
    except ValueError:
        return None


@dataclass(frozen=True)
class AttributeCompare(FilterPredicate):
    """Compare an attribute against a value.

    When the configured value parses as a number the attribute is parsed
    numerically too; records whose attribute is missing or unparseable are
    dropped into the distinct "unparseable" tally.  A non-numeric value turns
    ``=``/``!=`` into plain string comparison; ordering operators require a
    numeric value.
    """

    attribute: str
    op: str
    value: object

    def __post_init__(self):
        norm = _OP_ALIASES.get(self.op)
        if norm is None:
            raise ConfigError(f"unknown comparison operator {self.op!r}")
        object.__setattr__(self, "op", norm)
        if _as_number(self.value) is None and norm in ("<", ">="):
            raise ConfigError(
                f"operator {norm!r} needs a numeric value, got {self.value!r}"
            )

    def describe(self) -> str:
        return f"{self.attribute} {self.op} {self.value}"

    def evaluate(self, record: ScenarioRecord) -> bool | None:
        bound = _as_number(self.value)
        raw = record.attributes.get(self.attribute)
        if bound is None:
            text = str(self.value)
            if self.op == "=":
                return raw == text
            return raw != text
        got = _as_number(raw) if raw is not None else None
        if got is None:
            return None
        if self.op == "=":
            return got == bound
        if self.op == "!=":
            return got != bound
        if self.op == "<":
            return got < bound
        return got >= bound


@dataclass
class FilterStats:
    """Drop accounting for one :func:`filter_scenarios` pass.

    ``input_count == passed + unparseable + sum(dropped.values())`` always
    holds; each dropped record is attributed to the first failing predicate.
    """

    input_count: int = 0
    passed: int = 0
    unparseable: int = 0
    dropped: dict[str, int] = field(default_factory=dict)

    def total_dropped(self) -> int:
        return self.unparseable + sum(self.dropped.values())


def filter_scenarios(
    records: Iterable[ScenarioRecord],
    predicates: Iterable[FilterPredicate],
    stats: FilterStats | None = None,
) -> Iterator[ScenarioRecord]:
    """Yield records satisfying all predicates, preserving order."""
    predicates = list(predicates)
    if stats is None:
        stats = FilterStats()
    for p in predicates:
        stats.dropped.setdefault(p.describe(), 0)
    for record in records:
        stats.input_count += 1
        verdict = True
        for p in predicates:
            result = p.evaluate(record)
            if result is None:
                stats.unparseable += 1
                verdict = False
                break
            if not result:
                stats.dropped[p.describe()] += 1
                verdict = False
                break
        if verdict:
            stats.passed += 1
            yield record
