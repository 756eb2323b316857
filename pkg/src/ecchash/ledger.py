"""Append-only file persistence for hash points.

One entry per line, `record_id,curve_name,point_hex`, UTF-8, LF-terminated,
lowercase canonical point encoding.  Lines are only ever appended; existing
bytes are never rewritten.  Every load re-validates stored points (decode,
curve membership, canonical form) because a corrupted point would silently
poison every later aggregate.

Single writer per ledger file; any number of concurrent readers of a
quiescent file.
"""

import os
from dataclasses import dataclass

from .errors import (
    DuplicateEntryError,
    EmptyAggregateError,
    IncompatibleCurvesError,
    LedgerIntegrityError,
    LedgerParseError,
    PointDecodeError,
)
from .curve import get_curve
from .homhash import aggregate, decode_point, encode_point


@dataclass(frozen=True)
class LedgerEntry:
    """One persisted hash: (record id, curve name, canonical point hex)."""

    record_id: str
    curve_name: str
    point_hex: str

    def __post_init__(self):
        if not self.record_id:
            raise ValueError("record_id must be non-empty")
        if "," in self.record_id or "\n" in self.record_id or "\r" in self.record_id:
            raise ValueError(f"record_id may not contain commas or newlines: {self.record_id!r}")

    def hash_point(self):
        """Decode the stored point, validating it lies on the tagged curve."""
        return decode_point(self.point_hex, get_curve(self.curve_name))

    def line(self):
        return f"{self.record_id},{self.curve_name},{self.point_hex}\n"


def entry_for(record_id, h):
    """Build a ledger entry from a hash point."""
    return LedgerEntry(record_id=record_id, curve_name=h.curve, point_hex=encode_point(h))


def _existing_ids(path):
    ids = set()
    if not os.path.exists(path):
        return ids
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            ids.add(line.split(",", 1)[0])
    return ids


def ledger_append(path, entry):
    """Append one validated entry; creates the file if absent.

    Raises DuplicateEntryError when the record id is already present.
    Existing content is never touched.
    """
    entry.hash_point()  # refuse to persist an undecodable point
    if entry.record_id in _existing_ids(path):
        raise DuplicateEntryError(f"record id already in ledger: {entry.record_id!r}")
    with open(path, "a", encoding="utf-8", newline="") as fh:
        fh.write(entry.line())


def ledger_append_all(path, entries):
    """Append a batch of entries, checking id uniqueness across the batch
    and the existing file before writing anything."""
    entries = list(entries)
    seen = _existing_ids(path)
    for entry in entries:
        entry.hash_point()
        if entry.record_id in seen:
            raise DuplicateEntryError(f"record id already in ledger: {entry.record_id!r}")
        seen.add(entry.record_id)
    with open(path, "a", encoding="utf-8", newline="") as fh:
        for entry in entries:
            fh.write(entry.line())


def ledger_load(path):
    """Read and validate all entries, in file order.

    Raises LedgerParseError (naming the 1-based line number) for structural
    problems and LedgerIntegrityError for stored points that fail
    validation or are not in canonical form.
    """
    entries = []
    seen = set()
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line:
                continue
            fields = line.split(",")
            if len(fields) != 3:
                raise LedgerParseError(f"line {lineno}: expected 3 comma-separated fields")
            record_id, curve_name, point_hex = fields
            if not record_id:
                raise LedgerParseError(f"line {lineno}: empty record id")
            if record_id in seen:
                raise LedgerParseError(f"line {lineno}: duplicate record id {record_id!r}")
            seen.add(record_id)
            try:
                params = get_curve(curve_name)
            except Exception:
                raise LedgerParseError(f"line {lineno}: unknown curve {curve_name!r}") from None
            try:
                h = decode_point(point_hex, params)
            except PointDecodeError as exc:
                raise LedgerIntegrityError(f"line {lineno}: {exc}") from None
            if encode_point(h) != point_hex:
                raise LedgerIntegrityError(f"line {lineno}: point encoding is not canonical")
            entries.append(LedgerEntry(record_id, params.name, point_hex))
    return entries


def ledger_aggregate(path, curve=None):
    """Aggregate all stored hash points, optionally filtered to one curve.

    A mixed-curve file requires an explicit curve filter.
    """
    entries = ledger_load(path)
    if curve is not None:
        name = get_curve(curve).name
        entries = [e for e in entries if e.curve_name == name]
    if not entries:
        raise EmptyAggregateError(f"no ledger entries{' for ' + str(curve) if curve else ''} in {path}")
    names = {e.curve_name for e in entries}
    if len(names) > 1:
        raise IncompatibleCurvesError(
            f"ledger holds multiple curves ({', '.join(sorted(names))}); pass a curve filter"
        )
    return aggregate(e.hash_point() for e in entries)
