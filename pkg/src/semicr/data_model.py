"""Observed-data schema, CSV ingestion with row-level validation, and the
descriptive cross-tabulation of progression status against vital status."""

import csv
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .errors import RowValidationError, SchemaError, UnsupportedModeError

CONTINUOUS = "continuous"
BINARY = "binary"


class Mode(Enum):
    ONE_TERMINAL = "one-terminal"
    TWO_TERMINAL = "two-terminal"


@dataclass(frozen=True)
class CovariateSchema:
    """Ordered covariate names and kinds; the intercept is implicit."""

    names: tuple
    kinds: tuple

    def __post_init__(self):
        if len(self.names) == 0:
            raise SchemaError("schema needs at least one covariate")
        if len(self.names) != len(set(self.names)):
            raise SchemaError(f"duplicate covariate names in {self.names}")
        if len(self.kinds) != len(self.names):
            raise SchemaError("names and kinds must have equal length")
        bad = [k for k in self.kinds if k not in (CONTINUOUS, BINARY)]
        if bad:
            raise SchemaError(f"unknown covariate kind(s) {bad}")

    @classmethod
    def from_pairs(cls, pairs):
        names, kinds = zip(*pairs)
        return cls(tuple(names), tuple(kinds))

    @property
    def continuous_names(self):
        return tuple(n for n, k in zip(self.names, self.kinds) if k == CONTINUOUS)

    @property
    def binary_names(self):
        return tuple(n for n, k in zip(self.names, self.kinds) if k == BINARY)

    def continuous_mask(self):
        return np.array([k == CONTINUOUS for k in self.kinds])


@dataclass(frozen=True)
class ObservedRecord:
    """One subject: event times in years, event indicators, treatment, and
    the covariate vector in schema order (original positive scale)."""

    t1: float
    t2: float
    delta: int
    xi1: int
    xi2: int
    z: int
    x: tuple

    def validate(self, schema, mode, row_index):
        def fail(msg):
            raise RowValidationError(row_index, msg)

        for name, value in (("t1", self.t1), ("t2", self.t2)):
            if not np.isfinite(value) or value <= 0:
                fail(f"{name} must be a positive time, got {value}")
        for name, value in (
            ("delta", self.delta),
            ("xi1", self.xi1),
            ("xi2", self.xi2),
            ("z", self.z),
        ):
            if value not in (0, 1):
                fail(f"{name} must be 0 or 1, got {value}")
        if self.t1 > self.t2:
            fail(f"t1 = {self.t1} exceeds t2 = {self.t2}")
        if self.delta == 1 and self.t1 >= self.t2:
            fail("delta = 1 requires progression strictly before t2")
        if self.delta == 0 and self.t1 != self.t2:
            fail("delta = 0 requires t1 = t2")
        if self.xi1 + self.xi2 > 1:
            fail("at most one cause of death can be observed")
        if mode is Mode.ONE_TERMINAL and self.xi2 != 0:
            fail("xi2 must be 0 in one-terminal mode")
        if len(self.x) != len(schema.names):
            fail(f"expected {len(schema.names)} covariates, got {len(self.x)}")
        for name, kind, value in zip(schema.names, schema.kinds, self.x):
            if not np.isfinite(value):
                fail(f"covariate {name} is missing or non-finite")
            if kind == CONTINUOUS and value <= 0:
                fail(f"continuous covariate {name} must be positive, got {value}")
            if kind == BINARY and value not in (0.0, 1.0):
                fail(f"binary covariate {name} must be 0 or 1, got {value}")


@dataclass(frozen=True)
class Dataset:
    schema: CovariateSchema
    records: tuple
    mode: Mode

    def __post_init__(self):
        for i, rec in enumerate(self.records):
            rec.validate(self.schema, self.mode, i)

    def __len__(self):
        return len(self.records)

    def column(self, name):
        return np.array([getattr(r, name) for r in self.records], dtype=float)

    def covariates(self):
        """(n, p) matrix of covariate values in schema order."""
        if not self.records:
            return np.zeros((0, len(self.schema.names)))
        return np.array([r.x for r in self.records], dtype=float)


def _required_columns(schema, mode, header):
    cols = ["t1", "t2", "delta"]
    if mode is Mode.TWO_TERMINAL:
        cols += ["xi1", "xi2"]
    else:
        # one-terminal files may carry `xi` or the two-column layout
        cols += ["xi"] if "xi" in header else ["xi1"]
    cols.append("z")
    return cols + list(schema.names)


def _parse_number(raw, column, row_index):
    raw = raw.strip()
    if raw == "":
        raise RowValidationError(row_index, f"missing value in column {column}")
    try:
        return float(raw)
    except ValueError:
        raise RowValidationError(row_index, f"cannot parse {raw!r} in column {column}")


def _parse_indicator(raw, column, row_index):
    value = _parse_number(raw, column, row_index)
    if value not in (0.0, 1.0):
        raise RowValidationError(row_index, f"{column} must be 0 or 1, got {raw}")
    return int(value)


def ingest_dataset(path, schema, mode):
    """Read and validate a CSV of observed records.

    Raises :class:`SchemaError` for header problems and
    :class:`RowValidationError` (with the zero-based data row index) for bad
    rows.
    """
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise SchemaError(f"{path}: empty file, expected a header row")
        header = [h.strip() for h in header]
        required = _required_columns(schema, mode, header)
        missing = [c for c in required if c not in header]
        if missing:
            raise SchemaError(f"{path}: missing column(s) {missing}")
        extra = [c for c in header if c not in required and c != "xi2"]
        if extra:
            raise SchemaError(f"{path}: unexpected column(s) {extra}")
        pos = {c: header.index(c) for c in header}
        xi1_col = "xi" if "xi" in pos else "xi1"

        records = []
        for i, row in enumerate(reader):
            if len(row) != len(header):
                raise RowValidationError(i, f"expected {len(header)} fields, got {len(row)}")
            xi2 = _parse_indicator(row[pos["xi2"]], "xi2", i) if "xi2" in pos else 0
            rec = ObservedRecord(
                t1=_parse_number(row[pos["t1"]], "t1", i),
                t2=_parse_number(row[pos["t2"]], "t2", i),
                delta=_parse_indicator(row[pos["delta"]], "delta", i),
                xi1=_parse_indicator(row[pos[xi1_col]], xi1_col, i),
                xi2=xi2,
                z=_parse_indicator(row[pos["z"]], "z", i),
                x=tuple(_parse_number(row[pos[c]], c, i) for c in schema.names),
            )
            rec.validate(schema, mode, i)
            records.append(rec)
    return Dataset(schema=schema, records=tuple(records), mode=mode)


def emit_dataset(ds, path):
    """Write a dataset back to CSV in the canonical column order."""
    one = ds.mode is Mode.ONE_TERMINAL
    header = ["t1", "t2", "delta"] + (["xi"] if one else ["xi1", "xi2"]) + ["z"]
    header += list(ds.schema.names)
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for r in ds.records:
            row = [repr(r.t1), repr(r.t2), r.delta]
            row += [r.xi1] if one else [r.xi1, r.xi2]
            row.append(r.z)
            row += [repr(v) for v in r.x]
            writer.writerow(row)


@dataclass(frozen=True)
class CrossTab:
    """2x3 counts: progression status (rows) by vital status (columns
    CVD-dead, non-CVD-dead, alive), plus margins."""

    cells: np.ndarray
    row_labels: tuple = ("progressed", "progression-free")
    col_labels: tuple = ("cvd_dead", "non_cvd_dead", "alive")

    @property
    def row_totals(self):
        return self.cells.sum(axis=1)

    @property
    def col_totals(self):
        return self.cells.sum(axis=0)

    @property
    def total(self):
        return int(self.cells.sum())


def crosstab(ds):
    """Cross-classify delta against (xi1, xi2) for two-terminal datasets."""
    if ds.mode is not Mode.TWO_TERMINAL:
        raise UnsupportedModeError("crosstab requires a two-terminal dataset")
    cells = np.zeros((2, 3), dtype=int)
    for r in ds.records:
        row = 0 if r.delta == 1 else 1
        col = 0 if r.xi1 == 1 else (1 if r.xi2 == 1 else 2)
        cells[row, col] += 1
    return CrossTab(cells=cells)
