"""Per-dimension frequency tables trained from a password corpus.

A model holds one counts table per dimension (prefix, suffix, base, l33t,
cap) plus a per-dimension histogram of log2 probabilities used by the
rank estimator. Probabilities for unseen keys fall back to a floor of
``1/(2*total)``, guaranteed to sit below every observed key.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import IO, Iterable, Optional, Union

import numpy as np

from .charset import is_supported
from .decompose import decompose, dimension_keys
from .l33t import L33tTable

DIMENSIONS = ("prefix", "suffix", "base", "l33t", "cap")
MAGIC = "DPAR-MODEL"
FORMAT_VERSION = 1
DEFAULT_BIN_WIDTH = 0.05  # bits; five-way convolution error stays within 5*b


class ModelFormatError(ValueError):
    """Raised when a model file cannot be parsed or verified."""


class EmptyCorpusError(ValueError):
    """Raised when training sees no usable corpus line."""


def bin_index(log2p: float, bin_width: float) -> int:
    """Histogram bin of a log2 probability (non-negative index)."""
    return int(round(-log2p / bin_width))


@dataclass
class DimensionTable:
    dimension: str
    counts: dict[str, int]
    total: int = 0

    def __post_init__(self):
        if self.total == 0:
            self.total = sum(self.counts.values())
        if self.total != sum(self.counts.values()):
            raise ModelFormatError(f"[{self.dimension}] total does not match entries")
        if any(c < 1 for c in self.counts.values()):
            raise ModelFormatError(f"[{self.dimension}] zero or negative count")

    @property
    def floor_log2p(self) -> float:
        """Smoothed log2 probability for keys never seen in the corpus."""
        return -math.log2(2 * self.total)

    def log2p(self, key: str) -> float:
        count = self.counts.get(key)
        if count is None:
            return self.floor_log2p
        return math.log2(count) - math.log2(self.total)

    def histogram(self, bin_width: float) -> np.ndarray:
        """Key counts per log2p bin, including the floor pseudo-key."""
        bins = [bin_index(self.log2p(key), bin_width) for key in self.counts]
        bins.append(bin_index(self.floor_log2p, bin_width))
        return np.bincount(np.asarray(bins, dtype=np.int64)).astype(np.float64)


@dataclass
class Model:
    tables: dict[str, DimensionTable]
    meta: dict
    l33t_table: L33tTable
    bin_width: float = DEFAULT_BIN_WIDTH
    histograms: dict[str, np.ndarray] = field(default_factory=dict)
    skipped_lines: int = 0  # training metric, not persisted

    def __post_init__(self):
        missing = [d for d in DIMENSIONS if d not in self.tables]
        if missing:
            raise ModelFormatError(f"missing dimensions: {missing}")
        if not self.histograms:
            self.histograms = self.build_histograms()

    def build_histograms(self) -> dict[str, np.ndarray]:
        return {d: self.tables[d].histogram(self.bin_width) for d in DIMENSIONS}

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Model)
            and {d: (t.counts, t.total) for d, t in self.tables.items()}
            == {d: (t.counts, t.total) for d, t in other.tables.items()}
            and self.meta == other.meta
        )


def dim_log2p(model: Model, dimension: str, key: str) -> float:
    """log2 probability of one dimension key (floor-smoothed, always finite)."""
    return model.tables[dimension].log2p(key)


def _parse_corpus_line(line: str) -> Optional[tuple[str, int]]:
    line = line.rstrip("\r\n")
    if not line:
        return None
    fields = line.split("\t")
    if len(fields) == 1:
        password, mult = fields[0], 1
    elif len(fields) == 2:
        password = fields[0]
        try:
            mult = int(fields[1])
        except ValueError:
            return None
        if mult < 1:
            return None
    else:
        return None
    if not password or not is_supported(password):
        return None
    return password, mult


def train(corpus: Iterable[str], table: Optional[L33tTable] = None, *,
          min_count: int = 1, bin_width: float = DEFAULT_BIN_WIDTH) -> Model:
    """Count dimension keys over a corpus of one-password-per-line text.

    Lines may carry an optional ``password<TAB>count`` multiplicity.
    Unparseable or non-ASCII lines are skipped and tallied in
    ``Model.skipped_lines``. Keys in the base dimension with fewer than
    ``min_count`` occurrences are pruned after counting.
    """
    table = table if table is not None else L33tTable.default()
    counters: dict[str, Counter] = {d: Counter() for d in DIMENSIONS}
    n_passwords = 0
    skipped = 0
    for raw_line in corpus:
        parsed = _parse_corpus_line(raw_line)
        if parsed is None:
            skipped += 1
            continue
        password, mult = parsed
        keys = dimension_keys(decompose(password, table), table)
        for dim in DIMENSIONS:
            counters[dim][keys[dim]] += mult
        n_passwords += mult
    if n_passwords == 0:
        raise EmptyCorpusError("no usable corpus lines")
    if min_count > 1:
        base = counters["base"]
        for key in [k for k, c in base.items() if c < min_count]:
            del base[key]
    tables = {d: DimensionTable(d, dict(counters[d])) for d in DIMENSIONS}
    meta = {"corpus_lines": n_passwords, "l33t_hash": table.table_hash()}
    return Model(tables=tables, meta=meta, l33t_table=table,
                 bin_width=bin_width, skipped_lines=skipped)


def _escape_key(key: str) -> str:
    if key == "":
        return "\\e"
    return key.replace("\\", "\\\\").replace("\t", "\\t").replace("\n", "\\n")


def _unescape_key(text: str) -> str:
    if text == "\\e":
        return ""
    out = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\\":
            if i + 1 >= len(text):
                raise ModelFormatError("dangling escape in key")
            nxt = text[i + 1]
            if nxt == "t":
                out.append("\t")
            elif nxt == "n":
                out.append("\n")
            elif nxt == "\\":
                out.append("\\")
            else:
                raise ModelFormatError(f"bad escape: \\{nxt}")
            i += 2
        else:
            out.append(ch)
            i += 1
    return "".join(out)


def save_model(model: Model, destination: Union[str, IO[str]]) -> None:
    """Write the bit-exact text format; identical models yield identical bytes."""
    if hasattr(destination, "write"):
        _write_model(model, destination)
    else:
        with open(destination, "w", encoding="utf-8", newline="\n") as fh:
            _write_model(model, fh)


def _write_model(model: Model, fh: IO[str]) -> None:
    fh.write(f"{MAGIC} {FORMAT_VERSION}\n")
    fh.write(f"meta\tcorpus_lines={model.meta['corpus_lines']}"
             f"\tl33t_hash={model.meta['l33t_hash']}\n")
    for dim in DIMENSIONS:
        table = model.tables[dim]
        fh.write(f"[{dim}] {len(table.counts)} {table.total}\n")
        for key in sorted(table.counts, key=lambda k: k.encode("utf-8")):
            fh.write(f"{_escape_key(key)}\t{table.counts[key]}\n")


def load_model(source: Union[str, IO[str]], table: Optional[L33tTable] = None,
               *, bin_width: float = DEFAULT_BIN_WIDTH) -> Model:
    """Parse a model file, verifying structure, totals and the l33t hash."""
    if hasattr(source, "read"):
        lines = source.read().split("\n")
    else:
        with open(source, "r", encoding="utf-8", newline="") as fh:
            lines = fh.read().split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    it = iter(lines)

    def next_line(what: str) -> str:
        try:
            return next(it)
        except StopIteration:
            raise ModelFormatError(f"truncated model file: expected {what}") from None

    header = next_line("header")
    if header != f"{MAGIC} {FORMAT_VERSION}":
        raise ModelFormatError(f"unsupported model header: {header!r}")
    meta_line = next_line("meta line").split("\t")
    if len(meta_line) != 3 or meta_line[0] != "meta":
        raise ModelFormatError("malformed meta line")
    meta = {}
    for item in meta_line[1:]:
        key, _, value = item.partition("=")
        meta[key] = value
    try:
        corpus_lines = int(meta["corpus_lines"])
        l33t_hash = meta["l33t_hash"]
    except (KeyError, ValueError) as exc:
        raise ModelFormatError(f"malformed meta line: {exc}") from None

    tables = {}
    for dim in DIMENSIONS:
        section = next_line(f"[{dim}] section")
        fields = section.split(" ")
        if len(fields) != 3 or fields[0] != f"[{dim}]":
            raise ModelFormatError(f"expected [{dim}] section header, got {section!r}")
        try:
            entry_count, total = int(fields[1]), int(fields[2])
        except ValueError:
            raise ModelFormatError(f"malformed section header: {section!r}") from None
        counts: dict[str, int] = {}
        for _ in range(entry_count):
            entry = next_line(f"[{dim}] entry")
            key_text, sep, count_text = entry.partition("\t")
            if not sep:
                raise ModelFormatError(f"malformed entry in [{dim}]: {entry!r}")
            key = _unescape_key(key_text)
            if key in counts:
                raise ModelFormatError(f"duplicate key in [{dim}]")
            try:
                counts[key] = int(count_text)
            except ValueError:
                raise ModelFormatError(f"bad count in [{dim}]: {entry!r}") from None
        if sum(counts.values()) != total:
            raise ModelFormatError(f"[{dim}] total mismatch")
        tables[dim] = DimensionTable(dim, counts, total)
    trailing = next(it, None)
    if trailing is not None:
        raise ModelFormatError("trailing data after last section")

    table = table if table is not None else L33tTable.default()
    if table.table_hash() != l33t_hash:
        raise ModelFormatError(
            "model was trained with a different l33t table "
            f"(expected hash {l33t_hash})")
    return Model(tables=tables,
                 meta={"corpus_lines": corpus_lines, "l33t_hash": l33t_hash},
                 l33t_table=table, bin_width=bin_width)
