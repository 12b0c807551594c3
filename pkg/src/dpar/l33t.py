"""Letter-to-symbol substitution table ("l33t" mappings).

The table is an ordered list of (letter, symbol) pairs. Order matters in
two places: it breaks ties when a symbol maps back to several letters and
no corpus statistics are available, and it fixes the canonical ordering
of the position-free l33t model key.
"""

from __future__ import annotations

import hashlib

from .charset import DIGIT_SYMBOL_SET, LOWERCASE

# Standard substitutions for the commonly-l33ted letters. Exactly 14 entries.
DEFAULT_ENTRIES: tuple[tuple[str, str], ...] = (
    ("a", "@"),
    ("a", "4"),
    ("e", "3"),
    ("i", "1"),
    ("i", "!"),
    ("i", "|"),
    ("o", "0"),
    ("s", "$"),
    ("s", "5"),
    ("x", "%"),
    ("z", "2"),
    ("t", "+"),
    ("t", "7"),
    ("g", "9"),
)


class L33tTableError(ValueError):
    """Raised for malformed table entries or config files."""


class L33tTable:
    """Ordered letter->symbol substitution table with reverse lookup."""

    def __init__(self, entries=DEFAULT_ENTRIES):
        entries = tuple((letter, symbol) for letter, symbol in entries)
        seen = set()
        for letter, symbol in entries:
            if len(letter) != 1 or letter not in LOWERCASE:
                raise L33tTableError(f"l33t letter must be a lowercase ASCII letter: {letter!r}")
            if len(symbol) != 1 or symbol not in DIGIT_SYMBOL_SET:
                raise L33tTableError(f"l33t symbol must be a digit or keyboard symbol: {symbol!r}")
            if (letter, symbol) in seen:
                raise L33tTableError(f"duplicate l33t entry: {letter!r} -> {symbol!r}")
            seen.add((letter, symbol))
        self.entries = entries
        self._index = {pair: i for i, pair in enumerate(entries)}
        self._by_letter: dict[str, tuple[str, ...]] = {}
        self._by_symbol: dict[str, tuple[str, ...]] = {}
        for letter, symbol in entries:
            self._by_letter[letter] = self._by_letter.get(letter, ()) + (symbol,)
            self._by_symbol[symbol] = self._by_symbol.get(symbol, ()) + (letter,)

    def __len__(self) -> int:
        return len(self.entries)

    def __eq__(self, other) -> bool:
        return isinstance(other, L33tTable) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    @property
    def letters(self) -> frozenset[str]:
        return frozenset(self._by_letter)

    def symbols_for(self, letter: str) -> tuple[str, ...]:
        """Symbols a letter may be rendered as, in table order."""
        return self._by_letter.get(letter, ())

    def letters_for(self, symbol: str) -> tuple[str, ...]:
        """Letters a symbol may stand for, in table order."""
        return self._by_symbol.get(symbol, ())

    def has_pair(self, letter: str, symbol: str) -> bool:
        return (letter, symbol) in self._index

    def entry_index(self, letter: str, symbol: str) -> int:
        return self._index[(letter, symbol)]

    def canonical_text(self) -> str:
        """Config-file serialization: one letter<TAB>symbol pair per line."""
        return "".join(f"{letter}\t{symbol}\n" for letter, symbol in self.entries)

    def table_hash(self) -> str:
        return hashlib.sha256(self.canonical_text().encode("ascii")).hexdigest()

    def save(self, path) -> None:
        with open(path, "w", encoding="ascii", newline="\n") as fh:
            fh.write(self.canonical_text())

    @classmethod
    def load(cls, path) -> "L33tTable":
        entries = []
        with open(path, "r", encoding="ascii") as fh:
            for lineno, line in enumerate(fh, start=1):
                line = line.rstrip("\r\n")
                if not line:
                    continue
                fields = line.split("\t")
                if len(fields) != 2:
                    raise L33tTableError(f"{path}:{lineno}: expected letter<TAB>symbol")
                entries.append((fields[0], fields[1]))
        if not entries:
            raise L33tTableError(f"{path}: empty l33t table")
        return cls(entries)

    @classmethod
    def default(cls) -> "L33tTable":
        return cls(DEFAULT_ENTRIES)
