"""Five-way password decomposition and its lossless inverse.

A password splits into a prefix (leading digits/symbols), a suffix
(trailing digits/symbols), and a middle segment. The middle is reduced to
a lowercase base word by recording which positions were capitalized and
which symbols stand for letters (l33t substitutions). Decomposition is
total and ``recompose(decompose(p)) == p`` for every input.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from typing import TYPE_CHECKING, Optional

from .charset import LETTER_SET, LOWERCASE, UPPERCASE
from .l33t import L33tTable

if TYPE_CHECKING:  # pragma: no cover
    from .model import Model

# Above this many consistent reverse-l33t readings we stop scoring against
# the corpus and fall back to the first-table-entry rule.
MAX_INTERPRETATIONS = 10_000


class InvariantError(ValueError):
    """Raised when PasswordParts fields are mutually inconsistent."""


@dataclass(frozen=True)
class PasswordParts:
    """The five dimensions of one password plus the original string.

    l33t_subs items are (position-in-base, symbol, letter); cap_positions
    are 0-based indices into the base word. Both position sets are
    disjoint, since a character cannot be an uppercase letter and a
    symbol at once.
    """

    prefix: str
    suffix: str
    base_word: str
    l33t_subs: tuple[tuple[int, str, str], ...]
    cap_positions: tuple[int, ...]
    raw: str

    def cap_display(self) -> tuple[int, ...]:
        """Capitalization pattern with the last base position shown as -1."""
        last = len(self.base_word) - 1
        return tuple(-1 if p == last else p for p in self.cap_positions)


def decompose(password: str, table: Optional[L33tTable] = None,
              model: "Optional[Model]" = None) -> PasswordParts:
    """Split a password into its five dimensions.

    When a symbol reverse-maps to more than one letter, the reading whose
    base word is most frequent under ``model`` wins; without a model the
    first matching table entry is used.
    """
    if not password:
        raise ValueError("cannot decompose an empty password")
    table = table if table is not None else L33tTable.default()

    if not any(ch in LETTER_SET for ch in password):
        # No letters anywhere: the whole string is kept as the base word.
        return PasswordParts(prefix="", suffix="", base_word=password,
                             l33t_subs=(), cap_positions=(), raw=password)

    start = 0
    while password[start] not in LETTER_SET:
        start += 1
    end = len(password)
    while password[end - 1] not in LETTER_SET:
        end -= 1
    prefix, middle, suffix = password[:start], password[start:end], password[end:]

    cap_positions = tuple(i for i, ch in enumerate(middle) if ch in UPPERCASE)
    lowered = middle.lower()

    # Reverse-map interior symbols through the table; ambiguous symbols
    # get every consistent reading.
    options: list[tuple[str, ...]] = []
    sub_positions: list[int] = []
    for i, ch in enumerate(lowered):
        if ch in LETTER_SET:
            options.append((ch,))
        else:
            letters = table.letters_for(ch)
            if letters:
                options.append(letters)
                sub_positions.append(i)
            else:
                options.append((ch,))  # unmapped symbol stays verbatim

    base_word = _pick_base(options, model)
    l33t_subs = tuple((i, lowered[i], base_word[i]) for i in sub_positions)
    return PasswordParts(prefix=prefix, suffix=suffix, base_word=base_word,
                         l33t_subs=l33t_subs, cap_positions=cap_positions,
                         raw=password)


def _pick_base(options: list[tuple[str, ...]], model: "Optional[Model]") -> str:
    first = "".join(opt[0] for opt in options)
    if model is None:
        return first
    n_readings = 1
    for opt in options:
        n_readings *= len(opt)
        if n_readings > MAX_INTERPRETATIONS:
            return first
    if n_readings == 1:
        return first
    base_counts = model.tables["base"].counts
    best = first
    best_count = base_counts.get(first, 0)
    for combo in itertools.product(*options):
        candidate = "".join(combo)
        count = base_counts.get(candidate, 0)
        if count > best_count:
            best, best_count = candidate, count
    return best


def recompose(parts: PasswordParts) -> str:
    """Rebuild the password string; inverse of :func:`decompose`."""
    _check_parts(parts)
    chars = list(parts.base_word)
    for pos in parts.cap_positions:
        chars[pos] = chars[pos].upper()
    for pos, symbol, _letter in parts.l33t_subs:
        chars[pos] = symbol
    return parts.prefix + "".join(chars) + parts.suffix


def _check_parts(parts: PasswordParts) -> None:
    n = len(parts.base_word)
    sub_positions = [pos for pos, _s, _l in parts.l33t_subs]
    if len(set(sub_positions)) != len(sub_positions):
        raise InvariantError("duplicate l33t positions")
    if len(set(parts.cap_positions)) != len(parts.cap_positions):
        raise InvariantError("duplicate capitalization positions")
    clash = set(sub_positions) & set(parts.cap_positions)
    if clash:
        raise InvariantError(f"positions both capitalized and l33t-substituted: {sorted(clash)}")
    for pos, _symbol, letter in parts.l33t_subs:
        if not 0 <= pos < n:
            raise InvariantError(f"l33t position {pos} out of range")
        if parts.base_word[pos] != letter:
            raise InvariantError(f"l33t letter {letter!r} does not match base at {pos}")
    for pos in parts.cap_positions:
        if not 0 <= pos < n:
            raise InvariantError(f"capitalization position {pos} out of range")
        if parts.base_word[pos] not in LOWERCASE:
            raise InvariantError(f"cannot capitalize non-letter at {pos}")


def with_changes(parts: PasswordParts, **kwargs) -> PasswordParts:
    """Derive a variant of ``parts`` and recompute its raw string."""
    changed = replace(parts, **kwargs)
    return replace(changed, raw=recompose(changed))


def l33t_key(l33t_subs, table: L33tTable) -> str:
    """Position-free model key: substituted symbols in table order."""
    ordered = sorted(
        (table.entry_index(letter, symbol), symbol)
        for _pos, symbol, letter in l33t_subs
    )
    return ",".join(symbol for _i, symbol in ordered)


def cap_key(cap_positions, base_len: int) -> str:
    """Model key for the capitalization pattern, last position shown as -1."""
    last = base_len - 1
    return ",".join(str(-1 if p == last else p) for p in sorted(cap_positions))


def dims_mutable() -> tuple[str, ...]:
    """The four dimensions the recommender may change (never the base)."""
    return ("prefix", "suffix", "l33t", "cap")


def dimension_keys(parts: PasswordParts, table: L33tTable) -> dict[str, str]:
    """The five model keys of one decomposed password."""
    return {
        "prefix": parts.prefix,
        "suffix": parts.suffix,
        "base": parts.base_word,
        "l33t": l33t_key(parts.l33t_subs, table),
        "cap": cap_key(parts.cap_positions, len(parts.base_word)),
    }
