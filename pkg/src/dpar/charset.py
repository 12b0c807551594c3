"""Character classes shared by the decomposition and generation code.

Passwords are modeled over ASCII: 52 letters, 10 digits and the 32
printable keyboard symbols. Prefixes, suffixes and l33t substitutions
draw from the 42-character digit/symbol alphabet.
"""

import string

LOWERCASE = string.ascii_lowercase
UPPERCASE = string.ascii_uppercase
LETTERS = string.ascii_letters
DIGITS = string.digits
SYMBOLS = string.punctuation  # the 32 keyboard symbols

DIGITS_AND_SYMBOLS = DIGITS + SYMBOLS

LETTER_SET = frozenset(LETTERS)
DIGIT_SET = frozenset(DIGITS)
SYMBOL_SET = frozenset(SYMBOLS)
DIGIT_SYMBOL_SET = frozenset(DIGITS_AND_SYMBOLS)

# Everything a password may contain.
SUPPORTED_SET = frozenset(LETTERS + DIGITS_AND_SYMBOLS)


def is_letter(ch: str) -> bool:
    return ch in LETTER_SET


def is_digit_or_symbol(ch: str) -> bool:
    return ch in DIGIT_SYMBOL_SET


def is_supported(password: str) -> bool:
    """True when every character is an ASCII letter, digit or keyboard symbol."""
    return all(ch in SUPPORTED_SET for ch in password)
