"""Password composition policy checks.

A password is acceptable when it has at least eight characters, at least
one ASCII letter and at least one ASCII digit, and uses only the
supported ASCII character set.
"""

from dataclasses import dataclass

from .charset import DIGIT_SET, LETTER_SET, is_supported

MIN_LENGTH = 8

VIOLATION_MIN_LENGTH = "min_length"
VIOLATION_NEEDS_LETTER = "needs_letter"
VIOLATION_NEEDS_DIGIT = "needs_digit"
VIOLATION_UNSUPPORTED_CHARSET = "unsupported_charset"


@dataclass(frozen=True)
class PolicyResult:
    valid: bool
    violations: tuple[str, ...]


class PolicyError(ValueError):
    """Raised when an operation requires a policy-valid password."""

    def __init__(self, violations):
        self.violations = tuple(violations)
        super().__init__("password violates policy: " + ", ".join(self.violations))


def validate_policy(password: str, min_length: int = MIN_LENGTH) -> PolicyResult:
    violations = []
    if not is_supported(password):
        violations.append(VIOLATION_UNSUPPORTED_CHARSET)
    if len(password) < min_length:
        violations.append(VIOLATION_MIN_LENGTH)
    if not any(ch in LETTER_SET for ch in password):
        violations.append(VIOLATION_NEEDS_LETTER)
    if not any(ch in DIGIT_SET for ch in password):
        violations.append(VIOLATION_NEEDS_DIGIT)
    return PolicyResult(valid=not violations, violations=tuple(violations))


def require_valid(password: str, min_length: int = MIN_LENGTH) -> None:
    result = validate_policy(password, min_length)
    if not result.valid:
        raise PolicyError(result.violations)
