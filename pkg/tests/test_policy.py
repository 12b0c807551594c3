import pytest

from dpar import PolicyError, validate_policy
from dpar.policy import require_valid


def test_all_clauses_satisfied():
    result = validate_policy("abc12345")
    assert result.valid
    assert result.violations == ()


def test_missing_digit():
    result = validate_policy("password")
    assert not result.valid
    assert result.violations == ("needs_digit",)


def test_worked_example_is_valid():
    assert validate_policy("!1P@ssw0rD2#").valid


def test_too_short():
    result = validate_policy("pass1")
    assert result.violations == ("min_length",)


def test_missing_letter():
    assert validate_policy("12345678").violations == ("needs_letter",)


def test_multiple_violations():
    result = validate_policy("abc")
    assert set(result.violations) == {"min_length", "needs_digit"}


@pytest.mark.parametrize("password", ["pässwort1", "abc1234é", "pass словечко1"])
def test_non_ascii_rejected(password):
    assert "unsupported_charset" in validate_policy(password).violations


def test_space_not_supported():
    assert "unsupported_charset" in validate_policy("pass word1").violations


def test_valid_iff_no_violations():
    for pw in ["abc12345", "pass1", "password", "12345678", "a1b2c3d4!"]:
        result = validate_policy(pw)
        assert result.valid == (not result.violations)


def test_require_valid_raises():
    with pytest.raises(PolicyError) as excinfo:
        require_valid("pass")
    assert "min_length" in excinfo.value.violations
    require_valid("abc12345")
