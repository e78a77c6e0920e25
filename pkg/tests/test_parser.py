import pytest

from src.algebra import RingSpec, parse_polynomial
from src.utils.errors import (
    ExponentOverflowError,
    PolynomialParseError,
    UnknownVariableError,
)
from src.utils.limits import limits_override


RING = RingSpec(5, ("x", "y"))


@pytest.mark.parametrize(
    "text,expected",
    [
        ("x", "x"),
        ("  x  *  y ", "x*y"),
        ("-x", "4*x"),
        ("--x", "x"),
        ("7", "2"),
        ("5", "0"),
        ("x^0", "1"),
        ("(x + y)^5", "x^5 + y^5"),
        ("x*(y - 1) + x", "x*y"),
        ("x*y*x", "x^2*y"),
        ("2*x^2 - 3*y^2 + x*y", "2*x^2 + x*y + 2*y^2"),
    ],
)
def test_parse_canonical(text, expected):
    assert str(parse_polynomial(text, RING)) == expected


def test_canonical_text_reparses_to_itself():
    g = parse_polynomial("(x + 2*y + 3)^4", RING)
    assert parse_polynomial(str(g), RING) == g


@pytest.mark.parametrize(
    "text,position",
    [
        ("", 0),
        ("   ", 0),
        ("2x", 1),
        ("x +", 3),
        ("x ^ y", 4),
        ("(x + y", 6),
        ("x $ y", 2),
        ("x)", 1),
    ],
)
def test_parse_errors_report_position(text, position):
    with pytest.raises(PolynomialParseError) as info:
        parse_polynomial(text, RING)
    assert info.value.position == position
    assert info.value.to_dict()["position"] == position


def test_empty_text_is_rejected_at_start():
    with pytest.raises(PolynomialParseError) as info:
        parse_polynomial("", RING)
    assert info.value.to_dict()["error"] == "PolynomialParseError"


def test_unknown_variable():
    with pytest.raises(UnknownVariableError):
        parse_polynomial("x + z", RING)


def test_exponent_bound_comes_from_limits():
    with limits_override(max_exponent=10):
        assert str(parse_polynomial("x^10", RING)) == "x^10"
        with pytest.raises(ExponentOverflowError):
            parse_polynomial("x^11", RING)
