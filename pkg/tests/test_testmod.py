import math
from fractions import Fraction

import pytest

from src.algebra import Polynomial, parse_polynomial
from src.cartier import CartierModuleDesc, FractionalSubmodule
from src.testmod import (
    default_test_element,
    f_pure_threshold,
    fractional_model,
    gr_tau,
    is_f_regular,
    jumping_numbers,
    model_certificate,
    pushforward_model,
)
from src.testmod import test_module as tau_of
from src.testmod import test_module_left as tau_left
from src.utils.errors import (
    DegenerateModuleError,
    InvalidTestElementError,
    LeftLimitError,
    UnsupportedStructureError,
)
from src.utils.limits import limits_override

from .conftest import line, plane, twisted, xpow


GRID = [Fraction(a, b) for b in (1, 2, 3, 4) for a in range(0, 3 * b + 1)]


def test_default_test_elements():
    ring = line(3)
    x = Polynomial.variable(ring, "x")
    assert default_test_element(twisted(ring), x) == x
    assert default_test_element(twisted(ring, 2), x) == x ** 3
    assert default_test_element(fractional_model(ring, 1), x) == x ** 2
    with pytest.raises(DegenerateModuleError):
        default_test_element(twisted(ring), Polynomial.zero(ring))


@pytest.mark.parametrize("p", [3, 5])
def test_tau_on_twisted_line(p):
    ring = line(p)
    x = Polynomial.variable(ring, "x")
    for s in range(p - 1):
        M = twisted(ring, s)
        for t in GRID:
            expected = math.floor(t + Fraction(s, p - 1))
            assert tau_of(M, x, t) == xpow(ring, expected), (s, t)


def test_tau_on_model_allows_negative_parameters(line3):
    x = Polynomial.variable(line3, "x")
    M = fractional_model(line3, 1)
    for t in [Fraction(-2), Fraction(-3, 2), Fraction(-1, 3), Fraction(0), Fraction(5, 3)]:
        assert tau_of(M, x, t) == xpow(line3, math.floor(t))


def test_negative_parameter_needs_model(line3):
    x = Polynomial.variable(line3, "x")
    with pytest.raises(UnsupportedStructureError):
        tau_of(twisted(line3), x, Fraction(-1, 2))


def test_tau_is_descending_and_right_continuous(line5):
    x = Polynomial.variable(line5, "x")
    M = twisted(line5, 1)
    values = [tau_of(M, x, t) for t in sorted(GRID)]
    assert all(a.contains(b) for a, b in zip(values, values[1:]))
    # jump of x^floor(t + 1/4) at t = 3/4
    assert tau_of(M, x, Fraction(3, 4)) == tau_of(M, x, Fraction(3, 4) + Fraction(1, 1000))


def test_tau_in_the_plane():
    ring = plane(3)
    f = parse_polynomial("x*y", ring)
    M = twisted(ring)
    expected = FractionalSubmodule.generated_by(ring, [f])
    assert tau_of(M, f, 1) == expected
    assert tau_of(M, f, Fraction(1, 2)) == FractionalSubmodule.unit(ring)


def test_invalid_test_element_is_reported(line3):
    x = Polynomial.variable(line3, "x")
    M = fractional_model(line3, 1)
    with pytest.raises(InvalidTestElementError):
        tau_of(M, x, 0, c=Polynomial.one(line3), validate=True)


def test_left_limit(line3):
    x = Polynomial.variable(line3, "x")
    M = twisted(line3)
    assert tau_left(M, x, 1) == xpow(line3, 0)
    assert tau_left(M, x, Fraction(3, 2)) == xpow(line3, 1)
    with pytest.raises(UnsupportedStructureError):
        tau_left(M, x, 0)
    assert tau_left(fractional_model(line3, 1), x, 0) == xpow(line3, -1)


def test_left_limit_budget(line3):
    x = Polynomial.variable(line3, "x")
    M = twisted(line3)
    # samples at 0 and 1/2 straddle the jump at 1/3
    with limits_override(denominator_bound=1, halving_budget=1):
        with pytest.raises(LeftLimitError) as info:
            tau_left(M, x ** 3, 1)
    assert len(info.value.candidates) == 2


@pytest.mark.parametrize("p", [3, 5, 7])
def test_f_regularity_of_twists(p):
    ring = line(p)
    for s in range(p + 1):
        assert is_f_regular(twisted(ring, s)) == (s <= p - 2)


def test_model_certificates(line3):
    assert model_certificate(fractional_model(line3, 1)) == {1: 1, 2: 1, 3: 1, 4: 2, 5: 2}
    certificate = model_certificate(pushforward_model(line3, Polynomial.variable(line3, "x")))
    assert certificate[1] == 1
    assert certificate[3] == 2


def test_pushforward_model_shapes(line5):
    x = Polynomial.variable(line5, "x")
    assert pushforward_model(line5, Polynomial.one(line5)).carrier == xpow(line5, -1)
    assert pushforward_model(line5, x ** 2).carrier == xpow(line5, 0)
    with pytest.raises(UnsupportedStructureError):
        pushforward_model(line5, x + 1)


def test_jumping_numbers(line3):
    x = Polynomial.variable(line3, "x")
    M = twisted(line3)
    assert jumping_numbers(M, x ** 2, 0, 1).points == [Fraction(1, 2)]
    assert jumping_numbers(M, x, 0, 1).points == []
    assert jumping_numbers(M, x, 0, 1, closed_right=True).points == [Fraction(1)]
    report = jumping_numbers(M, x ** 3, 0, 1, d_max=4)
    assert report.points == [Fraction(1, 3), Fraction(2, 3)]
    assert report.unresolved == []


def test_jumps_of_model_include_left_end(line3):
    x = Polynomial.variable(line3, "x")
    report = jumping_numbers(fractional_model(line3, 1), x, -1, 1)
    assert report.points == [Fraction(-1), Fraction(0)]


def test_f_pure_thresholds(line3):
    x = Polynomial.variable(line3, "x")
    M = twisted(line3)
    assert f_pure_threshold(M, x ** 2) == Fraction(1, 2)
    assert f_pure_threshold(M, x) == Fraction(1)
    ring = plane(3)
    assert f_pure_threshold(twisted(ring), parse_polynomial("x*y", ring)) == Fraction(1)


def test_graded_piece(line3):
    x = Polynomial.variable(line3, "x")
    piece = gr_tau(twisted(line3), x, 1)
    assert piece.numerator == xpow(line3, 0)
    assert piece.denominator == xpow(line3, 1)
    assert piece.twist_exponent == 2
    assert piece.killed_by_f
    assert not piece.is_zero()
    assert gr_tau(twisted(line3), x, Fraction(1, 2)).is_zero()
    assert gr_tau(fractional_model(line3, 1), x, 0).to_dict()["zero"] is False


@pytest.mark.parametrize("p", [3, 5])
def test_tau_ignores_extra_powers_of_f_in_the_test_element(p):
    ring = line(p)
    x = Polynomial.variable(ring, "x")
    cases = [(twisted(ring, s), x) for s in range(p - 1)]
    cases.append((fractional_model(ring, 1), x))
    xy = plane(p)
    cases.append((twisted(xy), parse_polynomial("x*y", xy)))
    for M, f in cases:
        c = default_test_element(M, f)
        for t in (Fraction(0), Fraction(1, 3), Fraction(1, 2), Fraction(7, 4)):
            tau = tau_of(M, f, t, c=c)
            assert tau == tau_of(M, f, t, c=c * f), (M.describe(), t)
            assert tau == tau_of(M, f, t, c=c * f ** 2), (M.describe(), t)
