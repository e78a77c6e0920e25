from fractions import Fraction

import pytest

from src.algebra import Polynomial
from src.testmod import fractional_model
from src.utils.errors import (
    InputError,
    MissingActionDescriptorError,
    OutOfWindowError,
    UnsupportedStructureError,
    VerificationFailure,
)
from src.vfilt import (
    FiltrationTable,
    TameDescriptor,
    annihilator,
    check_v_axioms,
    compare_v_tau,
    default_points,
    graph_counterexample_check,
    graph_embedding_table,
    stadnik_v,
    stadnik_v_direct,
    tau_table,
    trivial_v,
)

from .conftest import line, twisted, xpow


WINDOW = (Fraction(-1), Fraction(2))
F = Fraction


def test_trivial_filtration(line3):
    V = trivial_v(line3, WINDOW)
    assert V.jumps == (F(-1), F(0), F(1))
    assert V.value_at(0) == xpow(line3, 0)
    assert V.value_at(F(1, 2)) == xpow(line3, 1)
    assert V.value_after(0) == xpow(line3, 1)
    assert V.value_before(0) == xpow(line3, 0)
    assert V.grid_points() == [F(k, 2) for k in range(-2, 5)]
    with pytest.raises(OutOfWindowError):
        V.value_at(3)


def test_stadnik_values(line3):
    V = stadnik_v(TameDescriptor(2, 1), line3, WINDOW)
    assert V.jumps == (F(-1, 2), F(1, 2), F(3, 2))
    assert [v for v in V.values] == [xpow(line3, k) for k in range(4)]
    assert V.value_at(0) == xpow(line3, 1)
    assert V.action.frobenius_twist == 1


@pytest.mark.parametrize("p", [3, 5, 7])
def test_stadnik_matches_closed_form(p):
    ring = line(p)
    for n in [n for n in range(1, p) if (p - 1) % n == 0]:
        for s in range(n + 1):
            d = TameDescriptor(n, s)
            via_covering = stadnik_v(d, ring, WINDOW)
            direct = stadnik_v_direct(d, ring, WINDOW)
            assert via_covering.jumps == direct.jumps
            assert via_covering.values == direct.values


def test_untwisted_descriptor_is_trivial(line5):
    V = stadnik_v(TameDescriptor(1, 0), line5, WINDOW)
    T = trivial_v(line5, WINDOW)
    assert (V.jumps, V.values) == (T.jumps, T.values)


@pytest.mark.parametrize(
    "kwargs,error",
    [
        ({"n": 2, "rank": 2}, UnsupportedStructureError),
        ({"n": 0}, InputError),
        ({"n": 2, "s": 3}, InputError),
        ({"n": 2, "s": -1}, InputError),
    ],
)
def test_descriptor_validation(kwargs, error):
    with pytest.raises(error):
        TameDescriptor(**kwargs)


def test_descriptor_needs_dividing_degree(line3):
    with pytest.raises(UnsupportedStructureError):
        stadnik_v(TameDescriptor(4), line3, WINDOW)


def test_table_must_decrease(line3):
    with pytest.raises(VerificationFailure):
        FiltrationTable(
            ring=line3,
            window=WINDOW,
            jumps=(F(0),),
            values=(xpow(line3, 1), xpow(line3, 0)),
        )


def test_tau_table_is_right_continuous(line3):
    x = Polynomial.variable(line3, "x")
    T = tau_table(twisted(line3), x ** 2, (0, 1))
    assert T.jumps == (F(1, 2), F(1))
    assert T.value_at(F(1, 2)) == xpow(line3, 1)
    assert T.value_before(F(1, 2)) == xpow(line3, 0)
    with pytest.raises(MissingActionDescriptorError):
        check_v_axioms(T, x)


def test_annihilator(line3):
    assert annihilator(xpow(line3, 1), xpow(line3, 3)).reduced().lines() == ["x^2"]
    assert annihilator(xpow(line3, -1), xpow(line3, 0)).reduced().lines() == ["x"]


@pytest.mark.parametrize("table", ["trivial", "stadnik"])
def test_axioms_hold(line3, table):
    if table == "trivial":
        V = trivial_v(line3, WINDOW)
    else:
        V = stadnik_v(TameDescriptor(2, 1), line3, WINDOW)
    report = check_v_axioms(V, Polynomial.variable(line3, "x"))
    assert report.passed, report.failures()
    assert {e.axiom for e in report.entries} >= {"i", "ii", "iii"}


DESCRIPTOR_MATRIX = [
    (p, n, s)
    for p in (3, 5)
    for n in range(1, p)
    if (p - 1) % n == 0
    for s in range(n + 1)
]


@pytest.mark.parametrize("p,n,s", DESCRIPTOR_MATRIX)
def test_axioms_hold_for_every_descriptor(p, n, s):
    ring = line(p)
    report = check_v_axioms(stadnik_v(TameDescriptor(n, s), ring, WINDOW), Polynomial.variable(ring, "x"))
    assert report.passed, report.failures()


def test_graded_pieces_at_window_edge_are_skipped(line3):
    report = check_v_axioms(trivial_v(line3, WINDOW), Polynomial.variable(line3, "x"))
    edge = [e for e in report.entries if e.axiom == "v" and e.t == "1"]
    assert [e.status for e in edge] == ["skip"]
    assert any(e.axiom == "v" and e.t == "0" and e.status == "pass" for e in report.entries)


def test_dropping_a_jump_breaks_shift_axiom(line3):
    V = trivial_v(line3, WINDOW).without_jump(0)
    report = check_v_axioms(V, Polynomial.variable(line3, "x"))
    assert not report.passed
    assert "0" in [e.t for e in report.failures("ii")]


def test_graph_counterexample():
    result = graph_counterexample_check(3, 1)
    assert not result.member
    assert result.generator_member
    assert result.verdict == "NON-MEMBER witness x^3"
    assert result.to_dict()["verdict"] == result.verdict
    assert graph_counterexample_check(5, 2).witness == "x^10"


@pytest.mark.parametrize("p,s", [(3, 0), (3, 2), (5, 4)])
def test_graph_rejects_bad_exponent(p, s):
    with pytest.raises(InputError):
        graph_counterexample_check(p, s)


def test_graph_table_fails_frobenius_axiom():
    table = graph_embedding_table(3, 1)
    report = check_v_axioms(table, Polynomial.variable(table.ring, "x"))
    witnesses = {e.t: e.witness for e in report.failures("iii")}
    assert witnesses["1"] == "x^3"
    assert witnesses["0"] == "1"


def test_default_points():
    points = default_points(TameDescriptor(2), WINDOW)
    assert points[0] == F(-3, 4) and points[-1] == F(2)
    assert len(points) == 12


@pytest.mark.parametrize("n,s", [(1, 0), (1, 1), (2, 0), (2, 1), (2, 2)])
def test_comparison_with_test_modules(line3, n, s):
    report = compare_v_tau(TameDescriptor(n, s), line3)
    assert report.passed, report.to_list()
    assert report.graded is not None


def test_comparison_fails_below_the_window(line3):
    d = TameDescriptor(2, 1)
    report = compare_v_tau(d, line3, points=[F(-2)], strict=False)
    assert report.failed_points() == ["-2"]
    with pytest.raises(InputError):
        compare_v_tau(d, line3, points=[F(-2)])


def test_model_tau_table_tracks_trivial_filtration(line3):
    # V^t = tau(x^{t+1-eps}) for the trivial module
    x = Polynomial.variable(line3, "x")
    V = trivial_v(line3, WINDOW)
    T = tau_table(fractional_model(line3, 1), x, (0, 3))
    for t in [F(-1, 2), F(0), F(1, 3), F(1)]:
        assert V.value_at(t) == T.value_before(t + 1)
