import random

import pytest

from src.algebra import (
    Ideal,
    Polynomial,
    RingSpec,
    frobenius_power,
    ideal_ops,
    monomial_colon,
    monomial_intersection,
    normal_form,
    parse_polynomial,
    reduce_basis,
)
from src.utils.errors import GroebnerBudgetError, UnsupportedStructureError
from src.verify.oracles import linear_membership, sympy_reduced_basis


def ideal(ring: RingSpec, *texts: str) -> Ideal:
    return Ideal.of(ring, [parse_polynomial(text, ring) for text in texts])


@pytest.mark.parametrize(
    "p,names,gens,expected",
    [
        (3, ("x",), ["x^2", "x"], ["x"]),
        (5, ("x", "y"), ["x + y", "x - y"], ["x", "y"]),
        (3, ("x", "t"), ["t^3", "x^3*t^2"], ["x^3*t^2", "t^3"]),
        (7, ("x", "y"), ["3*x*y", "x^2 + 1"], ["x^2 + 1", "y"]),
        (5, ("x", "y"), ["x^2", "x*y"], ["x^2", "x*y"]),
        (3, ("x", "y"), ["x", "x + 2"], ["1"]),
    ],
)
def test_reduced_basis(p, names, gens, expected):
    ring = RingSpec(p, names)
    assert ideal(ring, *gens).reduced().lines() == expected


def test_zero_ideal_has_empty_basis():
    ring = RingSpec(3, ("x",))
    assert Ideal.zero(ring).reduced().is_zero()
    assert ideal(ring, "x - x").reduced().lines() == []


@pytest.mark.parametrize(
    "p,names,gens",
    [
        (5, ("x", "y"), ["x^2 + y", "x*y - 1"]),
        (7, ("x", "y", "z"), ["x^2 - y*z", "y^2 - x*z", "z^2 - x*y"]),
        (11, ("x", "y", "z"), ["x + y + z", "x*y + y*z + z*x", "x*y*z - 1"]),
        (3, ("x", "y"), ["x^3*y + y^2", "x*y^3 + 2*x^2"]),
    ],
)
def test_reduced_basis_matches_sympy(p, names, gens):
    I = ideal(RingSpec(p, names), *gens)
    assert set(I.reduced().basis) == sympy_reduced_basis(I)


def test_step_budget():
    ring = RingSpec(11, ("x", "y", "z"))
    I = ideal(ring, "x + y + z", "x*y + y*z + z*x", "x*y*z")
    with pytest.raises(GroebnerBudgetError):
        reduce_basis(I, step_budget=1)


def test_normal_form():
    ring = RingSpec(5, ("x", "y"))
    gb = ideal(ring, "x - y").reduced()
    assert str(normal_form(parse_polynomial("x^2 + y", ring), gb)) == "y^2 + y"


def test_ideal_equality_and_membership():
    ring = RingSpec(3, ("x", "y"))
    left = ideal(ring, "x^2", "x*y")
    right = ideal(ring, "x") * ideal(ring, "x", "y")
    assert ideal_ops("equal", left, right)
    x7 = parse_polynomial("x^7", RingSpec(3, ("x",)))
    assert not ideal_ops("member", x7, ideal(RingSpec(3, ("x",)), "x^9"))
    assert ideal_ops("member", parse_polynomial("x*y^5", ring), left)


def test_ideal_ops_sum_product_scale():
    ring = RingSpec(5, ("x", "y"))
    a, b = ideal(ring, "x"), ideal(ring, "y")
    assert ideal_ops("sum", a, b).reduced().lines() == ["x", "y"]
    assert ideal_ops("product", a, b).reduced().lines() == ["x*y"]
    g = parse_polynomial("y + 1", ring)
    assert ideal_ops("scale_by_poly", g, a).reduced().lines() == ["x*y + x"]
    with pytest.raises(ValueError):
        ideal_ops("quotient", a, b)


def test_monomial_colon_and_intersection():
    ring = RingSpec(3, ("x", "y"))
    assert monomial_colon(ideal(ring, "x^2", "y"), ideal(ring, "x")).reduced().lines() == [
        "x",
        "y",
    ]
    meet = monomial_intersection(ideal(ring, "x^2"), ideal(ring, "x*y"))
    assert meet.reduced().lines() == ["x^2*y"]
    with pytest.raises(UnsupportedStructureError):
        monomial_colon(ideal(ring, "x + y"), ideal(ring, "x"))


def test_frobenius_power():
    ring = RingSpec(3, ("x", "y"))
    I = frobenius_power(ideal(ring, "x + y", "x*y"), 1)
    assert I.reduced() == ideal(ring, "x^3 + y^3", "x^3*y^3").reduced()


def test_linear_membership_agrees_on_homogeneous_input():
    ring = RingSpec(5, ("x", "y"))
    gens = [parse_polynomial(t, ring) for t in ("x^2", "x*y + y^2")]
    for text in ("x^2*y", "x*y^2 + y^3", "y^3", "x^3 + 2*x*y^2 + 2*y^3"):
        f = parse_polynomial(text, ring)
        assert linear_membership(f, gens, f.total_degree()) == Ideal.of(ring, gens).member(f)


def random_poly(rng: random.Random, ring: RingSpec, terms: int = 3, degree: int = 3) -> Polynomial:
    p = ring.characteristic
    result = {}
    for _ in range(terms):
        a = rng.randint(0, degree)
        result[(a, rng.randint(0, degree - a))] = rng.randint(1, p - 1)
    return Polynomial(ring, result)


@pytest.mark.parametrize("seed", range(8))
def test_reduction_is_idempotent(seed):
    rng = random.Random(seed)
    ring = RingSpec(5, ("x", "y"))
    gb = Ideal.of(ring, [random_poly(rng, ring) for _ in range(3)]).reduced()
    assert reduce_basis(Ideal.of(ring, gb.basis)) == gb


@pytest.mark.parametrize("seed", range(8))
def test_combinations_of_generators_reduce_to_zero(seed):
    rng = random.Random(seed)
    ring = RingSpec(7, ("x", "y"))
    gens = [random_poly(rng, ring) for _ in range(2)]
    gb = Ideal.of(ring, gens).reduced()
    for _ in range(5):
        f = Polynomial.zero(ring)
        for g in gens:
            f = f + random_poly(rng, ring, terms=2, degree=2) * g
        assert normal_form(f, gb).is_zero()
