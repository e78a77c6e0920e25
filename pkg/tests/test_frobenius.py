import random

import pytest

from src.algebra import (
    Ideal,
    Polynomial,
    RingSpec,
    cartier_image,
    frobenius_power,
    frobenius_root,
    parse_polynomial,
    pth_root_decompose,
)
from src.utils.errors import LevelBoundError
from src.utils.limits import limits_override
from src.verify.oracles import principal_root_oracle


def components(text: str, ring: RingSpec, e: int = 1):
    d = pth_root_decompose(parse_polynomial(text, ring), e)
    return {a: str(g) for a, g in d.components.items()}


def test_decompose_line():
    assert components("x^7", RingSpec(3, ("x",))) == {(1,): "x^2"}


def test_decompose_plane():
    plane = RingSpec(3, ("x", "y"))
    assert components("2*x^5*y^3", plane) == {(2, 0): "2*x*y"}
    assert components("x + y", plane) == {(1, 0): "1", (0, 1): "1"}


def test_decompose_level_two():
    assert components("x^20 + x", RingSpec(3, ("x",)), e=2) == {(2,): "x^2", (1,): "1"}


def test_reassemble_is_inverse():
    rng = random.Random(3)
    ring = RingSpec(5, ("x", "y"))
    for _ in range(15):
        g = Polynomial(
            ring,
            {(rng.randint(0, 30), rng.randint(0, 30)): rng.randint(1, 4) for _ in range(5)},
        )
        for e in (1, 2):
            assert pth_root_decompose(g, e).reassemble() == g


def test_root_of_cusp_is_unit():
    ring = RingSpec(3, ("x", "y"))
    root = frobenius_root(Ideal.principal(parse_polynomial("x^2 + y^3", ring)), 1)
    assert root.reduced().is_unit()


@pytest.mark.parametrize("p", [3, 5])
def test_root_of_principal_monomial(p):
    ring = RingSpec(p, ("x",))
    x = Polynomial.filtvar_power(ring, 1)
    for e in (1, 2):
        for a in range(0, 3 * p ** e):
            root = frobenius_root(Ideal.principal(x ** a), e)
            assert root.same_as(principal_root_oracle(ring, a, e))
            assert root.reduced().lines() == [str(x ** (a // p ** e))]


def test_root_is_smallest_ideal_with_bracket_containment():
    ring = RingSpec(3, ("x", "y"))
    I = Ideal.of(ring, [parse_polynomial("x^4*y + y^5", ring), parse_polynomial("x^3", ring)])
    J = frobenius_root(I, 1)
    bracket = Ideal(ring, tuple(g.frobenius(1) for g in J.generators))
    assert bracket.contains(I)


def test_cartier_image_of_variable():
    ring = RingSpec(3, ("x",))
    x = Polynomial.variable(ring, "x")
    assert cartier_image(Polynomial.one(ring), Ideal.principal(x), 1).reduced().is_unit()
    assert cartier_image(x ** 2, Ideal.principal(x ** 4), 1).reduced().lines() == ["x^2"]


def test_level_bound():
    ring = RingSpec(3, ("x",))
    I = Ideal.principal(Polynomial.variable(ring, "x"))
    with limits_override(emax=2):
        frobenius_root(I, 2)
        with pytest.raises(LevelBoundError):
            frobenius_root(I, 3)
    with pytest.raises(ValueError):
        frobenius_root(I, 0)


def random_monomial_ideal(rng: random.Random, ring: RingSpec, count: int = 3) -> Ideal:
    gens = []
    for _ in range(count):
        a = rng.randint(0, 30)
        gens.append(Polynomial.monomial(ring, (a, rng.randint(0, 30 - a))))
    return Ideal.of(ring, gens)


@pytest.mark.parametrize("seed", range(6))
@pytest.mark.parametrize("e", [1, 2])
def test_root_is_minimal_on_monomial_ideals(seed, e):
    ring = RingSpec(3, ("x", "y"))
    I = random_monomial_ideal(random.Random(seed), ring)
    J = frobenius_root(I, e)
    assert frobenius_power(J, e).contains(I)
    basis = J.reduced().basis
    for i in range(len(basis)):
        smaller = Ideal.of(ring, basis[:i] + basis[i + 1:])
        assert not frobenius_power(smaller, e).contains(I)


@pytest.mark.parametrize("seed", range(5))
def test_roots_compose_along_the_tower(seed):
    rng = random.Random(seed)
    ring = RingSpec(3, ("x", "y"))
    gens = []
    for _ in range(2):
        terms = {}
        for _ in range(3):
            a = rng.randint(0, 14)
            terms[(a, rng.randint(0, 14 - a))] = rng.randint(1, 2)
        gens.append(Polynomial(ring, terms))
    I = Ideal.of(ring, gens)
    assert frobenius_root(frobenius_root(I, 1), 1).same_as(frobenius_root(I, 2))
