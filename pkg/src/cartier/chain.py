import math
from functools import lru_cache
from fractions import Fraction
from typing import Optional

from sympy import n_order

from .modules import CartierAlgebraSpec, CartierModuleDesc, FractionalSubmodule
from ..algebra.frobenius import frobenius_root, root_generators
from ..algebra.groebner import Ideal
from ..algebra.poly import Polynomial
from ..utils.errors import ContainmentError, LevelBoundError, StabilizationError
from ..utils.limits import get_limits
from ..utils.logger import get_logger


logger = get_logger("cartier")


@lru_cache(maxsize=1 << 16)
def kappa_once(
    M: CartierModuleDesc, N: FractionalSubmodule, h: Optional[Polynomial] = None
) -> FractionalSubmodule:
    """kappa_M(h * N) = x^{-n} kappa(g x^{n(p-1)} h I) for N = x^{-n} I."""
    if N.is_zero():
        return N
    p = M.ring.characteristic
    n = N.shift
    multiplier = M.twist * Polynomial.filtvar_power(M.ring, n * (p - 1))
    if h is not None:
        multiplier = multiplier * h
    if multiplier.is_zero():
        return FractionalSubmodule.zero(M.ring)
    image = Ideal(M.ring, tuple(root_generators(N.ideal.scale(multiplier), 1)))
    return FractionalSubmodule.of(image, n)


def scheduled_apply(
    M: CartierModuleDesc,
    f: Polynomial,
    A: int,
    e: int,
    N: FractionalSubmodule,
) -> FractionalSubmodule:
    """kappa_M^e(f^A N) one level at a time.

    With a_0, ..., a_{e-1} the base-p digits of A mod p^e,
    kappa^e(f^A N) = f^(A // p^e) kappa(f^a_{e-1} ... kappa(f^a_0 N)),
    so no power of f above p-1 is formed inside a root.
    """
    if e == 0:
        return N.scale(f ** A)
    p = M.ring.characteristic
    high, low = divmod(A, p ** e)
    current = N
    for _ in range(e):
        low, digit = divmod(low, p)
        current = kappa_once(M, current, f ** digit if digit else None)
        if current.is_zero():
            return current
    return current.scale(f ** high) if high else current


def direct_apply(
    M: CartierModuleDesc,
    f: Polynomial,
    A: int,
    e: int,
    N: FractionalSubmodule,
) -> FractionalSubmodule:
    """kappa_M^e(f^A N) from the e-fold multiplier and a single level-e root."""
    n = N.shift
    multiplier = M.multiplier(n, e) * (f ** A)
    image = frobenius_root(N.ideal.scale(multiplier), e)
    return FractionalSubmodule.of(image, n)


def structure_apply(
    M: CartierModuleDesc,
    spec: CartierAlgebraSpec,
    e: int,
    N: FractionalSubmodule,
) -> FractionalSubmodule:
    """kappa_M^e(f^ceil(t p^e) N) for N inside the carrier."""
    emax = get_limits().emax
    if e < 1 or e > emax:
        raise LevelBoundError(f"structure level {e} outside [1, E_max={emax}]")
    if not M.carrier.contains(N):
        raise ContainmentError(f"{N} is not contained in the carrier {M.carrier}")
    return scheduled_apply(M, spec.f, spec.exponent(e), e, N)


def _p_adic_split(t: Fraction, p: int):
    """t = t2 / p^s with p not dividing the denominator of t2."""
    s = 0
    den = t.denominator
    while den % p == 0:
        den //= p
        s += 1
    return s, t * p ** s


def level_union(
    M: CartierModuleDesc,
    spec: CartierAlgebraSpec,
    N: FractionalSubmodule,
    c: Optional[Polynomial] = None,
) -> FractionalSubmodule:
    """Sum over e >= 1 of kappa_M^e(f^ceil(t p^e) c N), computed exactly.

    Write t = t2 / p^s with p prime to den(t2), r = ord_den(t2)(p) and
    m = t2 (p^r - 1). Then T_k = kappa^k(f^ceil(t2 p^k) c N) satisfies
    T_{k+r} = Phi(T_k) with Phi = kappa^r(f^m -), so the sum of all T_k is
    the least fixed point of S -> H + Phi(S) above H, the sum of the first
    r terms. Level e >= s equals kappa^s(T_{e-s}).
    """
    p = M.ring.characteristic
    f, t = spec.f, spec.t
    budget = get_limits().level_budget
    base = N.scale(c) if c is not None else N
    if base.is_zero():
        return base

    s, t2 = _p_adic_split(t, p)
    r = n_order(p, t2.denominator) if t2.denominator > 1 else 1
    m = int(t2 * (p ** r - 1))

    start = max(0, 1 - s)
    if start + r > budget:
        raise LevelBoundError(f"period {r} of t={t} exceeds level budget {budget}")
    head = FractionalSubmodule.zero(M.ring)
    for k in range(start, start + r):
        head = head + scheduled_apply(M, f, math.ceil(t2 * p ** k), k, base)

    tail = head
    levels = r
    while True:
        if levels + r > budget:
            raise StabilizationError(
                f"level sum for t={t} did not stabilize within {budget} levels"
            )
        grown = head + scheduled_apply(M, f, m, r, tail)
        levels += r
        if grown == tail:
            break
        tail = grown

    result = scheduled_apply(M, f, 0, s, tail) if s else tail
    for e in range(1, s):
        result = result + scheduled_apply(M, f, spec.exponent(e), e, base)
    logger.debug(f"level sum for t={t}: {levels} levels, period {r}, result {result}")
    return result


def algebra_plus(
    M: CartierModuleDesc, spec: CartierAlgebraSpec, N: FractionalSubmodule
) -> FractionalSubmodule:
    """C_+ N: sum of all positive-degree generators applied to N."""
    return level_union(M, spec, N)


def _chain(M: CartierModuleDesc, spec: CartierAlgebraSpec):
    budget = get_limits().chain_budget
    current = M.carrier
    yield current
    for _ in range(budget):
        current = algebra_plus(M, spec, current)
        yield current
    raise StabilizationError(
        f"C_+ chain of {M.describe()} did not stabilize within {budget} steps"
    )


@lru_cache(maxsize=1024)
def underline(M: CartierModuleDesc, spec: CartierAlgebraSpec) -> FractionalSubmodule:
    """F-pure part: the stable value of the descending chain (C_+)^h M."""
    previous = None
    for h, current in enumerate(_chain(M, spec)):
        if current == previous:
            logger.debug(f"underline stabilized after {h} steps at {current}")
            return current
        previous = current


def is_f_pure(M: CartierModuleDesc, spec: CartierAlgebraSpec) -> bool:
    return underline(M, spec) == M.carrier


def is_nilpotent(M: CartierModuleDesc, spec: CartierAlgebraSpec) -> bool:
    previous = None
    for current in _chain(M, spec):
        if current.is_zero():
            return True
        if current == previous:
            return False
        previous = current
