"""Exact arithmetic in the cyclic polynomial ring (Z/M)[x]/(x^m - 1).

The coefficient vector of (1 + a*x)^n in this ring is exactly the vector of
binomial-coefficient class sums sum_{k = r (mod m)} C(n,k) a^k modulo M, so
powering here is the engine behind every class-sum computation.  The class x
plays the role of an m-th root of unity without ever leaving integer
arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from classum import backend
from classum.errors import PreconditionError
from classum.intnum import PrimePowerFactorization, factorize


@dataclass(frozen=True)
class Modulus:
    """A prime-power-structured modulus M = q^N with the factorization of q."""

    q: int
    N: int = 1
    M: int = field(init=False)
    q_factors: PrimePowerFactorization = field(init=False)

    def __post_init__(self):
        if self.q <= 1:
            raise PreconditionError(f"q must exceed 1, got {self.q}")
        if self.N < 1:
            raise PreconditionError(f"N must be positive, got {self.N}")
        object.__setattr__(self, "M", self.q**self.N)
        object.__setattr__(self, "q_factors", factorize(self.q))


@dataclass(frozen=True)
class CyclicPoly:
    """An element of (Z/M)[x]/(x^m - 1): m coefficients, each in [0, M)."""

    m: int
    modulus: Modulus
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.m < 1:
            raise PreconditionError(f"ring needs m >= 1, got {self.m}")
        if len(self.coeffs) != self.m:
            raise PreconditionError(f"expected {self.m} coefficients, got {len(self.coeffs)}")
        M = self.modulus.M
        if any(c < 0 or c >= M for c in self.coeffs):
            raise PreconditionError("coefficients must already be reduced into [0, M)")


def ring_one(m: int, modulus: Modulus) -> CyclicPoly:
    """The multiplicative identity."""
    return CyclicPoly(m, modulus, (1,) + (0,) * (m - 1))


def one_plus_ax(a: int, m: int, modulus: Modulus) -> CyclicPoly:
    """The element 1 + a*x; for m = 1 that collapses to the scalar 1 + a."""
    if m < 1:
        raise PreconditionError(f"ring needs m >= 1, got {m}")
    M = modulus.M
    if m == 1:
        return CyclicPoly(1, modulus, ((1 + a) % M,))
    return CyclicPoly(m, modulus, (1, a % M) + (0,) * (m - 2))


def _check_compatible(u: CyclicPoly, v: CyclicPoly):
    if u.m != v.m:
        raise PreconditionError(f"ring size mismatch: {u.m} vs {v.m}")
    if u.modulus != v.modulus:
        raise PreconditionError(f"modulus mismatch: {u.modulus.M} vs {v.modulus.M}")


def ring_mul(u: CyclicPoly, v: CyclicPoly) -> CyclicPoly:
    """Schoolbook cyclic convolution product."""
    _check_compatible(u, v)
    coeffs = backend.cyclic_mul(u.coeffs, v.coeffs, u.modulus.M)
    return CyclicPoly(u.m, u.modulus, tuple(coeffs))


def ring_pow(u: CyclicPoly, e: int) -> CyclicPoly:
    """u^e by square-and-multiply; e = 0 gives the identity."""
    if e < 0:
        raise PreconditionError(f"exponent must be nonnegative, got {e}")
    coeffs = backend.cyclic_pow(u.coeffs, e, u.modulus.M)
    return CyclicPoly(u.m, u.modulus, tuple(coeffs))


def evaluate_at_one(u: CyclicPoly) -> int:
    """The image of u under x -> 1, i.e. the coefficient sum mod M."""
    return sum(u.coeffs) % u.modulus.M


def reduce_mod_allones(u: CyclicPoly) -> tuple[int, ...]:
    """Remainder of u modulo 1 + x + ... + x^(m-1), as m-1 coefficients.

    The divisor is monic of degree m-1 and u has degree below m, so the
    remainder is u minus (top coefficient) times the divisor.  A zero
    remainder means u vanishes at every m-th root of unity except 1.
    """
    if u.m < 2:
        raise PreconditionError("reduction needs m >= 2")
    M = u.modulus.M
    top = u.coeffs[-1]
    return tuple((c - top) % M for c in u.coeffs[:-1])
