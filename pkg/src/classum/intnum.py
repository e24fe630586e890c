"""Elementary number theory: factorization, totients, orders, inverses, CRT.

Everything here is exact integer arithmetic.  Factorization does trial
division by small primes first and falls back to Pollard's rho with a
Miller-Rabin primality test, which is plenty for the modulus sizes this
package works with (well below 2^128).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from classum.errors import InternalInconsistencyError, PreconditionError

# Largest divisor searched by plain trial division before Pollard rho kicks in.
_TRIAL_LIMIT = 10**6

# Witness set proving primality for every n < 3.3 * 10^24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@dataclass(frozen=True)
class PrimePowerFactorization:
    """A factorization n = prod p_i^{a_i} with strictly increasing primes."""

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        last = 1
        for p, a in self.factors:
            if p <= last or a < 1:
                raise PreconditionError("factors must list increasing primes with positive exponents")
            last = p

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    def value(self) -> int:
        """Reconstruct the factored integer."""
        n = 1
        for p, a in self.factors:
            n *= p**a
        return n

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3e24, probabilistic far beyond."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for b in _MR_WITNESSES:
        x = pow(b, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    """A nontrivial factor of composite odd n (Brent's cycle variant)."""
    if n % 2 == 0:
        return 2
    seed = 1
    while True:
        seed += 1
        y, c, m = seed, seed + 1, 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


@lru_cache(maxsize=None)
def factorize(n: int) -> PrimePowerFactorization:
    """Factor n > 1 into prime powers.

    >>> factorize(15624).factors
    ((2, 3), (3, 2), (7, 1), (31, 1))
    """
    if n <= 1:
        raise PreconditionError(f"cannot factor {n}: need an integer greater than 1")
    powers: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            powers[p] = powers.get(p, 0) + 1
            n //= p
    d = 5
    while d <= _TRIAL_LIMIT and d * d <= n:
        for p in (d, d + 2):
            while n % p == 0:
                powers[p] = powers.get(p, 0) + 1
                n //= p
        d += 6
    stack = [n] if n > 1 else []
    while stack:
        v = stack.pop()
        if v == 1:
            continue
        if is_prime(v):
            powers[v] = powers.get(v, 0) + 1
            continue
        f = _pollard_rho(v)
        stack.append(f)
        stack.append(v // f)
    return PrimePowerFactorization(tuple(sorted(powers.items())))


def euler_phi(n: int) -> int:
    """Euler's totient; phi(1) = 1."""
    if n < 1:
        raise PreconditionError(f"phi undefined for {n}")
    if n == 1:
        return 1
    out = 1
    for p, a in factorize(n):
        out *= p ** (a - 1) * (p - 1)
    return out


def mult_order(b: int, m: int) -> int:
    """Multiplicative order of b modulo m (m > 1, gcd(b, m) = 1).

    Starts from phi(m) and strips prime factors from the exponent while the
    power stays 1, so no divisor enumeration is needed.
    """
    if m <= 1:
        raise PreconditionError(f"order undefined modulo {m}")
    b %= m
    if math.gcd(b, m) != 1:
        raise PreconditionError(f"{b} is not a unit modulo {m}")
    order = euler_phi(m)
    if order == 1:
        return 1
    for p, _ in factorize(order):
        while order % p == 0 and pow(b, order // p, m) == 1:
            order //= p
    return order


def mod_inverse(a: int, M: int) -> int:
    """The inverse of a modulo M, in [0, M)."""
    if M <= 0:
        raise PreconditionError(f"modulus {M} must be positive")
    try:
        return pow(a, -1, M)
    except ValueError:
        raise PreconditionError(f"{a} has no inverse modulo {M}") from None


def crt_combine(residues: list[tuple[int, int]]) -> int:
    """Solve x = r_i (mod m_i) for pairwise coprime moduli; x in [0, prod m_i)."""
    if not residues:
        raise PreconditionError("need at least one residue")
    x, M = 0, 1
    for r, m in residues:
        if m < 1:
            raise PreconditionError(f"modulus {m} must be positive")
        g = math.gcd(M, m)
        if g != 1:
            raise PreconditionError(f"moduli are not pairwise coprime (shared factor {g})")
        # lift x to the combined modulus
        x += M * ((r - x) * mod_inverse(M % m, m) % m) if m > 1 else 0
        M *= m
    return x % M


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    if n < 1:
        raise PreconditionError(f"no divisors for {n}")
    out = [1]
    if n > 1:
        for p, a in factorize(n):
            out = [d * p**e for d in out for e in range(a + 1)]
    return sorted(out)


def primitive_root(p: int) -> int:
    """Smallest primitive root modulo an odd prime p."""
    if not is_prime(p) or p == 2:
        raise PreconditionError(f"{p} is not an odd prime")
    targets = [(p - 1) // r for r, _ in factorize(p - 1)]
    g = 2
    while True:
        if all(pow(g, t, p) != 1 for t in targets):
            return g
        g += 1
        if g >= p:
            raise InternalInconsistencyError(f"no primitive root found modulo {p}")
