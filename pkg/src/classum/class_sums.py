"""Binomial-coefficient class sums and their independent oracle.

The class sum for (n, r, m, a) is sum of C(n,k) * a^k over 0 <= k <= n with
k = r (mod m).  The engine reads it off as coefficient r of (1 + a*x)^n in
(Z/M)[x]/(x^m - 1); the oracle recomputes it straight from binomial
coefficients and never touches the ring, which keeps the two routes
independent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from classum.cyclic_ring import CyclicPoly, Modulus, one_plus_ax, ring_pow
from classum.errors import InternalInconsistencyError, PreconditionError

# Above this upper index the oracle switches from exact binomials to an
# additive Pascal row mod M (exact combs get slow, the row stays O(n) space).
EXACT_BINOMIAL_LIMIT = 20_000


@dataclass(frozen=True)
class ClassSumQuery:
    n: int
    r: int
    m: int
    a: int
    modulus: Modulus

    def __post_init__(self):
        if self.n < 0:
            raise PreconditionError(f"upper index must be nonnegative, got {self.n}")
        if self.m < 1:
            raise PreconditionError(f"class modulus must be positive, got {self.m}")


def class_sum_vector(n: int, m: int, a: int, modulus: Modulus) -> tuple[int, ...]:
    """All m class sums for upper index n at once: the coefficients of (1+ax)^n."""
    if n < 0:
        raise PreconditionError(f"upper index must be nonnegative, got {n}")
    if m < 1:
        raise PreconditionError(f"class modulus must be positive, got {m}")
    return ring_pow(one_plus_ax(a, m, modulus), n).coeffs


def class_sum(query: ClassSumQuery) -> int:
    """The class sum mod M, via the cyclic-ring engine."""
    return class_sum_vector(query.n, query.m, query.a, query.modulus)[query.r % query.m]


def _pascal_row(n: int, M: int) -> list[int]:
    """Row n of Pascal's triangle mod M by the additive recurrence."""
    row = [1]
    for _ in range(n):
        row = [1] + [(row[j] + row[j + 1]) % M for j in range(len(row) - 1)] + [1]
    return row


def class_sum_oracle(query: ClassSumQuery, exact_limit: int = EXACT_BINOMIAL_LIMIT) -> int:
    """Brute-force class sum that shares no code with the ring engine."""
    n, r, m, a = query.n, query.r % query.m, query.m, query.a
    M = query.modulus.M
    a_red = a % M
    step = pow(a_red, m, M)
    ak = pow(a_red, r, M)
    total = 0
    if n <= exact_limit:
        for k in range(r, n + 1, m):
            total = (total + math.comb(n, k) * ak) % M
            ak = ak * step % M
    else:
        row = _pascal_row(n, M)
        for k in range(r, n + 1, m):
            total = (total + row[k] * ak) % M
            ak = ak * step % M
    return total


def oracle_profile(n: int, m: int, a: int, modulus: Modulus, row: list[int] | None = None) -> tuple[int, ...]:
    """All m class sums by the oracle route.

    `row` may carry exact binomial coefficients C(n, 0..n) to share across
    calls; otherwise they are recomputed here.
    """
    M = modulus.M
    if row is None:
        row = [math.comb(n, k) for k in range(n + 1)]
    out = [0] * m
    a_red = a % M
    ak = 1
    for k in range(n + 1):
        out[k % m] = (out[k % m] + row[k] * ak) % M
        ak = ak * a_red % M
    return tuple(out)


def signed_class_sum(n: int, r: int, m: int, modulus: Modulus) -> int:
    """Alternating class sum: sum of (-1)^((k-r)/m) C(n,k) over k = r (mod 2m).

    Equals the difference of the plain class sums at residues r and r+m taken
    modulo 2m.
    """
    if m < 1:
        raise PreconditionError(f"class modulus must be positive, got {m}")
    vec = class_sum_vector(n, 2 * m, 1, modulus)
    return (vec[r % (2 * m)] - vec[(r + m) % (2 * m)]) % modulus.M


@dataclass(frozen=True)
class AksReport:
    """Outcome of the two-route check of (x+a)^n = x^n + b mod (q, x^m - 1)."""

    a: int
    b: int
    q: int
    m: int
    n: int
    holds: bool
    residues: tuple[int, ...]


def aks_polynomial_check(a: int, b: int, q: int, m: int, n: int) -> AksReport:
    """Decide (x+a)^n = x^n + b in (Z/q)[x]/(x^m - 1), two independent ways.

    Route one expands the power in the ring.  Route two tests the equivalent
    class-sum conditions: with S_r = sum_{1<=k<=n, k=r (m)} C(n,k) a^k, the
    identity holds iff S_r = b for r = n (mod m) and S_r = 0 for every other
    residue.  The routes must agree; disagreement is an internal error.
    """
    if q <= 1:
        raise PreconditionError(f"q must exceed 1, got {q}")
    if m < 1 or n < 1:
        raise PreconditionError("need m >= 1 and n >= 1")
    mod = Modulus(q, 1)

    # ring route
    if m == 1:
        base = ((a + 1) % q,)
        target = ((1 + b) % q,)
    else:
        base = (a % q, 1) + (0,) * (m - 2)
        t = [0] * m
        t[n % m] = 1
        t[0] = (t[0] + b) % q
        target = tuple(t)
    poly_ok = ring_pow(CyclicPoly(m, mod, base), n).coeffs == target

    # class-sum route
    vec = class_sum_vector(n, m, a, mod)
    residues = tuple((vec[r] - (1 if r == 0 else 0)) % q for r in range(m))
    want = n % m
    sum_ok = all(residues[r] == (b % q if r == want else 0) for r in range(m))

    if poly_ok != sum_ok:
        raise InternalInconsistencyError(
            f"ring route says {poly_ok}, class-sum route says {sum_ok} for "
            f"(a={a}, b={b}, q={q}, m={m}, n={n})"
        )
    return AksReport(a=a, b=b, q=q, m=m, n=n, holds=poly_ok, residues=residues)
