"""Mechanical verification of class-sum congruences.

Every verifier evaluates both sides of one congruence with exact integer
arithmetic and reports the residues and the outcome.  Statements with a
denominator m are checked with both sides multiplied by m, which is legal
because every such statement requires gcd(q, m) = 1.  A verifier called
outside its hypotheses returns a NotApplicableReport (it never throws for
that); a disagreement between the ring engine and the binomial oracle raises
InternalInconsistencyError because it can only mean a bug here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from classum.class_sums import class_sum_vector, oracle_profile
from classum.cyclic_ring import Modulus, one_plus_ax, reduce_mod_allones, ring_mul, ring_pow
from classum.errors import InternalInconsistencyError, PreconditionError
from classum.intnum import crt_combine, euler_phi, factorize, is_prime, primitive_root
from classum.periods import Admissibility, admissible, nu

# Engine results with upper index at most this are recomputed by the oracle.
ORACLE_CROSSCHECK_LIMIT = 300


@dataclass(frozen=True)
class CongruenceReport:
    identity_id: str
    params: dict
    lhs: int | tuple
    rhs: int | tuple
    modulus: int
    holds: bool


@dataclass(frozen=True)
class NotApplicableReport:
    identity_id: str
    params: dict
    reason: str


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def binom(top: int, k: int) -> int:
    """Binomial coefficient with integer (possibly negative) top."""
    if k < 0:
        return 0
    if top >= 0:
        return math.comb(top, k)
    num = 1
    for i in range(k):
        num *= top - i
    return num // math.factorial(k)


def _alternating_geom(a: int, m: int, q: int) -> int:
    """sum_{j<m} (-a)^j reduced mod q."""
    s, t = 0, 1
    step = (-a) % q
    for _ in range(m):
        s = (s + t) % q
        t = t * step % q
    return s


def _checked_vector(n: int, m: int, a: int, modulus: Modulus) -> tuple[int, ...]:
    vec = class_sum_vector(n, m, a, modulus)
    if n <= ORACLE_CROSSCHECK_LIMIT:
        ref = oracle_profile(n, m, a, modulus)
        if vec != ref:
            raise InternalInconsistencyError(
                f"engine and oracle disagree at n={n}, m={m}, a={a}, M={modulus.M}"
            )
    return vec


def _power_sequence(m: int, a: int, modulus: Modulus, l: int, T: int, count: int) -> list[tuple[int, ...]]:
    """Class-sum vectors at upper indices l, l+T, ..., l+(count-1)T."""
    u = one_plus_ax(a, m, modulus)
    step = ring_pow(u, T)
    current = ring_pow(u, l)
    vectors = []
    for j in range(count):
        if j:
            current = ring_mul(current, step)
        idx = l + j * T
        if idx <= ORACLE_CROSSCHECK_LIMIT:
            ref = oracle_profile(idx, m, a, modulus)
            if current.coeffs != ref:
                raise InternalInconsistencyError(
                    f"engine and oracle disagree at n={idx}, m={m}, a={a}, M={modulus.M}"
                )
        vectors.append(current.coeffs)
    return vectors


def _basic_reason(q: int, m: int) -> str | None:
    if q <= 1:
        return f"q must exceed 1, got {q}"
    if m < 1:
        return f"m must be positive, got {m}"
    g = math.gcd(q, m)
    if g != 1:
        return f"gcd(q, m) = {g}, need 1"
    return None


# ---------------------------------------------------------------------------
# alternating binomial transforms of class sums over one explicit period


def verify_theorem12_all_r(q: int, m: int, a: int, l: int, n: int, T: int | None = None):
    """All-residue form of verify_theorem12 sharing one power computation."""
    params = {"q": q, "m": m, "a": a, "l": l, "n": n, "T": T}

    def na(reason):
        return NotApplicableReport("theorem12", params, reason)

    reason = _basic_reason(q, m)
    if reason:
        return na(reason)
    if n < 1:
        return na(f"n must be positive, got {n}")
    if l < 0:
        return na(f"l must be nonnegative, got {l}")
    s = _alternating_geom(a, m, q)
    g = math.gcd(s, q)
    if g != 1:
        return na(f"gcd(q, sum of (-a)^j for j < m) = {g}, need 1")
    period = nu(m, q)
    if T is None:
        T = period
        params = {**params, "T": T}
    if T < 1 or T % period != 0:
        return na(f"T = {T} is not a positive multiple of the explicit period {period}")

    Q = q**n
    mod = Modulus(q, n)
    vectors = _power_sequence(m, a, mod, l, T, n + 1)
    weights = [_sign(k) * math.comb(n, k) for k in range(n + 1)]
    base = (a + 1) % Q
    rhs = pow(base, l, Q) * pow((1 - pow(base, T, Q)) % Q, n, Q) % Q

    reports = []
    for r in range(m):
        acc = sum(w * vec[r] for w, vec in zip(weights, vectors))
        lhs = m * acc % Q
        reports.append(
            CongruenceReport("theorem12", {**params, "r": r}, lhs, rhs, Q, lhs == rhs)
        )
    return reports


def verify_theorem12(q: int, m: int, a: int, l: int, r: int, n: int, T: int | None = None):
    """Check m * sum_k (-1)^k C(n,k) [kT+l, r](a) = (a+1)^l (1-(a+1)^T)^n (mod q^n),
    valid when q is coprime to both m and sum_{j<m} (-a)^j and T is a multiple
    of the explicit period."""
    out = verify_theorem12_all_r(q, m, a, l, n, T)
    if isinstance(out, NotApplicableReport):
        return NotApplicableReport(out.identity_id, {**out.params, "r": r}, out.reason)
    report = out[r % m]
    return CongruenceReport(report.identity_id, {**report.params, "r": r}, report.lhs, report.rhs, report.modulus, report.holds)


def verify_theorem11_all_r(q: int, m: int, l: int, n: int, T: int | None = None):
    """All-residue form of verify_theorem11."""
    params = {"q": q, "m": m, "l": l, "n": n, "T": T}

    def na(reason):
        return NotApplicableReport("theorem11", params, reason)

    reason = _basic_reason(q, m)
    if reason:
        return na(reason)
    if n < 1:
        return na(f"n must be positive, got {n}")
    if l < 0:
        return na(f"l must be nonnegative, got {l}")
    period = nu(m, q)
    if T is None:
        T = period
        params = {**params, "T": T}
    if T < 1 or T % period != 0:
        return na(f"T = {T} is not a positive multiple of the explicit period {period}")

    Q = q**n
    mod = Modulus(q, n)
    vectors = _power_sequence(m, 1, mod, l, T, n + 1)
    weights = [_sign(k) * math.comb(n, k) for k in range(n + 1)]
    if m % 2:
        rhs_for = lambda r: pow(2, l, Q) * pow((1 - pow(2, T, Q)) % Q, n, Q) % Q
    else:
        rhs_for = lambda r: ((_sign(r) if l == 0 else 0)) % Q

    reports = []
    for r in range(m):
        acc = sum(w * vec[r] for w, vec in zip(weights, vectors))
        lhs = m * acc % Q
        rhs = rhs_for(r)
        reports.append(
            CongruenceReport("theorem11", {**params, "r": r}, lhs, rhs, Q, lhs == rhs)
        )
    return reports


def verify_theorem11(q: int, m: int, l: int, r: int, n: int, T: int | None = None):
    """Check the plain-sum congruence m * sum_k (-1)^k C(n,k) [kT+l, r] modulo q^n:
    the right side is 2^l (1-2^T)^n for odd m and, for even m, (-1)^r when
    l = 0 and zero otherwise."""
    out = verify_theorem11_all_r(q, m, l, n, T)
    if isinstance(out, NotApplicableReport):
        return NotApplicableReport(out.identity_id, {**out.params, "r": r}, out.reason)
    report = out[r % m]
    return CongruenceReport(report.identity_id, {**report.params, "r": r}, report.lhs, report.rhs, report.modulus, report.holds)


# ---------------------------------------------------------------------------
# single-period consequences


def _coprime_part(q: int, b: int) -> int:
    """Largest divisor of q coprime to b."""
    q0 = 1
    for p, alpha in factorize(q):
        if b % p != 0:
            q0 *= p**alpha
    return q0


def verify_cor13_split(q: int, m: int, a: int, l: int, r: int):
    """Check [l+nu, r](a) - [l, r](a) two ways: it vanishes modulo the largest
    divisor q0 of q coprime to a+1, and m times it is -(a+1)^l modulo q/q0."""
    params = {"q": q, "m": m, "a": a, "l": l, "r": r}
    reason = _basic_reason(q, m)
    if reason is None and l < 0:
        reason = f"l must be nonnegative, got {l}"
    if reason is None:
        g = math.gcd(_alternating_geom(a, m, q), q)
        if g != 1:
            reason = f"gcd(q, sum of (-a)^j for j < m) = {g}, need 1"
    if reason:
        return NotApplicableReport("cor13_split", params, reason)

    period = nu(m, q)
    mod = Modulus(q, 1)
    seq = _power_sequence(m, a, mod, l, period, 2)
    diff = (seq[1][r % m] - seq[0][r % m]) % q
    q0 = _coprime_part(q, a + 1)
    q1 = q // q0

    lhs0 = diff % q0 if q0 > 1 else 0
    rep0 = CongruenceReport(
        "cor13_split", {**params, "branch": "q0", "q0": q0}, lhs0, 0, q0, lhs0 == 0
    )
    if q1 > 1:
        lhs1 = m * diff % q1
        rhs1 = (-pow((a + 1) % q1, l, q1)) % q1
    else:
        lhs1 = rhs1 = 0
    rep1 = CongruenceReport(
        "cor13_split", {**params, "branch": "q_over_q0", "q0": q0}, lhs1, rhs1, q1, lhs1 == rhs1
    )
    return (rep0, rep1)


def verify_cor13_general(q: int, m: int, a: int, l: int, r: int, n: int, k: int):
    """Check the order-n binomial transform of class sums along multiples of nu:
    m * ([k*nu+l, r](a) - sum_{j<n} (-1)^(n-1-j) C(k-1-j, n-1-j) C(k,j) [j*nu+l, r](a))
    = (a+1)^l sum_{n<=j<=k} C(k,j) ((a+1)^nu - 1)^j  (mod q^n)."""
    params = {"q": q, "m": m, "a": a, "l": l, "r": r, "n": n, "k": k}
    reason = _basic_reason(q, m)
    if reason is None and n < 1:
        reason = f"n must be positive, got {n}"
    if reason is None and k < 1:
        reason = f"k must be positive, got {k}"
    if reason is None and l < 0:
        reason = f"l must be nonnegative, got {l}"
    if reason is None:
        g = math.gcd(_alternating_geom(a, m, q), q)
        if g != 1:
            reason = f"gcd(q, sum of (-a)^j for j < m) = {g}, need 1"
    if reason:
        return NotApplicableReport("cor13_general", params, reason)

    period = nu(m, q)
    Q = q**n
    mod = Modulus(q, n)
    count = max(k, n - 1) + 1
    vectors = _power_sequence(m, a, mod, l, period, count)
    rr = r % m

    acc = vectors[k][rr]
    for j in range(n):
        acc -= _sign(n - 1 - j) * binom(k - 1 - j, n - 1 - j) * math.comb(k, j) * vectors[j][rr]
    lhs = m * acc % Q

    base = (a + 1) % Q
    block = (pow(base, period, Q) - 1) % Q
    rhs = pow(base, l, Q) * sum(math.comb(k, j) * pow(block, j, Q) for j in range(n, k + 1)) % Q
    return CongruenceReport("cor13_general", params, lhs, rhs, Q, lhs == rhs)


def verify_cor13_even(q: int, m: int, l: int, r: int, n: int, k: int):
    """Even-m variant of the order-n transform for plain class sums, whose right
    side collapses to C(k-1, n-1) (-1)^(n+r) when l = 0 and to zero otherwise."""
    params = {"q": q, "m": m, "l": l, "r": r, "n": n, "k": k}
    reason = _basic_reason(q, m)
    if reason is None and m % 2:
        reason = f"m must be even, got {m}"
    if reason is None and n < 1:
        reason = f"n must be positive, got {n}"
    if reason is None and k < 1:
        reason = f"k must be positive, got {k}"
    if reason is None and l < 0:
        reason = f"l must be nonnegative, got {l}"
    if reason:
        return NotApplicableReport("cor13_even", params, reason)

    period = nu(m, q)
    Q = q**n
    mod = Modulus(q, n)
    count = max(k, n - 1) + 1
    vectors = _power_sequence(m, 1, mod, l, period, count)
    rr = r % m

    acc = vectors[k][rr]
    for j in range(n):
        acc -= _sign(n - 1 - j) * binom(k - 1 - j, n - 1 - j) * math.comb(k, j) * vectors[j][rr]
    lhs = m * acc % Q
    rhs = (_sign(n + r) * binom(k - 1, n - 1) if l == 0 else 0) % Q
    return CongruenceReport("cor13_even", params, lhs, rhs, Q, lhs == rhs)


def verify_cor13_period(q: int, m: int, l: int, r: int):
    """Check m * ([l+nu, r] - [l, r]) = (-1)^(r-1) [l = 0] (mod q) for even m."""
    params = {"q": q, "m": m, "l": l, "r": r}
    reason = _basic_reason(q, m)
    if reason is None and m % 2:
        reason = f"m must be even, got {m}"
    if reason is None and l < 0:
        reason = f"l must be nonnegative, got {l}"
    if reason:
        return NotApplicableReport("cor13_period", params, reason)

    period = nu(m, q)
    mod = Modulus(q, 1)
    seq = _power_sequence(m, 1, mod, l, period, 2)
    lhs = m * (seq[1][r % m] - seq[0][r % m]) % q
    rhs = (_sign(r - 1) if l == 0 else 0) % q
    return CongruenceReport("cor13_period", params, lhs, rhs, q, lhs == rhs)


def verify_cor14(q: int, m: int, l: int, r: int, k: int):
    """Check the second-order relation modulo q^2:
    m * ([k*nu+l, r] - k [nu+l, r] + (k-1) [l, r]) equals (-1)^r (k-1) [l = 0]
    for even m and 2^l (2^(k*nu) - 1 - k (2^nu - 1)) for odd m."""
    params = {"q": q, "m": m, "l": l, "r": r, "k": k}
    reason = _basic_reason(q, m)
    if reason is None and k < 1:
        reason = f"k must be positive, got {k}"
    if reason is None and l < 0:
        reason = f"l must be nonnegative, got {l}"
    if reason:
        return NotApplicableReport("cor14", params, reason)

    period = nu(m, q)
    Q = q * q
    mod = Modulus(q, 2)
    vectors = _power_sequence(m, 1, mod, l, period, k + 1)
    rr = r % m
    lhs = m * (vectors[k][rr] - k * vectors[1][rr] + (k - 1) * vectors[0][rr]) % Q
    if m % 2 == 0:
        rhs = (_sign(r) * (k - 1) if l == 0 else 0) % Q
    else:
        rhs = pow(2, l, Q) * ((pow(2, k * period, Q) - 1 - k * (pow(2, period, Q) - 1)) % Q) % Q
    return CongruenceReport("cor14", params, lhs, rhs, Q, lhs == rhs)


# ---------------------------------------------------------------------------
# classical congruences for plain class sums with m = p - 1


def _odd_prime_reason(p: int) -> str | None:
    if p < 3 or not is_prime(p):
        return f"p must be an odd prime, got {p}"
    return None


def verify_glaisher(p: int, n: int, r: int):
    """Check [n+p-1, r] = [n, r] (mod p) for classes modulo p-1."""
    params = {"p": p, "n": n, "r": r}
    reason = _odd_prime_reason(p)
    if reason is None and n < 1:
        reason = f"n must be positive, got {n}"
    if reason:
        return NotApplicableReport("glaisher", params, reason)
    m = p - 1
    mod = Modulus(p, 1)
    lhs = _checked_vector(n + p - 1, m, 1, mod)[r % m]
    rhs = _checked_vector(n, m, 1, mod)[r % m]
    return CongruenceReport("glaisher", params, lhs, rhs, p, lhs == rhs)


def verify_hermite(p: int, n: int):
    """Check [n, 0] = 1 (mod p) for odd n, classes modulo p-1."""
    params = {"p": p, "n": n}
    reason = _odd_prime_reason(p)
    if reason is None and (n < 1 or n % 2 == 0):
        reason = f"n must be a positive odd integer, got {n}"
    if reason:
        return NotApplicableReport("hermite", params, reason)
    lhs = _checked_vector(n, p - 1, 1, Modulus(p, 1))[0]
    return CongruenceReport("hermite", params, lhs, 1, p, lhs == 1)


def verify_carlitz(p: int, alpha: int, n: int):
    """Check p + (p-1) * sum C(p^(alpha-1) n, k) = 0 (mod p^alpha), the sum over
    0 < k < p^(alpha-1) n with p-1 dividing k."""
    params = {"p": p, "alpha": alpha, "n": n}
    reason = _odd_prime_reason(p)
    if reason is None and alpha < 1:
        reason = f"alpha must be positive, got {alpha}"
    if reason is None and n < 1:
        reason = f"n must be positive, got {n}"
    if reason:
        return NotApplicableReport("carlitz", params, reason)
    N = p ** (alpha - 1) * n
    Q = p**alpha
    vec = _checked_vector(N, p - 1, 1, Modulus(p, alpha))
    interior = (vec[0] - 1 - (1 if N % (p - 1) == 0 else 0)) % Q
    lhs = (p + (p - 1) * interior) % Q
    return CongruenceReport("carlitz", params, lhs, 0, Q, lhs == 0)


def verify_carlitz_lift(p: int, alpha: int, n: int, r: int):
    """Check [p^alpha n, r] = [p^(alpha-1) n, r] (mod p^alpha), classes mod p-1."""
    params = {"p": p, "alpha": alpha, "n": n, "r": r}
    reason = _odd_prime_reason(p)
    if reason is None and alpha < 1:
        reason = f"alpha must be positive, got {alpha}"
    if reason is None and n < 1:
        reason = f"n must be positive, got {n}"
    if reason:
        return NotApplicableReport("carlitz_lift", params, reason)
    m = p - 1
    Q = p**alpha
    mod = Modulus(p, alpha)
    lhs = _checked_vector(p**alpha * n, m, 1, mod)[r % m]
    rhs = _checked_vector(p ** (alpha - 1) * n, m, 1, mod)[r % m]
    return CongruenceReport("carlitz_lift", params, lhs, rhs, Q, lhs == rhs)


def verify_dimitrov(p: int, r: int, k: int):
    """Check [k(p-1), r] = k C(p-1, r) - (-1)^r (k-1)(p+1) + [r = 0] (mod p^2)."""
    params = {"p": p, "r": r, "k": k}
    reason = _odd_prime_reason(p)
    if reason is None and not 0 <= r <= p - 2:
        reason = f"r must lie in 0..p-2, got {r}"
    if reason is None and k < 1:
        reason = f"k must be positive, got {k}"
    if reason:
        return NotApplicableReport("dimitrov", params, reason)
    Q = p * p
    lhs = _checked_vector(k * (p - 1), p - 1, 1, Modulus(p, 2))[r]
    rhs = (k * math.comb(p - 1, r) - _sign(r) * (k - 1) * (p + 1) + (1 if r == 0 else 0)) % Q
    return CongruenceReport("dimitrov", params, lhs, rhs, Q, lhs == rhs)


def verify_remark11_period(q: int, m: int, a: int, n: int, r: int):
    """Check that nu really is a period: [n+nu, r](a) = [n, r](a) (mod q) for
    admissible a and n >= 1."""
    params = {"q": q, "m": m, "a": a, "n": n, "r": r}
    reason = _basic_reason(q, m)
    if reason is None and n < 1:
        reason = f"n must be positive, got {n}"
    if reason is None and admissible(a, m, q) is Admissibility.INADMISSIBLE:
        reason = f"a = {a} is inadmissible for m = {m}, q = {q}"
    if reason:
        return NotApplicableReport("remark11_period", params, reason)
    period = nu(m, q)
    mod = Modulus(q, 1)
    lhs = _checked_vector(n + period, m, a, mod)[r % m]
    rhs = _checked_vector(n, m, a, mod)[r % m]
    return CongruenceReport("remark11_period", params, lhs, rhs, q, lhs == rhs)


_CLASSICAL = {
    "glaisher": verify_glaisher,
    "hermite": verify_hermite,
    "carlitz": verify_carlitz,
    "carlitz_lift": verify_carlitz_lift,
    "dimitrov": verify_dimitrov,
    "remark11_period": verify_remark11_period,
}


def verify_classical(identity_id: str, **params):
    """Dispatch to one of the classical plain-class-sum verifiers."""
    try:
        fn = _CLASSICAL[identity_id]
    except KeyError:
        raise PreconditionError(f"unknown classical identity {identity_id!r}") from None
    return fn(**params)


# ---------------------------------------------------------------------------
# root-of-unity statements checked inside quotient rings


def verify_lemma21(q: int, m: int, a: int):
    """Check (1+a*zeta)^nu = 1 (mod q) for every m-th root of unity zeta != 1,
    by reducing (1+a*x)^nu - 1 modulo (q, 1 + x + ... + x^(m-1)).
    Requires gcd(q, m * sum_{j<m} (-a)^j) = 1."""
    params = {"q": q, "m": m, "a": a}
    reason = None
    if q <= 1:
        reason = f"q must exceed 1, got {q}"
    elif m < 2:
        reason = f"m must be at least 2 (no root of unity other than 1), got {m}"
    else:
        s = _alternating_geom(a, m, q)
        g = math.gcd(m % q * s % q, q)
        if g != 1:
            reason = f"gcd(q, m * sum of (-a)^j for j < m) shares the factor {g}"
    if reason:
        return NotApplicableReport("lemma21", params, reason)

    period = nu(m, q)
    power = ring_pow(one_plus_ax(a, m, Modulus(q, 1)), period)
    lhs = reduce_mod_allones(power)
    rhs = (1,) + (0,) * (m - 2)
    return CongruenceReport("lemma21", {**params, "nu": period}, lhs, rhs, q, lhs == rhs)


def verify_remark21(q: int, m: int, a: int):
    """Construct the CRT element g of order dividing m with every g^j - 1
    (0 < j < m) a unit, then check (1 + a g^j)^nu = 1 (mod q) for 0 < j < m.
    Requires m to divide p - 1 for every prime p dividing q, and
    gcd(q, sum_{j<m} (-a)^j) = 1."""
    params = {"q": q, "m": m, "a": a}
    reason = None
    if q <= 1:
        reason = f"q must exceed 1, got {q}"
    elif m < 1:
        reason = f"m must be positive, got {m}"
    else:
        bad = [p for p, _ in factorize(q) if (p - 1) % m != 0]
        if bad:
            reason = f"m = {m} does not divide p - 1 for prime divisor(s) {bad}"
        else:
            g = math.gcd(_alternating_geom(a, m, q), q)
            if g != 1:
                reason = f"gcd(q, sum of (-a)^j for j < m) = {g}, need 1"
    if reason:
        return NotApplicableReport("remark21", params, reason)

    if m == 1:
        g = 1 % q
    else:
        parts = []
        for p, alpha in factorize(q):
            root = primitive_root(p)
            parts.append((pow(root, euler_phi(p**alpha) // m, p**alpha), p**alpha))
        g = crt_combine(parts)

    if pow(g, m, q) != 1:
        raise InternalInconsistencyError(f"constructed g = {g} fails g^m = 1 (mod {q})")
    for j in range(1, m):
        share = math.gcd(pow(g, j, q) - 1, q)
        if share != 1:
            raise InternalInconsistencyError(
                f"constructed g = {g} has gcd(g^{j} - 1, q) = {share}"
            )

    period = nu(m, q)
    lhs = tuple(pow((1 + a * pow(g, j, q)) % q, period, q) for j in range(1, m))
    rhs = (1,) * (m - 1)
    return CongruenceReport(
        "remark21", {**params, "g": g, "nu": period}, lhs, rhs, q, lhs == rhs
    )


# ---------------------------------------------------------------------------
# power-sum decomposition over a prime modulus


@dataclass(frozen=True)
class QNormalDecomposition:
    p: int
    m: int
    a: int
    r: int
    coeffs: tuple[tuple[int, int], ...]  # (j, c_j), j over 1..p-1
    holds: bool
    checked_upto: int

    def coeff_map(self) -> dict[int, int]:
        return dict(self.coeffs)


def _solve_mod_p(matrix: list[list[int]], rhs: list[int], p: int) -> list[int] | None:
    """Gaussian elimination over Z/p; None when the system is singular."""
    size = len(matrix)
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    for col in range(size):
        pivot = next((i for i in range(col, size) if aug[i][col] % p), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = pow(aug[col][col], -1, p)
        aug[col] = [v * inv % p for v in aug[col]]
        for i in range(size):
            if i != col and aug[i][col]:
                factor = aug[i][col]
                aug[i] = [(v - factor * w) % p for v, w in zip(aug[i], aug[col])]
    return [aug[i][size] for i in range(size)]


def qnormal_decompose(p: int, m: int, a: int, r: int, check_upto: int | None = None):
    """Express n -> [n, r](a) mod p as sum_j c_j j^n over the units j of Z/p.

    Solves the (p-1) x (p-1) system from samples at n = 1..p-1 and verifies
    the representation further out (by default through n = 2p-2).  Requires p
    an odd prime with m dividing p-1.
    """
    params = {"p": p, "m": m, "a": a, "r": r}
    reason = _odd_prime_reason(p)
    if reason is None and (m < 1 or (p - 1) % m != 0):
        reason = f"m must divide p - 1, got m = {m} for p = {p}"
    if reason:
        return NotApplicableReport("qnormal", params, reason)
    if check_upto is None:
        check_upto = 2 * (p - 1)
    check_upto = max(check_upto, p - 1)

    mod = Modulus(p, 1)
    samples = {n: _checked_vector(n, m, a, mod)[r % m] for n in range(1, check_upto + 1)}
    units = list(range(1, p))
    matrix = [[pow(j, n, p) for j in units] for n in range(1, p)]
    solution = _solve_mod_p(matrix, [samples[n] for n in range(1, p)], p)
    if solution is None:
        return NotApplicableReport("qnormal", params, "singular sample system")
    coeffs = tuple(zip(units, solution))
    holds = all(
        sum(c * pow(j, n, p) for j, c in coeffs) % p == samples[n]
        for n in range(1, check_upto + 1)
    )
    return QNormalDecomposition(
        p=p, m=m, a=a, r=r, coeffs=coeffs, holds=holds, checked_upto=check_upto
    )
