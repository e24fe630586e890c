"""Periods of class-sum sequences modulo q.

For gcd(q, m) = 1 the sequence n -> class sums of (n, r, m, a) mod q is
periodic in n from n = 1 on whenever the base a is admissible; `nu` computes
the explicit period that always works, `mu` the minimal one, and
`conjecture_sweep` hunts for bases where the minimal period falls short of
the explicit one.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from enum import Enum
from multiprocessing import Pool

from classum.cyclic_ring import CyclicPoly, Modulus, one_plus_ax, ring_mul, ring_pow
from classum.errors import InternalInconsistencyError, PreconditionError
from classum.intnum import divisors, factorize, mult_order


class Admissibility(Enum):
    """Which sufficient condition (checked in order) makes the base periodic."""

    COPRIME_NORM = "coprime_norm"
    A_EQ_MINUS1 = "a_eq_minus1"
    A_EQ_PLUS1_EVEN_M = "a_eq_plus1_even_m"
    INADMISSIBLE = "inadmissible"


@dataclass(frozen=True)
class PeriodReport:
    q: int
    m: int
    a: int | None
    nu: int
    mu: int | None
    admissibility: Admissibility | None
    divisors_checked: tuple[int, ...]


@dataclass(frozen=True)
class SweepEntry:
    a_mod_q: int
    representatives: tuple[int, ...]
    admissibility: Admissibility
    mu: int | None


@dataclass(frozen=True)
class SweepReport:
    m: int
    q: int
    nu: int
    hypothesis_met: bool
    entries: tuple[SweepEntry, ...]
    max_mu: int
    attained_at: tuple[int, ...]
    verdict: str
    discrepancies: tuple[str, ...]


def _require_coprime(m: int, q: int):
    if q <= 1:
        raise PreconditionError(f"q must exceed 1, got {q}")
    if m < 1:
        raise PreconditionError(f"m must be positive, got {m}")
    g = math.gcd(q, m)
    if g != 1:
        raise PreconditionError(f"q={q} and m={m} share the factor {g}")


def nu(m: int, q: int) -> int:
    """Explicit period: lcm over p^a || q of p^(a-1) * (p^b - 1), with b the
    multiplicative order of p modulo m (b = 1 when m = 1)."""
    _require_coprime(m, q)
    parts = []
    for p, alpha in factorize(q):
        beta = 1 if m == 1 else mult_order(p, m)
        parts.append(p ** (alpha - 1) * (p**beta - 1))
    return math.lcm(*parts)


def admissible(a: int, m: int, q: int) -> Admissibility:
    """Classify a by the first sufficient periodicity condition it meets:
    gcd(1 - (-a)^m, q) = 1, then a = -1 (mod q), then a = 1 (mod q) with m even.
    """
    _require_coprime(m, q)
    norm = (1 - pow(-a % q, m, q)) % q
    if math.gcd(norm, q) == 1:
        return Admissibility.COPRIME_NORM
    if a % q == q - 1:
        return Admissibility.A_EQ_MINUS1
    if a % q == 1 and m % 2 == 0:
        return Admissibility.A_EQ_PLUS1_EVEN_M
    return Admissibility.INADMISSIBLE


def _is_period(u: CyclicPoly, t: int) -> bool:
    # period of the sequence u^1, u^2, ... taken from n = 1, which tolerates
    # zero-divisor bases: u^(t+1) == u
    return ring_pow(u, t + 1) == u


def mu(m: int, a: int, q: int, exhaustive: bool = False) -> int:
    """Minimal period of the class-sum sequences for base a modulo q."""
    return mu_report(m, a, q, exhaustive=exhaustive).mu


def mu_report(m: int, a: int, q: int, exhaustive: bool = False) -> PeriodReport:
    """Like `mu`, but keeps the trail of candidate periods that were tested."""
    cls = admissible(a, m, q)
    if cls is Admissibility.INADMISSIBLE:
        raise PreconditionError(f"a={a} is inadmissible for m={m}, q={q}: no periodicity guarantee")
    period_bound = nu(m, q)
    u = one_plus_ax(a, m, Modulus(q, 1))
    checked: list[int] = []
    if exhaustive:
        # independent confirmation path: walk every candidate, not just divisors
        power = u
        for t in range(1, period_bound + 1):
            checked.append(t)
            power = ring_mul(power, u)
            if power == u:
                return PeriodReport(q, m, a, period_bound, t, cls, tuple(checked))
    else:
        for t in divisors(period_bound):
            checked.append(t)
            if _is_period(u, t):
                return PeriodReport(q, m, a, period_bound, t, cls, tuple(checked))
    raise InternalInconsistencyError(
        f"no period up to nu={period_bound} for a={a}, m={m}, q={q}; admissibility promised one"
    )


def _sweep_worker(task: tuple[int, int, int]) -> tuple[int, str, int | None]:
    m, q, a = task
    cls = admissible(a, m, q)
    if cls is Admissibility.INADMISSIBLE:
        return (a, cls.value, None)
    return (a, cls.value, mu(m, a, q))


def conjecture_sweep(m: int, q: int, jobs: int | None = None) -> SweepReport:
    """Compute mu for every base a in [-q, q], grouped by a mod q.

    The interesting question is whether some admissible base beats the
    explicit period on every residue class; `verdict` says whether the
    maximum minimal period equals nu.  The sweep deliberately recomputes mu
    for each raw representative and records any disagreement inside a residue
    class instead of assuming mu depends on a mod q alone.
    """
    _require_coprime(m, q)
    period_bound = nu(m, q)
    tasks = [(m, q, a) for a in range(-q, q + 1)]
    if jobs is None:
        jobs = os.cpu_count() or 1
    if jobs > 1:
        with Pool(jobs) as pool:
            raw = pool.map(_sweep_worker, tasks, chunksize=1)
    else:
        raw = [_sweep_worker(t) for t in tasks]
    raw.sort()

    by_class: dict[int, list[tuple[int, str, int | None]]] = {}
    for a, cls, value in raw:
        by_class.setdefault(a % q, []).append((a, cls, value))

    entries = []
    discrepancies = []
    for residue in sorted(by_class):
        rows = by_class[residue]
        classes = sorted({cls for _, cls, _ in rows})
        values = sorted({value for _, _, value in rows}, key=lambda v: (v is None, v))
        if len(classes) > 1 or len(values) > 1:
            discrepancies.append(
                f"a={residue} (mod {q}): representatives {[a for a, _, _ in rows]} "
                f"gave classifications {classes} and periods {values}"
            )
        entries.append(
            SweepEntry(
                a_mod_q=residue,
                representatives=tuple(a for a, _, _ in rows),
                admissibility=Admissibility(classes[0]),
                mu=values[0],
            )
        )

    max_mu = max(e.mu for e in entries if e.mu is not None)
    attained = tuple(e.a_mod_q for e in entries if e.mu == max_mu)
    hypothesis_met = q % 3 != 0
    if max_mu == period_bound:
        verdict = "matches_nu"
    elif not hypothesis_met:
        verdict = "hypothesis_not_met"
    else:
        verdict = "counterexample_candidate"
    return SweepReport(
        m=m,
        q=q,
        nu=period_bound,
        hypothesis_met=hypothesis_met,
        entries=tuple(entries),
        max_mu=max_mu,
        attained_at=attained,
        verdict=verdict,
        discrepancies=tuple(discrepancies),
    )
