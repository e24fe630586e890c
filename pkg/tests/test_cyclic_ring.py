"""Cyclic ring arithmetic, including compiled-vs-pure backend equivalence."""

import random

import pytest

from classum import backend
from classum._kernel_py import cyclic_mul as py_mul, cyclic_pow as py_pow
from classum.cyclic_ring import (
    CyclicPoly,
    Modulus,
    evaluate_at_one,
    one_plus_ax,
    reduce_mod_allones,
    ring_mul,
    ring_one,
    ring_pow,
)
from classum.errors import PreconditionError


def brute_mul(u, v, m, M):
    """Schoolbook convolution with index folding, the reference semantics."""
    out = [0] * m
    for i in range(m):
        for j in range(m):
            out[(i + j) % m] = (out[(i + j) % m] + u[i] * v[j]) % M
    return tuple(out)


def test_modulus_validation():
    mod = Modulus(q=9, N=2)
    assert mod.M == 81
    assert mod.q_factors.factors == ((3, 2),)
    with pytest.raises(PreconditionError):
        Modulus(q=1, N=1)
    with pytest.raises(PreconditionError):
        Modulus(q=9, N=0)


def test_poly_validation():
    mod = Modulus(q=5, N=1)
    with pytest.raises(PreconditionError):
        CyclicPoly(3, mod, (1, 2))
    with pytest.raises(PreconditionError):
        CyclicPoly(2, mod, (1, 7))


def test_one_plus_ax_normalizes():
    mod = Modulus(q=7, N=1)
    assert one_plus_ax(-2, 3, mod).coeffs == (1, 5, 0)
    # length-one ring collapses x to 1
    assert one_plus_ax(3, 1, mod).coeffs == (4,)
    assert one_plus_ax(-1, 1, mod).coeffs == (0,)


def test_ring_mul_small_example():
    mod = Modulus(q=97, N=1)
    u = one_plus_ax(1, 4, mod)
    assert ring_mul(u, u).coeffs == (1, 2, 1, 0)
    cubed = ring_mul(ring_mul(u, u), u)
    assert cubed.coeffs == (1, 3, 3, 1)


def test_ring_mul_wraparound():
    # x^2 * x^2 = x^4 = x in length 3
    mod = Modulus(q=11, N=1)
    xsq = CyclicPoly(3, mod, (0, 0, 1))
    assert ring_mul(xsq, xsq).coeffs == (0, 1, 0)


def test_ring_pow_matches_repeated_mul():
    mod = Modulus(q=9, N=2)
    u = one_plus_ax(2, 5, mod)
    acc = ring_one(5, mod)
    for e in range(12):
        assert ring_pow(u, e).coeffs == acc.coeffs
        acc = ring_mul(acc, u)
    with pytest.raises(PreconditionError):
        ring_pow(u, -1)


def test_mixed_modulus_rejected():
    a = one_plus_ax(1, 3, Modulus(q=5, N=1))
    b = one_plus_ax(1, 3, Modulus(q=7, N=1))
    with pytest.raises(PreconditionError):
        ring_mul(a, b)


def test_evaluate_at_one():
    mod = Modulus(q=25, N=1)
    u = ring_pow(one_plus_ax(1, 6, mod), 10)
    assert evaluate_at_one(u) == pow(2, 10, 25)


def test_reduce_mod_allones():
    mod = Modulus(q=7, N=1)
    M = mod.M
    # x^2 maps to x^2 - (1 + x + x^2) = -1 - x
    xsq = CyclicPoly(3, mod, (0, 0, 1))
    assert reduce_mod_allones(xsq) == (M - 1, M - 1)
    one = ring_one(3, mod)
    assert reduce_mod_allones(one) == (1, 0)
    with pytest.raises(PreconditionError):
        reduce_mod_allones(ring_one(1, mod))


def test_pure_backend_matches_brute():
    rng = random.Random(1234)
    for _ in range(80):
        m = rng.randrange(1, 9)
        M = rng.randrange(2, 1000)
        u = tuple(rng.randrange(M) for _ in range(m))
        v = tuple(rng.randrange(M) for _ in range(m))
        assert tuple(py_mul(u, v, M)) == brute_mul(u, v, m, M)


def test_compiled_backend_matches_pure():
    try:
        from classum import _kernel
    except ImportError:
        pytest.skip("compiled kernel not built")
    rng = random.Random(4321)
    for _ in range(80):
        m = rng.randrange(1, 40)
        M = rng.randrange(2, 1 << 57)
        if not _kernel.supports(m, M):
            continue
        u = tuple(rng.randrange(M) for _ in range(m))
        v = tuple(rng.randrange(M) for _ in range(m))
        assert tuple(_kernel.cyclic_mul(u, v, M)) == tuple(py_mul(u, v, M))
        e = rng.randrange(0, 10_000)
        assert tuple(_kernel.cyclic_pow(u, e, M)) == tuple(py_pow(u, e, M))


def test_dispatch_beyond_kernel_limit():
    # moduli over the guard must silently use the unbounded path
    mod = Modulus(q=(1 << 61) - 1, N=1)
    u = one_plus_ax(2, 3, mod)
    got = ring_pow(u, 5).coeffs
    exp = u.coeffs
    for _ in range(4):
        exp = brute_mul(exp, u.coeffs, 3, mod.M)
    assert got == exp
    assert backend.backend_name() in {"compiled", "pure"}


def test_backend_mul_api():
    got = tuple(backend.cyclic_mul((1, 2, 3), (4, 5, 6), 1000))
    assert got == brute_mul((1, 2, 3), (4, 5, 6), 3, 1000)
