"""Compare the compiled convolution kernel against the pure-Python fallback.

Run as: python3 benchmarks/bench_backends.py

Times cyclic powering at several ring shapes plus a realistic minimal-period
search.  The period search flips the dispatch switch in classum.backend so
both routes run the identical high-level code.
"""

import time

from classum import backend
from classum import _kernel_py

try:
    from classum import _kernel
except ImportError:
    _kernel = None

from classum.periods import mu


def best_of(fn, repeats=3):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def bench_pow(m, modulus, exponent):
    base = tuple((1, 2) + (0,) * (m - 2)) if m >= 2 else (3 % modulus,)

    def compiled():
        _kernel.cyclic_pow(base, exponent, modulus)

    def pure():
        _kernel_py.cyclic_pow(base, exponent, modulus)

    label = f"pow m={m:<5d} M~2^{modulus.bit_length() - 1:<3d} e=10^{len(str(exponent)) - 1}"
    t_pure = best_of(pure)
    if _kernel is not None and _kernel.supports(m, modulus):
        t_comp = best_of(compiled)
        print(f"{label}  compiled {t_comp * 1e3:9.2f} ms   pure {t_pure * 1e3:9.2f} ms   x{t_pure / t_comp:6.1f}")
    else:
        print(f"{label}  compiled       n/a   pure {t_pure * 1e3:9.2f} ms")


def bench_mu_search():
    cases = [(7, -1, 9), (7, -2, 5), (6, 2, 11), (7, 2, 5)]

    def run():
        for m, a, q in cases:
            mu(m, a, q)

    t_default = best_of(run)
    saved = backend._ext
    try:
        backend._ext = None
        t_pure = best_of(run)
    finally:
        backend._ext = saved
    tag = "compiled" if saved is not None else "pure (no extension built)"
    print(f"mu search battery      {tag} {t_default * 1e3:9.2f} ms   pure {t_pure * 1e3:9.2f} ms   x{t_pure / t_default:6.1f}")


def main():
    print(f"active backend: {backend.backend_name()}")
    bench_pow(7, 9**3, 10**6)
    bench_pow(12, 10**6 + 3, 10**5)
    bench_pow(64, (1 << 40) + 5, 10**4)
    bench_pow(300, (1 << 50) + 9, 10**3)
    bench_mu_search()


if __name__ == "__main__":
    main()
