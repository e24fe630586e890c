"""Kernel selection: compiled extension when available and applicable.

The compiled kernel only handles word-size moduli (see its supports()), so
dispatch happens per call; oversized rings silently take the pure-Python
route, which is exact for any modulus.
"""

from classum import _kernel_py

try:
    from classum import _kernel as _ext
except ImportError:  # no compiled extension in this install
    _ext = None


def backend_name() -> str:
    return "compiled" if _ext is not None else "pure"


def cyclic_mul(u, v, modulus):
    if _ext is not None and _ext.supports(len(u), modulus):
        return _ext.cyclic_mul(u, v, modulus)
    return _kernel_py.cyclic_mul(u, v, modulus)


def cyclic_pow(base, exponent, modulus):
    if _ext is not None and _ext.supports(len(base), modulus):
        return _ext.cyclic_pow(base, exponent, modulus)
    return _kernel_py.cyclic_pow(base, exponent, modulus)
