"""Pure-Python cyclic convolution kernels for arbitrary moduli.

Products are accumulated as unbounded integers and reduced once per output
coefficient, so there is no overflow to guard against.
"""


def cyclic_mul(u, v, modulus):
    m = len(u)
    if len(v) != m:
        raise ValueError("operands differ in length")
    out = [0] * m
    for i, ui in enumerate(u):
        if ui:
            for j, vj in enumerate(v):
                if vj:
                    k = i + j
                    if k >= m:
                        k -= m
                    out[k] += ui * vj
    return [c % modulus for c in out]


def cyclic_pow(base, exponent, modulus):
    if exponent < 0:
        raise ValueError("negative exponent")
    m = len(base)
    result = [0] * m
    result[0] = 1 % modulus
    sq = list(base)
    e = exponent
    while e > 0:
        if e & 1:
            result = cyclic_mul(result, sq, modulus)
        e >>= 1
        if e:
            sq = cyclic_mul(sq, sq, modulus)
    return result
