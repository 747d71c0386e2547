# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled term-map kernels; signature-compatible with pykernel.

Coefficients stay arbitrary-precision Python objects (Fraction); the speedup
comes from removing interpreter overhead in the convolution loops.
"""

BACKEND = "cython"


cdef inline tuple _expsum(tuple ea, tuple eb):
    cdef Py_ssize_t i, n = len(ea)
    cdef list out = [None] * n
    for i in range(n):
        out[i] = ea[i] + eb[i]
    return tuple(out)


def kadd(dict a, dict b):
    cdef dict out = dict(a)
    cdef object exp, coeff, acc
    for exp, coeff in b.items():
        acc = out.get(exp)
        if acc is None:
            out[exp] = coeff
        else:
            acc = acc + coeff
            if acc:
                out[exp] = acc
            else:
                del out[exp]
    return out


def kneg(dict a):
    cdef dict out = {}
    cdef object exp, coeff
    for exp, coeff in a.items():
        out[exp] = -coeff
    return out


def kscale(dict a, object factor):
    cdef dict out = {}
    cdef object exp, coeff
    if not factor:
        return out
    for exp, coeff in a.items():
        out[exp] = coeff * factor
    return out


def kshift(dict a, tuple shift, object factor):
    cdef dict out = {}
    cdef object exp, coeff
    if not factor:
        return out
    for exp, coeff in a.items():
        out[_expsum(<tuple> exp, shift)] = coeff * factor
    return out


def kmul(dict a, dict b):
    cdef dict out = {}
    cdef object ea, ca, eb, cb, acc, prod
    cdef tuple exp
    if len(a) > len(b):
        a, b = b, a
    for ea, ca in a.items():
        for eb, cb in b.items():
            exp = _expsum(<tuple> ea, <tuple> eb)
            prod = ca * cb
            acc = out.get(exp)
            if acc is None:
                out[exp] = prod
            else:
                acc = acc + prod
                if acc:
                    out[exp] = acc
                else:
                    del out[exp]
    return out
