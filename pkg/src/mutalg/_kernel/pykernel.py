"""Pure-Python term-map kernels.

A term map is a dict mapping exponent tuples (one int per variable) to nonzero
Fraction coefficients.  These functions are the hot inner loops of all sparse
arithmetic; `_ckernel.pyx` is the compiled twin with the same signatures.
"""

from __future__ import annotations

from fractions import Fraction

BACKEND = "python"


def kadd(a: dict, b: dict) -> dict:
    out = dict(a)
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


def kneg(a: dict) -> dict:
    return {exp: -coeff for exp, coeff in a.items()}


def kscale(a: dict, factor: Fraction) -> dict:
    if not factor:
        return {}
    return {exp: coeff * factor for exp, coeff in a.items()}


def kshift(a: dict, shift: tuple, factor: Fraction) -> dict:
    """Multiply by a single term: factor * x^shift."""
    if not factor:
        return {}
    out = {}
    for exp, coeff in a.items():
        out[tuple(e + s for e, s in zip(exp, shift))] = coeff * factor
    return out


def kmul(a: dict, b: dict) -> dict:
    if len(a) > len(b):
        a, b = b, a
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            exp = tuple(x + y for x, y in zip(ea, eb))
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
