"""Pure-Python polynomial kernels.

These are the hot inner loops of every basis computation: fused
multiply-accumulate of term lists into dict accumulators, whole-accumulator
scaling, convolution products and content gcds.  detindex.kernel selects the
compiled twin from _speedups when it is available; both implementations must
produce bit-identical results.

Terms are lists of (key, coeff) with packed monomial keys (see orders) and
integer coefficients; `one` is the key of the constant monomial 1.
"""

from math import gcd

IMPLEMENTATION = "python"


def iadd_scaled(acc, terms, c, shift, one):
    """acc += c * x^shift * terms, in place; zero entries are removed."""
    base = shift - one
    for k, v in terms:
        kk = k + base
        w = acc.get(kk, 0) + c * v
        if w:
            acc[kk] = w
        else:
            acc.pop(kk, None)


def iadd_scaled_mod(acc, terms, c, shift, one, p):
    base = shift - one
    for k, v in terms:
        kk = k + base
        w = (acc.get(kk, 0) + c * v) % p
        if w:
            acc[kk] = w
        else:
            acc.pop(kk, None)


def scale_values(acc, a):
    """acc *= a for every value; a must be nonzero."""
    for k in acc:
        acc[k] *= a


def scale_values_mod(acc, a, p):
    for k, v in acc.items():
        acc[k] = v * a % p


def mul_terms(pt, qt, one):
    """Convolution product of two term lists; returns a dict accumulator."""
    acc = {}
    for k1, v1 in pt:
        base = k1 - one
        for k2, v2 in qt:
            kk = k2 + base
            w = acc.get(kk, 0) + v1 * v2
            if w:
                acc[kk] = w
            else:
                del acc[kk]
    return acc


def mul_terms_mod(pt, qt, one, p):
    acc = {}
    for k1, v1 in pt:
        base = k1 - one
        for k2, v2 in qt:
            kk = k2 + base
            w = (acc.get(kk, 0) + v1 * v2) % p
            if w:
                acc[kk] = w
            else:
                del acc[kk]
    return acc


def content(values) -> int:
    """Nonnegative gcd of an iterable of integers (0 for an empty iterable)."""
    g = 0
    for v in values:
        g = gcd(g, v)
        if g == 1:
            return 1
    return g


def find_divisor(lms, hi, k, one, guards) -> int:
    """Index of the first of lms[:hi] dividing monomial k, or -1.

    lms is sorted ascending, so the hit has the order-smallest leading
    monomial among the divisors.
    """
    for i in range(hi):
        if (k - lms[i] + one) & guards == 0:
            return i
    return -1
