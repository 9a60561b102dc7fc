# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twins of the pure-Python kernels in _pykernel.

Coefficients are arbitrary-precision Python ints, so the win comes from
C-level loop control and dict access, not from native arithmetic.  Results
are bit-identical with the fallback implementations.
"""

from cpython.dict cimport PyDict_GetItem, PyDict_SetItem, PyDict_DelItem
from cpython.list cimport PyList_GET_ITEM, PyList_GET_SIZE
from cpython.tuple cimport PyTuple_GET_ITEM

from math import gcd as _gcd

IMPLEMENTATION = "compiled"


def iadd_scaled(dict acc, terms, c, shift, one):
    """acc += c * x^shift * terms, in place; zero entries are removed."""
    cdef object base = shift - one
    cdef object kk, w, k, v, term
    cdef Py_ssize_t i, n
    cdef void* slot
    n = len(terms)
    for i in range(n):
        term = terms[i]
        k = <object>PyTuple_GET_ITEM(term, 0)
        v = <object>PyTuple_GET_ITEM(term, 1)
        kk = k + base
        slot = PyDict_GetItem(acc, kk)
        if slot != NULL:
            w = <object>slot + c * v
            if w:
                PyDict_SetItem(acc, kk, w)
            else:
                PyDict_DelItem(acc, kk)
        else:
            w = c * v
            if w:
                PyDict_SetItem(acc, kk, w)


def iadd_scaled_mod(dict acc, terms, c, shift, one, p):
    cdef object base = shift - one
    cdef object kk, w, k, v, term
    cdef Py_ssize_t i, n
    cdef void* slot
    n = len(terms)
    for i in range(n):
        term = terms[i]
        k = <object>PyTuple_GET_ITEM(term, 0)
        v = <object>PyTuple_GET_ITEM(term, 1)
        kk = k + base
        slot = PyDict_GetItem(acc, kk)
        if slot != NULL:
            w = (<object>slot + c * v) % p
        else:
            w = (c * v) % p
        if w:
            PyDict_SetItem(acc, kk, w)
        elif slot != NULL:
            PyDict_DelItem(acc, kk)


def scale_values(dict acc, a):
    """acc *= a for every value; a must be nonzero."""
    cdef object k, v
    for k in acc:
        v = acc[k]
        PyDict_SetItem(acc, k, v * a)


def scale_values_mod(dict acc, a, p):
    cdef object k, v
    for k in acc:
        v = acc[k]
        PyDict_SetItem(acc, k, v * a % p)


def mul_terms(pt, qt, one):
    """Convolution product of two term lists; returns a dict accumulator."""
    cdef dict acc = {}
    cdef object k1, v1, k2, v2, base, kk, w, t1, t2
    cdef Py_ssize_t i, j, n1, n2
    cdef void* slot
    n1 = len(pt)
    n2 = len(qt)
    for i in range(n1):
        t1 = pt[i]
        k1 = <object>PyTuple_GET_ITEM(t1, 0)
        v1 = <object>PyTuple_GET_ITEM(t1, 1)
        base = k1 - one
        for j in range(n2):
            t2 = qt[j]
            k2 = <object>PyTuple_GET_ITEM(t2, 0)
            v2 = <object>PyTuple_GET_ITEM(t2, 1)
            kk = k2 + base
            slot = PyDict_GetItem(acc, kk)
            if slot != NULL:
                w = <object>slot + v1 * v2
                if w:
                    PyDict_SetItem(acc, kk, w)
                else:
                    PyDict_DelItem(acc, kk)
            else:
                w = v1 * v2
                if w:
                    PyDict_SetItem(acc, kk, w)
    return acc


def mul_terms_mod(pt, qt, one, p):
    cdef dict acc = {}
    cdef object k1, v1, k2, v2, base, kk, w, t1, t2
    cdef Py_ssize_t i, j, n1, n2
    cdef void* slot
    n1 = len(pt)
    n2 = len(qt)
    for i in range(n1):
        t1 = pt[i]
        k1 = <object>PyTuple_GET_ITEM(t1, 0)
        v1 = <object>PyTuple_GET_ITEM(t1, 1)
        base = k1 - one
        for j in range(n2):
            t2 = qt[j]
            k2 = <object>PyTuple_GET_ITEM(t2, 0)
            v2 = <object>PyTuple_GET_ITEM(t2, 1)
            kk = k2 + base
            slot = PyDict_GetItem(acc, kk)
            if slot != NULL:
                w = (<object>slot + v1 * v2) % p
            else:
                w = (v1 * v2) % p
            if w:
                PyDict_SetItem(acc, kk, w)
            elif slot != NULL:
                PyDict_DelItem(acc, kk)
    return acc


def content(values):
    """Nonnegative gcd of an iterable of integers (0 for an empty iterable)."""
    cdef object g = 0
    cdef object v
    for v in values:
        g = _gcd(g, v)
        if g == 1:
            return 1
    return g


def find_divisor(list lms, Py_ssize_t hi, k, one, guards):
    """Index of the first of lms[:hi] dividing monomial k, or -1."""
    cdef Py_ssize_t i
    cdef object base = k + one
    for i in range(hi):
        if (base - <object>PyList_GET_ITEM(lms, i)) & guards == 0:
            return i
    return -1
