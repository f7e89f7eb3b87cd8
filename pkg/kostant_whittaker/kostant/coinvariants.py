#!/usr/bin/env python
# encoding: utf-8
"""
Created on '07/10/2026'.

psi-coinvariants of M(-rho) (x) V_n: the quotient by the image of f - 1.
From (f - 1)(m_j (x) v_i) = 0 in the quotient,

    m_{j-2} (x) v_i = m_j (x) v_i - ((n-i+2)/2) hbar m_j (x) v_{i-2}

so every tensor reduces onto the classes of m_{-1} (x) v_i.
"""

from kostant_whittaker.exactalg import MultiPoly
from kostant_whittaker.uhbar import MODULE_VARIABLES
from kostant_whittaker.uhbar.modules import rep_f


def basis_labels(n):
    """
    [-n, -n+2, ..., n]
    """
    return list(range(-n, n + 1, 2))


def label_index(n, i):
    return (i + n) // 2


def coinvariant_reduce(t, rng=None):
    """
    Coordinates of the class of t in the basis of classes of m_{-1} (x) v_i
    :param t: TensorVec
    :param rng: random.Random - rewrite a randomly chosen term each step instead of the deepest one
    :return: list of coefficients indexed like basis_labels(t.n)
    """
    n = t.n
    pending = dict(t.coefficients)
    reduced = {}

    def put(store, key, value):
        if key in store:
            value = store[key] + value
        if value:
            store[key] = value
        else:
            store.pop(key, None)

    while pending:
        key = rng.choice(sorted(pending)) if rng is not None else min(pending)
        coef = pending.pop(key)
        j, i = key
        if j == -1:
            put(reduced, i, coef)
            continue
        put(pending, (j + 2, i), coef)
        if i - 2 >= -n:
            put(pending, (j + 2, i - 2), -coef * rep_f(n, i).coerce(MODULE_VARIABLES))
    zero = MultiPoly(MODULE_VARIABLES)
    return [reduced.get(i, zero) for i in basis_labels(n)]
