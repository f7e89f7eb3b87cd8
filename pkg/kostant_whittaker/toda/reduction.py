#!/usr/bin/env python
# encoding: utf-8
"""
Created on '13/10/2026'.

Kazhdan-Kostant reduction for SL(2) on the big cell
g = n_-(u) diag(t, 1/t) w0 n_-(v). The n_- x n_- action is by translation
in u and v, so invariance is independence of u and v.

Left fields (right translations) form a homomorphism, right fields (left
translations) an anti-homomorphism: [R_x, R_y] = -hbar R_[x,y].
"""

import functools
import logging

from kostant_whittaker.exactalg import MultiPoly
from kostant_whittaker.uhbar import casimir
from kostant_whittaker.toda.diffop import DiffOp, TodaOp, DIFFOP_VARIABLES
from kostant_whittaker.lib.errors import KostantError, ResidualDependenceError

logger = logging.getLogger('luigi-interface')

SIDES = ('left', 'right')

# psi(f) = 1 gives L_f = 1 and R_f = -1 in the reduction
IDEAL_VALUES = {'v': 1, 'u': -1}


@functools.lru_cache(maxsize=None)
def invariant_fields():
    """
    :return: dict (generator, side) -> DiffOp
    """
    u, v, t = (DiffOp.coordinate(name) for name in ('u', 'v', 't'))
    du, dv, dt = (DiffOp.derivative(name) for name in ('u', 'v', 't'))
    t_inv2 = DiffOp.coordinate('t', -2)
    return {
        ('e', 'left'): t * v * dt - t_inv2 * du - v * v * dv,
        ('h', 'left'): -(t * dt) + 2 * (v * dv),
        ('f', 'left'): dv,
        ('e', 'right'): t * u * dt - u * u * du - t_inv2 * dv,
        ('h', 'right'): t * dt - 2 * (u * du),
        ('f', 'right'): du,
    }


def realize(element, side='left'):
    """
    Image of a PBWElem under the left (homomorphism) or right (anti-homomorphism) fields
    :param element: PBWElem
    :param side: 'left' or 'right'
    :return: DiffOp
    """
    if side not in SIDES:
        raise KostantError('Unknown side %s' % side)
    fields = invariant_fields()
    result = DiffOp()
    for (a, b, c), coef in element.terms.items():
        word = ['f'] * a + ['h'] * b + ['e'] * c
        if side == 'right':
            word.reverse()
        op = DiffOp.constant(coef.coerce(DIFFOP_VARIABLES))
        for name in word:
            op = op * fields[(name, side)]
        result = result + op
    return result


def kk_reduce(op):
    """
    Class of op in D(T): set d_v -> 1 and d_u -> -1 on the right of each normal
    ordered monomial, then require the result to be free of u and v
    :param op: DiffOp
    :return: TodaOp
    :raises ResidualDependenceError:
    """
    terms = {}
    for (a, b, k, c, d, m), coef in op.terms.items():
        value = coef * (IDEAL_VALUES['u'] ** c) * (IDEAL_VALUES['v'] ** d)
        key = (a, b, k, 0, 0, m)
        terms[key] = terms[key] + value if key in terms else value
    reduced = DiffOp(terms)
    if reduced.involves_unipotent():
        raise ResidualDependenceError('Reduction still depends on u, v: %s' % reduced)
    return TodaOp.from_diffop(reduced)


@functools.lru_cache(maxsize=None)
def reduced_casimir(side='left'):
    """
    kk_reduce of the Casimir ef + fe + h^2/2 realised by invariant fields
    :return: TodaOp
    """
    result = kk_reduce(realize(casimir(), side))
    logger.debug('Reduced Casimir (%s): %s', side, result)
    return result


def reduce_central_power(k, side='left'):
    """
    kk_reduce(C^k) against reduced_casimir()^k
    :return: (reduced power, power of the reduced Casimir)
    """
    if k < 0:
        raise KostantError('Power must be non-negative, got %d' % k)
    element = casimir() ** k
    return kk_reduce(realize(element, side)), reduced_casimir(side) ** k


def classical_symbol(op):
    """
    hbar = 0 specialisation of a Toda operator
    """
    return TodaOp.from_diffop(op.specialize(0))


def classical_toda_hamiltonian():
    """
    1/2 t^2 p^2 + 2 t^-2 with p the symbol of d_t
    """
    return TodaOp({(0, 0, 2, 0, 0, 2): MultiPoly.constant(DIFFOP_VARIABLES, '1/2'), (0, 0, -2, 0, 0, 0): 2})
