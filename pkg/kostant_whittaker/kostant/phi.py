#!/usr/bin/env python
# encoding: utf-8
"""
Created on '07/10/2026'.
"""

import functools
import logging

from sympy.polys.domains import QQ

from kostant_whittaker.exactalg import MultiPoly, HBAR
from kostant_whittaker.exactalg.linalg import (
    mat_polynomial, mat_is_zero, mat_sub, mat_scale, mat_map, mat_apply, identity, determinant, jordan_type
)
from kostant_whittaker.uhbar import TensorVec, tensor_act, casimir, MODULE_VARIABLES
from kostant_whittaker.kostant.coinvariants import coinvariant_reduce, basis_labels
from kostant_whittaker.lib.errors import KostantError, NotDivisibleError, IdentityFailure

logger = logging.getLogger('luigi-interface')


def _x():
    return MultiPoly.gen(MODULE_VARIABLES, 'x')


def _hbar():
    return MultiPoly.gen(MODULE_VARIABLES, HBAR)


def casimir_eigenvalue(i):
    """
    1/2 ((x + i hbar)^2 - hbar^2), the value of C on the graded piece of weight i
    """
    shifted = _x() + _hbar() * i
    return (shifted * shifted - _hbar() * _hbar()) * QQ(1, 2)


def annihilator_polynomial(n):
    """
    prod_{i=-n, step 2}^{n} (2z - (x + i hbar)^2 + hbar^2)
    :return: coefficients in z, lowest first
    """
    result = [MultiPoly.constant(MODULE_VARIABLES, 1)]
    for i in basis_labels(n):
        factor = [casimir_eigenvalue(i) * -2, MultiPoly.constant(MODULE_VARIABLES, 2)]
        result = multiply_z_polynomials(result, factor)
    return result


def multiply_z_polynomials(a, b):
    product = [MultiPoly(MODULE_VARIABLES) for _ in range(len(a) + len(b) - 1)]
    for i, p in enumerate(a):
        for j, q in enumerate(b):
            product[i + j] = product[i + j] + p * q
    return product


class PhiModule(object):
    """
    Kostant reduction of V_n: free of rank n + 1 over Q[hbar, x] with basis the
    classes of m_{-1} (x) v_i. The left x acts on coefficients, the right centre
    through casimir_matrix (column i is the image of basis vector i).
    """

    def __init__(self, n, casimir_matrix, annihilator):
        self.n = n
        self.casimir_matrix = casimir_matrix
        self.annihilator = annihilator

    @property
    def labels(self):
        return basis_labels(self.n)

    @property
    def rank(self):
        return self.n + 1

    def annihilator_vanishes(self):
        return mat_is_zero(mat_polynomial(self.annihilator, self.casimir_matrix, MODULE_VARIABLES))

    def normal_cone_matrix(self):
        """
        N = (C - 1/2 (x^2 - hbar^2)) / hbar, polynomial because C is the identity modulo hbar
        :raises NotDivisibleError:
        """
        shifted = mat_sub(self.casimir_matrix, mat_scale(casimir_eigenvalue(0), identity(self.rank, MODULE_VARIABLES)))
        try:
            return mat_map(lambda entry: entry.exquo(_hbar()), shifted)
        except NotDivisibleError:
            raise NotDivisibleError('Casimir of phi(V_%d) is not the identity modulo hbar' % self.n)

    def to_json(self):
        return {
            'n': self.n,
            'casimir_matrix': [[entry.to_json() for entry in row] for row in self.casimir_matrix],
            'annihilator': [c.to_json() for c in self.annihilator],
        }


@functools.lru_cache(maxsize=None)
def phi_module(n):
    """
    Column i of the Casimir matrix is the reduction of C (m_{-1} (x) v_i)
    :param n: n >= 0
    :return: PhiModule
    """
    if n < 0:
        raise KostantError('phi_module needs n >= 0, got %d' % n)
    element = casimir()
    columns = [coinvariant_reduce(tensor_act(element, TensorVec.basis(n, -1, i))) for i in basis_labels(n)]
    matrix = [[columns[c][r] for c in range(n + 1)] for r in range(n + 1)]
    logger.debug('Built phi(V_%d)', n)
    return PhiModule(n, matrix, annihilator_polynomial(n))


def quasiclassical_jordan(n):
    """
    Jordan type of N at hbar = x = 0
    :return: block sizes, largest first
    """
    module = phi_module(n)
    nilpotent = mat_map(lambda entry: entry.evaluate({'x': 0, HBAR: 0}), module.normal_cone_matrix())
    return jordan_type(nilpotent, MODULE_VARIABLES)


def cyclic_generator_check(n):
    """
    The class of m_{-1} (x) v_{-n} generates phi(V_n) over Q[hbar, x][N]:
    det[gen, N gen, ..., N^n gen] is a nonzero constant
    :return: the determinant as a RatFunc
    :raises IdentityFailure:
    """
    module = phi_module(n)
    normal = module.normal_cone_matrix()
    vector = [MultiPoly.constant(MODULE_VARIABLES, 1 if k == 0 else 0) for k in range(n + 1)]
    columns = []
    for _ in range(n + 1):
        columns.append(vector)
        vector = mat_apply(normal, vector)
    value = determinant([[columns[c][r] for c in range(n + 1)] for r in range(n + 1)], MODULE_VARIABLES)
    if value.is_zero or not value.is_polynomial or not value.to_poly().is_constant:
        raise IdentityFailure('Class of m_-1 (x) v_-%d does not generate phi(V_%d): det = %s' % (n, n, value))
    return value
