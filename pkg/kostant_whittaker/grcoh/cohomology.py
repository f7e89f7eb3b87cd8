#!/usr/bin/env python
# encoding: utf-8
"""
Created on '11/10/2026'.

Rank one topological side: H(Gr_n) for PGL(2) with its sl2-action, the
filtration generators g_i and the comparison of the cohomology lattice
with the coinvariant lattice inside sum_i Q(hbar, x) 1_i.
"""

import logging
from collections import namedtuple

from sympy.polys.domains import QQ

from kostant_whittaker.exactalg import MultiPoly, RatFunc, HBAR
from kostant_whittaker.exactalg.linalg import (
    mat_mul, mat_sub, mat_scale, mat_is_zero, mat_inverse, mat_apply, zero_matrix, determinant, jordan_type
)
from kostant_whittaker.rootdata import root_system
from kostant_whittaker.grgraph import LocalizedElement
from kostant_whittaker.kostant import basis_labels, phi_module, idiot_product
from kostant_whittaker.kostant.split import split_change_of_basis
from kostant_whittaker.uhbar import MODULE_VARIABLES
from kostant_whittaker.lib.errors import KostantError

logger = logging.getLogger('luigi-interface')

LatticeReport = namedtuple('LatticeReport', [
    'n', 'holds', 'transition', 'inverse', 'matches_normal_cone', 'determinant'
])


class CohModule(object):
    """
    :param n:
    :param e: matrix, column i is e v_i
    :param h:
    :param f:
    :param generators: dict i -> g_i
    """

    def __init__(self, n, e, h, f, generators):
        self.n = n
        self.e = e
        self.h = h
        self.f = f
        self.generators = generators

    @property
    def labels(self):
        return basis_labels(self.n)

    def brackets_hold(self):
        """
        [e, f] = h, [h, e] = 2e, [h, f] = -2f
        """
        def bracket(a, b):
            return mat_sub(mat_mul(a, b), mat_mul(b, a))
        return (mat_is_zero(mat_sub(bracket(self.e, self.f), self.h))
                and mat_is_zero(mat_sub(bracket(self.h, self.e), mat_scale(2, self.e)))
                and mat_is_zero(mat_sub(bracket(self.h, self.f), mat_scale(-2, self.f))))

    def is_nilpotent(self, matrix):
        power = matrix
        for _ in range(self.n):
            power = mat_mul(power, matrix)
        return mat_is_zero(power)

    def e_jordan_type(self):
        return jordan_type(self.e, MODULE_VARIABLES)

    def to_json(self):
        def dump(matrix):
            return [[str(entry) for entry in row] for row in matrix]
        return {
            'n': self.n,
            'e': dump(self.e),
            'h': dump(self.h),
            'f': dump(self.f),
            'generators': {str(i): str(g) for i, g in sorted(self.generators.items())},
        }


def sl2_action(n):
    """
    h v_i = i v_i, e v_i = ((n+i+2)/2) v_{i+2}, f v_i = ((n-i+2)/2) v_{i-2}
    :return: (e, h, f) matrices
    """
    if n < 0:
        raise KostantError('sl2_action needs n >= 0, got %d' % n)
    size = n + 1
    e, h, f = (zero_matrix(size, size, MODULE_VARIABLES) for _ in range(3))
    for c, i in enumerate(basis_labels(n)):
        h[c][c] = MultiPoly.constant(MODULE_VARIABLES, i)
        if i + 2 <= n:
            e[c + 1][c] = MultiPoly.constant(MODULE_VARIABLES, QQ(n + i + 2, 2))
        if i - 2 >= -n:
            f[c - 1][c] = MultiPoly.constant(MODULE_VARIABLES, QQ(n - i + 2, 2))
    return e, h, f


def filtration_generators(n):
    """
    g_i = prod_{k=(i-n)/2}^{i-1} (x + k hbar), so that v~_i = g_i v~_{-n}
    """
    if n < 0:
        raise KostantError('filtration_generators needs n >= 0, got %d' % n)
    return {i: idiot_product(n, i) for i in basis_labels(n)}


def coh_module(n):
    e, h, f = sl2_action(n)
    return CohModule(n, e, h, f, filtration_generators(n))


def normal_cone_weight(i):
    """
    N acts on 1_i by i x + i^2 hbar / 2
    """
    x = MultiPoly.gen(MODULE_VARIABLES, 'x')
    hbar = MultiPoly.gen(MODULE_VARIABLES, HBAR)
    return x * i + hbar * QQ(i * i, 2)


def cohomology_generator(n):
    """
    Localized fundamental class v~_{-n} = sum_i g_i^{-1} 1_i
    :return: LocalizedElement over A1
    """
    one = MultiPoly.constant(MODULE_VARIABLES, 1)
    return LocalizedElement(root_system('A1'), {
        (i,): RatFunc.from_polys(one, g) for i, g in filtration_generators(n).items()
    })


def _polynomial_matrix(matrix):
    return all(RatFunc.lift(entry, MODULE_VARIABLES).is_polynomial for row in matrix for entry in row)


def lattice_compare(n):
    """
    Cohomology lattice: span of N^k v~_{-n}, k = 0..n. Coinvariant lattice: span
    of the classes of m_{-1} (x) v_j written in the split basis. Both live in
    sum_i Q(hbar, x) 1_i with 1_i the class of s_i; they agree when the transition
    matrix S P and its inverse are polynomial.
    :return: LatticeReport
    """
    generator = cohomology_generator(n)
    labels = basis_labels(n)
    # P: column k is N^k applied to the generator
    columns = []
    vector = [generator.coefficient(generator.system.weight([i])) for i in labels]
    for _ in range(n + 1):
        columns.append(vector)
        vector = [value * normal_cone_weight(i) for value, i in zip(vector, labels)]
    cohomology = [[columns[k][r] for k in range(n + 1)] for r in range(n + 1)]
    split, _ = split_change_of_basis(n)
    transition = mat_mul(split, cohomology)
    holds = _polynomial_matrix(transition)
    inverse = None
    if holds:
        inverse = mat_inverse(transition, MODULE_VARIABLES)
        holds = _polynomial_matrix(inverse)
    # the same transition matrix from the Casimir side: N^k applied to the class of m_{-1} (x) v_{-n}
    normal = phi_module(n).normal_cone_matrix()
    vector = [MultiPoly.constant(MODULE_VARIABLES, 1 if r == 0 else 0) for r in range(n + 1)]
    expected = []
    for _ in range(n + 1):
        expected.append(vector)
        vector = mat_apply(normal, vector)
    matches = mat_is_zero(mat_sub(transition, [[expected[k][r] for k in range(n + 1)] for r in range(n + 1)]))
    value = determinant(transition, MODULE_VARIABLES)
    logger.debug('Lattice comparison for n = %d: %s', n, holds)
    return LatticeReport(n, holds and matches, transition, inverse, matches, value)
