#!/usr/bin/env python
# encoding: utf-8
"""
Created on '09/10/2026'.

Convolution phi(V_m) * phi(V_n) over the centre. The right x of phi(V_m) is
the matrix X_m = S diag(x + i hbar) S^-1 in the coinvariant basis, and the
convolved right Casimir is casimir_matrix(n) with x replaced by X_m. In the
split basis of phi(V_m) it is block diagonal with blocks casimir_matrix(n)
at x -> x + i hbar.
"""

import logging
from collections import namedtuple, Counter

from kostant_whittaker.exactalg import MultiPoly, HBAR
from kostant_whittaker.exactalg.linalg import (
    mat_polynomial, mat_is_zero, mat_mul, mat_sub, mat_scale, identity, zero_matrix, matrix_rank
)
from kostant_whittaker.uhbar import MODULE_VARIABLES
from kostant_whittaker.kostant.phi import phi_module, annihilator_polynomial, multiply_z_polynomials, casimir_eigenvalue
from kostant_whittaker.kostant.split import split_change_of_basis
from kostant_whittaker.kostant.coinvariants import basis_labels
from kostant_whittaker.lib.errors import KostantError

logger = logging.getLogger('luigi-interface')

ConvolutionReport = namedtuple('ConvolutionReport', [
    'm', 'n', 'rank', 'annihilator_matches', 'annihilator_vanishes', 'multiplicities', 'multiplicities_match',
    'right_x_matches', 'unit_matches'
])

ExactnessReport = namedtuple('ExactnessReport', ['m', 'n', 'component_ranks', 'total_rank', 'holds'])


def clebsch_gordan(m, n):
    """
    Highest weights k = |m-n|, |m-n|+2, ..., m+n of V_m (x) V_n
    """
    return list(range(abs(m - n), m + n + 1, 2))


def tensor_weights(m, n):
    """
    Weight multiplicities of V_m (x) V_n
    """
    return Counter(i + j for i in basis_labels(m) for j in basis_labels(n))


def x_coefficients(poly):
    """
    Write a polynomial in x and hbar as sum_k c_k(hbar) x^k
    :return: [c_0, c_1, ...]
    """
    index = MODULE_VARIABLES.index('x')
    hbar = MultiPoly.gen(MODULE_VARIABLES, HBAR)
    coefficients = [MultiPoly(MODULE_VARIABLES) for _ in range(max(poly.degree('x'), 0) + 1)]
    for exp, coef in poly.terms():
        term = MultiPoly.constant(MODULE_VARIABLES, coef)
        for name, power in zip(MODULE_VARIABLES, exp):
            if name == HBAR:
                term = term * hbar ** power
            elif name != 'x' and power:
                raise KostantError('Unexpected variable %s in %s' % (name, poly))
        coefficients[exp[index]] = coefficients[exp[index]] + term
    return coefficients


def right_x_matrix(m):
    """
    Right x on phi(V_m) in the coinvariant basis: S diag(x + i hbar) S^-1
    """
    matrix, inverse = split_change_of_basis(m)
    x = MultiPoly.gen(MODULE_VARIABLES, 'x')
    hbar = MultiPoly.gen(MODULE_VARIABLES, HBAR)
    size = m + 1
    diagonal = zero_matrix(size, size, MODULE_VARIABLES)
    for k, i in enumerate(basis_labels(m)):
        diagonal[k][k] = x + hbar * i
    return mat_mul(mat_mul(matrix, diagonal), inverse)


def unit_check(m, x_matrix=None):
    """
    1/2 X_m^2 - 1/2 hbar^2 recovers the Casimir matrix of phi(V_m)
    """
    x_matrix = right_x_matrix(m) if x_matrix is None else x_matrix
    hbar = MultiPoly.gen(MODULE_VARIABLES, HBAR)
    size = m + 1
    half = MultiPoly.constant(MODULE_VARIABLES, '1/2')
    candidate = mat_sub(
        mat_scale(half, mat_mul(x_matrix, x_matrix)),
        mat_scale(half * hbar * hbar, identity(size, MODULE_VARIABLES))
    )
    return mat_is_zero(mat_sub(candidate, phi_module(m).casimir_matrix))


def convolved_casimir(m, n, x_matrix=None):
    """
    Right Casimir of phi(V_m) * phi(V_n) in the coinvariant basis m_{-1} (x) v_j (x) v_i,
    index j * (m + 1) + i: the (j, k) block is casimir_matrix(n)[j][k] evaluated at X_m
    """
    x_matrix = right_x_matrix(m) if x_matrix is None else x_matrix
    casimir = phi_module(n).casimir_matrix
    block_size = m + 1
    size = block_size * (n + 1)
    matrix = zero_matrix(size, size, MODULE_VARIABLES)
    for j in range(n + 1):
        for k in range(n + 1):
            block = mat_polynomial(x_coefficients(casimir[j][k]), x_matrix, MODULE_VARIABLES)
            for r in range(block_size):
                for c in range(block_size):
                    matrix[j * block_size + r][k * block_size + c] = block[r][c]
    return matrix


def _eigenvalue_factor(w):
    return [casimir_eigenvalue(w) * -2, MultiPoly.constant(MODULE_VARIABLES, 2)]


def clebsch_convolution(m, n):
    """
    Compare phi(V_m) * phi(V_n) with the sum of phi(V_k) over the Clebsch-Gordan components.
    The operator is squarefree-annihilated by annihilator(m + n), so it is diagonalizable over
    the fraction field and its characteristic polynomial is read off the kernel dimensions
    :return: ConvolutionReport
    """
    if m < 0 or n < 0:
        raise KostantError('clebsch_convolution needs m, n >= 0, got %d, %d' % (m, n))
    x_matrix = right_x_matrix(m)
    right_x_matches = unit_check(m, x_matrix)
    matrix = convolved_casimir(m, n, x_matrix)
    size = len(matrix)
    expected = [MultiPoly.constant(MODULE_VARIABLES, 1)]
    for k in clebsch_gordan(m, n):
        expected = multiply_z_polynomials(expected, annihilator_polynomial(k))
    annihilator_vanishes = mat_is_zero(mat_polynomial(annihilator_polynomial(m + n), matrix, MODULE_VARIABLES))

    multiplicities = {}
    characteristic = [MultiPoly.constant(MODULE_VARIABLES, 1)]
    weights = tensor_weights(m, n)
    for w in basis_labels(m + n):
        shifted = mat_sub(matrix, mat_scale(casimir_eigenvalue(w), identity(size, MODULE_VARIABLES)))
        found = size - matrix_rank(shifted, MODULE_VARIABLES)
        multiplicities[w] = (found, weights[w])
        for _ in range(found):
            characteristic = multiply_z_polynomials(characteristic, _eigenvalue_factor(w))
    multiplicities_match = all(found == count for found, count in multiplicities.values())
    annihilator_matches = (annihilator_vanishes and sum(found for found, _ in multiplicities.values()) == size
                           and characteristic == expected)

    unit_matches = None
    if n == 0:
        unit_matches = right_x_matches
    elif m == 0:
        unit_matches = mat_is_zero(mat_sub(matrix, phi_module(n).casimir_matrix))
    logger.debug('Convolution of phi(V_%d) and phi(V_%d): rank %d', m, n, size)
    return ConvolutionReport(m, n, size, annihilator_matches, annihilator_vanishes, multiplicities,
                             multiplicities_match, right_x_matches, unit_matches)


def convolution_passes(report):
    return (report.annihilator_matches and report.annihilator_vanishes and report.multiplicities_match
            and report.right_x_matches and report.unit_matches is not False)


def exactness_check(m=1, n=1):
    """
    Ranks add along the Clebsch-Gordan decomposition of phi(V_m) * phi(V_n) - for V_1 (x) V_1 it is 1 + 3 = 4 -
    and the generic Casimir spectra match
    :return: ExactnessReport
    """
    report = clebsch_convolution(m, n)
    components = clebsch_gordan(m, n)
    ranks = {k: phi_module(k).rank for k in components}
    spectrum = Counter()
    for k in components:
        spectrum.update(basis_labels(k))
    holds = (sum(ranks.values()) == report.rank
             and all(spectrum[w] == found for w, (found, _) in report.multiplicities.items()))
    return ExactnessReport(m, n, ranks, report.rank, holds)
