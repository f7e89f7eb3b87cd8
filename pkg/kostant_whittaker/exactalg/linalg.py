#!/usr/bin/env python
# encoding: utf-8
"""
Created on '04/10/2026'.

Dense matrices over MultiPoly / RatFunc, held as lists of rows. Linear
systems are solved by fraction-free (Bareiss) elimination over the
polynomial ring with back substitution in the fraction field.
"""

import logging
from collections import namedtuple

from sympy.polys.polyerrors import ExactQuotientFailed

from kostant_whittaker.exactalg.poly import MultiPoly, base_variables
from kostant_whittaker.exactalg.ratfunc import RatFunc, fraction_field
from kostant_whittaker.lib.errors import KostantError, InconsistentSystemError, IdentityFailure

logger = logging.getLogger('luigi-interface')

LinearSolution = namedtuple('LinearSolution', ['particular', 'kernel'])


def matrix_variables(matrix, default=None):
    """
    Variable list of the first polynomial entry of a matrix (or vector)
    :param matrix: list of rows or flat list
    :param default: fallback variable list
    :return: tuple of names
    """
    for row in matrix:
        for entry in (row if isinstance(row, (list, tuple)) else [row]):
            if isinstance(entry, (MultiPoly, RatFunc)):
                return entry.variables
    return tuple(default) if default else base_variables()


def _lift_rows(rows, variables):
    """
    Clear the denominators of each row so every entry is a PolyElement
    """
    F = fraction_field(variables)
    lifted = []
    for row in rows:
        fracs = [RatFunc.lift(entry, variables).element for entry in row]
        common = F.ring.one
        for frac in fracs:
            common = common.lcm(frac.denom)
        lifted.append([(frac.numer * common).exquo(frac.denom) for frac in fracs])
    return lifted


def _echelon(rows, ncols):
    """
    Bareiss fraction-free row echelon form, in place
    Pivot is the first nonzero entry at or below the current row
    :param rows: list of PolyElement rows
    :param ncols: number of coefficient columns that may carry a pivot
    :return: (pivot columns, sign of the row permutation)
    """
    pivots = []
    sign = 1
    previous = None
    r = 0
    width = len(rows[0]) if rows else 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
            sign = -sign
        pivot = rows[r][c]
        for i in range(r + 1, len(rows)):
            factor = rows[i][c]
            for j in range(c + 1, width):
                value = pivot * rows[i][j] - factor * rows[r][j]
                if previous is not None:
                    try:
                        value = value.exquo(previous)
                    except ExactQuotientFailed:
                        raise KostantError('Fraction-free elimination lost exactness')
                rows[i][j] = value
            rows[i][c] = rows[i][c].ring.zero
        previous = pivot
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots, sign


def solve_linear(matrix, rhs=None, variables=None):
    """
    Solve matrix * s = rhs over the fraction field
    :param matrix: list of rows of MultiPoly / RatFunc / scalars
    :param rhs: vector, or None for the homogeneous system
    :param variables: variable list when no entry carries one
    :raises InconsistentSystemError: no solution exists
    :return: LinearSolution(particular, kernel) - particular has every free
             coordinate zero, the kernel basis has one vector per free column
    """
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    variables = tuple(variables) if variables else matrix_variables(list(matrix) + [list(rhs or [])])
    F = fraction_field(variables)
    if rhs is None:
        rhs = [0] * nrows
    if len(rhs) != nrows:
        raise KostantError('Right hand side has length %d, matrix has %d rows' % (len(rhs), nrows))
    original = [[RatFunc.lift(entry, variables).element for entry in row] for row in matrix]
    targets = [RatFunc.lift(b, variables).element for b in rhs]
    rows = _lift_rows([list(row) + [b] for row, b in zip(matrix, rhs)], variables)
    pivots, _ = _echelon(rows, ncols)
    rank = len(pivots)
    for row in rows[rank:]:
        if row[ncols]:
            raise InconsistentSystemError('Linear system of size %dx%d is inconsistent' % (nrows, ncols))

    def back_substitute(values, target):
        for k in reversed(range(rank)):
            c = pivots[k]
            acc = F(target(k))
            for j in range(c + 1, ncols):
                if rows[k][j] and values[j]:
                    acc -= F(rows[k][j]) * values[j]
            values[c] = acc / F(rows[k][c])
        return [RatFunc(variables, value) for value in values]

    particular = back_substitute([F.zero] * ncols, lambda k: rows[k][ncols])
    kernel = []
    for free in (c for c in range(ncols) if c not in pivots):
        values = [F.zero] * ncols
        values[free] = F.one
        kernel.append(back_substitute(values, lambda k: F.ring.zero))
    _substitute_back(original, targets, particular, kernel, F)
    logger.debug('Solved %dx%d system: rank %d, kernel dimension %d', nrows, ncols, rank, len(kernel))
    return LinearSolution(particular, kernel)


def _substitute_back(original, targets, particular, kernel, F):
    """
    matrix * particular == rhs and matrix * k == 0 for every kernel vector
    :raises IdentityFailure:
    """
    def product(row, vector):
        return sum((entry * value.element for entry, value in zip(row, vector) if entry), F.zero)

    for row, target in zip(original, targets):
        if product(row, particular) != target:
            raise IdentityFailure('Particular solution does not satisfy the system')
        for vector in kernel:
            if product(row, vector):
                raise IdentityFailure('Kernel vector does not satisfy the homogeneous system')


def matrix_rank(matrix, variables=None):
    """
    Rank over the fraction field
    """
    if not matrix or not matrix[0]:
        return 0
    variables = tuple(variables) if variables else matrix_variables(matrix)
    rows = _lift_rows(matrix, variables)
    return len(_echelon(rows, len(rows[0]))[0])


def determinant(matrix, variables=None):
    """
    Determinant of a square matrix as a RatFunc
    """
    n = len(matrix)
    variables = tuple(variables) if variables else matrix_variables(matrix)
    if n == 0:
        return RatFunc.constant(variables, 1)
    F = fraction_field(variables)
    scale = F.one
    rows = []
    for row in matrix:
        fracs = [RatFunc.lift(entry, variables).element for entry in row]
        common = F.ring.one
        for frac in fracs:
            common = common.lcm(frac.denom)
        scale *= F(common)
        rows.append([(frac.numer * common).exquo(frac.denom) for frac in fracs])
    pivots, sign = _echelon(rows, n)
    if len(pivots) < n:
        return RatFunc(variables, F.zero)
    # the last Bareiss pivot is the determinant of the row-permuted matrix
    return RatFunc(variables, sign * F(rows[n - 1][n - 1]) / scale)


def identity(size, variables):
    one = MultiPoly.constant(variables, 1)
    zero = MultiPoly(variables)
    return [[one if i == j else zero for j in range(size)] for i in range(size)]


def zero_matrix(rows, cols, variables):
    return [[MultiPoly(variables) for _ in range(cols)] for _ in range(rows)]


def mat_mul(a, b):
    if len(a[0]) != len(b):
        raise KostantError('Cannot multiply %dx%d by %dx%d' % (len(a), len(a[0]), len(b), len(b[0])))
    return [[sum((a[i][k] * b[k][j] for k in range(1, len(b))), a[i][0] * b[0][j])
             for j in range(len(b[0]))] for i in range(len(a))]


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(scalar, a):
    return [[scalar * x for x in row] for row in a]


def mat_apply(a, vector):
    return [sum((row[k] * vector[k] for k in range(1, len(vector))), row[0] * vector[0]) for row in a]


def mat_transpose(a):
    return [list(col) for col in zip(*a)]


def mat_map(func, a):
    return [[func(x) for x in row] for row in a]


def mat_is_zero(a):
    return all(x == 0 for row in a for x in row)


def mat_polynomial(coefficients, a, variables):
    """
    Evaluate sum_k coefficients[k] * a^k by Horner's rule
    :param coefficients: low-to-high coefficient list (MultiPoly / RatFunc / scalars)
    :param a: square matrix
    :return: matrix
    """
    size = len(a)
    result = zero_matrix(size, size, variables)
    for coefficient in reversed(coefficients):
        result = mat_add(mat_mul(result, a), mat_scale(coefficient, identity(size, variables)))
    return result


def mat_inverse(a, variables=None):
    """
    Inverse over the fraction field, column by column
    :raises KostantError: singular matrix
    """
    variables = tuple(variables) if variables else matrix_variables(a)
    size = len(a)
    columns = []
    for j in range(size):
        unit = [1 if i == j else 0 for i in range(size)]
        try:
            solution = solve_linear(a, unit, variables)
        except InconsistentSystemError:
            raise KostantError('Matrix is singular')
        if solution.kernel:
            raise KostantError('Matrix is singular')
        columns.append(solution.particular)
    return mat_transpose(columns)


def jordan_type(nilpotent, variables=None):
    """
    Jordan block sizes of a nilpotent matrix from the ranks of its powers
    :return: block sizes, largest first
    :raises KostantError: the matrix is not nilpotent
    """
    size = len(nilpotent)
    if size == 0:
        return []
    variables = tuple(variables) if variables else matrix_variables(nilpotent)
    ranks = [size]
    power = identity(size, variables)
    while ranks[-1] > 0:
        power = mat_mul(power, nilpotent)
        ranks.append(matrix_rank(power, variables))
        if len(ranks) > size + 1:
            raise KostantError('Matrix is not nilpotent')
    # blocks of size >= k: ranks[k-1] - ranks[k]
    at_least = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))] + [0]
    sizes = []
    for k in range(1, len(at_least)):
        sizes.extend([k] * (at_least[k - 1] - at_least[k]))
    return sorted(sizes, reverse=True)
