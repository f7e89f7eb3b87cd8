#!/usr/bin/env python
# encoding: utf-8
"""
Created on '08/10/2026'.

Generic splitting of the canonical filtration of M(-rho) (x) V_n.

For each i there is a vector s_i over Q(hbar, x) with e s_i = 0 in the weight
space spanned by m_{-1-2k} (x) v_{i+2k}. Two normalisations:

  filtration  s_i = m_{-1} (x) v_i + sum_{j > i} c_j f^{(j-i)/2} s_j
  unit        coefficient of m_{-1} (x) v_i in s_i is 1

The expansion of the class of m_{-1} (x) v_{-n} has the product coefficients
prod_{k=(i-n)/2}^{i-1} (x + k hbar)^{-1} in the filtration normalisation only.
"""

import functools
import logging
from collections import namedtuple

from kostant_whittaker.exactalg import MultiPoly, RatFunc, HBAR, solve_linear
from kostant_whittaker.exactalg.linalg import mat_inverse
from kostant_whittaker.uhbar import PBWElem, TensorVec, tensor_act, MODULE_VARIABLES
from kostant_whittaker.uhbar.modules import rep_e
from kostant_whittaker.kostant.coinvariants import coinvariant_reduce, basis_labels
from kostant_whittaker.lib.errors import KostantError, DegenerateKernelError, IdentityFailure

logger = logging.getLogger('luigi-interface')

NORMALIZATIONS = ('filtration', 'unit')

RaisedExpansion = namedtuple('RaisedExpansion', [
    'n', 'l', 'coefficients', 'holds', 'holds_with_hbar_power', 'upstairs_holds'
])

IdiotReport = namedtuple('IdiotReport', ['n', 'normalization', 'coefficients', 'expected', 'holds', 'upstairs_holds'])


def _lift(value):
    return RatFunc.lift(value, MODULE_VARIABLES)


def weight_space(n, i):
    """
    Keys (j, i') of the weight space containing m_{-1} (x) v_i
    """
    return [(-1 - 2 * k, i + 2 * k) for k in range((n - i) // 2 + 1)]


class SplitBasis(object):
    """
    :param n:
    :param vectors: dict i -> TensorVec with RatFunc coefficients
    :param projections: dict i -> coordinates of the class of s_i
    :param normalization: 'filtration' or 'unit'
    """

    def __init__(self, n, vectors, projections, normalization):
        self.n = n
        self.vectors = vectors
        self.projections = projections
        self.normalization = normalization

    @property
    def labels(self):
        return basis_labels(self.n)

    def matrix(self):
        """
        Column i holds the coordinates of the class of s_i
        """
        labels = self.labels
        return [[self.projections[i][r] for i in labels] for r in range(len(labels))]

    def is_upper_unitriangular(self):
        """
        Class of s_i is the class of m_{-1} (x) v_i plus classes with larger index
        """
        for i in self.labels:
            coords = self.projections[i]
            for r, j in enumerate(self.labels):
                if j < i and coords[r] != 0:
                    return False
                if j == i and coords[r] != 1:
                    return False
        return True

    def expand(self, coordinates):
        """
        Coefficients of a coinvariant class in the basis of classes of s_i
        :param coordinates: vector in the basis of classes of m_{-1} (x) v_i
        :return: dict i -> RatFunc
        """
        solution = solve_linear(self.matrix(), [_lift(c) for c in coordinates], MODULE_VARIABLES)
        if solution.kernel:
            raise DegenerateKernelError(0, len(solution.kernel), 'in the split basis of phi(V_%d)' % self.n)
        return dict(zip(self.labels, solution.particular))

    def to_json(self):
        return {
            'n': self.n,
            'normalization': self.normalization,
            'vectors': {str(i): self.vectors[i].to_json() for i in self.labels},
            'projections': {str(i): [str(c) for c in self.projections[i]] for i in self.labels},
        }


def _weight_matrix(vectors, keys):
    # columns are vectors, rows the coordinates at keys
    return [[_lift(v.coefficient(key)) for v in vectors] for key in keys]


def _f_power(k):
    return PBWElem.monomial(a=k)


def _e_element():
    return PBWElem.generator('e')


def _unit_vector(n, i):
    source = weight_space(n, i)
    target = weight_space(n, i + 2) if i + 2 <= n else []
    images = [tensor_act(_e_element(), TensorVec(n, {key: 1})) for key in source]
    if not target:
        return TensorVec(n, {(-1, i): _lift(1)})
    solution = solve_linear(_weight_matrix(images, target), None, MODULE_VARIABLES)
    if len(solution.kernel) != 1:
        raise DegenerateKernelError(1, len(solution.kernel), 'for s_%d in M (x) V_%d' % (i, n))
    kernel = solution.kernel[0]
    if kernel[0].is_zero:
        raise DegenerateKernelError(1, 0, 'for a unit-normalised s_%d in M (x) V_%d' % (i, n))
    return TensorVec(n, {key: value / kernel[0] for key, value in zip(source, kernel)})


def _filtration_vector(n, i, higher):
    """
    :param higher: dict j -> s_j for j > i
    """
    base = TensorVec(n, {(-1, i): _lift(1)})
    if i == n:
        return base
    target = weight_space(n, i + 2)
    js = list(range(i + 2, n + 1, 2))
    columns = [tensor_act(_e_element(), tensor_act(_f_power((j - i) // 2), higher[j])) for j in js]
    rhs = [-row[0] for row in _weight_matrix([tensor_act(_e_element(), base)], target)]
    solution = solve_linear(_weight_matrix(columns, target), rhs, MODULE_VARIABLES)
    if solution.kernel:
        raise DegenerateKernelError(0, len(solution.kernel), 'in the filtration normalisation of s_%d, n=%d' % (i, n))
    vector = base
    for j, c in zip(js, solution.particular):
        vector = vector + tensor_act(_f_power((j - i) // 2), higher[j]).scale(c)
    return vector


@functools.lru_cache(maxsize=None)
def highest_weight_split(n, normalization='filtration'):
    """
    Vectors s_i with e s_i = 0 and their classes in the coinvariants
    :param n: n >= 0
    :param normalization: 'filtration' (default) or 'unit'
    :return: SplitBasis
    :raises DegenerateKernelError:
    """
    if n < 0:
        raise KostantError('highest_weight_split needs n >= 0, got %d' % n)
    if normalization not in NORMALIZATIONS:
        raise KostantError('Unknown normalisation %s' % normalization)
    vectors = {}
    for i in reversed(basis_labels(n)):
        if normalization == 'unit':
            vectors[i] = _unit_vector(n, i)
        else:
            vectors[i] = _filtration_vector(n, i, vectors)
        if not tensor_act(_e_element(), vectors[i]).is_zero:
            raise IdentityFailure('e does not kill s_%d for n = %d' % (i, n))
    projections = {i: [_lift(c) for c in coinvariant_reduce(v)] for i, v in vectors.items()}
    logger.debug('Split basis of phi(V_%d) (%s)', n, normalization)
    return SplitBasis(n, vectors, projections, normalization)


def idiot_product(n, i, l=0):
    """
    prod_{k=(i-n+2l)/2}^{i-1} (x + k hbar), a product of (n+i-2l)/2 factors
    """
    x = MultiPoly.gen(MODULE_VARIABLES, 'x')
    hbar = MultiPoly.gen(MODULE_VARIABLES, HBAR)
    product = MultiPoly.constant(MODULE_VARIABLES, 1)
    for k in range((i - n + 2 * l) // 2, i):
        product = product * (x + hbar * k)
    return product


def idiot_report(n, normalization='filtration'):
    """
    Expand the class of m_{-1} (x) v_{-n} in the split basis and compare with
    the product coefficients, both in the coinvariants and upstairs where the
    class of f^k s_i is replaced by f^k s_i itself
    :return: IdiotReport
    """
    split = highest_weight_split(n, normalization)
    unit = [1 if i == -n else 0 for i in basis_labels(n)]
    coefficients = split.expand(unit)
    expected = {i: RatFunc.from_polys(MultiPoly.constant(MODULE_VARIABLES, 1), idiot_product(n, i))
                for i in basis_labels(n)}
    holds = all(coefficients[i] == expected[i] for i in basis_labels(n))
    upstairs = TensorVec(n)
    for i in basis_labels(n):
        upstairs = upstairs + tensor_act(_f_power((n + i) // 2), split.vectors[i]).scale(expected[i])
    upstairs_holds = upstairs == TensorVec(n, {(-1, -n): _lift(1)})
    return IdiotReport(n, normalization, coefficients, expected, holds, upstairs_holds)


def idiot_expansion(n, normalization='filtration', check=True):
    """
    :return: dict i -> RatFunc coefficient of the class of s_i
    :raises IdentityFailure: check is set and the coefficients are not the product ones
    """
    report = idiot_report(n, normalization)
    if check and not report.holds:
        raise IdentityFailure('Expansion of m_-1 (x) v_-%d differs from the product coefficients (%s)' % (
            n, normalization))
    return report.coefficients


def raised_scale(n, i, l):
    """
    s_i^l = prod_{t=1}^{l} ((n+i-2t+2)/2) hbar * s_i, matching the top coefficient of e^l(m_{-1} (x) v_{i-2l})
    """
    scale = MultiPoly.constant(MODULE_VARIABLES, 1)
    for t in range(1, l + 1):
        scale = scale * rep_e(n, i - 2 * t).coerce(MODULE_VARIABLES)
    return scale


def raised_idiot_expansion(n, l):
    """
    Expand e^l(m_{-1} (x) v_{-n}) in the raised vectors s_i^l, i >= -n + 2l, and
    test the product coefficients prod_{k=(i-n+2l)/2}^{i-1} (x + k hbar)^{-1}
    with and without an extra hbar^l
    :return: RaisedExpansion
    """
    if not 0 <= l <= n:
        raise KostantError('Raising exponent must satisfy 0 <= l <= n, got l=%d n=%d' % (l, n))
    split = highest_weight_split(n, 'filtration')
    raised = TensorVec.basis(n, -1, -n)
    for _ in range(l):
        raised = tensor_act(_e_element(), raised)
    labels = [i for i in basis_labels(n) if i >= -n + 2 * l]
    found = split.expand(coinvariant_reduce(raised))
    coefficients = {}
    for i in basis_labels(n):
        if i in labels:
            coefficients[i] = found[i] / raised_scale(n, i, l)
        elif found[i] != 0:
            raise IdentityFailure('e^%d(m_-1 (x) v_-%d) has a component along s_%d' % (l, n, i))
    hbar = MultiPoly.gen(MODULE_VARIABLES, HBAR)
    one = MultiPoly.constant(MODULE_VARIABLES, 1)
    holds = all(coefficients[i] == RatFunc.from_polys(one, idiot_product(n, i, l)) for i in labels)
    holds_with_power = all(
        coefficients[i] == RatFunc.from_polys(hbar ** l, idiot_product(n, i, l)) for i in labels
    )
    upstairs = TensorVec(n)
    for i in labels:
        term = split.vectors[i].scale(raised_scale(n, i, l))
        term = tensor_act(_f_power((n - 2 * l + i) // 2), term)
        upstairs = upstairs + term.scale(RatFunc.from_polys(one, idiot_product(n, i, l)))
    upstairs_holds = upstairs == raised
    return RaisedExpansion(n, l, coefficients, holds, holds_with_power, upstairs_holds)


def filtration_check(n, max_degree=2):
    """
    Reduction of u s_i lies in the span of the classes of s_j, j >= i, for every
    PBW monomial u of degree <= max_degree
    """
    split = highest_weight_split(n, 'filtration')
    monomials = [PBWElem.monomial(a, b, c)
                 for a in range(max_degree + 1)
                 for b in range(max_degree + 1 - a)
                 for c in range(max_degree + 1 - a - b)]
    for i in basis_labels(n):
        for u in monomials:
            expansion = split.expand(coinvariant_reduce(tensor_act(u, split.vectors[i])))
            if any(expansion[j] != 0 for j in basis_labels(n) if j < i):
                logger.info('Filtration property fails for %s on s_%d, n=%d', u, i, n)
                return False
    return True


def split_change_of_basis(n):
    """
    Matrix S (columns: classes of s_i) and its inverse
    """
    split = highest_weight_split(n, 'filtration')
    matrix = split.matrix()
    return matrix, mat_inverse(matrix, MODULE_VARIABLES)
