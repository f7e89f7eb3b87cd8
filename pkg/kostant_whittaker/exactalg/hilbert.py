#!/usr/bin/env python
# encoding: utf-8
"""
Created on '04/10/2026'.
"""

from kostant_whittaker.exactalg.poly import HBAR
from kostant_whittaker.lib.errors import GradingError


class HilbertSeries(object):
    """
    Power series in q truncated at max_degree
    :param coefficients: list, coefficients[k] is the coefficient of q^k
    :param max_degree: truncation degree (inclusive)
    """

    def __init__(self, coefficients, max_degree):
        if max_degree < 0:
            raise GradingError('Truncation degree must be non-negative, got %d' % max_degree)
        coefficients = list(coefficients)[:max_degree + 1]
        self.coefficients = tuple(coefficients + [0] * (max_degree + 1 - len(coefficients)))
        self.max_degree = max_degree

    def coefficient(self, k):
        if k > self.max_degree:
            raise GradingError('Degree %d beyond truncation %d' % (k, self.max_degree))
        return self.coefficients[k] if k >= 0 else 0

    def __mul__(self, other):
        max_degree = min(self.max_degree, other.max_degree)
        product = [0] * (max_degree + 1)
        for i, a in enumerate(self.coefficients[:max_degree + 1]):
            if not a:
                continue
            for j, b in enumerate(other.coefficients[:max_degree + 1 - i]):
                product[i + j] += a * b
        return HilbertSeries(product, max_degree)

    def __eq__(self, other):
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        return self.max_degree == other.max_degree and self.coefficients == other.coefficients

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.coefficients, self.max_degree))

    def rows(self, even_only=True):
        """
        (degree, coefficient) pairs - odd degrees are skipped for evenly graded algebras
        """
        return [(k, c) for k, c in enumerate(self.coefficients) if not (even_only and k % 2)]

    def to_json(self):
        return {'max_degree': self.max_degree, 'coefficients': list(self.coefficients)}

    def __repr__(self):
        terms = ['%d*q^%d' % (c, k) for k, c in enumerate(self.coefficients) if c]
        return 'HilbertSeries(%s + O(q^%d))' % (' + '.join(terms) or '0', self.max_degree + 1)


def free_graded_hilbert(generator_degrees, max_degree):
    """
    Hilbert series of a free commutative algebra: prod 1/(1 - q^d) truncated
    Coefficient of q^k counts the monomials of degree k
    :param generator_degrees: positive even integers
    :param max_degree:
    :return: HilbertSeries
    """
    if max_degree < 0:
        raise GradingError('Truncation degree must be non-negative, got %d' % max_degree)
    for d in generator_degrees:
        if d <= 0 or d % 2:
            raise GradingError('Generator degrees must be positive and even, got %s' % d)
    counts = [1] + [0] * max_degree
    # one pass per generator, coin-change style
    for d in generator_degrees:
        for k in range(d, max_degree + 1):
            counts[k] += counts[k - d]
    return HilbertSeries(counts, max_degree)


class Grading(object):
    """
    Even non-negative degrees per variable; hbar is always 2
    :param degrees: dict variable name -> degree
    """

    def __init__(self, degrees):
        degrees = dict(degrees)
        degrees.setdefault(HBAR, 2)
        if degrees[HBAR] != 2:
            raise GradingError('hbar has degree 2, got %s' % degrees[HBAR])
        for name, d in degrees.items():
            if d < 0 or d % 2:
                raise GradingError('Degree of %s must be even and non-negative, got %s' % (name, d))
        self.degrees = degrees

    def monomial_degree(self, exponents):
        """
        :param exponents: dict variable name -> exponent
        """
        return sum(self.degrees[name] * e for name, e in exponents.items())

    def poly_degree(self, poly):
        """
        Top degree of a MultiPoly under this grading, -1 for zero
        """
        if poly.is_zero:
            return -1
        return max(self.monomial_degree(dict(zip(poly.variables, exp))) for exp, _ in poly.terms())

    def hilbert(self, max_degree):
        positive = [d for d in self.degrees.values() if d > 0]
        if len(positive) != len(self.degrees):
            raise GradingError('Degree zero generators give an infinite dimensional graded piece')
        return free_graded_hilbert(sorted(positive), max_degree)
