#!/usr/bin/env python
# encoding: utf-8
"""
Created on '03/10/2026'.

Sparse multivariate polynomials over QQ. The arithmetic is sympy's sparse
PolyRing; this class pins the variable list, checks that operands agree on
it and gives the canonical serialised form.
"""

import functools
from fractions import Fraction

from sympy.polys.rings import ring
from sympy.polys.domains import QQ
from sympy.polys.polyerrors import ExactQuotientFailed

from kostant_whittaker.exactalg.rational import to_rational
from kostant_whittaker.lib.errors import KostantError, VariableMismatchError, NotDivisibleError
from kostant_whittaker.lib.serialize import rational_to_str

HBAR = 'hbar'


@functools.lru_cache(maxsize=None)
def poly_ring(variables):
    """
    Sympy PolyRing over QQ for a tuple of variable names (lex order)
    :param variables: tuple of str
    :return: PolyRing
    """
    return ring(','.join(variables), QQ)[0]


def base_variables(rank=1):
    """
    Global variable order: (x_1, ..., x_r, hbar); rank one uses plain x
    :param rank:
    :return: tuple of names
    """
    if rank == 1:
        return ('x', HBAR)
    return tuple('x%d' % (i + 1) for i in range(rank)) + (HBAR,)


def _is_scalar(value):
    return isinstance(value, (int, Fraction)) or QQ.of_type(value)


class MultiPoly(object):
    """
    Polynomial with a fixed, ordered variable list
    :param variables: variable names
    :param element: sympy PolyElement of poly_ring(variables)
    """
    __slots__ = ('variables', 'element')

    def __init__(self, variables, element=None):
        self.variables = tuple(variables)
        self.element = self.ring.zero if element is None else element

    @property
    def ring(self):
        return poly_ring(self.variables)

    @classmethod
    def from_terms(cls, variables, terms):
        """
        Build from {exponent vector: coefficient}; zero coefficients are dropped
        :param variables:
        :param terms: dict
        :return: MultiPoly
        """
        variables = tuple(variables)
        collected = {}
        for exp, coef in terms.items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != len(variables):
                raise KostantError('Exponent vector %s does not match variables %s' % (exp, variables))
            collected[exp] = collected.get(exp, QQ(0)) + to_rational(coef)
        return cls(variables, poly_ring(variables).from_dict({k: v for k, v in collected.items() if v}))

    @classmethod
    def constant(cls, variables, value):
        variables = tuple(variables)
        return cls(variables, poly_ring(variables).ground_new(to_rational(value)))

    @classmethod
    def gen(cls, variables, name):
        variables = tuple(variables)
        return cls(variables, poly_ring(variables).gens[variables.index(name)])

    @classmethod
    def gens(cls, variables):
        variables = tuple(variables)
        return tuple(cls(variables, g) for g in poly_ring(variables).gens)

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.variables != self.variables:
                raise VariableMismatchError(self.variables, other.variables)
            return other.element
        if _is_scalar(other):
            return self.ring.ground_new(to_rational(other))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return MultiPoly(self.variables, self.element + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return MultiPoly(self.variables, self.element - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return MultiPoly(self.variables, o - self.element)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return MultiPoly(self.variables, self.element * o)

    __rmul__ = __mul__

    def __neg__(self):
        return MultiPoly(self.variables, -self.element)

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise KostantError('Polynomials only take non-negative integer powers')
        return MultiPoly(self.variables, self.element ** k)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.variables == other.variables and self.element == other.element
        if _is_scalar(other):
            return self.element == self.ring.ground_new(to_rational(other))
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.variables, tuple(self.terms())))

    def __bool__(self):
        return bool(self.element)

    @property
    def is_zero(self):
        return not self.element

    @property
    def is_constant(self):
        return self.element.is_ground

    def constant_value(self):
        """
        Value of a constant polynomial
        :return: QQ element
        """
        if not self.is_constant:
            raise KostantError('%s is not constant' % self)
        return self.element.LC if self.element else QQ(0)

    def terms(self):
        """
        Terms sorted lexicographically by exponent vector
        :return: list of (exponent tuple, QQ coefficient)
        """
        return sorted(self.element.items())

    def coefficient(self, exp):
        return self.element.get(tuple(exp), QQ(0))

    def degree(self, name):
        """
        Degree in one variable, -1 for the zero polynomial
        """
        if self.is_zero:
            return -1
        i = self.variables.index(name)
        return max(exp[i] for exp in self.element.keys())

    def total_degree(self):
        if self.is_zero:
            return -1
        return max(sum(exp) for exp in self.element.keys())

    def subs(self, name, value):
        """
        Substitute a rational or a polynomial in the same variables for one variable
        :param name: variable name
        :param value: scalar or MultiPoly
        :return: MultiPoly
        """
        gen = self.ring.gens[self.variables.index(name)]
        if isinstance(value, MultiPoly):
            return MultiPoly(self.variables, self.element.compose(gen, self._coerce(value)))
        return MultiPoly(self.variables, self.element.subs(gen, to_rational(value)))

    def evaluate(self, values):
        """
        Substitute rationals for every variable named in values
        :param values: dict name -> scalar
        :return: MultiPoly
        """
        result = self
        for name, value in sorted(values.items()):
            result = result.subs(name, value)
        return result

    def exquo(self, other):
        """
        Exact quotient
        :raises NotDivisibleError:
        """
        o = self._coerce(other)
        if o is None:
            raise KostantError('Cannot divide by %r' % (other,))
        try:
            return MultiPoly(self.variables, self.element.exquo(o))
        except (ExactQuotientFailed, ZeroDivisionError):
            raise NotDivisibleError('%s is not divisible by %s' % (self, other))

    def coerce(self, variables):
        """
        Move into another ring by variable name - missing variables must not occur
        :param variables: target variable names
        :return: MultiPoly
        """
        variables = tuple(variables)
        if variables == self.variables:
            return self
        index = {name: i for i, name in enumerate(variables)}
        terms = {}
        for exp, coef in self.element.items():
            target = [0] * len(variables)
            for name, e in zip(self.variables, exp):
                if e:
                    if name not in index:
                        raise VariableMismatchError(self.variables, variables)
                    target[index[name]] = e
            terms[tuple(target)] = coef
        return MultiPoly(variables, poly_ring(variables).from_dict(terms))

    def to_json(self):
        return {
            'vars': list(self.variables),
            'terms': [{'exp': list(exp), 'coef': rational_to_str(coef)} for exp, coef in self.terms()]
        }

    @classmethod
    def from_json(cls, data):
        return cls.from_terms(data['vars'], {tuple(t['exp']): t['coef'] for t in data['terms']})

    def __str__(self):
        return str(self.element.as_expr())

    def __repr__(self):
        return 'MultiPoly(%s)' % self


def poly_arith(a, b, op):
    """
    :param a: MultiPoly
    :param b: MultiPoly
    :param op: 'add' | 'sub' | 'mul'
    :return: MultiPoly
    """
    if not isinstance(a, MultiPoly) or not isinstance(b, MultiPoly):
        raise KostantError('poly_arith takes two polynomials')
    if a.variables != b.variables:
        raise VariableMismatchError(a.variables, b.variables)
    if op == 'add':
        return a + b
    if op == 'sub':
        return a - b
    if op == 'mul':
        return a * b
    raise KostantError('Unknown polynomial operation %s' % op)
