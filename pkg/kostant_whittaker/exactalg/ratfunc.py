#!/usr/bin/env python
# encoding: utf-8
"""
Created on '03/10/2026'.
"""

import re
import functools

from sympy.polys.fields import field
from sympy.polys.domains import QQ

from kostant_whittaker.exactalg.poly import MultiPoly, _is_scalar
from kostant_whittaker.exactalg.rational import to_rational
from kostant_whittaker.lib.errors import KostantError, VariableMismatchError, DivisionByZeroError, NotDivisibleError

_atom = re.compile(r'^[A-Za-z0-9_]+$')


@functools.lru_cache(maxsize=None)
def fraction_field(variables):
    return field(','.join(variables), QQ)[0]


class RatFunc(object):
    """
    Rational function numerator / denominator over QQ
    sympy keeps the pair cancelled; equality is still decided by cross-multiplication
    :param variables: variable names
    :param element: sympy FracElement
    """
    __slots__ = ('variables', 'element')

    def __init__(self, variables, element=None):
        self.variables = tuple(variables)
        self.element = self.field.zero if element is None else element

    @property
    def field(self):
        return fraction_field(self.variables)

    @classmethod
    def from_polys(cls, numer, denom=None):
        """
        :param numer: MultiPoly
        :param denom: MultiPoly or None for 1
        :return: RatFunc
        """
        if denom is None:
            denom = MultiPoly.constant(numer.variables, 1)
        if numer.variables != denom.variables:
            raise VariableMismatchError(numer.variables, denom.variables)
        if denom.is_zero:
            raise DivisionByZeroError('Zero denominator')
        F = fraction_field(numer.variables)
        return cls(numer.variables, F((numer.element, denom.element)))

    @classmethod
    def constant(cls, variables, value):
        return cls.from_polys(MultiPoly.constant(variables, value))

    @classmethod
    def lift(cls, value, variables):
        """
        Promote a scalar, MultiPoly or RatFunc to a RatFunc
        """
        if isinstance(value, RatFunc):
            if value.variables != tuple(variables):
                raise VariableMismatchError(value.variables, tuple(variables))
            return value
        if isinstance(value, MultiPoly):
            return cls.from_polys(value.coerce(variables))
        return cls.constant(variables, value)

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            if other.variables != self.variables:
                raise VariableMismatchError(self.variables, other.variables)
            return other.element
        if isinstance(other, MultiPoly):
            if other.variables != self.variables:
                raise VariableMismatchError(self.variables, other.variables)
            return self.field((other.element, other.ring.one))
        if _is_scalar(other):
            return self.field((self.field.ring.ground_new(to_rational(other)), self.field.ring.one))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.variables, self.element + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.variables, self.element - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.variables, o - self.element)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.variables, self.element * o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o:
            raise DivisionByZeroError('Division by the zero rational function')
        return RatFunc(self.variables, self.element / o)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.element:
            raise DivisionByZeroError('Division by the zero rational function')
        return RatFunc(self.variables, o / self.element)

    def __neg__(self):
        return RatFunc(self.variables, -self.element)

    def __pow__(self, k):
        if not isinstance(k, int):
            raise KostantError('Rational functions only take integer powers')
        if k < 0 and not self.element:
            raise DivisionByZeroError('Negative power of zero')
        return RatFunc(self.variables, self.element ** k)

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except VariableMismatchError:
            return False
        if o is None:
            return NotImplemented
        return self.element.numer * o.denom == o.numer * self.element.denom

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.variables, self.element))

    def __bool__(self):
        return bool(self.element)

    @property
    def is_zero(self):
        return not self.element

    @property
    def numer(self):
        return MultiPoly(self.variables, self.element.numer)

    @property
    def denom(self):
        return MultiPoly(self.variables, self.element.denom)

    @property
    def is_polynomial(self):
        return self.element.denom.is_ground

    def to_poly(self):
        """
        :raises NotDivisibleError: the denominator is not a constant
        :return: MultiPoly
        """
        if not self.is_polynomial:
            raise NotDivisibleError('%s is not a polynomial' % self)
        return MultiPoly(self.variables, self.element.numer * (QQ(1) / self.element.denom.LC))

    def subs(self, name, value):
        numer = self.numer.subs(name, value)
        denom = self.denom.subs(name, value)
        if denom.is_zero:
            raise DivisionByZeroError('Denominator of %s vanishes at %s = %s' % (self, name, value))
        return RatFunc.from_polys(numer, denom)

    def to_json(self):
        return {'numer': self.numer.to_json(), 'denom': self.denom.to_json()}

    @classmethod
    def from_json(cls, data):
        return cls.from_polys(MultiPoly.from_json(data['numer']), MultiPoly.from_json(data['denom']))

    def __str__(self):
        numer, denom = self.numer, self.denom
        if denom == 1:
            return str(numer)
        n, d = str(numer), str(denom)
        if ' ' in n:
            n = '(%s)' % n
        if not _atom.match(d):
            d = '(%s)' % d
        return '%s/%s' % (n, d)

    def __repr__(self):
        return 'RatFunc(%s)' % self


def ratfunc_arith(a, b, op):
    """
    :param a: RatFunc
    :param b: RatFunc
    :param op: 'add' | 'sub' | 'mul' | 'div'
    :return: RatFunc
    """
    if a.variables != b.variables:
        raise VariableMismatchError(a.variables, b.variables)
    if op == 'add':
        return a + b
    if op == 'sub':
        return a - b
    if op == 'mul':
        return a * b
    if op == 'div':
        return a / b
    raise KostantError('Unknown rational function operation %s' % op)
